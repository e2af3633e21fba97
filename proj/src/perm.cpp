// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#include "pviforge/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pviforge {

Perm perm_identity(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

bool perm_is_bijection(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

namespace {

std::vector<std::vector<int>> cycles(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = static_cast<int>(i); !seen[j]; j = p[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> t;
  for (const auto& c : cycles(p)) t.push_back(static_cast<int>(c.size()));
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::vector<int> nontrivial_cycle_type(const Perm& p) {
  std::vector<int> t;
  for (const auto& c : cycles(p))
    if (c.size() > 1) t.push_back(static_cast<int>(c.size()));
  std::sort(t.begin(), t.end());
  return t;
}

std::string cycle_string(const Perm& p) {
  std::ostringstream os;
  for (const auto& c : cycles(p)) {
    if (c.size() < 2) continue;
    os << "(";
    for (int v : c) os << v;
    os << ")";
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

bool generates_transitive(const std::vector<Perm>& gens) {
  if (gens.empty()) return true;
  std::size_t n = gens[0].size();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& g : gens) {
      if (!seen[g[v]]) {
        seen[g[v]] = true;
        stack.push_back(g[v]);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

namespace {

struct StabilizerChain {
  std::size_t n;
  std::vector<std::pair<std::size_t, Perm>> gens;  // (level, generator fixing 0..level-1)
  std::vector<std::vector<Perm>> trans;             // trans[i][x] maps i to x, or empty

  explicit StabilizerChain(std::size_t size) : n(size), trans(size, std::vector<Perm>(size)) {}

  void build_orbit(std::size_t i) {
    auto& t = trans[i];
    for (auto& u : t) u.clear();
    t[i] = perm_identity(n);
    std::vector<std::size_t> queue{i};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      std::size_t x = queue[q];
      for (const auto& [lvl, g] : gens) {
        if (lvl < i) continue;
        std::size_t y = static_cast<std::size_t>(g[x]);
        if (t[y].empty()) {
          t[y] = perm_compose(g, t[x]);
          queue.push_back(y);
        }
      }
    }
  }

  // Returns the level where sifting fails (n if h is in the group) and leaves the residue in h.
  std::size_t sift(Perm& h, std::size_t from) const {
    for (std::size_t i = from; i < n; ++i) {
      std::size_t x = static_cast<std::size_t>(h[i]);
      if (trans[i][x].empty()) return i;
      h = perm_compose(perm_inverse(trans[i][x]), h);
    }
    return n;
  }

  // One pass of the Schreier criterion; true when a new generator was added.
  bool refine(std::size_t limit) {
    for (std::size_t i = n; i-- > 0;) {
      build_orbit(i);
      for (std::size_t x = 0; x < n; ++x) {
        if (trans[i][x].empty()) continue;
        for (const auto& [lvl, g] : gens) {
          if (lvl < i) continue;
          std::size_t y = static_cast<std::size_t>(g[x]);
          Perm h = perm_compose(perm_inverse(trans[i][y]), perm_compose(g, trans[i][x]));
          std::size_t fail = sift(h, i + 1);
          if (fail < n) {
            gens.emplace_back(fail, h);
            if (order() > limit) throw std::runtime_error("group_order: limit exceeded");
            return true;
          }
        }
      }
    }
    return false;
  }

  std::size_t order() const {
    std::size_t o = 1;
    for (const auto& t : trans) {
      std::size_t c = 0;
      for (const auto& u : t) c += !u.empty();
      o *= std::max<std::size_t>(c, 1);
    }
    return o;
  }
};

}  // namespace

std::size_t group_order(const std::vector<Perm>& gens, std::size_t limit) {
  if (gens.empty()) return 1;
  std::size_t n = gens[0].size();
  StabilizerChain chain(n);
  for (const auto& g : gens) {
    Perm h = g;
    std::size_t fail = chain.sift(h, 0);
    if (fail < n) chain.gens.emplace_back(fail, h);
    for (std::size_t i = 0; i < n; ++i) chain.build_orbit(i);
  }
  while (chain.refine(limit)) {
  }
  for (std::size_t i = 0; i < n; ++i) chain.build_orbit(i);
  std::size_t o = chain.order();
  if (o > limit) throw std::runtime_error("group_order: limit exceeded");
  return o;
}

Perm simultaneous_conjugator(const std::vector<Perm>& p, const std::vector<Perm>& r) {
  if (p.empty()) return {};
  std::size_t n = p[0].size();
  if (n > 9) throw std::invalid_argument("simultaneous_conjugator: n too large");
  Perm q = perm_identity(n);
  do {
    bool ok = true;
    for (std::size_t k = 0; k < p.size() && ok; ++k)
      ok = perm_compose(perm_compose(q, p[k]), perm_inverse(q)) == r[k];
    if (ok) return q;
  } while (std::next_permutation(q.begin(), q.end()));
  return {};
}

}  // namespace pviforge
