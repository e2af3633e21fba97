// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pviforge {

// p[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(std::size_t n);
// (a * b)(i) = a(b(i)): apply b first.
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& p);
bool perm_is_bijection(const Perm& p);
// Cycle lengths in nonincreasing order, fixed points included.
std::vector<int> cycle_type(const Perm& p);
// Cycle lengths > 1 in nondecreasing order, e.g. {2,2,3}.
std::vector<int> nontrivial_cycle_type(const Perm& p);
std::string cycle_string(const Perm& p);
bool generates_transitive(const std::vector<Perm>& gens);
// Order of the generated group by closure; throws when it exceeds limit.
std::size_t group_order(const std::vector<Perm>& gens, std::size_t limit = 5000000);
// Some q with q p_k q^-1 = r_k for all k, or empty if none (brute force, n <= 9).
Perm simultaneous_conjugator(const std::vector<Perm>& p, const std::vector<Perm>& r);

}  // namespace pviforge
