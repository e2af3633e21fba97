// Copyright 2026 The pviforge Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace pviforge {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define PVIFORGE_ERROR(Name)                                       \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

PVIFORGE_ERROR(PoleError)
PVIFORGE_ERROR(NoSolutionError)
PVIFORGE_ERROR(AmbiguousError)
PVIFORGE_ERROR(DivisionByZero)
PVIFORGE_ERROR(SignConstraintError)
PVIFORGE_ERROR(OrbitOverflow)
PVIFORGE_ERROR(ReducibleDataError)
PVIFORGE_ERROR(ResidualError)
PVIFORGE_ERROR(DegenerateError)
PVIFORGE_ERROR(NonTransitiveError)
PVIFORGE_ERROR(RoundingError)
PVIFORGE_ERROR(DomainError)
PVIFORGE_ERROR(ZeroSigmaError)
PVIFORGE_ERROR(DegenerateDenominator)
PVIFORGE_ERROR(ValidityError)
PVIFORGE_ERROR(ZeroShat)
PVIFORGE_ERROR(SeriesInversionError)
PVIFORGE_ERROR(ResonanceError)
PVIFORGE_ERROR(FractionalResidueError)
PVIFORGE_ERROR(NonRationalCoefficient)
PVIFORGE_ERROR(PathTooClose)
PVIFORGE_ERROR(SingularPointError)
PVIFORGE_ERROR(DegenerateParameters)
PVIFORGE_ERROR(GaugeDegenerateError)
PVIFORGE_ERROR(DependentImagesError)
PVIFORGE_ERROR(ConstantPolynomialError)
PVIFORGE_ERROR(StepFailure)
PVIFORGE_ERROR(DegenerateDiagonal)
PVIFORGE_ERROR(NotInBigCell)
PVIFORGE_ERROR(SingularU)
PVIFORGE_ERROR(NoUnitEigenvalue)
PVIFORGE_ERROR(IrreducibleError)
PVIFORGE_ERROR(ParseError)

#undef PVIFORGE_ERROR

}  // namespace pviforge
