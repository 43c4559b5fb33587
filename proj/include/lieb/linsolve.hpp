// Exact dense linear solver over the Scalar field Q(t), with reporting of
// exceptional parameter values (pivot or inconsistency witnesses that vanish
// at specific rational t). Systems here are tiny (<= 27 x 9).
#pragma once

#include <string>
#include <vector>

#include "lieb/scalar.hpp"

namespace lieb {

struct LinSolution {
  bool consistent = false;
  std::vector<Scalar> particular;              // one solution (free vars = 0)
  std::vector<std::vector<Scalar>> nullspace;  // basis of homogeneous solutions
  // Rational parameter values where a pivot or an inconsistency witness
  // vanishes: the generic answer may change exactly there.
  std::vector<Rat> exceptional;
  std::string note;  // human-readable inconsistency/pivot commentary
};

// Solves A x = b where A is rows x cols (row-major), b has rows entries.
LinSolution solve_linear(std::vector<std::vector<Scalar>> A, std::vector<Scalar> b);

// Is v in span(basis) + offset? Exact membership test for affine solution sets.
bool in_affine_span(const std::vector<Scalar>& v, const std::vector<Scalar>& offset,
                    const std::vector<std::vector<Scalar>>& basis);

// Is v in span(basis)?
bool in_span(const std::vector<Scalar>& v, const std::vector<std::vector<Scalar>>& basis);

}  // namespace lieb
