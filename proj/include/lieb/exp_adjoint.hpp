// Closed-form exp(x*M) for singular exact 3x3 matrices — the adjoint
// matrices of three-dimensional Lie algebras all have a zero row, so their
// characteristic polynomial is lambda*(lambda^2 - p*lambda + q) with
// p = trace and q the sum of principal 2x2 minors. The exponential is
// assembled case by case from the spectrum and returned as a symbolic
// matrix in the variable `var`.
#pragma once

#include <string>

#include "lieb/expr.hpp"
#include "lieb/smallmat.hpp"

namespace lieb {

// Which closed form was used (exposed for tests and diagnostics).
enum class SpectrumCase {
  Nilpotent,       // p = q = 0: I + xM + x^2 M^2/2
  ZeroZeroP,       // q = 0, p != 0: eigenvalues {0, 0, p}
  DoubleRoot,      // disc = 0, q != 0: eigenvalues {0, p/2, p/2}
  RealDistinct,    // disc a nonzero perfect square: {0, l1, l2}
  ComplexPair,     // disc = -s^2: {0, alpha +- i beta}
};

SpectrumCase spectrum_case(const Mat3& M);

// exp(var*M), entries exact symbolic expressions. Throws std::domain_error
// with an "unsupported spectrum" message when M is nonsingular or when the
// discriminant p^2 - 4q is neither a perfect square nor the negative of one
// in the scalar field.
ExprMat3 exp_adjoint(const Mat3& M, const std::string& var);

// Lifts an exact matrix entrywise into the expression layer.
ExprMat3 mat_to_exprmat(const Mat3& M);

}  // namespace lieb
