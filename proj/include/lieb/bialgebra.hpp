// Lie bialgebras (g, g~): the mixed-Jacobi (one-cocycle) compatibility
// condition, the cocommutator, the 6-dimensional double with its pairing,
// and reconstruction of dual structure constants from an r-matrix.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieb/lie_algebra.hpp"

namespace lieb {

struct Bialgebra {
  std::string name;    // e.g. "(IX,V|b)"
  LieAlgebra g;        // f_{ij}^k at f(i,j,k)
  LieAlgebra g_dual;   // f~^{ij}_k at f(i,j,k)
  // Domain of the entry parameter when one is present (e.g. b != 0, a > 0);
  // used by the classifier to certify that discriminants stay nonzero.
  std::optional<ParamDomain> domain;
};

// Dual bialgebra: the roles of f and f~ swap. Involution: dual(dual(b)) == b.
Bialgebra dual(const Bialgebra& b);

// Compatibility between bracket and cobracket. Empty result = the cocycle
// condition holds identically (in the parameter too).
std::vector<std::array<int, 4>> cocycle_check(const Bialgebra& b);

// delta(X_i) as a 3x3 matrix over X_j (x) X_k; equals minus the Y-matrix of
// the dual tensor.
Mat3 cocommutator(const Bialgebra& b, int i);

struct DoubleAlgebra {
  // Basis order: X_1,X_2,X_3,X~^1,X~^2,X~^3. F[i][j][k] = structure constant.
  std::vector<std::vector<std::vector<Scalar>>> F;
  std::vector<std::vector<Scalar>> pairing;  // ad-invariant bilinear form
};

// Builds the double; `violations` (when non-null) receives human-readable
// Jacobi / pairing-invariance failures instead of throwing.
DoubleAlgebra build_double(const Bialgebra& b, std::vector<std::string>* violations = nullptr);

// Reads dual structure constants off delta(X_i) = [1 (x) X_i + X_i (x) 1, r]:
// f~^{jk}_i = sum_l ( f_{il}^j r^{lk} + f_{il}^k r^{jl} ).
LieAlgebra dual_from_r(const LieAlgebra& g, const Mat3& r);

// Aggregate health check used by catalog validation: Jacobi on both tensors,
// cocycle condition, and the double's Jacobi; returns readable problems.
std::vector<std::string> bialgebra_violations(const Bialgebra& b);

}  // namespace lieb
