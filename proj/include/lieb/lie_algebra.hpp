// Three-dimensional real Lie algebras in the Bianchi normal form
// [X1,X2] = -a X2 + n3 X3, [X2,X3] = n1 X1, [X3,X1] = n2 X2 + a X3,
// plus arbitrary structure tensors loaded from the catalog.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lieb/smallmat.hpp"

namespace lieb {

// Admissible set for a named parameter: `positive` restricts to t > 0 and
// `excluded` lists rational values barred by the classification (0, 1, ...).
struct ParamDomain {
  std::string name;
  bool positive = false;
  std::vector<Rat> excluded;

  bool admits(const Rat& v) const;
  std::string str() const;
};

enum class Sign { Zero, Nonzero, Unknown };

// Decides whether s is nonzero for every admissible parameter value.
// Degree <= 2 gets full discriminant analysis; higher degrees fall back to
// rational-root screening plus a positivity heuristic, else Unknown.
Sign nonzero_on_domain(const Scalar& s, const ParamDomain& dom);

struct LieAlgebra {
  std::string name;
  Tensor333 f;  // f(i,j,k) = structure constant of [X_i, X_j] along X_k
  std::optional<ParamDomain> domain;

  Vec3 bracket(const Vec3& u, const Vec3& v) const;
  bool is_abelian() const { return f.is_zero(); }
  std::string param() const { return domain ? domain->name : std::string(); }
};

// Bianchi catalog constructor. `type` is one of I, II, III, IV, V, VIo, VIa,
// VIIo, VIIa, VIII, IX. Types VIa/VIIa take the parameter either as an exact
// rational (domain-checked) or as the symbol "a".
LieAlgebra bianchi(const std::string& type, std::optional<Scalar> a = std::nullopt);

// Structure-tensor health: antisymmetry + Jacobi identity. Returns
// human-readable violation descriptions (empty == healthy).
std::vector<std::string> jacobi_check(const LieAlgebra& g);

// Adjoint family X_i with (X_i)[l][j] = -f_{il}^j. These are the matrices
// whose transposes act in the coboundary equation.
std::array<Mat3, 3> adjoint_matrices(const LieAlgebra& g);

// Y^i with (Y^i)[j][k] = -f_{jk}^i (the "structure tensor as matrix pencil"
// form used by the dual-side equation and the isomorphism equation).
std::array<Mat3, 3> y_matrices(const LieAlgebra& g);

// ad X_i in the basis convention (ad_i)[k][j] = f_{ij}^k.
std::array<Mat3, 3> ad_matrices(const LieAlgebra& g);

Mat3 killing_form(const LieAlgebra& g);

// Trace of ad X_i for each i (unimodularity probe; equals -2a on Bianchi forms).
Vec3 ad_traces(const LieAlgebra& g);

}  // namespace lieb
