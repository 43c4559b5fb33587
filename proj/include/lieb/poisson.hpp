// Poisson-Lie structures: left/right invariant vector fields from the
// ordered-exponential parameterization g = e^{x1 X1} e^{x2 X2} e^{x3 X3},
// the Sklyanin bracket with its one-sided variants, the linearization
// consistency check against the dual structure tensor, and the numeric
// sampling layer used to compare symbolic results against table fixtures
// (the only place floating point is allowed).
#pragma once

#include <map>
#include <string>
#include <vector>

#include "lieb/expr.hpp"
#include "lieb/lie_algebra.hpp"
#include "lieb/multipoly.hpp"

namespace lieb {

struct VectorFieldFrame {
  // Row j holds the components of the j-th frame field in the d/dx_l basis.
  ExprMat3 left;        // X_j^L
  ExprMat3 right;       // X_j^R
  // Maurer-Cartan one-form coefficient matrices: (g^-1 dg)^i = L^i_j dx^j
  // and (dg g^-1)^i = R^i_j dx^j. The frames are their inverse transposes.
  ExprMat3 left_form;   // L^i_j
  ExprMat3 right_form;  // R^i_j
};

// Builds both frames from the closed-form adjoint exponentials. Throws
// std::domain_error when an adjoint spectrum is outside the supported cases.
VectorFieldFrame invariant_fields(const LieAlgebra& g);

// Commutator of two vector fields given by component rows:
// [X,Y]^m = sum_l (X^l d_l Y^m - Y^l d_l X^m).
std::array<Expr, 3> field_commutator(const std::array<Expr, 3>& x,
                                     const std::array<Expr, 3>& y);

enum class PoissonFlavor { Sklyanin, LeftOnly, RightOnly };
std::string flavor_name(PoissonFlavor f);

struct PoissonStructure {
  ExprMat3 p;  // p[i][j] = {x_{i+1}, x_{j+1}}; antisymmetric
  PoissonFlavor flavor = PoissonFlavor::Sklyanin;
};

// The Sklyanin bracket {f1,f2} = sum r^{kl} (X_k^L f1 X_l^L f2
// - X_k^R f1 X_l^R f2) restricted to coordinate functions, as the matrix
// FL^T r FL - FR^T r FR. LeftOnly/RightOnly give the one-sided invariant
// brackets FL^T r FL and FR^T r FR (both positive: each is a Poisson
// structure in its own right when [[r,r]] = 0). A symmetric
// part of r is dropped when it is ad-invariant (it cancels between the two
// terms); otherwise the request is refused. One-sided flavors additionally
// require the classical Yang-Baxter equation [[r,r]] = 0 and refuse with
// the nonzero Schouten witness. Free constants in an r-matrix family enter
// the entries as symbols.
PoissonStructure sklyanin(const LieAlgebra& g, const MMat3& r, PoissonFlavor flavor);
PoissonStructure sklyanin(const LieAlgebra& g, const Mat3& r, PoissonFlavor flavor);

struct LinearizationReport {
  bool pass = true;
  std::vector<std::string> mismatches;
};

// The tangent-Lie-bialgebra consistency check: d{x_i,x_j}/dx_k at the
// origin must reproduce the dual structure tensor of (g, r). Exact: the
// derivative folds to a rational number once the coordinates are zero
// (parameter values are compared at exact rational samples drawn from the
// domain when g carries a parameter).
LinearizationReport linearization_check(const LieAlgebra& g, const Mat3& r);

// --- numeric comparison layer -------------------------------------------

// Deterministic rational sample points: `count` assignments giving every
// listed symbol a value k/32 in [-1,1]. Same seed => same points anywhere.
std::vector<std::map<std::string, Rat>> sample_box(
    const std::vector<std::string>& symbols, int count, unsigned seed = 20260815u);

double eval_at(const Expr& e, const std::map<std::string, Rat>& pt);

// max over the samples of |a - b|, with `fixed` assignments (parameter
// values, free constants) merged into every point.
double max_abs_deviation(const Expr& a, const Expr& b,
                         const std::vector<std::map<std::string, Rat>>& pts,
                         const std::map<std::string, Rat>& fixed = {});

// max over the samples of the Jacobi cyclic sum
// |sum_l P_il d_l P_jk + P_jl d_l P_ki + P_kl d_l P_ij| for (i,j,k)=(1,2,3).
double jacobi_max_deviation(const PoissonStructure& ps,
                            const std::vector<std::map<std::string, Rat>>& pts,
                            const std::map<std::string, Rat>& fixed = {});

}  // namespace lieb
