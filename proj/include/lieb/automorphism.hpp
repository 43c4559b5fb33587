#pragma once
// Automorphism groups of the catalog algebras (shipped as matrix-template
// data and machine-verified), plus exact isomorphism tests between bialgebra
// structures built on them: dual-tensor transport along an automorphism,
// coboundary transport of r-matrices along a homomorphism, and exact solves
// for the relating matrix.
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieb/bialgebra.hpp"
#include "lieb/lie_algebra.hpp"
#include "lieb/multipoly.hpp"
#include "lieb/smallmat.hpp"

namespace lieb {

// One parametrized family of automorphism candidates for a named algebra:
// O(params) = numer(params) / denom(params). Entries are polynomial in the
// template parameters; a family is admissible at an assignment when denom
// and every "require" polynomial are nonzero there.
struct MatrixTemplate {
  std::string algebra;  // catalog algebra name ("II", "VIa", "IX", ...)
  std::string label;    // "table2-row", "table2-corrected-1", "chart", ...
  std::vector<std::string> params;
  MMat3 numer;
  MPoly denom{Scalar{1}};
  std::vector<MPoly> require_nonzero;  // admissibility: all nonzero
  bool expect_identity = true;  // frozen expectation for verify_template
  std::string note;

  Mat3 eval(const std::map<std::string, Scalar>& assign) const;
  bool admissible(const std::map<std::string, Scalar>& assign) const;
};

// Load matrix templates from a data file (see data/templates_aut.txt for the
// format). Empty filter = all templates. Throws std::runtime_error on
// malformed input or unreadable files.
std::vector<MatrixTemplate> load_templates(const std::string& path,
                                           const std::string& algebra = "");

// Templates for g from the default data file (LIEB_DATA_DIR env override).
std::vector<MatrixTemplate> automorphism_templates(const LieAlgebra& g);

// Does O preserve the bracket of g? Checked through both matrix forms of
// bracket preservation (the adjoint form and the pairing form); the two
// must agree — a mismatch is a convention bug and throws std::logic_error.
// Singular O is rejected with std::invalid_argument.
bool is_automorphism(const LieAlgebra& g, const Mat3& O);

// Is alpha a Lie-algebra homomorphism from `from` to `to` (rows-as-images)?
// The MMat3 overload decides the question identically in the family
// parameters.
bool is_homomorphism(const LieAlgebra& from, const LieAlgebra& to,
                     const Mat3& alpha);
bool is_homomorphism(const LieAlgebra& from, const LieAlgebra& to,
                     const MMat3& alpha);

struct TemplateVerdict {
  bool identity_holds = false;  // bracket identity, identically in params
  bool samples_pass = false;    // all sampled admissible elements verify
  int samples_checked = 0;
  std::optional<Mat3> counterexample;  // admissible element that fails
  std::string detail;
  bool pass() const { return identity_holds && samples_pass; }
};

// Verify one template: symbolically (denominator-cleared polynomial
// identity, plus non-vanishing of the determinant) and on a deterministic
// grid of admissible parameter samples run through is_automorphism.
TemplateVerdict verify_template(const LieAlgebra& g, const MatrixTemplate& t,
                                int max_samples = 100);

struct IsoVerdict {
  enum class Kind { Isomorphic, NotIsomorphic, Undetermined };
  Kind kind = Kind::Undetermined;
  std::optional<Mat3> witness;  // invertible automorphism relating the duals
  std::string detail;
};

// Are the bialgebras (g, ft) and (g, ftp) isomorphic over Aut(g)?
// Solves the dual-transport equations exactly: over the full matrix space
// constrained by bracket preservation, Killing-form preservation and
// invertibility, and over the parameters of any supplied polynomial
// templates. A no-solution certificate from the full-space solve is
// conclusive independent of template coverage; template solves supply
// witnesses. Witnesses are re-verified before being returned.
IsoVerdict bialgebra_iso(const LieAlgebra& g, const LieAlgebra& ft,
                         const LieAlgebra& ftp,
                         const std::vector<MatrixTemplate>& templates = {});

// Transport a dual tensor along an automorphism O of g (rows-as-images):
// returns the unique tensor ftp such that O relates (g, ft) to (g, ftp)
// under the dual-transport identity used by bialgebra_iso.
LieAlgebra transport_dual(const LieAlgebra& g, const LieAlgebra& ft,
                          const Mat3& O);

// Coboundary transport: is alpha an isomorphism of the coboundary
// bialgebras (from, r_from) -> (to, r_to)? alpha must be an invertible
// homomorphism (strict mode throws std::invalid_argument when it is not;
// diagnostic mode records the failure and evaluates the rest anyway). The
// transported difference D = alpha^T r_from alpha - r_to must then induce
// the zero cobracket on `to`; for the skew part this is symmetry of
// X_i^T D for every adjoint matrix X_i of `to`, and failing entry pairs are
// reported one-based in `failures`.
struct CoboundaryIsoReport {
  bool homomorphism = false;
  bool invertible = false;
  bool transport_ok = false;  // D induces the zero cobracket
  Mat3 defect;                // D = alpha^T r_from alpha - r_to
  std::vector<std::string> failures;
  bool pass() const { return homomorphism && invertible && transport_ok; }
};
CoboundaryIsoReport coboundary_iso(const LieAlgebra& from, const Mat3& r_from,
                                   const LieAlgebra& to, const Mat3& r_to,
                                   const Mat3& alpha, bool strict = true);

// Exact solve for a matrix A relating two dual tensors under the transport
// identity A Yt_j A^T = sum_i A[i][j] Yt'_i (the duals' bracket matrices
// transported with rows-as-images). Solved results carry a concrete
// witness; whole parametric families are checked for membership with
// dual_transport_holds.
MSolveResult solve_dual_transport(const LieAlgebra& ft, const LieAlgebra& ftp);
bool dual_transport_holds(const LieAlgebra& ft, const LieAlgebra& ftp,
                          const MMat3& A);
bool dual_transport_holds(const LieAlgebra& ft, const LieAlgebra& ftp,
                          const Mat3& A);

}  // namespace lieb
