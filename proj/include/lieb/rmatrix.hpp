// r-matrices: the coboundary equation, Schouten brackets / CYBE tensors,
// the triangular / quasitriangular / factorizable classification, and
// bi-r-matrix detection. r-matrix families are affine sets whose free
// constants live in the MPoly layer.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lieb/bialgebra.hpp"
#include "lieb/multipoly.hpp"

namespace lieb {

struct RTensor {
  Mat3 m;
  Mat3 skew() const;  // (m - m^T)/2
  Mat3 sym() const;   // (m + m^T)/2
};

struct RSolutionSet {
  Mat3 particular;                      // one exact solution
  std::vector<Mat3> homogeneous;        // basis of the invariant-r space
  std::vector<std::string> free_names;  // c1..cn matching `homogeneous`
  std::vector<Rat> exceptional;         // parameter values where rank may drop

  MMat3 family() const;  // particular + sum c_k * homogeneous[k]
  // Is the given matrix (exact entries) a member of the affine set?
  bool contains(const Mat3& r) const;
  // Is family `other` (affine in its own constants) contained in this set?
  bool contains_family(const MMat3& other) const;
};

struct CoboundaryResult {
  std::optional<RSolutionSet> set;  // nullopt = non-coboundary
  std::string note;                 // inconsistency witness / pivot commentary
};

// Solves delta = dr as 27 linear equations in the 9 entries of r.
CoboundaryResult solve_coboundary(const Bialgebra& b);

// CYBE tensor [[r,r]] with components in the X_p (x) X_q (x) X_s basis.
Tensor333 schouten(const LieAlgebra& g, const Mat3& r);
MTensor333 schouten_family(const LieAlgebra& g, const MMat3& r);

// Ad-invariance of a 2-tensor / 3-tensor.
bool is_invariant(const LieAlgebra& g, const Mat3& t);
bool is_invariant3(const LieAlgebra& g, const Tensor333& t);

// For a totally antisymmetric tensor, the coefficient of X1^X2^X3; nullopt
// if the tensor is not a multiple of the Levi-Civita pattern.
std::optional<MPoly> wedge3_coefficient(const MTensor333& t);
std::optional<Scalar> wedge3_coefficient(const Tensor333& t);

struct Classification {
  std::string verdict;  // non-coboundary | triangular | quasitriangular | factorizable
  std::optional<Mat3> witness;
  std::string witness_text;                // wedge/tensor notation
  std::optional<Scalar> omega;             // [[r,r]] coefficient at the witness (skew case)
  std::vector<std::string> certificates;   // machine-checked supporting facts
  std::string note;                        // honesty notes (undetermined residuals, ...)
};

Classification classify(const Bialgebra& b);

struct BiRMatrixResult {
  std::optional<RSolutionSet> r;        // Eq on the primal side
  std::optional<RSolutionSet> r_dual;   // same equation on the dual side
  std::string status;  // "bi-r-matrix (equivalence unverified)" | "not bi-r-matrix: ..."
};

BiRMatrixResult bi_r_matrix(const Bialgebra& b);

// r-matrix notation: "X1^X2" is the wedge X1(x)X2 - X2(x)X1, "X1@X2" the
// plain tensor product; coefficients may use the algebra parameter (a, b)
// and free-constant names (c, d, e, ...).
MMat3 parse_rmatrix(const std::string& text);
std::string format_rmatrix(const Mat3& r);
std::string format_rmatrix(const MMat3& r);
std::string format_wedge3(const Scalar& w);  // "w*X1^X2^X3"

std::vector<Scalar> vec9(const Mat3& m);
Mat3 unvec9(const std::vector<Scalar>& v);

}  // namespace lieb
