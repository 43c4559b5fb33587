// Sparse multivariate polynomials whose coefficients live in the Scalar
// field Q(t). The named variables here are the FREE CONSTANTS of r-matrix
// solution families (c, d, e, ...), kept strictly separate from the single
// algebra parameter (a or b) that lives inside Scalar itself.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "lieb/smallmat.hpp"

namespace lieb {

using Mono = std::map<std::string, int>;  // variable -> exponent (> 0)

struct MPoly {
  std::map<Mono, Scalar> terms;  // no explicit zero coefficients

  MPoly() = default;
  explicit MPoly(const Scalar& c) {
    if (!c.is_zero()) terms[{}] = c;
  }
  explicit MPoly(long long v) : MPoly(Scalar(v)) {}
  static MPoly var(const std::string& name) {
    MPoly p;
    p.terms[{{name, 1}}] = Scalar(1);
    return p;
  }

  bool is_zero() const { return terms.empty(); }
  bool is_const() const { return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty()); }
  Scalar constant() const;  // coefficient of the empty monomial
  int total_degree() const;
  int degree_in(const std::string& v) const;
  std::set<std::string> vars() const;

  // Coefficient layers with respect to one variable: result[k] = coefficient
  // of v^k (an MPoly free of v).
  std::map<int, MPoly> as_univariate(const std::string& v) const;

  MPoly subst(const std::string& v, const MPoly& value) const;
  MPoly subst_all(const std::map<std::string, Scalar>& assignment) const;

  friend MPoly operator+(const MPoly& x, const MPoly& y);
  friend MPoly operator-(const MPoly& x, const MPoly& y);
  friend MPoly operator*(const MPoly& x, const MPoly& y);
  friend MPoly operator*(const Scalar& s, const MPoly& y);
  MPoly operator-() const;
  bool operator==(const MPoly& o) const { return terms == o.terms; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  std::string str() const;
};

// 3x3 matrix and rank-3 tensor over MPoly (the r-matrix family containers).
struct MMat3 {
  std::array<std::array<MPoly, 3>, 3> m{};
  std::array<MPoly, 3>& operator[](int i) { return m[i]; }
  const std::array<MPoly, 3>& operator[](int i) const { return m[i]; }
  bool is_zero() const;
  MMat3 transpose() const;
  MMat3 skew_part() const;  // (m - m^T) with the 1/2 factor
  MMat3 sym_part() const;   // (m + m^T) with the 1/2 factor
  Mat3 eval(const std::map<std::string, Scalar>& assignment) const;
  friend MMat3 operator+(const MMat3& a, const MMat3& b);
  friend MMat3 operator-(const MMat3& a, const MMat3& b);
  friend MMat3 operator*(const MMat3& a, const MMat3& b);
  friend MMat3 operator*(const MPoly& s, const MMat3& a);
  bool operator==(const MMat3& o) const { return m == o.m; }
  std::string str() const;
};

MMat3 to_mmat(const Mat3& a);
MPoly mdet(const MMat3& a);

struct MTensor333 {
  std::array<std::array<std::array<MPoly, 3>, 3>, 3> t{};
  MPoly& operator()(int i, int j, int k) { return t[i][j][k]; }
  const MPoly& operator()(int i, int j, int k) const { return t[i][j][k]; }
  bool is_zero() const;
};

// Exact solver for small polynomial systems (degree <= 2, few variables):
// the CYBE system restricted to an affine r-matrix family. Strategy:
// eliminate variables that occur linearly, solve univariate quadratics by
// discriminant (exact square roots only), and fall back to trying zero for
// one remaining variable at a time. Honest: when nothing applies the result
// is Undetermined with the residual system attached.
struct MSolveResult {
  enum class Status { NoSolution, Solved, Undetermined } status = Status::Undetermined;
  // For Solved: assignment for the eliminated variables; variables absent
  // from the map are free (any value works).
  std::map<std::string, Scalar> witness;
  std::vector<std::string> residual;  // printed leftover equations when Undetermined
  std::string note;                   // certificate commentary (e.g. negative discriminant)
};

MSolveResult msolve(std::vector<MPoly> eqs, int depth = 6);

}  // namespace lieb
