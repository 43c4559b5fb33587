// Scalar: the exact coefficient field used throughout — rational functions
// p(t)/q(t) over Q in at most ONE named parameter (e.g. "a" or "b").
// An entry's scalars never mix two parameter names; attempting to combine
// them is a hard error rather than a silent coercion.
#pragma once

#include <optional>
#include <string>

#include "lieb/poly.hpp"

namespace lieb {

struct Scalar {
  Poly num;           // numerator
  Poly den;           // denominator, monic, gcd(num,den)=1
  std::string param;  // parameter name; empty when value is a plain rational

  Scalar() : num(), den(Rat(1)) {}
  Scalar(Rat v) : num(v), den(Rat(1)) {}
  Scalar(long long v) : num(Rat(v)), den(Rat(1)) {}
  Scalar(Poly n, Poly d, std::string p) : num(std::move(n)), den(std::move(d)), param(std::move(p)) {
    normalize();
  }
  static Scalar sym(const std::string& name) { return Scalar(Poly::t(), Poly(Rat(1)), name); }

  void normalize();
  bool is_zero() const { return num.is_zero(); }
  bool is_const() const { return num.is_const() && den.is_const(); }
  bool is_polynomial() const { return den.is_const(); }
  Rat cval() const;  // value as plain rational; throws if parameter-dependent

  // Substitute the parameter by an exact rational; throws if the denominator
  // vanishes there.
  Rat eval(const Rat& t) const;
  double eval_double(double t) const;

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);
  Scalar operator-() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;
};

// Exact square root when the value is a perfect square in Q(t).
std::optional<Scalar> scalar_sqrt(const Scalar& s);

// Parses scalar expressions: integers, fractions, one symbol, + - * / ^,
// parentheses, unary minus. E.g. "-1/(2*a)", "(a+1)/(a-1)", "b^2".
Scalar scalar_parse(const std::string& text);

}  // namespace lieb
