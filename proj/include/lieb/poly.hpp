// Dense univariate polynomials over Q: the building block for the scalar
// field Q(t). Degrees stay tiny (catalog entries never exceed degree ~6),
// so simple Euclidean algorithms are fine.
#pragma once

#include <optional>
#include <vector>

#include "lieb/rational.hpp"

namespace lieb {

struct Poly {
  std::vector<Rat> c;  // c[k] = coefficient of t^k; empty == zero polynomial

  Poly() = default;
  explicit Poly(Rat v) {
    if (v != 0) c.push_back(v);
  }
  static Poly t() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }
  Poly(std::vector<Rat> v) : c(std::move(v)) { trim(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return c.empty() ? -1 : int(c.size()) - 1; }
  bool is_const() const { return c.size() <= 1; }
  Rat cval() const { return c.empty() ? Rat(0) : c[0]; }
  Rat lead() const { return c.empty() ? Rat(0) : c.back(); }

  Rat eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
};

// Division with remainder: a = q*b + r, deg r < deg b. b must be nonzero.
inline std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  Poly q;
  if (b.is_zero()) throw std::domain_error("poly division by zero");
  q.c.assign(a.deg() >= b.deg() ? a.deg() - b.deg() + 1 : 0, Rat(0));
  while (!a.is_zero() && a.deg() >= b.deg()) {
    int k = a.deg() - b.deg();
    Rat f = a.lead() / b.lead();
    q.c[k] = f;
    for (size_t i = 0; i < b.c.size(); ++i) a.c[i + k] -= f * b.c[i];
    a.trim();
  }
  q.trim();
  return {q, a};
}

inline Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    auto [q, r] = poly_divmod(a, b);
    a = b;
    b = r;
  }
  if (!a.is_zero()) {
    Rat l = a.lead();
    for (auto& x : a.c) x /= l;  // monic
  }
  return a;
}

// Exact polynomial square root (used for perfect-square discriminants).
inline std::optional<Poly> poly_sqrt(const Poly& p) {
  if (p.is_zero()) return Poly();
  if (p.deg() % 2 != 0) return std::nullopt;
  auto sl = rat_sqrt(p.lead());
  if (!sl) return std::nullopt;
  Poly s;
  s.c.assign(p.deg() / 2 + 1, Rat(0));
  s.c.back() = *sl;
  // Solve coefficients top-down: (s)^2 = p.
  for (int k = int(s.c.size()) - 2; k >= 0; --k) {
    // coefficient of t^(k + deg s) in s^2 must match p
    int target = k + s.deg();
    Rat acc(0);
    for (int i = k + 1; i < int(s.c.size()); ++i) {
      int j = target - i;
      if (j > k && j < int(s.c.size())) acc += s.c[i] * s.c[j];
    }
    s.c[k] = (p.c[target] - acc) / (2 * s.c.back());
  }
  if (s * s == p) return s;
  return std::nullopt;
}

// All rational roots of p (via rational root theorem on the primitive part).
inline std::vector<Rat> poly_rational_roots(const Poly& p) {
  std::vector<Rat> roots;
  if (p.is_zero() || p.is_const()) return roots;
  // Clear denominators to integer coefficients.
  Int lcm = 1;
  for (const auto& x : p.c) {
    Int d = denominator(x);
    lcm = lcm / gcd(lcm, d) * d;
  }
  std::vector<Int> ic;
  for (const auto& x : p.c) ic.push_back(numerator(x * lcm));
  size_t lo = 0;
  while (lo < ic.size() && ic[lo] == 0) ++lo;
  if (lo > 0) roots.push_back(Rat(0));
  if (lo >= ic.size() - 1) return roots;
  Int a0 = abs(ic[lo]), an = abs(ic.back());
  auto divisors = [](Int n) {
    std::vector<Int> d;
    for (Int i = 1; i * i <= n; ++i)
      if (n % i == 0) {
        d.push_back(i);
        if (i * i != n) d.push_back(n / i);
      }
    return d;
  };
  for (const Int& p0 : divisors(a0))
    for (const Int& q0 : divisors(an))
      for (int s : {1, -1}) {
        Rat cand(s * p0, q0);
        if (p.eval(cand) == 0) {
          bool seen = false;
          for (const auto& r : roots) seen = seen || (r == cand);
          if (!seen) roots.push_back(cand);
        }
      }
  return roots;
}

}  // namespace lieb
