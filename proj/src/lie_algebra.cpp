#include "lieb/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace lieb {

bool ParamDomain::admits(const Rat& v) const {
  if (positive && !(v > 0)) return false;
  for (const auto& x : excluded)
    if (x == v) return false;
  return true;
}

std::string ParamDomain::str() const {
  std::ostringstream os;
  os << name;
  if (positive) os << " > 0";
  for (const auto& x : excluded) os << ", " << name << " != " << rat_str(x);
  return os.str();
}

Sign nonzero_on_domain(const Scalar& s, const ParamDomain& dom) {
  if (s.is_zero()) return Sign::Zero;
  // A ratio vanishes exactly where its numerator does.
  Poly p = s.num;
  // Strip monomial factors t^k: harmless when 0 is outside the domain.
  while (p.deg() >= 1 && p.c[0] == 0) {
    if (dom.admits(Rat(0))) return Sign::Unknown;
    p.c.erase(p.c.begin());
    p.trim();
  }
  if (p.is_const()) return Sign::Nonzero;
  if (p.deg() == 1) {
    Rat root = -p.c[0] / p.c[1];
    return dom.admits(root) ? Sign::Unknown : Sign::Nonzero;
  }
  if (p.deg() == 2) {
    Rat a = p.c[2], b = p.c[1], c = p.c[0];
    Rat disc = b * b - 4 * a * c;
    if (disc < 0) return Sign::Nonzero;
    if (disc == 0) {
      Rat root = -b / (2 * a);
      return dom.admits(root) ? Sign::Unknown : Sign::Nonzero;
    }
    if (auto sq = rat_sqrt(disc)) {
      Rat r1 = (-b + *sq) / (2 * a), r2 = (-b - *sq) / (2 * a);
      return (dom.admits(r1) || dom.admits(r2)) ? Sign::Unknown : Sign::Nonzero;
    }
    // Two distinct irrational roots; excluded rationals cannot absorb them.
    if (dom.positive) {
      Rat sum = -b / a, prod = c / a;
      // Both roots <= 0 iff sum <= 0 and prod >= 0: then no positive root.
      if (sum <= 0 && prod >= 0) return Sign::Nonzero;
    }
    return Sign::Unknown;
  }
  // Higher degree: same-sign coefficients leave no positive root.
  if (dom.positive) {
    bool all_nonneg = true, all_nonpos = true;
    for (const auto& x : p.c) {
      if (x < 0) all_nonneg = false;
      if (x > 0) all_nonpos = false;
    }
    if (all_nonneg || all_nonpos) return Sign::Nonzero;
  }
  auto roots = poly_rational_roots(p);
  for (const auto& r : roots)
    if (dom.admits(r)) return Sign::Unknown;
  // No admissible rational root, but irrational roots may remain.
  return Sign::Unknown;
}

Vec3 LieAlgebra::bracket(const Vec3& u, const Vec3& v) const {
  Vec3 w = {Scalar(0), Scalar(0), Scalar(0)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (u[i].is_zero() || v[j].is_zero()) continue;
      for (int k = 0; k < 3; ++k) w[k] = w[k] + u[i] * v[j] * f(i, j, k);
    }
  return w;
}

namespace {

// Bianchi data (a, n1, n2, n3) filled into the structure tensor:
// [X1,X2] = -a X2 + n3 X3, [X2,X3] = n1 X1, [X3,X1] = n2 X2 + a X3.
Tensor333 bianchi_tensor(const Scalar& a, const Scalar& n1, const Scalar& n2, const Scalar& n3) {
  Tensor333 f;
  f(0, 1, 1) = -a;
  f(0, 1, 2) = n3;
  f(1, 2, 0) = n1;
  f(0, 2, 1) = -n2;  // [X3,X1] = n2 X2 + a X3, stored via its transpose pair
  f(0, 2, 2) = -a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j)
      for (int k = 0; k < 3; ++k) f(i, j, k) = -f(j, i, k);
  return f;
}

std::string canonical_type(std::string t) {
  std::string s;
  for (char ch : t)
    if (ch != '_' && ch != ' ') s += ch;
  for (auto& ch : s)
    if (ch == 'o' || ch == 'O') ch = '0';
  // "VI" alone is ambiguous; require an explicit 0 or parameter marker.
  return s;
}

}  // namespace

LieAlgebra bianchi(const std::string& type, std::optional<Scalar> a) {
  std::string t = canonical_type(type);
  LieAlgebra g;
  auto fixed = [&](Scalar aa, Scalar n1, Scalar n2, Scalar n3) {
    g.f = bianchi_tensor(aa, n1, n2, n3);
  };
  auto reject_param = [&]() {
    if (a) throw std::invalid_argument("Bianchi type " + type + " takes no parameter");
  };
  if (t == "I") {
    reject_param();
    fixed(0, 0, 0, 0);
  } else if (t == "II") {
    reject_param();
    fixed(0, 1, 0, 0);
  } else if (t == "III") {
    reject_param();
    fixed(1, 0, 1, -1);
  } else if (t == "IV") {
    reject_param();
    fixed(1, 0, 0, 1);
  } else if (t == "V") {
    reject_param();
    fixed(1, 0, 0, 0);
  } else if (t == "VI0") {
    reject_param();
    fixed(0, 1, -1, 0);
  } else if (t == "VII0") {
    reject_param();
    fixed(0, 1, 1, 0);
  } else if (t == "VIII") {
    reject_param();
    fixed(0, 1, 1, -1);
  } else if (t == "IX") {
    reject_param();
    fixed(0, 1, 1, 1);
  } else if (t == "VIa" || t == "VIIa") {
    ParamDomain dom;
    dom.name = "a";
    dom.positive = true;
    if (t == "VIa") dom.excluded.push_back(Rat(1));
    Scalar av = a.value_or(Scalar::sym("a"));
    if (av.is_const()) {
      if (!dom.admits(av.cval()))
        throw std::invalid_argument("parameter " + av.str() + " outside the domain " + dom.str() +
                                    " of Bianchi type " + type);
    } else {
      if (av != Scalar::sym(av.param))
        throw std::invalid_argument("Bianchi parameter must be a rational or a bare symbol");
      dom.name = av.param;
      g.domain = dom;
    }
    if (t == "VIa")
      fixed(av, 0, 1, -1);
    else
      fixed(av, 0, 1, 1);
    g.name = (t == "VIa" ? "VIa" : "VIIa");
    if (av.is_const()) g.name += "(" + av.str() + ")";
    return g;
  } else {
    throw std::invalid_argument("unknown Bianchi type: " + type);
  }
  g.name = t;
  return g;
}

std::vector<std::string> jacobi_check(const LieAlgebra& g) {
  std::vector<std::string> bad;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (g.f(i, j, k) != -g.f(j, i, k)) {
          std::ostringstream os;
          os << "antisymmetry fails: f[" << i + 1 << "][" << j + 1 << "]^" << k + 1 << " = "
             << g.f(i, j, k).str() << " but f[" << j + 1 << "][" << i + 1 << "]^" << k + 1 << " = "
             << g.f(j, i, k).str();
          bad.push_back(os.str());
        }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int k = j + 1; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          Scalar s(0);
          for (int m = 0; m < 3; ++m)
            s = s + g.f(i, j, m) * g.f(m, k, l) + g.f(j, k, m) * g.f(m, i, l) +
                g.f(k, i, m) * g.f(m, j, l);
          if (!s.is_zero()) {
            std::ostringstream os;
            os << "Jacobi fails on (X" << i + 1 << ",X" << j + 1 << ",X" << k + 1 << ") along X"
               << l + 1 << ": residue " << s.str();
            bad.push_back(os.str());
          }
        }
  return bad;
}

std::array<Mat3, 3> adjoint_matrices(const LieAlgebra& g) {
  std::array<Mat3, 3> out;
  for (int i = 0; i < 3; ++i) {
    Mat3 m = Mat3::zero();
    for (int l = 0; l < 3; ++l)
      for (int j = 0; j < 3; ++j) m[l][j] = -g.f(i, l, j);
    out[i] = m;
  }
  return out;
}

std::array<Mat3, 3> y_matrices(const LieAlgebra& g) {
  std::array<Mat3, 3> out;
  for (int i = 0; i < 3; ++i) {
    Mat3 m = Mat3::zero();
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) m[j][k] = -g.f(j, k, i);
    out[i] = m;
  }
  return out;
}

std::array<Mat3, 3> ad_matrices(const LieAlgebra& g) {
  std::array<Mat3, 3> out;
  for (int i = 0; i < 3; ++i) {
    Mat3 m = Mat3::zero();
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) m[k][j] = g.f(i, j, k);
    out[i] = m;
  }
  return out;
}

Mat3 killing_form(const LieAlgebra& g) {
  Mat3 K = Mat3::zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Scalar s(0);
      for (int k = 0; k < 3; ++k)
        for (int m = 0; m < 3; ++m) s = s + g.f(i, m, k) * g.f(j, k, m);
      K[i][j] = s;
    }
  return K;
}

Vec3 ad_traces(const LieAlgebra& g) {
  Vec3 v = {Scalar(0), Scalar(0), Scalar(0)};
  for (int i = 0; i < 3; ++i) {
    Scalar s(0);
    for (int k = 0; k < 3; ++k) s = s + g.f(i, k, k);
    v[i] = s;
  }
  return v;
}

}  // namespace lieb
