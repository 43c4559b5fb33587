#include "lieb/catalog.hpp"

#include <stdexcept>

#include "lieb/rmatrix.hpp"

namespace lieb {

namespace {

Mat3 wedge(int i, int j, const Scalar& c) {
  Mat3 m = Mat3::zero();
  m[i - 1][j - 1] = c;
  m[j - 1][i - 1] = -c;
  return m;
}

// Scaled one-parameter duals: [X1,X2] = -b X2, [X3,X1] = b X3 and the
// corresponding scalings of the V.i / V.ii realizations.
LieAlgebra v_scaled(const std::string& tag, const Scalar& b) {
  LieAlgebra d;
  d.name = "V" + tag + "|" + b.str();
  if (tag.empty() || tag == ".i") {
    d.f(0, 1, 1) = -b;
    d.f(0, 2, 2) = -b;
  } else if (tag == ".ii") {
    d.f(0, 1, 0) = -b;
    d.f(0, 1, 1) = b;
    d.f(0, 2, 2) = b;
    d.f(1, 2, 2) = b;
  } else {
    throw std::invalid_argument("unknown V realization tag: " + tag);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < i; ++j)
      for (int k = 0; k < 3; ++k) d.f(i, j, k) = -d.f(j, i, k);
  return d;
}

LieAlgebra renamed(LieAlgebra g, const std::string& name) {
  g.name = name;
  return g;
}

}  // namespace

LieAlgebra model_algebra(const std::string& name) {
  Scalar a = Scalar::sym("a");
  Scalar b = Scalar::sym("b");
  Scalar half = Scalar(rat(1, 2));

  if (name == "II.i")
    return renamed(dual_from_r(bianchi("V"), wedge(2, 3, -half)), name);
  if (name == "V.i")
    return renamed(dual_from_r(bianchi("VII0"), wedge(2, 3, Scalar(1))), name);
  if (name == "V.ii")
    return renamed(dual_from_r(bianchi("VI0"), wedge(2, 3, Scalar(-1)) + wedge(3, 1, Scalar(1))),
                   name);
  if (name == "III.ii")
    return renamed(dual_from_r(bianchi("III"), -half * (wedge(1, 2, Scalar(1)) + wedge(3, 1, Scalar(1)))),
                   name);
  if (name == "III.iii")
    return renamed(dual_from_r(bianchi("III"), -half * (wedge(1, 2, Scalar(1)) + wedge(1, 3, Scalar(1)))),
                   name);
  if (name == "IV.ii") {
    LieAlgebra g;
    g.name = name;
    g.f(0, 1, 0) = Scalar(-1);
    g.f(0, 1, 1) = Scalar(1);
    g.f(0, 1, 2) = Scalar(1);
    g.f(0, 2, 2) = Scalar(1);
    g.f(1, 2, 2) = Scalar(1);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < i; ++j)
        for (int k = 0; k < 3; ++k) g.f(i, j, k) = -g.f(j, i, k);
    return g;
  }
  if (name == "VI1a.ii") {
    Scalar c = Scalar(-1) / (a - Scalar(1));
    LieAlgebra g = dual_from_r(bianchi("VIa"), c * (wedge(1, 2, Scalar(1)) + wedge(3, 1, Scalar(1))));
    g.domain = ParamDomain{"a", true, {Rat(1)}};
    return renamed(g, name);
  }
  if (name == "VI1a.iii") {
    Scalar c = Scalar(-1) / (a + Scalar(1));
    LieAlgebra g = dual_from_r(bianchi("VIa"), c * (wedge(1, 2, Scalar(1)) + wedge(1, 3, Scalar(1))));
    g.domain = ParamDomain{"a", true, {Rat(1)}};
    return renamed(g, name);
  }
  if (name == "V|b" || name == "V.i|b") return v_scaled(name.substr(1, name.size() - 3), b);
  if (name == "V.ii|b") return v_scaled(".ii", b);
  return bianchi(name);
}

LieAlgebra at_param(const LieAlgebra& g, const Rat& v) {
  LieAlgebra out = g;
  if (g.domain && !g.domain->admits(v))
    throw std::invalid_argument("parameter value " + rat_str(v) + " outside the domain " +
                                g.domain->str() + " of " + g.name);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out.f(i, j, k) = Scalar(g.f(i, j, k).eval(v));
  out.domain.reset();
  if (g.domain) out.name = g.name + "(" + g.domain->name + "=" + rat_str(v) + ")";
  return out;
}

}  // namespace lieb
