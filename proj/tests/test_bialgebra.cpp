// Bialgebra compatibility: the mixed-Jacobi (cocycle) condition, the
// cocommutator, duality as an involution, the classical double, and the
// reconstruction of dual structure constants from an r-matrix.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lieb/bialgebra.hpp"
#include "lieb/rmatrix.hpp"

using namespace lieb;

namespace {

// A wedge c*Xi^Xj as a plain matrix (1-based indices for readability).
Mat3 wedge(int i, int j, const Scalar& c) {
  Mat3 m = Mat3::zero();
  m[i - 1][j - 1] = c;
  m[j - 1][i - 1] = -c;
  return m;
}

// The V tensor scaled by s: [X1,X2] = -s X2, [X3,X1] = s X3.
LieAlgebra v_scaled(const Scalar& s) {
  LieAlgebra d;
  d.name = "V*";
  d.f(0, 1, 1) = -s;
  d.f(1, 0, 1) = s;
  d.f(0, 2, 2) = -s;
  d.f(2, 0, 2) = s;
  return d;
}

Bialgebra ix_v_b() {
  Scalar b = Scalar::sym("b");
  Bialgebra e;
  e.name = "(IX,V|b)";
  e.g = bianchi("IX");
  e.g_dual = v_scaled(b);
  e.domain = ParamDomain{"b", false, {Rat(0)}};
  return e;
}

}  // namespace

TEST_CASE("dual structure constants reconstructed from an r-matrix") {
  Scalar b = Scalar::sym("b");

  SUBCASE("IX with b*X2^X3 reproduces the V tensor scaled by b") {
    auto d = dual_from_r(bianchi("IX"), wedge(2, 3, b));
    CHECK(d.f == v_scaled(b).f);
    CHECK(jacobi_check(d).empty());
  }

  SUBCASE("the Heisenberg algebra with any c,d wedge gives an abelian dual") {
    Mat3 r = wedge(1, 2, Scalar(2)) + wedge(1, 3, Scalar(-3));
    auto d = dual_from_r(bianchi("II"), r);
    CHECK(d.is_abelian());
  }

  SUBCASE("V with -1/2 X2^X3 gives exactly the Heisenberg tensor") {
    auto d = dual_from_r(bianchi("V"), wedge(2, 3, Scalar(rat(-1, 2))));
    CHECK(d.f == bianchi("II").f);
  }

  SUBCASE("r = 0 always gives the abelian dual") {
    auto d = dual_from_r(bianchi("VIII"), Mat3::zero());
    CHECK(d.is_abelian());
  }
}

TEST_CASE("cocycle condition") {
  SUBCASE("holds identically for (IX,V|b)") { CHECK(cocycle_check(ix_v_b()).empty()); }

  SUBCASE("holds for every dual built from a coboundary r-matrix") {
    Bialgebra e;
    e.g = bianchi("VII0");
    e.g_dual = dual_from_r(e.g, wedge(2, 3, Scalar(1)));
    CHECK(cocycle_check(e).empty());
  }

  SUBCASE("fails for the self-paired V tensor") {
    Bialgebra e;
    e.g = bianchi("V");
    e.g_dual = bianchi("V");
    auto bad = cocycle_check(e);
    REQUIRE(!bad.empty());
    // Hand-checked component: i=2, j=3, k=2, l=3 gives -2 on the left and 0
    // on the right.
    bool found = false;
    for (const auto& q : bad) found = found || (q == std::array<int, 4>{2, 3, 2, 3});
    CHECK(found);
  }
}

TEST_CASE("cocommutator matrices") {
  auto e = ix_v_b();
  Scalar b = Scalar::sym("b");
  Mat3 d2 = cocommutator(e, 1);  // delta(X_2)
  CHECK(d2[0][1] == -b);
  CHECK(d2[1][0] == b);
  CHECK(d2[0][0].is_zero());
  CHECK(d2[2][2].is_zero());
  // delta(X_1) = 0 for this entry.
  CHECK(cocommutator(e, 0).is_zero());
  // The cocommutator is minus the Y-matrix of the dual tensor.
  auto Y = y_matrices(e.g_dual);
  for (int i = 0; i < 3; ++i) CHECK(cocommutator(e, i) == -Y[i]);
}

TEST_CASE("duality is an involution and swaps the name") {
  auto e = ix_v_b();
  auto d = dual(e);
  CHECK(d.name == "(V|b,IX)");
  CHECK(d.g.f == e.g_dual.f);
  CHECK(d.g_dual.f == e.g.f);
  auto dd = dual(d);
  CHECK(dd.name == e.name);
  CHECK(dd.g.f == e.g.f);
  CHECK(dd.g_dual.f == e.g_dual.f);
}

TEST_CASE("the classical double") {
  SUBCASE("closes with Jacobi and invariant pairing for (IX,V|b)") {
    std::vector<std::string> bad;
    auto D = build_double(ix_v_b(), &bad);
    CHECK(bad.empty());
    // Pairing is the canonical block form <X_i, X~^j> = delta.
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(D.pairing[i][3 + j] == (i == j ? Scalar(1) : Scalar(0)));
        CHECK(D.pairing[3 + i][j] == (i == j ? Scalar(1) : Scalar(0)));
        CHECK(D.pairing[i][j].is_zero());
        CHECK(D.pairing[3 + i][3 + j].is_zero());
      }
    // The primal and dual tensors embed as sub-blocks.
    CHECK(D.F[1][2][0] == Scalar(1));                 // [X2,X3] = X1 in IX
    CHECK(D.F[3 + 0][3 + 1][3 + 1] == -Scalar::sym("b"));  // dual block
  }

  SUBCASE("reports Jacobi violations for an incompatible pair") {
    Bialgebra e;
    e.name = "(V,V)";
    e.g = bianchi("V");
    e.g_dual = bianchi("V");
    std::vector<std::string> bad;
    build_double(e, &bad);
    CHECK(!bad.empty());
  }
}

TEST_CASE("aggregate violation report") {
  CHECK(bialgebra_violations(ix_v_b()).empty());

  Bialgebra e;
  e.name = "(V,V)";
  e.g = bianchi("V");
  e.g_dual = bianchi("V");
  CHECK(!bialgebra_violations(e).empty());
}
