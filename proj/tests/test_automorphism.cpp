// Automorphism groups, matrix templates, dual transport, and bialgebra
// isomorphism verdicts.  The expected values here were computed with exact
// arithmetic and frozen; the relating-map fixtures near the end record, per
// item, which printed matrix families verify and which fail (with the exact
// failure diagnostics), including the corrected variants of the two families
// whose published entries do not check out.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lieb/automorphism.hpp"
#include "lieb/bialgebra.hpp"
#include "lieb/data_path.hpp"
#include "lieb/lie_algebra.hpp"
#include "lieb/multipoly.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

using namespace lieb;

namespace {

Mat3 wedge(int i, int j, const Scalar& c) {
  Mat3 m = Mat3::zero();
  m[i - 1][j - 1] = c;
  m[j - 1][i - 1] = Scalar(0) - c;
  return m;
}

const Scalar kHalf = Scalar(1) / Scalar(2);

// Coboundary-dual realizations used throughout (1-based wedge labels).
LieAlgebra realization_II_i() {   // on the dual of (V, II.i)
  return dual_from_r(bianchi("V"), wedge(2, 3, Scalar(0) - kHalf));
}
LieAlgebra realization_V_ii(const Scalar& c) {  // on the dual of (VI0, V.ii)
  Mat3 r = wedge(1, 2, c) + wedge(2, 3, Scalar(-1)) + wedge(3, 1, Scalar(1));
  return dual_from_r(bianchi("VI0"), r);
}
LieAlgebra realization_III_ii() {
  return dual_from_r(bianchi("III"),
                     wedge(1, 2, Scalar(0) - kHalf) + wedge(3, 1, Scalar(0) - kHalf));
}
LieAlgebra realization_III_iii() {
  return dual_from_r(bianchi("III"),
                     wedge(1, 2, Scalar(0) - kHalf) + wedge(1, 3, Scalar(0) - kHalf));
}
LieAlgebra algebra_IV_ii() {  // image of IV under the item-1 relating map
  LieAlgebra g;
  g.name = "IV.ii";
  auto set = [&](int i, int j, int k, const Scalar& v) {
    g.f(i, j, k) = v;
    g.f(j, i, k) = Scalar(0) - v;
  };
  set(0, 1, 0, Scalar(-1));
  set(0, 1, 1, Scalar(1));
  set(0, 1, 2, Scalar(1));
  set(0, 2, 2, Scalar(1));
  set(1, 2, 2, Scalar(1));
  return g;
}

bool has_failure(const CoboundaryIsoReport& rep, const std::string& line) {
  return std::find(rep.failures.begin(), rep.failures.end(), line) !=
         rep.failures.end();
}

}  // namespace

TEST_CASE("template table loads and every entry verifies as stated") {
  auto all = load_templates(data_file("templates_aut.txt"));
  CHECK(all.size() == 15);

  std::map<std::string, int> per_algebra;
  for (const auto& t : all) ++per_algebra[t.algebra];
  CHECK(per_algebra["VII0"] == 3);  // printed row + two corrected components
  CHECK(per_algebra["VI0"] == 3);
  CHECK(per_algebra["IX"] == 1);
  CHECK(per_algebra["VIII"] == 1);

  for (const auto& t : all) {
    CAPTURE(t.algebra);
    CAPTURE(t.label);
    LieAlgebra g = bianchi(t.algebra);  // symbolic parameter for VIa/VIIa
    TemplateVerdict v = verify_template(g, t, 100);
    CHECK(v.identity_holds == t.expect_identity);
    CHECK(v.samples_pass == t.expect_identity);
    CHECK(v.samples_checked == 100);
    if (!t.expect_identity) {
      // the printed VII0/VI0 rows fail identically, with a counterexample
      CHECK(v.counterexample.has_value());
      CHECK(v.detail.find("fails identically") != std::string::npos);
    }
  }
}

TEST_CASE("template lookup by algebra name ignores the parameter suffix") {
  CHECK(automorphism_templates(bianchi("VIa", Scalar(1) / Scalar(2))).size() == 1);
  CHECK(automorphism_templates(bianchi("VIa")).size() == 1);
  CHECK(automorphism_templates(bianchi("VIII")).size() == 1);
  CHECK(automorphism_templates(bianchi("I")).size() == 1);
}

TEST_CASE("explicit automorphism checks") {
  for (const char* name : {"I", "II", "III", "IV", "V", "VI0", "VIa", "VII0",
                           "VIIa", "VIII", "IX"}) {
    CAPTURE(name);
    CHECK(is_automorphism(bianchi(name), Mat3::identity()));
  }

  // a 3-4-5 rotation about the first axis preserves the IX brackets
  Mat3 rot_ix = Mat3::zero();
  rot_ix[0][0] = Scalar(1);
  rot_ix[1][1] = Scalar(3) / Scalar(5);
  rot_ix[1][2] = Scalar(-4) / Scalar(5);
  rot_ix[2][1] = Scalar(4) / Scalar(5);
  rot_ix[2][2] = Scalar(3) / Scalar(5);
  CHECK(is_automorphism(bianchi("IX"), rot_ix));

  // a hyperbolic boost in the (X2,X3)-plane preserves the VIII brackets
  Mat3 boost = Mat3::zero();
  boost[0][0] = Scalar(1);
  boost[1][1] = Scalar(5) / Scalar(3);
  boost[1][2] = Scalar(4) / Scalar(3);
  boost[2][1] = Scalar(4) / Scalar(3);
  boost[2][2] = Scalar(5) / Scalar(3);
  CHECK(is_automorphism(bianchi("VIII"), boost));

  // scaling X1 alone breaks [X2,X3] = X1 on the Heisenberg algebra
  Mat3 bad = Mat3::identity();
  bad[0][0] = Scalar(2);
  CHECK_FALSE(is_automorphism(bianchi("II"), bad));

  CHECK_THROWS_AS(is_automorphism(bianchi("II"), Mat3::zero()),
                  std::invalid_argument);
}

TEST_CASE("sampled template elements are closed under product and inverse") {
  auto closure_check = [](const std::string& name,
                          const std::map<std::string, Scalar>& p1,
                          const std::map<std::string, Scalar>& p2) {
    LieAlgebra g = bianchi(name);
    auto tmpls = automorphism_templates(g);
    REQUIRE(!tmpls.empty());
    const MatrixTemplate* t = nullptr;
    for (const auto& cand : tmpls)
      if (cand.expect_identity) { t = &cand; break; }
    REQUIRE(t != nullptr);
    REQUIRE(t->admissible(p1));
    REQUIRE(t->admissible(p2));
    Mat3 a = t->eval(p1), b = t->eval(p2);
    CHECK(is_automorphism(g, a * b));
    CHECK(is_automorphism(g, a.inverse()));
    CHECK(is_automorphism(g, b * a));
  };

  closure_check("V",
                {{"c", Scalar(2)}, {"d", Scalar(1)}, {"e", Scalar(0)},
                 {"f", Scalar(1)}, {"v1", Scalar(3)}, {"v2", Scalar(-1)}},
                {{"c", Scalar(1)}, {"d", Scalar(-1)}, {"e", Scalar(2)},
                 {"f", Scalar(1)}, {"v1", Scalar(0)}, {"v2", Scalar(2)}});
  closure_check("IX",
                {{"s1", Scalar(1)}, {"s2", Scalar(0)}, {"s3", Scalar(-2)}},
                {{"s1", Scalar(1) / Scalar(2)}, {"s2", Scalar(3)},
                 {"s3", Scalar(0)}});
  closure_check("VIII",
                {{"s1", Scalar(1) / Scalar(2)}, {"s2", Scalar(0)},
                 {"s3", Scalar(0)}},
                {{"s1", Scalar(0)}, {"s2", Scalar(0)},
                 {"s3", Scalar(1) / Scalar(3)}});
}

TEST_CASE("rational charts refuse inadmissible points") {
  auto tmpls = automorphism_templates(bianchi("VIII"));
  REQUIRE(tmpls.size() == 1);
  const auto& chart = tmpls[0];
  // the chart denominator 1 - s1^2 - s2^2 + s3^2 vanishes at (1,0,0)
  std::map<std::string, Scalar> sing{
      {"s1", Scalar(1)}, {"s2", Scalar(0)}, {"s3", Scalar(0)}};
  CHECK_FALSE(chart.admissible(sing));
  CHECK_THROWS_AS(chart.eval(sing), std::invalid_argument);
  CHECK_THROWS_AS(chart.eval({{"s1", Scalar(1)}}), std::invalid_argument);
}

TEST_CASE("coboundary duals land on the expected model tensors") {
  // II.i realized on the dual of (V, II.i) is the Heisenberg tensor itself
  CHECK(realization_II_i().f == bianchi("II").f);

  // the dual of (VII0, V.i) is the Bianchi V tensor on the nose
  CHECK(dual_from_r(bianchi("VII0"), wedge(2, 3, Scalar(1))).f ==
        bianchi("V").f);

  // V.ii does not depend on the free constant in its r-matrix
  CHECK(realization_V_ii(Scalar::sym("c")).f == realization_V_ii(Scalar(1)).f);
  LieAlgebra vii = realization_V_ii(Scalar(1));
  CHECK(vii.f(0, 1, 0) == Scalar(-1));
  CHECK(vii.f(0, 1, 1) == Scalar(1));
  CHECK(vii.f(0, 2, 2) == Scalar(1));
  CHECK(vii.f(1, 2, 2) == Scalar(1));

  // (II.i, V): the dual of the II.i realization is the Bianchi V tensor,
  // independent of the two free constants in the printed dual r-matrix
  {
    Scalar c = Scalar::sym("c");
    Mat3 rt = wedge(1, 2, c) + wedge(3, 1, c) + wedge(2, 3, Scalar(1));
    CHECK(dual_from_r(realization_II_i(), rt).f == bianchi("V").f);
  }

  // (V.ii, VI_o): the dual of the V.ii realization is the Bianchi VI0 tensor
  CHECK(dual_from_r(realization_V_ii(Scalar(1)),
                    kHalf * (wedge(1, 3, Scalar(1)) + wedge(2, 3, Scalar(1))))
            .f == bianchi("VI0").f);

  // IV.ii cross-check: its dual under the printed r is again Bianchi VI0
  LieAlgebra ivii = algebra_IV_ii();
  CHECK(jacobi_check(ivii).empty());
  CHECK(dual_from_r(ivii,
                    kHalf * (wedge(1, 3, Scalar(1)) + wedge(2, 3, Scalar(1))))
            .f == bianchi("VI0").f);

  // (III, II): the dual is the Heisenberg tensor
  CHECK(dual_from_r(bianchi("III"), wedge(2, 3, Scalar(0) - kHalf)).f ==
        bianchi("II").f);

  // (IV, II.i) and (IV, II.ii) duals are Heisenberg tensors up to scale
  CHECK(dual_from_r(bianchi("IV"), wedge(2, 3, Scalar(-1))).f(1, 2, 0) ==
        Scalar(2));
  CHECK(dual_from_r(bianchi("IV"), wedge(2, 3, kHalf)).f(1, 2, 0) ==
        Scalar(-1));
}

TEST_CASE("dual transport by an automorphism keeps the bialgebra compatible") {
  LieAlgebra viii = bianchi("VIII");
  LieAlgebra vi1 = dual_from_r(viii, wedge(2, 3, Scalar(1)));

  Mat3 rot = Mat3::zero();
  rot[0][0] = Scalar(3) / Scalar(5);
  rot[0][1] = Scalar(-4) / Scalar(5);
  rot[1][0] = Scalar(4) / Scalar(5);
  rot[1][1] = Scalar(3) / Scalar(5);
  rot[2][2] = Scalar(1);
  REQUIRE(is_automorphism(viii, rot));

  LieAlgebra moved = transport_dual(viii, vi1, rot);
  CHECK_FALSE(moved.f == vi1.f);
  CHECK(jacobi_check(moved).empty());
  Bialgebra pair;
  pair.name = "(VIII, transported)";
  pair.g = viii;
  pair.g_dual = moved;
  CHECK(cocycle_check(pair).empty());

  // a boost that preserves the defining bivector transports the dual to itself
  Mat3 boost = Mat3::zero();
  boost[0][0] = Scalar(1);
  boost[1][1] = Scalar(5) / Scalar(3);
  boost[1][2] = Scalar(4) / Scalar(3);
  boost[2][1] = Scalar(4) / Scalar(3);
  boost[2][2] = Scalar(5) / Scalar(3);
  CHECK(transport_dual(viii, vi1, boost).f == vi1.f);

  Mat3 bad = Mat3::identity();
  bad[0][0] = Scalar(2);
  CHECK_THROWS_AS(transport_dual(bianchi("II"),
                                 dual_from_r(bianchi("II"), wedge(2, 3, Scalar(1))),
                                 bad),
                  std::invalid_argument);
}

TEST_CASE("bialgebra isomorphism: identical tensors short-circuit") {
  LieAlgebra viii = bianchi("VIII");
  LieAlgebra vi1 = dual_from_r(viii, wedge(2, 3, Scalar(1)));
  auto v = bialgebra_iso(viii, vi1, vi1);
  CHECK(v.kind == IsoVerdict::Kind::Isomorphic);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness == Mat3::identity());
}

TEST_CASE("bialgebra isomorphism: sampled witnesses over templates") {
  // Heisenberg duals at two different scales are related by a dilation
  LieAlgebra ii = bianchi("II");
  LieAlgebra d1 = dual_from_r(ii, wedge(2, 3, Scalar(1)));
  LieAlgebra d2 = dual_from_r(ii, wedge(2, 3, Scalar(2)));
  auto v = bialgebra_iso(ii, d1, d2, automorphism_templates(ii));
  REQUIRE(v.kind == IsoVerdict::Kind::Isomorphic);
  CHECK(v.detail.find("sampled witness over template") != std::string::npos);
  REQUIRE(v.witness.has_value());
  CHECK(is_automorphism(ii, *v.witness));
  CHECK(transport_dual(ii, d1, *v.witness).f == d2.f);

  // a rotated VIII dual is recovered through the rational chart
  LieAlgebra viii = bianchi("VIII");
  LieAlgebra vi1 = dual_from_r(viii, wedge(2, 3, Scalar(1)));
  Mat3 rot = Mat3::zero();
  rot[0][0] = Scalar(3) / Scalar(5);
  rot[0][1] = Scalar(-4) / Scalar(5);
  rot[1][0] = Scalar(4) / Scalar(5);
  rot[1][1] = Scalar(3) / Scalar(5);
  rot[2][2] = Scalar(1);
  LieAlgebra moved = transport_dual(viii, vi1, rot);
  auto v8 = bialgebra_iso(viii, vi1, moved, automorphism_templates(viii));
  REQUIRE(v8.kind == IsoVerdict::Kind::Isomorphic);
  CHECK(v8.detail.find("sampled witness over template chart") !=
        std::string::npos);
  REQUIRE(v8.witness.has_value());
  CHECK(is_automorphism(viii, *v8.witness));
  CHECK(transport_dual(viii, vi1, *v8.witness).f == moved.f);
}

TEST_CASE("the two V-type duals on VIII are certifiably non-isomorphic") {
  Scalar b = Scalar::sym("b");
  LieAlgebra viii = bianchi("VIII");
  LieAlgebra vib = dual_from_r(viii, wedge(2, 3, b));
  LieAlgebra viib = dual_from_r(viii, wedge(1, 2, Scalar(0) - b));

  // frozen tensors of the two duals
  CHECK(vib.f(0, 1, 1) == Scalar(0) - b);
  CHECK(vib.f(0, 2, 2) == Scalar(0) - b);
  CHECK(viib.f(0, 2, 0) == b);
  CHECK(viib.f(1, 2, 1) == b);

  auto v = bialgebra_iso(viii, vib, viib, automorphism_templates(viii));
  CHECK(v.kind == IsoVerdict::Kind::NotIsomorphic);
  CHECK(v.detail.find("inconsistent over all bracket- and Killing-preserving "
                      "matrices") != std::string::npos);
  // the certificate bottoms out in a sum of squares with no real root,
  // identically in the parameter b
  CHECK(v.detail.find("no real root") != std::string::npos);
  CHECK(v.detail.find("assumes b != 0") != std::string::npos);
}

TEST_CASE("dual-transport solves certify structural obstructions") {
  // dual of (IV, II.i) is Heisenberg-like, dual of (IV.ii, VI_o) is VI0:
  // no invertible matrix can transport one onto the other
  LieAlgebra d_iv = dual_from_r(bianchi("IV"), wedge(2, 3, Scalar(-1)));
  LieAlgebra d_ivii = dual_from_r(
      algebra_IV_ii(), kHalf * (wedge(1, 3, Scalar(1)) + wedge(2, 3, Scalar(1))));
  auto s1 = solve_dual_transport(d_iv, d_ivii);
  CHECK(s1.status == MSolveResult::Status::NoSolution);
  CHECK(s1.note.find("residual constant") != std::string::npos);

  LieAlgebra d_v = realization_II_i();  // dual of (V, II.i)
  LieAlgebra d_vii = dual_from_r(
      realization_V_ii(Scalar(1)),
      kHalf * (wedge(1, 3, Scalar(1)) + wedge(2, 3, Scalar(1))));
  auto s2 = solve_dual_transport(d_v, d_vii);
  CHECK(s2.status == MSolveResult::Status::NoSolution);

  // where a transport family exists, the raw 9-variable solve stays honest
  LieAlgebra iii_real = dual_from_r(realization_III_ii(),
                                    wedge(1, 2, Scalar(1)) + wedge(3, 1, Scalar(1)));
  auto s3 = solve_dual_transport(iii_real, realization_III_ii());
  CHECK(s3.status == MSolveResult::Status::Undetermined);
}

// ---------------------------------------------------------------------------
// Relating-map fixtures.  Each item records a printed candidate map between
// two coboundary pairs; the recorded outcome is that the map transports the
// brackets as stated (or measurably fails to), while the r-matrix coherence
// test fails in every case -- which is exactly the published conclusion that
// all these pairs are mutually non-isomorphic as bialgebras.
// ---------------------------------------------------------------------------

TEST_CASE("item 1: the IV -> IV.ii map relates brackets but not r-matrices") {
  Mat3 a1 = Mat3::zero();
  a1[0][0] = Scalar(-1);
  a1[1][0] = Scalar(-1);
  a1[1][1] = Scalar(1);
  a1[2][2] = Scalar(-1);
  LieAlgebra iv = bianchi("IV"), ivii = algebra_IV_ii();
  CHECK(is_homomorphism(iv, ivii, a1));
  CHECK(a1.det() == Scalar(1));

  Mat3 r_ivii = kHalf * (wedge(1, 3, Scalar(1)) + wedge(2, 3, Scalar(1)));
  auto rep = coboundary_iso(iv, wedge(2, 3, Scalar(-1)), ivii, r_ivii, a1,
                            /*strict=*/false);
  CHECK(rep.homomorphism);
  CHECK(rep.invertible);
  CHECK_FALSE(rep.transport_ok);
  CHECK(rep.failures.size() == 4);
  CHECK(has_failure(rep, "adjoint 1: entry (1,3) = 1/2 vs (3,1) = -3/2"));
  CHECK(has_failure(rep, "adjoint 2: entry (2,3) = -3/2 vs (3,2) = 1/2"));

  auto rep2 = coboundary_iso(iv, wedge(2, 3, kHalf), ivii, r_ivii, a1, false);
  CHECK(rep2.homomorphism);
  CHECK_FALSE(rep2.transport_ok);
  CHECK(rep2.failures.size() == 3);
  CHECK(has_failure(rep2, "adjoint 1: entry (1,3) = -1 vs (3,1) = 0"));

  // the duals (Heisenberg-like vs VI0) admit no transport at all
  LieAlgebra d_iv = dual_from_r(iv, wedge(2, 3, Scalar(-1)));
  LieAlgebra d_ivii = dual_from_r(ivii, r_ivii);
  CHECK_FALSE(dual_transport_holds(d_iv, d_ivii, a1));
  CHECK_FALSE(dual_transport_holds(d_ivii, d_iv, a1));
}

TEST_CASE("item 2: the identity map relates II to II.i but not the r-matrices") {
  LieAlgebra ii = bianchi("II");
  LieAlgebra iii_real = realization_II_i();
  CHECK(is_homomorphism(ii, iii_real, Mat3::identity()));

  Mat3 r_from = wedge(1, 2, Scalar(1)) + wedge(1, 3, Scalar(1));
  Mat3 r_to =
      wedge(1, 2, Scalar(1)) + wedge(3, 1, Scalar(1)) + wedge(2, 3, Scalar(1));
  auto rep =
      coboundary_iso(ii, r_from, iii_real, r_to, Mat3::identity(), false);
  CHECK(rep.homomorphism);
  CHECK_FALSE(rep.transport_ok);
  REQUIRE(rep.failures.size() == 2);
  CHECK(has_failure(rep, "adjoint 2: entry (1,2) = -1 vs (2,1) = 0"));
  CHECK(has_failure(rep, "adjoint 3: entry (1,3) = -1 vs (3,1) = 0"));

  // dual sides are abelian vs Bianchi V: transport is impossible either way
  LieAlgebra abelian;
  abelian.name = "I";
  LieAlgebra d_to = dual_from_r(iii_real, r_to);
  CHECK_FALSE(dual_transport_holds(abelian, d_to, Mat3::identity()));
  CHECK_FALSE(dual_transport_holds(d_to, abelian, Mat3::identity()));
}

TEST_CASE("item 3: the printed V -> V.ii matrix is not even a homomorphism") {
  Scalar b = Scalar::sym("b");
  Mat3 a3 = Mat3::zero();
  a3[0][2] = Scalar(1);
  a3[1][1] = Scalar(1);
  a3[2][0] = b;

  LieAlgebra v = bianchi("V");
  LieAlgebra vii = realization_V_ii(Scalar(1));
  CHECK_FALSE(is_homomorphism(v, vii, a3));

  Mat3 r_from = wedge(2, 3, Scalar(0) - kHalf);
  Mat3 r_to = kHalf * (wedge(1, 3, Scalar(1)) + wedge(2, 3, Scalar(1)));
  CHECK_THROWS_AS(coboundary_iso(v, r_from, vii, r_to, a3, /*strict=*/true),
                  std::invalid_argument);

  auto rep = coboundary_iso(v, r_from, vii, r_to, a3, /*strict=*/false);
  CHECK_FALSE(rep.homomorphism);
  CHECK(rep.invertible);  // det = -b, nonzero as a symbol
  CHECK_FALSE(rep.transport_ok);
  CHECK(rep.failures.size() == 6);
  // the headline asymmetry: zero against b/2 in the first adjoint slot
  CHECK(has_failure(rep, "adjoint 1: entry (1,2) = 0 vs (2,1) = 1/2*b"));
  CHECK(has_failure(rep, "adjoint 3: entry (2,3) = 0 vs (3,2) = 1/2*b"));
}

TEST_CASE("items 4 and 5: the III-family maps verify identically") {
  LieAlgebra iii = bianchi("III");
  LieAlgebra iii_ii = realization_III_ii();
  LieAlgebra iii_iii = realization_III_iii();
  // both swapped-pair duals carry one and the same III-type tensor
  LieAlgebra iii_real = dual_from_r(
      iii_ii, wedge(1, 2, Scalar(1)) + wedge(3, 1, Scalar(1)));
  CHECK(dual_from_r(iii_iii, wedge(1, 2, Scalar(1)) + wedge(1, 3, Scalar(1))).f ==
        iii_real.f);

  MPoly c = MPoly::var("c"), d = MPoly::var("d"), e = MPoly::var("e"),
        f = MPoly::var("f");
  MMat3 a4, a5;
  a4[0][1] = MPoly(Scalar(-1)) * c;
  a4[0][2] = c;
  a4[1][0] = MPoly(Scalar(0) - kHalf);
  a4[1][1] = d;
  a4[1][2] = d + e - f;
  a4[2][0] = MPoly(kHalf);
  a4[2][1] = e;
  a4[2][2] = f;
  a5[0][1] = c;
  a5[0][2] = c;
  a5[1][0] = MPoly(kHalf);
  a5[1][1] = d;
  a5[1][2] = f + e - d;
  a5[2][0] = MPoly(kHalf);
  a5[2][1] = e;
  a5[2][2] = f;

  // identically in all four constants: bracket relating maps ...
  CHECK(is_homomorphism(iii_ii, iii_real, a4));
  CHECK(is_homomorphism(iii_iii, iii_real, a5));
  // ... equivalently, dual-transport relations in the reverse orientation
  CHECK(dual_transport_holds(iii_real, iii_ii, a4));
  CHECK(dual_transport_holds(iii_real, iii_iii, a5));
  // and not in the stated orientation
  CHECK_FALSE(dual_transport_holds(iii_ii, iii_real, a4));
  // the families do not relate the mismatched realizations
  CHECK_FALSE(dual_transport_holds(iii_real, iii_iii, a4));
  CHECK_FALSE(dual_transport_holds(iii_real, iii_ii, a5));

  // determinant of each family fixes the admissible constants
  CHECK(mdet(a4) == MPoly(Scalar(-1)) * c * (d + e));
  CHECK(mdet(a5) == c * (e - d));

  // sampled member of the item-4 family against the r-matrices: the bracket
  // map direction differs from the pair orientation, so the strict test fails
  std::map<std::string, Scalar> smp{{"c", Scalar(1)},
                                    {"d", Scalar(1)},
                                    {"e", Scalar(1)},
                                    {"f", Scalar(2)}};
  Mat3 a4s = a4.eval(smp);
  CHECK(a4s.det() == Scalar(-2));
  CHECK_FALSE(is_homomorphism(iii, iii_ii, a4s));
  auto rep = coboundary_iso(iii, wedge(1, 2, Scalar(0) - kHalf) +
                                     wedge(3, 1, Scalar(0) - kHalf),
                            iii_ii,
                            wedge(1, 2, Scalar(1)) + wedge(3, 1, Scalar(1)),
                            a4s, false);
  CHECK_FALSE(rep.homomorphism);
  CHECK_FALSE(rep.transport_ok);
  CHECK(rep.failures.size() == 6);
}

TEST_CASE("item 6: corrected VI-family maps verify identically in a") {
  Scalar a = Scalar::sym("a");
  Scalar one(1);
  LieAlgebra via = bianchi("VIa", a);
  Scalar m_ii = Scalar(-1) / (a - one), m_iii = Scalar(-1) / (a + one);
  LieAlgebra ii_sym =
      dual_from_r(via, m_ii * (wedge(1, 2, Scalar(1)) + wedge(3, 1, Scalar(1))));
  LieAlgebra iii_sym =
      dual_from_r(via, m_iii * (wedge(1, 2, Scalar(1)) + wedge(1, 3, Scalar(1))));

  // a Bianchi VI algebra with inverse parameter, built directly
  LieAlgebra vi_inv;
  vi_inv.name = "VI(1/a)";
  {
    Scalar inva = one / a;
    auto set = [&](int i, int j, int k, const Scalar& v) {
      vi_inv.f(i, j, k) = v;
      vi_inv.f(j, i, k) = Scalar(0) - v;
    };
    set(0, 1, 1, Scalar(0) - inva);
    set(0, 1, 2, Scalar(-1));
    set(0, 2, 1, Scalar(-1));
    set(0, 2, 2, Scalar(0) - inva);
  }
  REQUIRE(jacobi_check(vi_inv).empty());

  MPoly c = MPoly::var("c"), d = MPoly::var("d"), e = MPoly::var("e"),
        f = MPoly::var("f");
  Scalar lam_ii = a / (one - a), lam_iii = a / (one + a);

  // corrected families: the .ii corner entry is d+f-e (not d+e-f), and the
  // .iii family has first row (0, c, c) with both leading entries a/(1+a)
  MMat3 c_ii, c_iii;
  c_ii[0][1] = c;
  c_ii[0][2] = MPoly(Scalar(-1)) * c;
  c_ii[1][0] = MPoly(lam_ii);
  c_ii[1][1] = d;
  c_ii[1][2] = e;
  c_ii[2][0] = MPoly(Scalar(0) - lam_ii);
  c_ii[2][1] = f;
  c_ii[2][2] = d + f - e;
  c_iii[0][1] = c;
  c_iii[0][2] = c;
  c_iii[1][0] = MPoly(lam_iii);
  c_iii[1][1] = d;
  c_iii[1][2] = e;
  c_iii[2][0] = MPoly(lam_iii);
  c_iii[2][1] = f;
  c_iii[2][2] = d + e - f;

  CHECK(is_homomorphism(ii_sym, vi_inv, c_ii));
  CHECK(is_homomorphism(iii_sym, vi_inv, c_iii));
  CHECK(dual_transport_holds(vi_inv, ii_sym, c_ii));
  CHECK(dual_transport_holds(vi_inv, iii_sym, c_iii));
  CHECK(mdet(c_ii) == MPoly(Scalar(-2) * lam_ii) * c * (d + f));
  CHECK(mdet(c_iii) == MPoly(Scalar(2) * lam_iii) * c * (f - d));

  // the literal printed entries do not verify
  MMat3 l_ii = c_ii;
  l_ii[2][2] = d + e - f;
  CHECK_FALSE(is_homomorphism(ii_sym, vi_inv, l_ii));
  MMat3 l_iii;
  l_iii[0][1] = c;
  l_iii[0][2] = MPoly(Scalar(-1)) * c;
  l_iii[1][0] = MPoly(lam_ii);
  l_iii[1][1] = d;
  l_iii[1][2] = e + f - d;
  l_iii[2][0] = MPoly(lam_iii);
  l_iii[2][1] = f;
  l_iii[2][2] = e;
  CHECK_FALSE(is_homomorphism(iii_sym, vi_inv, l_iii));
}

TEST_CASE("item 6: composed map relates the realizations, r-matrices still clash") {
  Scalar one(1), two(2);
  LieAlgebra via2 = bianchi("VIa", two);
  LieAlgebra ii2 = dual_from_r(
      via2, Scalar(-1) * (wedge(1, 2, Scalar(1)) + wedge(3, 1, Scalar(1))));
  LieAlgebra iii2 =
      dual_from_r(via2, (Scalar(-1) / Scalar(3)) *
                            (wedge(1, 2, Scalar(1)) + wedge(1, 3, Scalar(1))));

  auto mk_ii = [&](Scalar c, Scalar d, Scalar e, Scalar f) {
    Mat3 m = Mat3::zero();
    m[0][1] = c;
    m[0][2] = Scalar(0) - c;
    m[1][0] = Scalar(-2);
    m[1][1] = d;
    m[1][2] = e;
    m[2][0] = Scalar(2);
    m[2][1] = f;
    m[2][2] = d + f - e;
    return m;
  };
  auto mk_iii = [&](Scalar c, Scalar d, Scalar e, Scalar f) {
    Mat3 m = Mat3::zero();
    m[0][1] = c;
    m[0][2] = c;
    m[1][0] = Scalar(2) / Scalar(3);
    m[1][1] = d;
    m[1][2] = e;
    m[2][0] = Scalar(2) / Scalar(3);
    m[2][1] = f;
    m[2][2] = d + e - f;
    return m;
  };
  Mat3 b_ii = mk_ii(one, two, one, Scalar(3));
  Mat3 b_iii = mk_iii(two, one, Scalar(3), two);
  REQUIRE_FALSE(b_ii.det().is_zero());
  REQUIRE_FALSE(b_iii.det().is_zero());

  // composing through the abstract VI(1/2): the realization-to-realization
  // map is A(.ii) * A(.iii)^{-1} in the rows-as-images convention
  Mat3 comp = b_ii * b_iii.inverse();
  CHECK(is_homomorphism(ii2, iii2, comp));
  CHECK(dual_transport_holds(iii2, ii2, comp));

  Mat3 r_ii = (two - one) / two * (wedge(1, 2, one) + wedge(3, 1, one));
  Mat3 r_iii = (two + one) / two * (wedge(1, 2, one) + wedge(1, 3, one));
  auto rep = coboundary_iso(ii2, r_ii, iii2, r_iii, comp, false);
  CHECK(rep.homomorphism);
  CHECK_FALSE(rep.transport_ok);
  CHECK(rep.failures.size() == 8);
  CHECK(has_failure(rep, "adjoint 1: entry (1,2) = 3 vs (2,1) = 0"));
  CHECK(has_failure(rep, "adjoint 2: entry (2,3) = 0 vs (3,2) = 1"));
}

TEST_CASE("item 7: composed III map relates the realizations, r-matrices clash") {
  LieAlgebra iii_ii = realization_III_ii();
  LieAlgebra iii_iii = realization_III_iii();

  Mat3 a4s = Mat3::zero(), a5s = Mat3::zero();
  a4s[0][1] = Scalar(-1);
  a4s[0][2] = Scalar(1);
  a4s[1][0] = Scalar(0) - kHalf;
  a4s[1][1] = Scalar(1);
  a4s[1][2] = Scalar(0);
  a4s[2][0] = kHalf;
  a4s[2][1] = Scalar(1);
  a4s[2][2] = Scalar(2);
  a5s[0][1] = Scalar(1);
  a5s[0][2] = Scalar(1);
  a5s[1][0] = kHalf;
  a5s[1][1] = Scalar(1);
  a5s[1][2] = Scalar(4);
  a5s[2][0] = kHalf;
  a5s[2][1] = Scalar(2);
  a5s[2][2] = Scalar(3);

  Mat3 comp = a4s * a5s.inverse();
  CHECK(is_homomorphism(iii_ii, iii_iii, comp));
  CHECK(dual_transport_holds(iii_iii, iii_ii, comp));

  auto rep = coboundary_iso(
      iii_ii, wedge(1, 2, Scalar(1)) + wedge(3, 1, Scalar(1)), iii_iii,
      wedge(1, 2, Scalar(1)) + wedge(1, 3, Scalar(1)), comp, false);
  CHECK(rep.homomorphism);
  CHECK_FALSE(rep.transport_ok);
  CHECK(rep.failures.size() == 6);
  CHECK(has_failure(rep, "adjoint 1: entry (1,2) = -2 vs (2,1) = 0"));
  CHECK(has_failure(rep, "adjoint 2: entry (1,2) = -5 vs (2,1) = 0"));
  CHECK(has_failure(rep, "adjoint 3: entry (1,3) = 3 vs (3,1) = 0"));
}
