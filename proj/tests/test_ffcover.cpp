#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dpz/ffcover.hpp"

using namespace dpz;
using Elem = FiniteField::Elem;

namespace {

FinitePoly q3(const std::string& text) {
  return FinitePoly::parse(FiniteField::get(3, 1), {"x", "y", "z"}, text);
}

FinitePoly q2(const std::string& text) {
  return FinitePoly::parse(FiniteField::get(2, 1), {"x", "y", "z"}, text);
}

}  // namespace

TEST_CASE("finite field arithmetic") {
  const auto& f2 = FiniteField::get(2, 1);
  CHECK(f2.size() == 2);
  CHECK(f2.add(1, 1) == 0);
  CHECK(f2.inv(1) == 1);
  CHECK_THROWS_AS(f2.inv(0), Error);

  // F4 = F2[t]/(t^2+t+1); t has code 2
  const auto& f4 = FiniteField::get(2, 2);
  CHECK(f4.size() == 4);
  CHECK(f4.modulus_string() == "t^2 + t + 1");
  CHECK(f4.mul(2, 2) == 3);          // t^2 = t + 1
  CHECK(f4.mul(2, 3) == 1);          // t * (t+1) = t^2 + t = 1
  CHECK(f4.pow(2, 3) == 1);
  CHECK(f4.inv(2) == 3);
  CHECK(f4.add(2, 3) == 1);          // t + (t+1) = 1

  // F8 = F2[t]/(t^3+t+1)
  CHECK(FiniteField::get(2, 3).modulus_string() == "t^3 + t + 1");

  // F9 = F3[t]/(t^2+1); t has code 3, t^2 = -1 = 2
  const auto& f9 = FiniteField::get(3, 2);
  CHECK(f9.size() == 9);
  CHECK(f9.modulus_string() == "t^2 + 1");
  CHECK(f9.mul(3, 3) == 2);
  CHECK(f9.neg(1) == 2);
  CHECK(f9.from_int(-1) == 2);

  CHECK(f4.same_as(FiniteField::get(2, 2)));
  CHECK_FALSE(f4.same_as(f9));

  CHECK_THROWS_AS(FiniteField::get(5, 1), Error);
  CHECK_THROWS_AS(FiniteField::get(2, 15), Error);  // 2^15 > 3^9
  CHECK_THROWS_AS(FiniteField::get(3, 0), Error);
}

TEST_CASE("finite field axioms on random elements") {
  std::mt19937 rng(3);
  for (auto [p, k] : {std::pair{2, 4}, {3, 3}}) {
    const auto& f = FiniteField::get(p, k);
    std::uniform_int_distribution<Elem> pick(0, f.size() - 1);
    for (int t = 0; t < 200; ++t) {
      Elem a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.pow(a, f.size() - 1) == 1);  // Fermat
      }
    }
  }
}

TEST_CASE("polynomial parsing and arithmetic") {
  auto p = q3("x^3*z + y^4 + 2*x*y*z^2");
  CHECK(p.coeff({3, 0, 1}) == 1);
  CHECK(p.coeff({0, 4, 0}) == 1);
  CHECK(p.coeff({1, 1, 2}) == 2);
  CHECK(p.coeff({4, 0, 0}) == 0);
  CHECK(p.total_degree() == 4);
  CHECK(p.is_homogeneous(4));
  CHECK_FALSE(p.is_homogeneous(3));

  // round-trip through the printer
  CHECK(FinitePoly::parse(p.field(), p.vars(), p.to_string()) == p);

  // coefficients reduce into the prime field; cancellation drops terms
  CHECK(q3("3*x") .is_zero());
  CHECK((q3("2*x") + q3("x")).is_zero());
  CHECK((q3("x^2") - q3("x^2")).is_zero());

  // freshman's dream in characteristic 2
  auto s = q2("x + y");
  CHECK(s * s == q2("x^2 + y^2"));
  CHECK(s.pow(2) == q2("x^2 + y^2"));
  CHECK(q2("x").scaled(0).is_zero());

  CHECK_THROWS_AS(q2("x + w"), Error);       // unknown variable
  CHECK_THROWS_AS(q2("x + + y"), Error);     // syntax
  CHECK_THROWS_AS(q2("x^"), Error);
}

TEST_CASE("derivatives and evaluation") {
  // exponents reduce modulo the characteristic
  CHECK(q2("x^2").derivative("x").is_zero());
  CHECK(q3("x^3").derivative("x").is_zero());
  CHECK(q3("x^2*y").derivative("x") == q3("2*x*y"));
  CHECK(q3("x^4").derivative("x") == q3("x^3"));

  auto p = q2("x*y + z");
  CHECK(p.eval({1, 1, 1}) == 0);
  CHECK(p.eval({1, 0, 1}) == 1);

  // prime-field polynomial over an extension: t in F4 has code 2
  const auto& f4 = FiniteField::get(2, 2);
  CHECK(q2("x^2 + x").eval_ext(f4, {2, 0, 0}) == 1);  // t^2 + t = 1
  // non-prime coefficients cannot lift into a different field
  FinitePoly over_f4(f4, {"x", "y", "z"});
  over_f4.set_coeff({1, 0, 0}, 2);
  CHECK_THROWS_AS(over_f4.eval_ext(FiniteField::get(2, 3), {1, 0, 0}), Error);
}

TEST_CASE("cubic surface invariants") {
  const auto& f2 = FiniteField::get(2, 1);
  auto fermat = CubicSurface(
      FinitePoly::parse(f2, {"x0", "x1", "x2", "x3"}, "x0^3 + x1^3 + x2^3 + x3^3"));
  CHECK(cubic_all_cuspidal_condition(fermat));
  for (Elem a = 0; a < 2; ++a)
    for (Elem b = 0; b < 2; ++b)
      CHECK(cubic_c4(fermat, {a, b, 1, 0}) == 0);

  auto odd = CubicSurface(FinitePoly::parse(f2, {"x0", "x1", "x2", "x3"}, "x0*x1*x2"));
  CHECK_FALSE(cubic_all_cuspidal_condition(odd));
  CHECK(cubic_c4(odd, {0, 0, 0, 1}) == 1);  // (y1110 * z3)^4
  CHECK(cubic_c4(odd, {1, 1, 1, 0}) == 0);

  CHECK_THROWS_AS(
      CubicSurface(FinitePoly::parse(FiniteField::get(3, 1), {"x0", "x1", "x2", "x3"}, "x0^3")),
      Error);  // wrong characteristic
  CHECK_THROWS_AS(CubicSurface(FinitePoly::parse(f2, {"x0", "x1", "x2", "x3"}, "x0^2")), Error);
}

TEST_CASE("double-plane coefficient criteria") {
  CHECK(case2a_insep_conditions(q2("x^4 + y^4 + z^4")));
  CHECK(case2a_insep_conditions(q2("x^3*y + x*y^2*z")));     // a310 = a121 = 1
  CHECK_FALSE(case2a_insep_conditions(q2("x*y^3")));         // a130 != 0
  CHECK_FALSE(case2a_insep_conditions(q2("x^3*y")));         // a310 != a121

  CHECK(case2b_insep_conditions(q2("y^4 + z^4 + x^2*y*z")));
  CHECK_FALSE(case2b_insep_conditions(q2("x^3*y + z^4")));

  CHECK_THROWS_AS(case2a_insep_conditions(q2("x^3")), Error);       // wrong degree
  CHECK_THROWS_AS(case2a_insep_conditions(q3("x^4")), Error);       // wrong characteristic
}

TEST_CASE("case 2c cusp slope") {
  // g4 = x^3 z: at p = (1:0:b), dg4/dx = b, dg4/dy = 0, dg4/dz = 1
  CHECK(case2c_cusp_slope(q2("x^3*z"), 1) == 0);
  // g4 = x^3 z + x^3 y: dg4/dy = 1, slope 1
  CHECK(case2c_cusp_slope(q2("x^3*z + x^3*y"), 1) == 1);
  // dg4/dx(p) = 0 -> no slope
  CHECK_THROWS_AS(case2c_cusp_slope(q2("x^3*y"), 1), Error);
  CHECK_THROWS_AS(case2c_cusp_slope(q2("x^3*z"), 0), Error);  // b = 0 kills dg4/dx

  // over F4 with b = t: slope (a310 + a211 b + a112 b^2 + a013 b^3)/(a301 + a103 b^2)
  const auto& f4 = FiniteField::get(2, 2);
  auto g = FinitePoly::parse(f4, {"x", "y", "z"}, "x^3*z + x^2*y*z + x*y*z^2");
  const Elem b = 2;  // t
  // [DERIVED] numerator = a211*b + a112*b^2 = t + t^2 = 1; denominator = 1
  CHECK(case2c_cusp_slope(g, b) == 1);
}

TEST_CASE("singular search on double covers") {
  // g2 = yz + x^2, g4 = x^4: (0:1:0) with w = 0 is singular already over F2
  DoublePlaneCover cover(q2("y*z + x^2"), q2("x^4"));
  auto w = double_cover_singular_search(cover, 3);
  REQUIRE(w.has_value());
  CHECK(w->ext == 1);
  // verify the witness satisfies all defining and derivative conditions
  const auto& f = FiniteField::get(2, w->ext);
  std::vector<Elem> pt{w->point[0], w->point[1], w->point[2]};
  const Elem wv = w->point[3];
  CHECK(cover.g2().eval_ext(f, pt) == 0);
  CHECK(f.add(f.mul(wv, wv), cover.g4().eval_ext(f, pt)) == 0);

  CHECK_THROWS_AS(double_cover_singular_search(cover, 0), Error);
  CHECK_THROWS_AS(double_cover_singular_search(cover, 10), Error);
  CHECK_THROWS_AS(DoublePlaneCover(q2("x^3"), q2("x^4")), Error);  // g2 degree
  CHECK_THROWS_AS(DoublePlaneCover(q3("x^2"), q3("x^4")), Error);  // characteristic
}

TEST_CASE("tangent flex multiplicity in characteristic 3") {
  // [DERIVED] q = x^4 - y*z^3 at (1,1,1): restriction along the tangent is
  // t^3 + t^4, so the contact order is 3 (a flex)
  CHECK(tangent_flex_multiplicity(q3("x^4 + 2*y*z^3"), {1, 1, 1}) == 3);

  // tangent line contained in the curve -> 5
  CHECK(tangent_flex_multiplicity(q3("x^3*y"), {1, 0, 0}) == 5);

  CHECK_THROWS_AS(tangent_flex_multiplicity(q3("x^4"), {0, 1, 0}), Error);  // not on curve
  CHECK_THROWS_AS(tangent_flex_multiplicity(q3("x^2*y^2"), {1, 0, 0}), Error);  // singular
  CHECK_THROWS_AS(tangent_flex_multiplicity(q2("x^4"), {0, 1, 0}), Error);  // wrong char
}

TEST_CASE("nonreflexivity sampling") {
  // the Klein quartic zx^3 + xy^3 + yz^3 has gradient (y^3, z^3, x^3):
  // smooth everywhere, and every F_3-point is a flex
  auto klein = q3("z*x^3 + x*y^3 + y*z^3");
  auto res = nonreflexive_sample_test(klein, 1);
  CHECK(res.verdict == FlexVerdict::all_flex);
  CHECK(res.min_multiplicity == 3);
  CHECK_FALSE(res.witness.has_value());

  // the Fermat quartic is Hermitian in characteristic 3: its four F_3-points
  // (1:+-1:+-1) all have contact order 4
  auto fermat = nonreflexive_sample_test(q3("x^4 + y^4 + z^4"), 1);
  CHECK(fermat.verdict == FlexVerdict::all_flex);
  CHECK(fermat.min_multiplicity == 4);

  // a double conic has no smooth points, so sampling is inconclusive
  auto conic = q3("x^2 + y^2 + z^2");
  auto none = nonreflexive_sample_test(conic * conic, 1);
  CHECK(none.verdict == FlexVerdict::inconclusive);
  CHECK(none.min_multiplicity == 0);

  // consistency: any reported non-flex witness really has contact order 2
  std::mt19937 rng(11);
  const auto& f3 = FiniteField::get(3, 1);
  std::uniform_int_distribution<int> cf(0, 2);
  int verified = 0;
  for (int trial = 0; trial < 20; ++trial) {
    FinitePoly q(f3, {"x", "y", "z"});
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; i + j <= 4; ++j)
        q.set_coeff({i, j, 4 - i - j}, static_cast<Elem>(cf(rng)));
    if (q.is_zero()) continue;
    auto r = nonreflexive_sample_test(q, 2);
    if (r.verdict == FlexVerdict::found_nonflex) {
      REQUIRE(r.witness.has_value());
      CHECK(tangent_flex_multiplicity(q, FiniteField::get(3, 2), *r.witness) == 2);
      ++verified;
    }
  }
  CHECK(verified > 0);  // a random quartic is generically reflexive

  CHECK_THROWS_AS(nonreflexive_sample_test(klein, 0), Error);
  CHECK_THROWS_AS(nonreflexive_sample_test(klein, 7), Error);
}
