#include "doctest.h"

#include "omega/error.hpp"
#include "omega/polynomial.hpp"
#include "omega/sampler.hpp"
#include "support/fixtures.hpp"

using namespace omega;

namespace {

const Signature& xyz_pd() {
  static const Signature s = Signature::from_lists("x,y,z", "P:1,D:1");
  return s;
}

Word w(std::string_view text) { return parse_word(text, xyz_pd()); }
Polynomial p(std::string_view text) { return parse_polynomial(text, xyz_pd()); }

}  // namespace

TEST_CASE("make_word groups factors and caches measures") {
  const Factor x = Factor::variable(0), y = Factor::variable(1);
  const Word xy = make_word({y, x});
  CHECK(xy == w("x*y"));
  CHECK(xy.bre() == 2);
  CHECK(xy.dep() == 0);
  CHECK(xy.deg() == 2);

  const Factor px = Factor::apply(0, {Word::of(x)});
  const Word pxpx = make_word({px, px});
  CHECK(pxpx.distinct_factors() == 1);
  CHECK(pxpx.factors()[0].exponent == 2);
  CHECK(pxpx.bre() == 2);
  CHECK(pxpx.op_count(0) == 2);
  CHECK(pxpx.dep() == 1);

  const auto sig = Signature::from_lists("x1,x2,x3", "D:1");
  const Word u = parse_word("x1*D(D(x2))*D(x3)", sig);
  CHECK(u.deg() == 3);
  CHECK(u.dep() == 2);
  CHECK(u.op_count(0) == 3);
}

TEST_CASE("empty word needs unit mode") {
  CHECK_THROWS(make_word({}));
  CHECK(make_word({}, true).is_unit());
}

TEST_CASE("multiply is commutative placement") {
  CHECK(multiply(w("x"), w("y")) == w("x*y"));
  CHECK(multiply(w("y*P(x)"), w("x")) == w("x*y*P(x)"));
  CHECK(multiply(w("P(x)"), w("P(x)")) == w("P(x)^2"));
}

TEST_CASE("polynomial arithmetic") {
  CHECK(poly_add(p("x"), p("-x")).is_zero());
  CHECK(poly_mul(p("x + y"), p("x")) == p("x^2 + x*y"));
  CHECK(poly_scale(Coefficient::lambda(), p("P(x*y)")) == p("lam*P(x*y)"));
  CHECK(p("x - x + 0").is_zero());
}

TEST_CASE("apply_operator is linear and does not rewrite") {
  const OpId P = 0, D = 1;
  const Polynomial a = p("x + 2*y");
  CHECK(apply_operator(xyz_pd(), P, std::span(&a, 1)) == p("P(x) + 2*P(y)"));
  const Polynomial zero;
  CHECK(apply_operator(xyz_pd(), P, std::span(&zero, 1)).is_zero());
  const Polynomial xy = p("x*y");
  const Polynomial dxy = apply_operator(xyz_pd(), D, std::span(&xy, 1));
  CHECK(dxy.size() == 1);
  CHECK(dxy == p("D(x*y)"));
  const Polynomial two[] = {p("x"), p("y")};
  CHECK_THROWS_AS(apply_operator(xyz_pd(), P, std::span(two)), ArityError);
}

TEST_CASE("coefficients are exact") {
  const Coefficient third(Rational(1, 3));
  CHECK((third + third + third).is_one());
  CHECK((Coefficient::lambda() - Coefficient::lambda()).is_zero());
  CHECK((Coefficient::lambda(2) * Coefficient(Rational(3, 2))).to_string() == "3/2*lam^2");
  CHECK(Coefficient(Rational(2, 4)) == Coefficient(Rational(1, 2)));
  const Coefficient c = Coefficient(3L) + Coefficient::lambda() * Coefficient(-2L);
  CHECK(c.specialize(Rational(5)) == Coefficient(-7L));
  CHECK(!c.inverse());
  CHECK(*Coefficient(Rational(-2, 3)).inverse() == Coefficient(Rational(-3, 2)));
}

TEST_CASE("leading_term picks the order-maximal word") {
  const auto& rb = fx::rb();
  auto [lw, lc] = leading_term(fx::poly(rb, "P(x)*P(y) - P(P(x)*y) - P(x*P(y)) - lam*P(x*y)"), rb.order);
  CHECK(lw == fx::word(rb, "P(x)*P(y)"));
  CHECK(lc.is_one());
  CHECK(leading_term(fx::poly(rb, "x"), rb.order).first == fx::word(rb, "x"));

  const auto& df = fx::diff();
  auto [dw, dc] = leading_term(fx::poly(df, "D(x*y) - D(x)*y - x*D(y) - lam*D(x)*D(y)"), df.order);
  CHECK(dw == fx::word(df, "D(x*y)"));
  CHECK(dc.is_one());
}

TEST_CASE("property: measures are additive under multiplication") {
  WordSampler sampler(xyz_pd(), {.max_depth = 3, .max_breadth = 3, .max_deg = 4});
  for (std::size_t i = 0; i < 10'000; ++i) {
    Rng rng = instance_rng(7, 1, i);
    const Word u = sampler.word(rng), v = sampler.word(rng);
    const Word uv = u * v;
    REQUIRE(uv.bre() == u.bre() + v.bre());
    REQUIRE(uv.deg() == u.deg() + v.deg());
    REQUIRE(uv.dep() == std::max(u.dep(), v.dep()));
    REQUIRE(uv.op_count(0) == u.op_count(0) + v.op_count(0));
    REQUIRE(uv.op_count(1) == u.op_count(1) + v.op_count(1));
    REQUIRE(uv == v * u);
    REQUIRE(uv.hash() == (v * u).hash());
    REQUIRE(uv.divide(v) == u);
  }
}

TEST_CASE("property: words built in any factor order are identical") {
  WordSampler sampler(xyz_pd(), {.max_depth = 2, .max_breadth = 4, .max_deg = 5});
  for (std::size_t i = 0; i < 2000; ++i) {
    Rng rng = instance_rng(8, 1, i);
    const Word u = sampler.word(rng);
    std::vector<Factor> fs;
    for (const auto& fp : u.factors())
      for (std::uint32_t k = 0; k < fp.exponent; ++k) fs.push_back(fp.factor);
    std::shuffle(fs.begin(), fs.end(), rng);
    const Word again = make_word(fs);
    REQUIRE(again == u);
    REQUIRE(again.hash() == u.hash());
    REQUIRE(structural_compare(again, u) == 0);
  }
}

TEST_CASE("property: ring laws") {
  WordSampler sampler(xyz_pd(), {.max_depth = 2, .max_breadth = 2, .max_deg = 3});
  for (std::size_t i = 0; i < 300; ++i) {
    Rng rng = instance_rng(9, 1, i);
    const Polynomial a = sampler.polynomial(rng, 3), b = sampler.polynomial(rng, 3), c = sampler.polynomial(rng, 3);
    REQUIRE(a + b == b + a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
    const Polynomial ab = a * b;
    for (const auto& [word, coef] : ab.terms()) REQUIRE(!coef.is_zero());
  }
}

TEST_CASE("property: operators extend multilinearly") {
  WordSampler sampler(xyz_pd(), {.max_depth = 2, .max_breadth = 2, .max_deg = 3});
  for (std::size_t i = 0; i < 500; ++i) {
    Rng rng = instance_rng(10, 1, i);
    const Polynomial f = sampler.polynomial(rng, 3), g = sampler.polynomial(rng, 3);
    const Coefficient a = sampler.coefficient(rng), b = sampler.coefficient(rng);
    for (OpId op : {OpId{0}, OpId{1}})
      REQUIRE(apply_unary(op, a * f + b * g) == a * apply_unary(op, f) + b * apply_unary(op, g));
  }
}
