#include "doctest.h"

#include "omega/error.hpp"
#include "omega/sampler.hpp"
#include "support/fixtures.hpp"

using namespace omega;

namespace {

const Signature& sig() {
  static const Signature s = Signature::from_lists("x,y,z", "P:1,D:1,T:2");
  return s;
}

}  // namespace

TEST_CASE("parser examples") {
  const auto& rb = fx::rb();
  const Polynomial rel = fx::poly(rb, "P(x)*P(y) - P(P(x)*y) - P(x*P(y)) - lam*P(x*y)");
  CHECK(rel.size() == 4);
  CHECK(fx::poly(rb, fx::show(rb, rel)) == rel);
  CHECK(fx::poly(rb, "0").is_zero());

  const auto& drb = fx::drb();
  const Polynomial c = fx::poly(drb, "3/2*lam^2*D(x)*D(y)");
  REQUIRE(c.size() == 1);
  CHECK(c.terms()[0].second == Coefficient(Rational(3, 2), 2));
}

TEST_CASE("parser expands operators multilinearly") {
  CHECK(parse_polynomial("P(x + y)*D(2*z)", sig()) == parse_polynomial("2*P(x)*D(z) + 2*P(y)*D(z)", sig()));
  CHECK(parse_polynomial("T(x + y, z)", sig()) == parse_polynomial("T(x, z) + T(y, z)", sig()));
  CHECK(parse_polynomial("2P(x) + 3/2 lam*x", sig()) == parse_polynomial("2*P(x) + 3/2*lam*x", sig()));
  CHECK(parse_polynomial("(x + y)^2", sig()) == parse_polynomial("x^2 + 2*x*y + y^2", sig()));
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_polynomial("x +", sig()), ParseError);
  CHECK_THROWS_WITH_AS(parse_polynomial("x + Q(x)", sig()), "unknown identifier 'Q' at position 4", ParseError);
  CHECK_THROWS_WITH_AS(parse_polynomial("w", sig()), "unknown identifier 'w' at position 0", ParseError);
  CHECK_THROWS_WITH_AS(parse_polynomial("T(x)", sig()), "operator 'T' expects 2 argument(s), got 1 at position 0",
                       ParseError);
  CHECK_THROWS(parse_polynomial("2", sig()));
  CHECK(parse_polynomial("2", sig(), {.allow_unit = true}) == Polynomial(Word::unit(), Coefficient(2L)));
  CHECK(parse_polynomial("lam*x", sig(), {.lambda_value = Rational(3)}) == parse_polynomial("3*x", sig()));
}

TEST_CASE("format prints canonical text") {
  const auto& rb = fx::rb();
  CHECK(fx::show(rb, fx::nf(rb, fx::poly(rb, "P(x)*P(y)"))) == "P(P(x)*y) + P(P(y)*x) + lam*P(x*y)");
  CHECK(format_word(fx::word(rb, "y*P(x)*x"), rb.signature) == "P(x)*x*y");
  CHECK(fx::show(rb, fx::poly(rb, "-x + 1/2*y")) == "-x + 1/2*y");
}

TEST_CASE("property: parse and format round trip") {
  WordSampler sampler(sig(), {.max_depth = 3, .max_breadth = 3, .max_deg = 4});
  for (std::size_t i = 0; i < 10'000; ++i) {
    Rng rng = instance_rng(24, 1, i);
    const Polynomial f = sampler.polynomial(rng, 1 + rng() % 4);
    const std::string text = format_polynomial(f, sig());
    const Polynomial back = parse_polynomial(text, sig());
    REQUIRE(back == f);
    REQUIRE(format_polynomial(back, sig()) == text);
  }
}
