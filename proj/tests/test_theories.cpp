#include "doctest.h"

#include <set>

#include "omega/error.hpp"
#include "omega/gs.hpp"
#include "omega/sampler.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace omega;

TEST_CASE("presets load their orders and relations") {
  CHECK(fx::rb().order.id() == OrderId::order1);
  CHECK(fx::diff().order.id() == OrderId::order2);
  CHECK(fx::drb().order.id() == OrderId::order3_corrected);
  CHECK(fx::rb().schemas.has_rota_baxter());
  CHECK(!fx::rb().schemas.has_differential());
  CHECK(fx::drb().schemas.has_inverse());
}

TEST_CASE("irr_membership examples") {
  const auto& rb = fx::rb();
  CHECK(!irr_membership(rb, fx::word(rb, "P(x)*P(y)")));
  CHECK(irr_membership(rb, fx::word(rb, "x*P(x*P(y))")));
  const auto& df = fx::diff();
  CHECK(!irr_membership(df, fx::word(df, "D(x*y)")));
  CHECK(irr_membership(df, fx::word(df, "D(D(x))*D(y)*x")));
  const auto& drb = fx::drb();
  CHECK(!irr_membership(drb, fx::word(drb, "D(P(x))")));
  CHECK(irr_membership(drb, fx::word(drb, "P(D(x)*y)*D(D(x))")));
  CHECK(!irr_membership(drb, fx::word(drb, "P(P(x)*P(y))")));
}

TEST_CASE("rb_product examples") {
  const auto& rb = fx::rb();
  CHECK(rb_product(rb, fx::word(rb, "x"), fx::word(rb, "y")) == fx::poly(rb, "x*y"));
  CHECK(rb_product(rb, fx::word(rb, "P(x)"), fx::word(rb, "P(y)")) ==
        fx::poly(rb, "P(P(x)*y) + P(x*P(y)) + lam*P(x*y)"));
  CHECK(rb_product(rb, fx::word(rb, "x*P(x)"), fx::word(rb, "y")) == fx::poly(rb, "x*y*P(x)"));
  CHECK_THROWS(rb_product(rb, fx::word(rb, "P(x)*P(y)"), fx::word(rb, "y")));
}

TEST_CASE("diff_apply examples") {
  const auto& df = fx::diff();
  CHECK(diff_apply(df, fx::word(df, "D(D(x))")) == fx::poly(df, "D(D(D(x)))"));
  CHECK(diff_apply(df, fx::word(df, "x*y")) == fx::poly(df, "D(x)*y + x*D(y) + lam*D(x)*D(y)"));
  // Case (2) twice, written out by hand: D(x)(yz) + x D(yz) + lam D(x) D(yz)
  // with D(yz) = D(y)z + yD(z) + lam D(y)D(z).
  const Polynomial seven = fx::poly(df,
                                    "D(x)*y*z + x*D(y)*z + x*y*D(z) + lam*x*D(y)*D(z)"
                                    " + lam*D(x)*D(y)*z + lam*D(x)*y*D(z) + lam^2*D(x)*D(y)*D(z)");
  CHECK(seven.size() == 7);
  CHECK(diff_apply(df, fx::word(df, "x*y*z")) == seven);
  CHECK(fx::nf(df, fx::poly(df, "D(x*y*z)")) == seven);
  CHECK_THROWS(diff_apply(df, fx::word(df, "D(x*y)")));
}

TEST_CASE("property: the Rota-Baxter product is commutative and associative") {
  const auto& rb = fx::rb();
  for (std::size_t i = 0; i < 150; ++i) {
    Rng rng = instance_rng(21, 1, i);
    const Word a = random_rb_word(rng, rb.signature, rb.p(), 3, 2);
    const Word b = random_rb_word(rng, rb.signature, rb.p(), 3, 2);
    const Word c = random_rb_word(rng, rb.signature, rb.p(), 2, 1);
    REQUIRE(rb_product(rb, a, b) == rb_product(rb, b, a));
    REQUIRE(rb_product(rb, rb_product(rb, a, b), Polynomial(c)) ==
            rb_product(rb, Polynomial(a), rb_product(rb, b, c)));
    const Polynomial ab = rb_product(rb, a, b);
    for (const auto& [w, k] : ab.terms()) REQUIRE(irr_membership(rb, w));
  }
}

TEST_CASE("property: the Rota-Baxter identity holds for the product") {
  const auto& rb = fx::rb();
  for (std::size_t i = 0; i < 150; ++i) {
    Rng rng = instance_rng(22, 1, i);
    const Word a = random_rb_word(rng, rb.signature, rb.p(), 3, 2);
    const Word b = random_rb_word(rng, rb.signature, rb.p(), 3, 2);
    const Polynomial pa = apply_unary(rb.p(), a), pb = apply_unary(rb.p(), b);
    const Polynomial rhs = apply_unary(rb.p(), rb_product(rb, pa, Polynomial(b))) +
                           apply_unary(rb.p(), rb_product(rb, Polynomial(a), pb)) +
                           Coefficient::lambda() * apply_unary(rb.p(), rb_product(rb, a, b));
    REQUIRE(rb_product(rb, pa, pb) == rhs);
  }
}

TEST_CASE("property: diff_apply is a lambda-derivation") {
  const auto& df = fx::diff();
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng = instance_rng(23, 1, i);
    const Word u = random_diff_word(rng, df.signature, df.d(), 3, 2);
    const Word v = random_diff_word(rng, df.signature, df.d(), 3, 2);
    const Polynomial du = diff_apply(df, u), dv = diff_apply(df, v);
    REQUIRE(diff_apply(df, u * v) == du * Polynomial(v) + Polynomial(u) * dv + Coefficient::lambda() * (du * dv));
  }
}

TEST_CASE("enumerate_irr within tiny bounds") {
  const auto t = preset(TheoryId::diff, {"x"});
  const auto words = enumerate_irr(t, 1, 2);
  REQUIRE(words.size() == 3);
  std::set<std::string> got;
  for (const auto& w : words) got.insert(format_word(w, t.signature));
  CHECK(got == std::set<std::string>{"x", "D(x)", "D(D(x))"});
  CHECK_THROWS_AS(enumerate_irr(t, 3, 3, 5), ResourceLimitError);
}

TEST_CASE("Irr sets agree with a brute-force enumeration") {
  // Pinned counts for |X| = 2, deg <= 3, depth <= 2.
  const std::pair<TheoryId, std::size_t> cases[] = {{TheoryId::rb, 83}, {TheoryId::diff, 83}, {TheoryId::drb, 454}};
  for (auto [id, pinned] : cases) {
    CAPTURE(to_string(id));
    const auto t = preset(id, {"x", "y"});
    std::vector<OpId> ops;
    for (OpId op = 0; op < t.signature.operator_count(); ++op) ops.push_back(op);
    const auto all = oracle::all_words(t.signature, ops, 3, 2);
    std::set<std::string> brute;
    for (const auto& w : all) {
      const bool fixed = fx::nf(t, Polynomial(w)) == Polynomial(w);
      REQUIRE(irr_membership(t, w) == fixed);
      if (fixed) brute.insert(format_word(w, t.signature));
    }
    const auto listed = enumerate_irr(t, 3, 2);
    std::set<std::string> ours;
    for (const auto& w : listed) ours.insert(format_word(w, t.signature));
    CHECK(ours.size() == listed.size());
    CHECK(ours == brute);
    CHECK(brute.size() == pinned);
  }
}
