#include "doctest.h"

#include <algorithm>

#include "omega/error.hpp"
#include "omega/order_check.hpp"
#include "omega/sampler.hpp"
#include "support/fixtures.hpp"

using namespace omega;

namespace {

const Signature& drb_sig() {
  static const Signature s = theory_signature(TheoryId::drb, {"x", "y", "z"});
  return s;
}

Word w(std::string_view text) { return parse_word(text, drb_sig()); }

}  // namespace

TEST_CASE("order1 puts the Rota-Baxter product first") {
  const auto& rb = fx::rb();
  CHECK(rb.order.greater(fx::word(rb, "P(x)*P(y)"), fx::word(rb, "P(x*P(y))")));
  CHECK(rb.order.greater(fx::word(rb, "P(x)*P(y)"), fx::word(rb, "P(P(x)*y)")));
  CHECK(rb.order.greater(fx::word(rb, "P(x)*P(y)"), fx::word(rb, "P(x*y)")));
}

TEST_CASE("order2: D(xy) is the greatest of the four relation words") {
  const auto& df = fx::diff();
  const Word top = fx::word(df, "D(x*y)");
  for (auto text : {"D(x)*y", "x*D(y)", "D(x)*D(y)"}) CHECK(df.order.greater(top, fx::word(df, text)));
}

TEST_CASE("order3-printed has the documented defect") {
  const MonomialOrder printed(OrderId::order3_printed, drb_sig());
  CHECK(printed.greater(w("D(x)*D(y)"), w("D(x*y)")));
}

TEST_CASE("order3-corrected restores the relation leading words") {
  const MonomialOrder o(OrderId::order3_corrected, drb_sig());
  for (auto text : {"D(x)*y", "x*D(y)", "D(x)*D(y)"}) CHECK(o.greater(w("D(x*y)"), w(text)));
  for (auto text : {"P(x*P(y))", "P(P(x)*y)", "P(x*y)"}) CHECK(o.greater(w("P(x)*P(y)"), w(text)));
  CHECK(o.greater(w("D(P(x))"), w("x")));
}

TEST_CASE("orders reject incompatible signatures") {
  const auto only_p = Signature::from_lists("x", "P:1");
  CHECK_THROWS(MonomialOrder(OrderId::order2, Signature::from_lists("x", "P:1,D:1")));
  CHECK_THROWS(MonomialOrder(OrderId::order2, Signature::from_lists("x", "T:2")));
  CHECK_THROWS(MonomialOrder(OrderId::order3_corrected, only_p));
  CHECK_NOTHROW(MonomialOrder(OrderId::order1, Signature::from_lists("x", "T:2")));
}

TEST_CASE("variables compare by declaration order") {
  const auto sig = Signature::from_lists("b,a", "");
  const MonomialOrder o(OrderId::order1, sig);
  CHECK(o.greater(parse_word("b", sig), parse_word("a", sig)));
  CHECK(o.greater(parse_word("b^2", sig), parse_word("a*b", sig)));
}

TEST_CASE("exponent vectors compare lexicographically after merging") {
  const auto sig = Signature::from_lists("x,y,z", "");
  const MonomialOrder o(OrderId::order1, sig);
  // Same breadth; merged descending factors are x, y, z.
  CHECK(o.greater(parse_word("x*z", sig), parse_word("y^2", sig)));
  CHECK(o.greater(parse_word("x^2*z", sig), parse_word("x*y^2", sig)));
  CHECK(o.less(parse_word("y*z", sig), parse_word("x*z", sig)));
}

TEST_CASE("property: compare is a strict total order equal only on equal words") {
  for (OrderId id : {OrderId::order3_printed, OrderId::order3_corrected}) {
    const MonomialOrder o(id, drb_sig());
    WordSampler sampler(drb_sig(), {.max_depth = 3, .max_breadth = 3, .max_deg = 4});
    std::vector<Word> pool;
    for (std::size_t i = 0; i < 300; ++i) {
      Rng rng = instance_rng(11, 1, i);
      pool.push_back(sampler.word(rng));
    }
    for (const auto& u : pool)
      for (const auto& v : pool) {
        REQUIRE((o.compare(u, v) == 0) == (u == v));
        REQUIRE((o.compare(u, v) < 0) == (o.compare(v, u) > 0));
      }
    // Sorting must produce a chain, which also exercises transitivity.
    std::sort(pool.begin(), pool.end(), [&](const Word& a, const Word& b) { return o.less(a, b); });
    for (std::size_t i = 0; i + 1 < pool.size(); ++i) REQUIRE(o.compare(pool[i], pool[i + 1]) <= 0);
    for (std::size_t i = 0; i + 2 < pool.size(); i += 3) REQUIRE(o.compare(pool[i], pool[i + 2]) <= 0);
  }
}

TEST_CASE("property: monomial law on each order") {
  const SamplerConfig cfg{.trials = 2000, .seed = 5};
  const auto rb_sig = Signature::from_lists("x,y,z", "P:1,D:1,T:2");
  CHECK(check_monomial_property(MonomialOrder(OrderId::order1, rb_sig), rb_sig, cfg).ok());
  const auto& df = fx::diff();
  CHECK(check_monomial_property(df.order, df.signature, cfg).ok());
  const MonomialOrder corrected(OrderId::order3_corrected, drb_sig());
  CHECK(check_monomial_property(corrected, drb_sig(), cfg).ok());
  const MonomialOrder printed(OrderId::order3_printed, drb_sig());
  CHECK(check_monomial_property(printed, drb_sig(), cfg).ok());
}

TEST_CASE("property: the drb schema leading words hold on random parameters") {
  const auto& t = fx::drb();
  WordSampler sampler(t.signature, {.max_depth = 2, .max_breadth = 3, .max_deg = 3});
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng = instance_rng(12, 1, i);
    const Word u = sampler.word(rng), v = sampler.word(rng);
    REQUIRE_NOTHROW(assert_leading_word(t.schemas.rota_baxter(u, v), t.order, t.signature));
    REQUIRE_NOTHROW(assert_leading_word(t.schemas.differential(u, v), t.order, t.signature));
    REQUIRE_NOTHROW(assert_leading_word(t.schemas.inverse(u), t.order, t.signature));
  }
}
