#include "doctest.h"

#include <algorithm>

#include "omega/context.hpp"
#include "omega/sampler.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

using namespace omega;

namespace {

const Signature& sig() {
  static const Signature s = Signature::from_lists("x,y,z", "P:1,D:1");
  return s;
}

Word w(std::string_view text) { return parse_word(text, sig()); }
Polynomial p(std::string_view text) { return parse_polynomial(text, sig()); }

bool same_contexts(std::vector<Context> a, std::vector<Context> b) {
  if (a.size() != b.size()) return false;
  for (const auto& c : a)
    if (std::find(b.begin(), b.end(), c) == b.end()) return false;
  return true;
}

}  // namespace

TEST_CASE("plug fills the hole") {
  CHECK(Context::root(w("x")).plug(w("y")) == w("x*y"));

  const auto s6 = Signature::from_lists("x1,x2,x4,x5,x6,s", "T3:3,T2:2");
  auto v = [&](const char* name) { return parse_word(name, s6); };
  // x1*T3(x2, T2(hole*x4, x5), x6)
  const Factor t2 = Factor::apply(1, {v("s*x4"), v("x5")});
  const Factor t3 = Factor::apply(0, {v("x2"), Word::of(t2), v("x6")});
  const Context c({{t3, 1, v("x1")}, {t2, 0, Word::unit()}}, v("x4"));
  CHECK(c.plug(v("s")) == parse_word("x1*T3(x2, T2(s*x4, x5), x6)", s6));

  const Context in_p({{Factor::apply(0, {w("x")}), 0, Word::unit()}}, Word::unit());
  CHECK(in_p.plug(p("x + 2*y")) == p("P(x) + 2*P(y)"));
}

TEST_CASE("occurrences: small hosts") {
  auto occ = occurrences(w("x*y"), w("x"));
  REQUIRE(occ.size() == 1);
  CHECK(occ[0].context.path().empty());
  CHECK(occ[0].context.hole_residual() == w("y"));

  occ = occurrences(w("P(x*P(y))*z"), w("P(y)"));
  REQUIRE(occ.size() == 1);
  REQUIRE(occ[0].context.path().size() == 1);
  CHECK(occ[0].context.hole_residual() == w("x"));
  CHECK(occ[0].context.path()[0].residual == w("z"));

  occ = occurrences(w("P(x)^2"), w("P(x)*P(x)"));
  REQUIRE(occ.size() == 1);
  CHECK(occ[0].context.path().empty());
  CHECK(occ[0].context.hole_residual().is_unit());
}

TEST_CASE("property: occurrences agree with the brute-force search") {
  WordSampler sampler(sig(), {.max_depth = 3, .max_breadth = 3, .max_deg = 4});
  std::size_t hits = 0;
  for (std::size_t i = 0; i < 1500; ++i) {
    Rng rng = instance_rng(13, 1, i);
    const Word s = sampler.word(rng, 1 + rng() % 2, rng() % 2);
    const Context c = sampler.context(rng, rng() % 3);
    const Word host = c.plug(s);
    const Word pattern = (i % 3 == 0) ? sampler.word(rng, 1, 1) : s;
    const auto ours = occurrences(host, pattern);
    std::vector<Context> contexts;
    for (const auto& o : ours) {
      REQUIRE(o.context.plug(pattern) == host);
      REQUIRE(o.matched == pattern);
      contexts.push_back(o.context);
    }
    REQUIRE(same_contexts(contexts, oracle::occurrences(host, pattern)));
    hits += ours.size();
  }
  CHECK(hits > 1000);
}

TEST_CASE("top_overlaps: small words") {
  auto ov = top_overlaps(w("P(x)*P(y)"), w("P(y)*P(z)"), OverlapMode::lcm);
  REQUIRE(ov.size() == 1);
  CHECK(ov[0].w == w("P(x)*P(y)*P(z)"));
  CHECK(ov[0].a == w("P(z)"));
  CHECK(ov[0].b == w("P(x)"));

  CHECK(top_overlaps(w("x*y"), w("z*P(x)"), OverlapMode::lcm).empty());

  ov = top_overlaps(w("x^2*y"), w("x*y^2"), OverlapMode::lcm);
  REQUIRE(ov.size() == 1);
  CHECK(ov[0].c == w("x*y"));
  CHECK(ov[0].w == w("x^2*y^2"));
}

TEST_CASE("self overlap of P(x)^2 shares one copy") {
  const auto ov = top_overlaps(w("P(x)^2"), w("P(x)^2"), OverlapMode::lcm);
  REQUIRE(ov.size() == 1);
  CHECK(ov[0].c == w("P(x)"));
  CHECK(ov[0].w == w("P(x)^3"));
}

TEST_CASE("property: overlap invariants and mode all contains lcm") {
  WordSampler sampler(sig(), {.max_depth = 2, .max_breadth = 4, .max_deg = 5});
  for (std::size_t i = 0; i < 2000; ++i) {
    Rng rng = instance_rng(14, 1, i);
    const Word shared = sampler.word(rng, 1 + rng() % 2, 1);
    const Word f = shared * sampler.word(rng, 1 + rng() % 2, 1);
    const Word g = shared * sampler.word(rng, 1 + rng() % 2, 1);
    const auto lcm = top_overlaps(f, g, OverlapMode::lcm);
    const auto all = top_overlaps(f, g, OverlapMode::all);
    for (const auto& o : all) {
      REQUIRE(o.a * f == o.w);
      REQUIRE(o.b * g == o.w);
      REQUIRE(o.w.bre() == f.bre() + g.bre() - o.c.bre());
      REQUIRE(o.w.bre() < f.bre() + g.bre());
      REQUIRE(!o.a.is_unit());
      REQUIRE(!o.b.is_unit());
    }
    for (const auto& o : lcm)
      REQUIRE(std::any_of(all.begin(), all.end(), [&](const Overlap& q) { return q.w == o.w; }));
  }
}

TEST_CASE("property: compose and enter agree with nested plugging") {
  WordSampler sampler(sig(), {.max_depth = 3, .max_breadth = 3, .max_deg = 4});
  for (std::size_t i = 0; i < 1000; ++i) {
    Rng rng = instance_rng(15, 1, i);
    const Context outer = sampler.context(rng, rng() % 3);
    const Context inner = sampler.context(rng, rng() % 3);
    const Word s = sampler.word(rng, 2, 1);
    REQUIRE(outer.compose(inner).plug(s) == outer.plug(inner.plug(s)));
  }
}
