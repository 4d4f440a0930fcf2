#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omega/order.hpp"
#include "omega/rewrite.hpp"

namespace omega {

// A built-in theory: its signature and order together with the relation schemas.
//   rb    operators {P}     order1
//   diff  operators {D}     order2
//   drb   operators {D, P}  order3-corrected (D declared first, so D > P)
struct TheoryPreset {
  TheoryId id;
  Signature signature;
  MonomialOrder order;
  SchemaSet schemas;

  RuleSet rules() const { return RuleSet(schemas); }
  OpId p() const { return schemas.p_op(); }
  OpId d() const { return schemas.d_op(); }
};

OrderId default_order(TheoryId id);
Signature theory_signature(TheoryId id, std::vector<std::string> variables);

// Builds the preset and checks that each relation instance on the smallest
// words leads with its documented word (P(x)P(y), D(x*y), D(P(x))) under
// the chosen order. Throws LeadingWordError otherwise.
TheoryPreset preset(TheoryId id, std::vector<std::string> variables = {"x", "y", "z"},
                    std::optional<OrderId> order = std::nullopt, Coefficient weight = Coefficient::lambda());

// Throws LeadingWordError unless rule.lhs leads rule.polynomial() under order.
void assert_leading_word(const Rule& rule, const MonomialOrder& order, const Signature& sig);

// Membership in the linear bases, decided structurally:
//   rb    no node carries two or more P-factors
//   diff  every D argument is a single variable or a single D-factor
//   drb   both of the above
bool irr_membership(const TheoryPreset& theory, const Word& w);

// Product in the free commutative Rota-Baxter algebra by recursion on depth.
// Inputs must be rota-baxter words; throws Error otherwise.
Polynomial rb_product(const TheoryPreset& theory, const Word& u, const Word& v);
Polynomial rb_product(const TheoryPreset& theory, const Polynomial& f, const Polynomial& g);

// The derivation on the free commutative differential algebra by recursion
// on breadth, splitting off the structurally greatest factor. Inputs must be
// products of iterated derivatives of variables. The unit maps to 0.
Polynomial diff_apply(const TheoryPreset& theory, const Word& u);
Polynomial diff_apply(const TheoryPreset& theory, const Polynomial& f);

}  // namespace omega
