#include "omega/theory.hpp"

#include "omega/error.hpp"
#include "omega/syntax.hpp"

namespace omega {

OrderId default_order(TheoryId id) {
  switch (id) {
    case TheoryId::rb: return OrderId::order1;
    case TheoryId::diff: return OrderId::order2;
    case TheoryId::drb: return OrderId::order3_corrected;
  }
  return OrderId::order1;
}

Signature theory_signature(TheoryId id, std::vector<std::string> variables) {
  std::vector<OperatorDecl> ops;
  switch (id) {
    case TheoryId::rb: ops = {{"P", 1}}; break;
    case TheoryId::diff: ops = {{"D", 1}}; break;
    case TheoryId::drb: ops = {{"D", 1}, {"P", 1}}; break;
  }
  return Signature(std::move(variables), std::move(ops));
}

void assert_leading_word(const Rule& rule, const MonomialOrder& order, const Signature& sig) {
  auto [lead, coeff] = leading_term(rule.polynomial(), order);
  if (lead == rule.lhs && coeff.is_one()) return;
  const std::string expected = format_word(rule.lhs, sig);
  const std::string actual = format_word(lead, sig);
  throw LeadingWordError("leading-word assertion failed for the " + std::string(to_string(rule.origin.relation)) +
                             " relation under " + std::string(to_string(order.id())) + ": expected " + expected +
                             " to lead, but the order selects " + actual,
                         expected, actual);
}

TheoryPreset preset(TheoryId id, std::vector<std::string> variables, std::optional<OrderId> order,
                    Coefficient weight) {
  if (variables.empty()) throw SignatureError("a theory needs at least one variable");
  Signature sig = theory_signature(id, std::move(variables));
  MonomialOrder mo(order.value_or(default_order(id)), sig);
  SchemaSet schemas(id, sig, std::move(weight));
  TheoryPreset out{id, sig, mo, schemas};

  const Word x = Word::variable(0);
  const Word y = Word::variable(sig.variable_count() > 1 ? 1 : 0);
  if (schemas.has_rota_baxter()) assert_leading_word(schemas.rota_baxter(x, y), mo, sig);
  if (schemas.has_differential()) assert_leading_word(schemas.differential(x, y), mo, sig);
  if (schemas.has_inverse()) assert_leading_word(schemas.inverse(x), mo, sig);
  return out;
}

namespace {

bool is_iterated_derivative(const TheoryPreset& t, const Factor& f) {
  if (f.is_variable()) return true;
  if (f.op() != t.d()) return false;
  const Word& arg = f.args()[0];
  return arg.bre() == 1 && is_iterated_derivative(t, arg.factors()[0].factor);
}

}  // namespace

bool irr_membership(const TheoryPreset& t, const Word& w) {
  const bool has_p = t.id != TheoryId::diff;
  std::uint32_t p_count = 0;
  for (const auto& fp : w.factors()) {
    const Factor& f = fp.factor;
    if (f.is_variable()) continue;
    if (has_p && f.op() == t.p()) {
      p_count += fp.exponent;
      if (p_count > 1 || !irr_membership(t, f.args()[0])) return false;
    } else if (!is_iterated_derivative(t, f)) {
      return false;
    }
  }
  return true;
}

// ---- rota-baxter product ------------------------------------------------------

namespace {

// Splits a rota-baxter word into its variable part and the argument of its
// P-factor (nullopt for a pure monomial).
std::pair<Word, std::optional<Word>> split_rb(const TheoryPreset& t, const Word& w) {
  std::vector<FactorPower> rest;
  std::optional<Word> inner;
  for (const auto& fp : w.factors()) {
    if (!fp.factor.is_variable() && fp.factor.op() == t.p()) inner = fp.factor.args()[0];
    else rest.push_back(fp);
  }
  return {Word::from_powers(std::move(rest), true), inner};
}

Polynomial rb_product_rec(const TheoryPreset& t, const Word& u, const Word& v) {
  if (u.dep() == 0 || v.dep() == 0) return Polynomial(u * v);
  auto [u1, up] = split_rb(t, u);
  auto [v1, vp] = split_rb(t, v);
  const Word pu = Word::of(Factor::apply(t.p(), {*up}));
  const Word pv = Word::of(Factor::apply(t.p(), {*vp}));
  Polynomial sum = apply_unary(t.p(), rb_product_rec(t, pu, *vp));
  sum += apply_unary(t.p(), rb_product_rec(t, *up, pv));
  sum += t.schemas.weight() * apply_unary(t.p(), rb_product_rec(t, *up, *vp));
  return (u1 * v1) * sum;
}

}  // namespace

Polynomial rb_product(const TheoryPreset& t, const Word& u, const Word& v) {
  if (t.id != TheoryId::rb) throw Error("rb_product needs the rb theory");
  if (u.is_unit() || v.is_unit() || !irr_membership(t, u) || !irr_membership(t, v))
    throw Error("rb_product inputs must be rota-baxter words");
  return rb_product_rec(t, u, v);
}

Polynomial rb_product(const TheoryPreset& t, const Polynomial& f, const Polynomial& g) {
  Polynomial out;
  for (const auto& [u, a] : f.terms())
    for (const auto& [v, b] : g.terms()) out += (a * b) * rb_product(t, u, v);
  return out;
}

// ---- derivation -----------------------------------------------------------

namespace {

Polynomial diff_rec(const TheoryPreset& t, const Word& u) {
  if (u.is_unit()) return {};
  const Factor& head = u.factors()[0].factor;
  if (u.bre() == 1) return Polynomial(Word::of(Factor::apply(t.d(), {u})));
  const Word u1 = Word::of(head);
  const Word rest = *u.divide(u1);
  const Word du1 = Word::of(Factor::apply(t.d(), {u1}));
  const Polynomial drest = diff_rec(t, rest);
  Polynomial out(du1 * rest);
  out += u1 * drest;
  out += t.schemas.weight() * (du1 * drest);
  return out;
}

}  // namespace

Polynomial diff_apply(const TheoryPreset& t, const Word& u) {
  if (t.id != TheoryId::diff) throw Error("diff_apply needs the diff theory");
  if (!irr_membership(t, u)) throw Error("diff_apply input must be a product of iterated derivatives");
  return diff_rec(t, u);
}

Polynomial diff_apply(const TheoryPreset& t, const Polynomial& f) {
  Polynomial out;
  for (const auto& [u, c] : f.terms()) out += c * diff_apply(t, u);
  return out;
}

}  // namespace omega
