#include "omega/order.hpp"

#include <algorithm>
#include <array>

#include "omega/error.hpp"

namespace omega {

std::string_view to_string(OrderId id) {
  switch (id) {
    case OrderId::order1: return "order1";
    case OrderId::order2: return "order2";
    case OrderId::order3_printed: return "order3-printed";
    case OrderId::order3_corrected: return "order3-corrected";
  }
  return "?";
}

std::optional<OrderId> parse_order_id(std::string_view name) {
  for (auto id : {OrderId::order1, OrderId::order2, OrderId::order3_printed, OrderId::order3_corrected})
    if (to_string(id) == name) return id;
  return std::nullopt;
}

MonomialOrder::MonomialOrder(OrderId id, const Signature& sig) : id_(id) {
  const auto& ops = sig.operators();
  switch (id) {
    case OrderId::order1:
      break;
    case OrderId::order2:
      if (ops.size() != 1 || ops[0].arity != 1)
        throw SignatureError("order2 requires exactly one unary operator");
      d_op_ = 0;
      break;
    case OrderId::order3_printed:
    case OrderId::order3_corrected: {
      auto d = sig.find_operator("D");
      auto p = sig.find_operator("P");
      if (ops.size() != 2 || !d || !p || sig.op(*d).arity != 1 || sig.op(*p).arity != 1)
        throw SignatureError(std::string(to_string(id)) + " requires exactly the unary operators P and D");
      d_op_ = *d;
      p_op_ = *p;
      break;
    }
  }
}

std::strong_ordering MonomialOrder::compare_op_rank(OpId a, OpId b) const {
  if (a == b) return std::strong_ordering::equal;
  if (id_ == OrderId::order3_printed || id_ == OrderId::order3_corrected)
    return a == d_op_ ? std::strong_ordering::greater : std::strong_ordering::less;
  return b <=> a;  // earlier declaration is greater
}

std::strong_ordering MonomialOrder::compare_factors(const Factor& a, const Factor& b) const {
  if (a == b) return std::strong_ordering::equal;
  if (id_ == OrderId::order3_corrected) {
    // Same tuple as on words; a factor has bre 1.
    if (auto c = a.deg() <=> b.deg(); c != 0) return c;
    if (auto c = a.op_weight(d_op_) <=> b.op_weight(d_op_); c != 0) return c;
    if (auto c = b.op_count(d_op_) <=> a.op_count(d_op_); c != 0) return c;
    if (auto c = a.op_count(p_op_) <=> b.op_count(p_op_); c != 0) return c;
  }
  if (a.is_variable() != b.is_variable())
    return a.is_variable() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.is_variable()) return b.variable_id() <=> a.variable_id();
  if (id_ == OrderId::order3_printed) {
    if (auto c = a.deg() <=> b.deg(); c != 0) return c;
    if (auto c = a.op_count(p_op_) <=> b.op_count(p_op_); c != 0) return c;
  }
  if (auto c = compare_op_rank(a.op(), b.op()); c != 0) return c;
  const auto& xa = a.args();
  const auto& xb = b.args();
  for (std::size_t i = 0; i < std::min(xa.size(), xb.size()); ++i)
    if (auto c = compare(xa[i], xb[i]); c != 0) return c;
  return xa.size() <=> xb.size();
}

std::strong_ordering MonomialOrder::compare_measures(const Word& u, const Word& v) const {
  switch (id_) {
    case OrderId::order1:
      return u.bre() <=> v.bre();
    case OrderId::order2:
      return u.deg() <=> v.deg();
    case OrderId::order3_printed:
      if (auto c = u.deg() <=> v.deg(); c != 0) return c;
      if (auto c = u.op_count(p_op_) <=> v.op_count(p_op_); c != 0) return c;
      return u.bre() <=> v.bre();
    case OrderId::order3_corrected:
      if (auto c = u.deg() <=> v.deg(); c != 0) return c;
      if (auto c = u.op_weight(d_op_) <=> v.op_weight(d_op_); c != 0) return c;
      if (auto c = v.op_count(d_op_) <=> u.op_count(d_op_); c != 0) return c;
      if (auto c = u.op_count(p_op_) <=> v.op_count(p_op_); c != 0) return c;
      return u.bre() <=> v.bre();
  }
  return std::strong_ordering::equal;
}

namespace {

// Distinct factors of a word, handed out greatest first under an order's
// factor rule. Selection rather than a full sort: most comparisons are
// decided by the first one or two factors.
class FactorQueue {
 public:
  explicit FactorQueue(const Word& w) {
    auto f = w.factors();
    if (f.size() <= inline_.size()) {
      for (std::size_t i = 0; i < f.size(); ++i) inline_[i] = &f[i];
      view_ = std::span<const FactorPower*>(inline_.data(), f.size());
    } else {
      heap_.reserve(f.size());
      for (const auto& p : f) heap_.push_back(&p);
      view_ = heap_;
    }
  }
  bool empty() const { return next_ == view_.size(); }
  template <typename Cmp>
  const FactorPower* pop(Cmp&& cmp) {
    std::size_t best = next_;
    for (std::size_t i = next_ + 1; i < view_.size(); ++i)
      if (cmp(view_[i]->factor, view_[best]->factor) > 0) best = i;
    std::swap(view_[next_], view_[best]);
    return view_[next_++];
  }

 private:
  std::array<const FactorPower*, 8> inline_{};
  std::vector<const FactorPower*> heap_;
  std::span<const FactorPower*> view_;
  std::size_t next_ = 0;
};

}  // namespace

std::strong_ordering MonomialOrder::compare_exponents(const Word& u, const Word& v) const {
  auto cmp = [this](const Factor& a, const Factor& b) { return compare_factors(a, b); };
  FactorQueue qu(u);
  FactorQueue qv(v);
  while (!qu.empty() && !qv.empty()) {
    const FactorPower* a = qu.pop(cmp);
    const FactorPower* b = qv.pop(cmp);
    auto c = compare_factors(a->factor, b->factor);
    // The larger leading factor is absent from the other word: exponent 0.
    if (c != 0) return c;
    if (a->exponent != b->exponent) return a->exponent <=> b->exponent;
  }
  if (!qu.empty()) return std::strong_ordering::greater;
  if (!qv.empty()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Word& u, const Word& v) const {
  if (u == v) return std::strong_ordering::equal;
  if (auto c = compare_measures(u, v); c != 0) return c;
  return compare_exponents(u, v);
}

std::pair<Word, Coefficient> leading_term(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error("leading term of the zero polynomial");
  const Polynomial::Term* best = &f.terms()[0];
  for (const auto& t : f.terms())
    if (order.compare(t.first, best->first) > 0) best = &t;
  return {best->first, best->second};
}

}  // namespace omega
