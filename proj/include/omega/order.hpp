#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "omega/polynomial.hpp"
#include "omega/signature.hpp"
#include "omega/word.hpp"

namespace omega {

enum class OrderId { order1, order2, order3_printed, order3_corrected };

std::string_view to_string(OrderId id);
std::optional<OrderId> parse_order_id(std::string_view name);

// A monomial order bound to a signature. Construction rejects signatures the
// order is not defined for.
//
//   order1            (bre, exponent vector); factors: variables < operator
//                     applications, operators by declaration, then argument
//                     tuples lexicographically.
//   order2            (deg, exponent vector); single unary operator.
//   order3-printed    (deg, deg_P, bre, exponent vector); factor rule
//                     (deg, deg_P, operator with D > P, argument).
//   order3-corrected  (deg, ddeg_D, fewer D's greater, deg_P, bre, exponent
//                     vector); factors compare the same tuple first, then
//                     variable order / D > P / argument.
//
// The exponent vector is taken over the union of distinct factors of both
// words sorted descending by the factor rule, compared lexicographically.
class MonomialOrder {
 public:
  MonomialOrder(OrderId id, const Signature& sig);

  OrderId id() const { return id_; }
  std::strong_ordering compare(const Word& u, const Word& v) const;
  std::strong_ordering compare_factors(const Factor& a, const Factor& b) const;
  bool less(const Word& u, const Word& v) const { return compare(u, v) < 0; }
  bool greater(const Word& u, const Word& v) const { return compare(u, v) > 0; }

 private:
  std::strong_ordering compare_measures(const Word& u, const Word& v) const;
  std::strong_ordering compare_exponents(const Word& u, const Word& v) const;
  std::strong_ordering compare_op_rank(OpId a, OpId b) const;

  OrderId id_;
  OpId d_op_ = 0;  // order2 / order3: the differential operator
  OpId p_op_ = 0;  // order3: the integral operator
};

// (leading word, coefficient) of a nonzero polynomial. Throws on zero.
std::pair<Word, Coefficient> leading_term(const Polynomial& f, const MonomialOrder& order);

struct OrderGreater {
  const MonomialOrder* order;
  bool operator()(const Word& a, const Word& b) const { return order->compare(a, b) > 0; }
};

}  // namespace omega
