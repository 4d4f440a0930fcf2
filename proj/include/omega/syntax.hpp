#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "omega/context.hpp"
#include "omega/order.hpp"
#include "omega/polynomial.hpp"
#include "omega/rewrite.hpp"
#include "omega/signature.hpp"

namespace omega {

// Surface syntax:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := item ('*' item)*
//   item    := atom ['^' nat]
//   atom    := rational | 'lam' | variable | operator '(' expr (',' expr)* ')' | '(' expr ')'
//   rational:= int ['/' nat]
// '*' is mandatory between factors. Operator applications expand
// multilinearly while parsing. 'lam' is the weight.
struct ParseOptions {
  bool allow_unit = false;                 // accept bare constants as multiples of 1
  std::optional<Rational> lambda_value;    // substitute for 'lam'
};

Polynomial parse_polynomial(std::string_view text, const Signature& sig, const ParseOptions& options = {});
Word parse_word(std::string_view text, const Signature& sig);

std::string format_word(const Word& w, const Signature& sig);
// Words descending under `order` (structural order when null), factors
// descending structurally, repeated factors as '^'.
std::string format_polynomial(const Polynomial& f, const Signature& sig, const MonomialOrder* order = nullptr);
// Terms in the given order, uncollected (a term list may repeat words).
std::string format_terms(const std::vector<Polynomial::Term>& terms, const Signature& sig);
// The hole prints as '[]'.
// One "round k (n terms): ..." line per round, then "  = <collected>".
std::string format_rounds(const std::vector<ReductionRound>& rounds, const Signature& sig, const MonomialOrder& order);
std::string format_context(const Context& c, const Signature& sig);

}  // namespace omega
