#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "omega/signature.hpp"

namespace omega {

class Word;

namespace detail {
struct FactorNode;
struct WordNode;
}  // namespace detail

// A generator of the commutative semigroup: a variable, or an operator
// applied to a tuple of words. Immutable and cheap to copy.
class Factor {
 public:
  static Factor variable(VarId id);
  // No arity check; use make_factor when the input comes from outside.
  static Factor apply(OpId op, std::vector<Word> args);

  bool is_variable() const;
  VarId variable_id() const;
  OpId op() const;
  const std::vector<Word>& args() const;

  std::uint32_t deg() const;
  std::uint32_t dep() const;
  std::uint32_t op_count(OpId op) const;
  std::uint64_t op_weight(OpId op) const;
  // One past the largest operator id occurring in this factor.
  std::size_t op_span() const;
  std::size_t hash() const;

  friend std::strong_ordering structural_compare(const Factor& a, const Factor& b);
  friend bool operator==(const Factor& a, const Factor& b);

 private:
  explicit Factor(std::shared_ptr<const detail::FactorNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::FactorNode> node_;
};

struct FactorPower {
  Factor factor;
  std::uint32_t exponent = 1;

  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

// Checked construction against a signature.
Factor make_factor(const Signature& sig, OpId op, std::vector<Word> args);

// A canonical commutative word: a multiset of factors stored as distinct
// (factor, exponent) entries sorted descending under the structural
// comparator. The empty multiset is the unit word, which only internal code
// creates.
//
// Cached measures:
//   bre     number of top-level factors, with multiplicity
//   dep     0 for a monomial in the variables, else 1 + deepest argument
//   deg     variable occurrences at every depth
//   op_count(t)   occurrences of operator t
//   op_weight(t)  sum over occurrences of t of deg(first argument)
class Word {
 public:
  Word() = default;  // unit
  static Word unit() { return Word(); }
  static Word of(const Factor& f, std::uint32_t exponent = 1);
  static Word variable(VarId id) { return of(Factor::variable(id)); }
  // Throws if empty and !allow_unit.
  static Word from_factors(std::vector<Factor> factors, bool allow_unit = false);
  static Word from_powers(std::vector<FactorPower> powers, bool allow_unit = false);

  bool is_unit() const { return node_ == nullptr; }
  std::span<const FactorPower> factors() const;
  std::size_t distinct_factors() const { return factors().size(); }

  std::uint32_t bre() const;
  std::uint32_t dep() const;
  std::uint32_t deg() const;
  std::uint32_t op_count(OpId op) const;
  std::uint64_t op_weight(OpId op) const;
  std::uint32_t total_op_count() const;
  std::size_t op_span() const;
  std::size_t hash() const;

  // Exponent of f in this word (0 when absent).
  std::uint32_t exponent_of(const Factor& f) const;
  // Multiset difference; nullopt unless divisor is a sub-multiset.
  std::optional<Word> divide(const Word& divisor) const;
  bool contains(const Word& sub) const { return divide(sub).has_value(); }
  Word gcd(const Word& other) const;
  Word lcm(const Word& other) const;

  friend Word operator*(const Word& a, const Word& b);
  friend std::strong_ordering structural_compare(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b);

 private:
  explicit Word(std::shared_ptr<const detail::WordNode> node) : node_(std::move(node)) {}
  static Word build(std::vector<FactorPower> sorted_powers);
  std::shared_ptr<const detail::WordNode> node_;
};

// Canonical construction from a factor multiset; checks nonemptiness.
Word make_word(std::vector<Factor> factors, bool allow_unit = false);
inline Word multiply(const Word& a, const Word& b) { return a * b; }

struct WordHash {
  std::size_t operator()(const Word& w) const { return w.hash(); }
};

struct StructuralGreater {
  bool operator()(const Word& a, const Word& b) const { return structural_compare(a, b) > 0; }
};

}  // namespace omega

template <>
struct std::hash<omega::Word> {
  std::size_t operator()(const omega::Word& w) const { return w.hash(); }
};
