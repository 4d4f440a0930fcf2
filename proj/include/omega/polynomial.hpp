#pragma once

#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "omega/coefficient.hpp"
#include "omega/word.hpp"

namespace omega {

// A finite map Word -> nonzero Coefficient. Terms are kept sorted descending
// under the structural comparator so equality is plain vector equality.
class Polynomial {
 public:
  using Term = std::pair<Word, Coefficient>;

  Polynomial() = default;
  Polynomial(const Word& w, Coefficient c = Coefficient::one());  // NOLINT
  static Polynomial from_terms(std::vector<Term> terms);
  static Polynomial from_map(std::unordered_map<Word, Coefficient, WordHash> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  Coefficient coefficient_of(const Word& w) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Coefficient& c, const Polynomial& f);
  friend Polynomial operator*(const Word& w, const Polynomial& f);

  Polynomial specialize(const Rational& lambda_value) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void combine(const Polynomial& other, int sign);
  std::vector<Term> terms_;
};

inline Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
inline Polynomial poly_scale(const Coefficient& c, const Polynomial& f) { return c * f; }
inline Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

// Multilinear extension of an operator. Unchecked arity variant for internal
// use; apply_operator validates against the signature.
Polynomial apply_operator_unchecked(OpId op, std::span<const Polynomial> args);
Polynomial apply_operator(const Signature& sig, OpId op, std::span<const Polynomial> args);
inline Polynomial apply_unary(OpId op, const Polynomial& arg) {
  return apply_operator_unchecked(op, std::span<const Polynomial>(&arg, 1));
}
inline Polynomial apply_unary(OpId op, const Word& arg) {
  return Polynomial(Word::of(Factor::apply(op, {arg})));
}

}  // namespace omega
