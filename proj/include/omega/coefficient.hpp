#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace omega {

using Rational = mpq_class;

// An element of Q[lambda]: sparse map from lambda-exponent to a nonzero
// rational. The empty map is zero.
class Coefficient {
 public:
  using Term = std::pair<std::uint32_t, Rational>;

  Coefficient() = default;
  Coefficient(long value);  // NOLINT(google-explicit-constructor)
  explicit Coefficient(const Rational& value, std::uint32_t lambda_power = 0);

  static Coefficient zero() { return {}; }
  static Coefficient one() { return Coefficient(1L); }
  static Coefficient lambda(std::uint32_t power = 1) { return Coefficient(Rational(1), power); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // A pure rational (no lambda); only these are invertible.
  bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }
  std::optional<Coefficient> inverse() const;

  const std::vector<Term>& terms() const { return terms_; }
  std::uint32_t lambda_degree() const { return terms_.empty() ? 0 : terms_.back().first; }
  Rational rational_part() const;

  // Evaluates lambda at a rational value.
  Coefficient specialize(const Rational& lambda_value) const;

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& other);
  Coefficient& operator-=(const Coefficient& other);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);

  friend bool operator==(const Coefficient& a, const Coefficient& b) { return a.terms_ == b.terms_; }

  std::size_t hash() const;
  std::string to_string() const;

 private:
  void add_scaled(const Coefficient& other, int sign);
  std::vector<Term> terms_;  // ascending lambda power, no zero rationals
};

}  // namespace omega
