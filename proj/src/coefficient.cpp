#include "omega/coefficient.hpp"

#include <functional>
#include <map>
#include <sstream>

namespace omega {

Coefficient::Coefficient(long value) {
  if (value != 0) terms_.emplace_back(0, Rational(value));
}

Coefficient::Coefficient(const Rational& value, std::uint32_t lambda_power) {
  if (value == 0) return;
  terms_.emplace_back(lambda_power, value);
  terms_.back().second.canonicalize();  // callers may pass an unreduced a/b
}

bool Coefficient::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

std::optional<Coefficient> Coefficient::inverse() const {
  if (!is_rational() || is_zero()) return std::nullopt;
  return Coefficient(Rational(1) / terms_[0].second);
}

Rational Coefficient::rational_part() const {
  if (!terms_.empty() && terms_[0].first == 0) return terms_[0].second;
  return Rational(0);
}

Coefficient Coefficient::specialize(const Rational& lambda_value) const {
  Rational sum = 0;
  for (const auto& [power, value] : terms_) {
    Rational p = 1;
    for (std::uint32_t i = 0; i < power; ++i) p *= lambda_value;
    sum += value * p;
  }
  return Coefficient(sum);
}

Coefficient Coefficient::operator-() const {
  Coefficient out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

void Coefficient::add_scaled(const Coefficient& other, int sign) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.emplace_back(b->first, sign > 0 ? b->second : Rational(-b->second));
      ++b;
    } else {
      Rational v = sign > 0 ? Rational(a->second + b->second) : Rational(a->second - b->second);
      if (v != 0) merged.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

Coefficient& Coefficient::operator+=(const Coefficient& other) {
  add_scaled(other, 1);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& other) {
  add_scaled(other, -1);
  return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    return Coefficient(a.terms_[0].second * b.terms_[0].second, a.terms_[0].first + b.terms_[0].first);
  }
  std::map<std::uint32_t, Rational> acc;
  for (const auto& [pa, va] : a.terms_)
    for (const auto& [pb, vb] : b.terms_) acc[pa + pb] += va * vb;
  Coefficient out;
  for (auto& [p, v] : acc)
    if (v != 0) out.terms_.emplace_back(p, std::move(v));
  return out;
}

std::size_t Coefficient::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [p, v] : terms_) {
    h ^= std::hash<std::string>{}(v.get_str()) + p + (h << 6) + (h >> 2);
  }
  return h;
}

std::string Coefficient::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [power, value] = *it;
    Rational mag = abs(value);
    if (first) {
      if (value < 0) out << "-";
    } else {
      out << (value < 0 ? " - " : " + ");
    }
    first = false;
    if (power == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << "lam";
    if (power > 1) out << "^" << power;
  }
  return out.str();
}

}  // namespace omega
