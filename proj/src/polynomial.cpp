#include "omega/polynomial.hpp"

#include <algorithm>

#include "omega/error.hpp"

namespace omega {

namespace {

void sort_terms(std::vector<Polynomial::Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Polynomial::Term& a, const Polynomial::Term& b) {
    return structural_compare(a.first, b.first) > 0;
  });
}

}  // namespace

Polynomial::Polynomial(const Word& w, Coefficient c) {
  if (!c.is_zero()) terms_.emplace_back(w, std::move(c));
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::unordered_map<Word, Coefficient, WordHash> acc;
  for (auto& [w, c] : terms) acc[w] += c;
  return from_map(std::move(acc));
}

Polynomial Polynomial::from_map(std::unordered_map<Word, Coefficient, WordHash> terms) {
  Polynomial out;
  out.terms_.reserve(terms.size());
  for (auto& [w, c] : terms)
    if (!c.is_zero()) out.terms_.emplace_back(w, std::move(c));
  sort_terms(out.terms_);
  return out;
}

Coefficient Polynomial::coefficient_of(const Word& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w, [](const Term& t, const Word& key) {
    return structural_compare(t.first, key) > 0;
  });
  if (it != terms_.end() && it->first == w) return it->second;
  return {};
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

void Polynomial::combine(const Polynomial& other, int sign) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (a == terms_.end()) c = std::strong_ordering::less;
    else if (b == other.terms_.end()) c = std::strong_ordering::greater;
    else c = structural_compare(a->first, b->first);
    if (c > 0) {
      merged.push_back(std::move(*a++));
    } else if (c < 0) {
      merged.emplace_back(b->first, sign > 0 ? b->second : -b->second);
      ++b;
    } else {
      Coefficient v = sign > 0 ? a->second + b->second : a->second - b->second;
      if (!v.is_zero()) merged.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  combine(other, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  combine(other, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::unordered_map<Word, Coefficient, WordHash> acc;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) acc[wa * wb] += ca * cb;
  return Polynomial::from_map(std::move(acc));
}

Polynomial operator*(const Coefficient& c, const Polynomial& f) {
  if (c.is_zero()) return {};
  Polynomial out;
  out.terms_.reserve(f.terms_.size());
  for (const auto& [w, k] : f.terms_) {
    Coefficient v = c * k;
    if (!v.is_zero()) out.terms_.emplace_back(w, std::move(v));
  }
  return out;
}

Polynomial operator*(const Word& w, const Polynomial& f) {
  if (w.is_unit()) return f;
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.terms_.size());
  for (const auto& [u, k] : f.terms_) terms.emplace_back(w * u, k);
  // Multiplication by a word is injective, so no terms collide.
  sort_terms(terms);
  Polynomial out;
  out.terms_ = std::move(terms);
  return out;
}

Polynomial Polynomial::specialize(const Rational& lambda_value) const {
  std::vector<Term> terms;
  for (const auto& [w, c] : terms_) terms.emplace_back(w, c.specialize(lambda_value));
  return from_terms(std::move(terms));
}

Polynomial apply_operator_unchecked(OpId op, std::span<const Polynomial> args) {
  // Expand the tensor product of the argument term lists.
  std::unordered_map<Word, Coefficient, WordHash> acc;
  std::vector<std::size_t> index(args.size(), 0);
  for (const auto& a : args)
    if (a.is_zero()) return {};
  std::vector<Word> chosen(args.size());
  while (true) {
    Coefficient c = Coefficient::one();
    for (std::size_t i = 0; i < args.size(); ++i) {
      const auto& t = args[i].terms()[index[i]];
      chosen[i] = t.first;
      c = c * t.second;
    }
    acc[Word::of(Factor::apply(op, chosen))] += c;
    std::size_t k = 0;
    while (k < args.size() && ++index[k] == args[k].size()) index[k++] = 0;
    if (k == args.size()) break;
  }
  return Polynomial::from_map(std::move(acc));
}

Polynomial apply_operator(const Signature& sig, OpId op, std::span<const Polynomial> args) {
  if (op >= sig.operator_count()) throw SignatureError("operator id outside the signature");
  const auto& decl = sig.op(op);
  if (args.size() != decl.arity) {
    throw ArityError("operator '" + decl.name + "' expects " + std::to_string(decl.arity) +
                     " argument(s), got " + std::to_string(args.size()));
  }
  return apply_operator_unchecked(op, args);
}

}  // namespace omega
