#include "omega/sampler.hpp"

#include <algorithm>

#include "omega/error.hpp"

namespace omega {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint32_t uniform(Rng& rng, std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Random composition of n into k positive parts.
std::vector<std::uint32_t> split(Rng& rng, std::uint32_t n, std::uint32_t k) {
  std::vector<std::uint32_t> parts(k, 1);
  for (std::uint32_t i = k; i < n; ++i) parts[uniform(rng, 0, k - 1)] += 1;
  return parts;
}

}  // namespace

Rng instance_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return Rng(splitmix(splitmix(splitmix(seed) ^ stream) ^ index));
}

WordSampler::WordSampler(const Signature& sig, SamplerConfig config) : sig_(&sig), config_(config) {
  for (OpId i = 0; i < sig.operator_count(); ++i) ops_.push_back(i);
  if (sig.variable_count() == 0) throw SignatureError("sampler needs at least one variable");
}

WordSampler::WordSampler(const Signature& sig, SamplerConfig config, std::vector<OpId> operators)
    : sig_(&sig), config_(config), ops_(std::move(operators)) {
  if (sig.variable_count() == 0) throw SignatureError("sampler needs at least one variable");
}

Factor WordSampler::variable(Rng& rng) const {
  return Factor::variable(uniform(rng, 0, static_cast<std::uint32_t>(sig_->variable_count() - 1)));
}

Factor WordSampler::factor(Rng& rng, std::uint32_t deg, std::uint32_t depth) const {
  std::vector<OpId> usable;
  if (depth > 0)
    for (OpId op : ops_)
      if (sig_->op(op).arity <= deg) usable.push_back(op);
  if (usable.empty() || (deg == 1 && coin(rng, 0.45))) {
    if (deg != 1) throw Error("sampler cannot place degree " + std::to_string(deg) + " in one factor");
    return variable(rng);
  }
  OpId op = usable[uniform(rng, 0, static_cast<std::uint32_t>(usable.size() - 1))];
  const std::uint32_t arity = sig_->op(op).arity;
  std::vector<Word> args;
  for (std::uint32_t part : split(rng, deg, arity)) args.push_back(word(rng, part, depth - 1));
  return Factor::apply(op, std::move(args));
}

Word WordSampler::word(Rng& rng, std::uint32_t deg, std::uint32_t depth) const {
  if (deg == 0) throw Error("words have positive degree");
  std::vector<Factor> factors;
  if (depth == 0 || ops_.empty()) {
    for (std::uint32_t i = 0; i < deg; ++i) factors.push_back(variable(rng));
    return Word::from_factors(std::move(factors));
  }
  const std::uint32_t k = uniform(rng, 1, std::min(deg, std::max<std::uint32_t>(1, config_.max_breadth)));
  for (std::uint32_t part : split(rng, deg, k)) {
    // A part too large for the available arities falls back to variables.
    bool placeable = part == 1;
    for (OpId op : ops_) placeable = placeable || sig_->op(op).arity <= part;
    if (!placeable) {
      for (std::uint32_t i = 0; i < part; ++i) factors.push_back(variable(rng));
      continue;
    }
    factors.push_back(factor(rng, part, depth));
  }
  return Word::from_factors(std::move(factors));
}

Word WordSampler::word(Rng& rng) const {
  return word(rng, uniform(rng, 1, std::max<std::uint32_t>(1, config_.max_deg)), uniform(rng, 0, config_.max_depth));
}

Word WordSampler::maybe_unit(Rng& rng, std::uint32_t depth) const {
  if (coin(rng, 0.5)) return Word::unit();
  return word(rng, uniform(rng, 1, 2), std::min<std::uint32_t>(depth, 1));
}

Context WordSampler::context(Rng& rng, std::uint32_t depth) const {
  std::vector<ContextStep> path;
  std::uint32_t levels = depth == 0 || ops_.empty() ? 0 : uniform(rng, 0, depth);
  for (std::uint32_t l = 0; l < levels; ++l) {
    OpId op = ops_[uniform(rng, 0, static_cast<std::uint32_t>(ops_.size() - 1))];
    const std::uint32_t arity = sig_->op(op).arity;
    const std::uint32_t hole = uniform(rng, 0, arity - 1);
    std::vector<Word> args;
    for (std::uint32_t i = 0; i < arity; ++i)
      args.push_back(i == hole ? Word::of(variable(rng)) : word(rng, 1, 1));
    path.push_back(ContextStep{Factor::apply(op, std::move(args)), hole, maybe_unit(rng, 1)});
  }
  return Context(std::move(path), maybe_unit(rng, 1));
}

Coefficient WordSampler::coefficient(Rng& rng) const {
  long num = static_cast<long>(uniform(rng, 1, 5)) * (coin(rng, 0.5) ? 1 : -1);
  long den = static_cast<long>(uniform(rng, 1, 3));
  return Coefficient(Rational(num, den), uniform(rng, 0, 2) == 2 ? 1 : 0);
}

Polynomial WordSampler::polynomial(Rng& rng, std::size_t terms) const {
  std::vector<Polynomial::Term> out;
  for (std::size_t i = 0; i < terms; ++i) out.emplace_back(word(rng), coefficient(rng));
  return Polynomial::from_terms(std::move(out));
}

Word random_rb_word(Rng& rng, const Signature& sig, OpId p, std::uint32_t max_deg, std::uint32_t max_depth) {
  const auto nvars = static_cast<std::uint32_t>(sig.variable_count());
  const std::uint32_t deg = uniform(rng, 1, max_deg);
  // The P-factor takes at least one degree; the rest are variables.
  const bool with_p = max_depth > 0 && coin(rng, 0.7);
  const std::uint32_t inner = with_p ? uniform(rng, 1, deg) : 0;
  std::vector<Factor> factors;
  for (std::uint32_t i = inner; i < deg; ++i) factors.push_back(Factor::variable(uniform(rng, 0, nvars - 1)));
  if (with_p) factors.push_back(Factor::apply(p, {random_rb_word(rng, sig, p, inner, max_depth - 1)}));
  return Word::from_factors(std::move(factors));
}

Word random_diff_word(Rng& rng, const Signature& sig, OpId d, std::uint32_t max_deg, std::uint32_t max_depth) {
  const auto nvars = static_cast<std::uint32_t>(sig.variable_count());
  const std::uint32_t deg = uniform(rng, 1, max_deg);
  std::vector<Factor> factors;
  for (std::uint32_t i = 0; i < deg; ++i) {
    Factor f = Factor::variable(uniform(rng, 0, nvars - 1));
    for (std::uint32_t k = uniform(rng, 0, max_depth); k > 0; --k) f = Factor::apply(d, {Word::of(f)});
    factors.push_back(f);
  }
  return Word::from_factors(std::move(factors));
}

}  // namespace omega
