#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "omega/context.hpp"
#include "omega/polynomial.hpp"
#include "omega/signature.hpp"

namespace omega {

using Rng = std::mt19937_64;

struct SamplerConfig {
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::uint32_t max_depth = 3;
  std::uint32_t max_breadth = 3;
  std::uint32_t max_deg = 4;
};

// Independent stream for instance `index` of family `stream`, so results do
// not depend on evaluation order or thread count.
Rng instance_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

// Random words and contexts over a signature, restricted to the given
// operators (all of them by default).
class WordSampler {
 public:
  WordSampler(const Signature& sig, SamplerConfig config);
  WordSampler(const Signature& sig, SamplerConfig config, std::vector<OpId> operators);

  const SamplerConfig& config() const { return config_; }

  // deg uniform in [1, max_deg], dep <= max_depth.
  Word word(Rng& rng) const;
  Word word(Rng& rng, std::uint32_t deg, std::uint32_t depth) const;
  // A context whose path has at most `depth` steps; residuals stay small.
  Context context(Rng& rng, std::uint32_t depth) const;
  // Up to `terms` words with small random rational/lambda coefficients.
  Polynomial polynomial(Rng& rng, std::size_t terms) const;
  Coefficient coefficient(Rng& rng) const;
  Factor variable(Rng& rng) const;

 private:
  Factor factor(Rng& rng, std::uint32_t deg, std::uint32_t depth) const;
  Word maybe_unit(Rng& rng, std::uint32_t depth) const;

  const Signature* sig_;
  SamplerConfig config_;
  std::vector<OpId> ops_;
};

// Random basis words of the built-in theories.
//   rota-baxter words: at most one P-factor per node.
//   differential words: products of D^i(x).
Word random_rb_word(Rng& rng, const Signature& sig, OpId p, std::uint32_t max_deg, std::uint32_t max_depth);
Word random_diff_word(Rng& rng, const Signature& sig, OpId d, std::uint32_t max_deg, std::uint32_t max_depth);

}  // namespace omega
