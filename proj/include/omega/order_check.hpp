#pragma once

#include "omega/order.hpp"
#include "omega/report.hpp"
#include "omega/sampler.hpp"

namespace omega {

// Randomized check of the monomial-order law: for sampled u > v and a random
// context c, c|u > c|v. Also samples triples for antisymmetry/totality and
// transitivity. Half of the pairs share their degree, where the measure
// prefix ties and the finer comparisons decide.
PropertyReport check_monomial_property(const MonomialOrder& order, const Signature& sig, const SamplerConfig& cfg,
                                       ExecPolicy policy = ExecPolicy::parallel);

}  // namespace omega
