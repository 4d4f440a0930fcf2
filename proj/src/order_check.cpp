#include "omega/order_check.hpp"

#include "omega/parallel.hpp"
#include "omega/syntax.hpp"

namespace omega {

PropertyReport check_monomial_property(const MonomialOrder& order, const Signature& sig, const SamplerConfig& cfg,
                                       ExecPolicy policy) {
  PropertyReport report;
  report.name = "order-test/" + std::string(to_string(order.id()));
  report.trials = cfg.trials;
  struct Outcome {
    std::vector<std::string> violations;
    bool tie = false;
  };
  std::vector<Outcome> outcomes(cfg.trials);
  for_each_index(cfg.trials, policy, [&](std::size_t i) {
    Rng rng = instance_rng(cfg.seed, 0x0bde, i);
    WordSampler sampler(sig, cfg);
    Outcome& out = outcomes[i];
    auto show = [&](const Word& w) { return format_word(w, sig); };

    Word u = sampler.word(rng);
    Word v = (i % 2 == 0) ? sampler.word(rng, u.deg(), std::uniform_int_distribution<std::uint32_t>(
                                                           0, cfg.max_depth)(rng))
                          : sampler.word(rng);
    Word w = sampler.word(rng);

    auto uv = order.compare(u, v);
    auto vu = order.compare(v, u);
    if ((uv == 0) != (u == v) || (uv < 0) != (vu > 0))
      out.violations.push_back("antisymmetry/totality: " + show(u) + " vs " + show(v));
    if (uv == 0) {
      out.tie = true;
      return;
    }
    if (uv < 0) std::swap(u, v);

    Context c = sampler.context(rng, std::uniform_int_distribution<std::uint32_t>(0, 2)(rng));
    Word cu = c.plug(u);
    Word cv = c.plug(v);
    if (!order.greater(cu, cv))
      out.violations.push_back("monomial law: " + show(u) + " > " + show(v) + " but " + show(cu) +
                               " <= " + show(cv) + " in " + format_context(c, sig));

    // Transitivity on the triple (u, v, w).
    auto uw = order.compare(u, w);
    auto vw = order.compare(v, w);
    if (vw > 0 && uw <= 0) out.violations.push_back("transitivity: " + show(u) + " > " + show(v) + " > " + show(w));
    if (uw < 0 && vw >= 0) out.violations.push_back("transitivity: " + show(w) + " > " + show(u) + " > " + show(v));
  });
  for (const auto& o : outcomes) {
    if (o.tie) report.counters["equal_pairs"] += 1;
    for (const auto& v : o.violations) report.violation(v);
  }
  report.settings["seed"] = std::to_string(cfg.seed);
  report.settings["order"] = std::string(to_string(order.id()));
  return report;
}

}  // namespace omega
