#include "omega/gs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "omega/error.hpp"
#include "omega/parallel.hpp"
#include "omega/syntax.hpp"

namespace omega {

std::string_view to_string(CompositionKind kind) {
  return kind == CompositionKind::intersection ? "intersection" : "inclusion";
}

Composition intersection_composition(const Rule& f, const Rule& g, const Overlap& overlap) {
  Composition c;
  c.kind = CompositionKind::intersection;
  c.w = overlap.w;
  c.value = overlap.a * f.polynomial() - overlap.b * g.polynomial();
  c.f = f;
  c.g = g;
  c.overlap = overlap;
  return c;
}

Composition inclusion_composition(const Rule& f, const Rule& g, const Context& context) {
  Composition c;
  c.kind = CompositionKind::inclusion;
  c.w = f.lhs;
  c.value = f.polynomial() - context.plug(g.polynomial());
  c.f = f;
  c.g = g;
  c.occurrence = Occurrence{context, g.lhs};
  return c;
}

bool composition_is_sound(const Composition& comp, const MonomialOrder& order) {
  Polynomial recomputed;
  if (comp.kind == CompositionKind::intersection) {
    const auto& o = *comp.overlap;
    if (!(o.a * comp.f.lhs == comp.w) || !(o.b * comp.g.lhs == comp.w)) return false;
    if (comp.w.bre() >= comp.f.lhs.bre() + comp.g.lhs.bre()) return false;
    recomputed = o.a * comp.f.polynomial() - o.b * comp.g.polynomial();
  } else {
    const auto& occ = *comp.occurrence;
    if (!(occ.context.plug(comp.g.lhs) == comp.w) || !(comp.w == comp.f.lhs)) return false;
    recomputed = comp.f.polynomial() - occ.context.plug(comp.g.polynomial());
  }
  if (!(recomputed == comp.value)) return false;
  if (comp.value.is_zero()) return true;
  return order.compare(leading_term(comp.value, order).first, comp.w) < 0;
}

std::vector<Composition> compositions(const Rule& f, const Rule& g, const MonomialOrder& order, OverlapMode mode,
                                      bool same_rule) {
  std::vector<Composition> out;
  for (const auto& o : top_overlaps(f.lhs, g.lhs, mode)) out.push_back(intersection_composition(f, g, o));
  for (const auto& occ : occurrences(f.lhs, g.lhs)) {
    if (same_rule && occ.context.is_bare()) continue;
    out.push_back(inclusion_composition(f, g, occ.context));
  }
  for (const auto& c : out)
    if (!composition_is_sound(c, order)) throw InvariantError("unsound composition");
  return out;
}

std::vector<Composition> compositions(const Polynomial& f, const Polynomial& g, const MonomialOrder& order,
                                      OverlapMode mode) {
  for (const auto* p : {&f, &g}) {
    if (p->is_zero() || !leading_term(*p, order).second.is_one())
      throw Error("compositions need monic polynomials");
  }
  Rule rf = make_rule(f, order, 0);
  Rule rg = make_rule(g, order, 1);
  return compositions(rf, rg, order, mode, f == g);
}

TrivialityResult is_trivial(const Composition& comp, const RuleSet& rules, const MonomialOrder& order,
                            const ReduceOptions& options) {
  TrivialityResult r;
  if (comp.value.is_zero()) {
    r.trivial = true;
    return r;
  }
  if (order.compare(leading_term(comp.value, order).first, comp.w) >= 0)
    throw InvariantError("composition value does not lie below its ambiguity");
  // Reduction only descends, so every step stays below w.
  auto [nf, trace] = normal_form(comp.value, rules, order, options);
  for (const auto& step : trace.steps)
    if (order.compare(step.leading, comp.w) >= 0) throw InvariantError("reduction step reached the ambiguity");
  r.trivial = nf.is_zero();
  r.remainder = std::move(nf);
  r.trace = std::move(trace);
  return r;
}

GsReport check_finite_gs(const std::vector<Polynomial>& S, const MonomialOrder& order, OverlapMode mode,
                         const std::optional<SchemaSet>& extra, const ReduceOptions& options) {
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < S.size(); ++i) rules.push_back(make_rule(S[i], order, i));
  RuleSet rule_set = extra ? RuleSet(rules, *extra) : RuleSet(rules);
  GsReport report;
  report.order = std::string(to_string(order.id()));
  report.mode = mode == OverlapMode::lcm ? "lcm" : "all";
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) {
      for (auto& comp : compositions(rules[i], rules[j], order, mode, i == j)) {
        CompositionOutcome outcome{i, j, comp, is_trivial(comp, rule_set, order, options)};
        (outcome.result.trivial ? report.trivial : report.nontrivial) += 1;
        report.outcomes.push_back(std::move(outcome));
      }
    }
  }
  return report;
}

// ---- theory families --------------------------------------------------------------

std::size_t TheoryReport::instances() const {
  std::size_t n = 0;
  for (const auto& f : families) n += f.instances;
  return n;
}

std::size_t TheoryReport::trivial() const {
  std::size_t n = 0;
  for (const auto& f : families) n += f.trivial;
  return n;
}

std::vector<std::string> theory_families(TheoryId id) {
  switch (id) {
    case TheoryId::rb: return {"i", "ii"};
    case TheoryId::diff: return {"2^2"};
    case TheoryId::drb: return {"3^3", "3^2", "3^1", "2^3", "2^2", "2^1", "1^3", "1^2", "1^1a", "1^1b"};
  }
  return {};
}

namespace {

std::string family_ambiguity(TheoryId id, const std::string& family) {
  static const std::map<std::string, std::string> rb = {{"i", "P(u)P(v)P(w)"}, {"ii", "P(z|P(v)P(w))P(u)"}};
  static const std::map<std::string, std::string> drb = {
      {"3^3", "D(P(u|D(P(v))))"}, {"3^2", "D(P(u|D(vw)))"},    {"3^1", "D(P(u|P(v)P(w)))"},
      {"2^3", "D(u|D(P(v)) w)"},  {"2^2", "D(u|D(vw) z)"},     {"2^1", "D(u|P(v)P(w) z)"},
      {"1^3", "P(u|D(P(v)))P(w)"}, {"1^2", "P(u|D(vw))P(z)"},  {"1^1a", "P(z)P(v)P(w)"},
      {"1^1b", "P(v)P(u|P(w)P(z))"}};
  if (id == TheoryId::rb) return rb.at(family);
  if (id == TheoryId::diff) return "D(u|D(xy) v)";
  return drb.at(family);
}

Word op_word(OpId op, const Word& arg) { return Word::of(Factor::apply(op, {arg})); }

// A one-step context around argument 0 of `factor` (a unary application),
// with `residual` beside the factor and `hole_residual` beside the hole.
Context around(const Factor& factor, Word residual, Word hole_residual) {
  return Context({ContextStep{factor, 0, std::move(residual)}}, std::move(hole_residual));
}

constexpr std::size_t kFamilyWords = 4;

// Replaces variables base, base+1, ... by sigma[0], sigma[1], ...
Word substitute(const Word& w, VarId base, const std::vector<Word>& sigma) {
  std::vector<FactorPower> kept;
  Word extra;
  for (const auto& fp : w.factors()) {
    const Factor& f = fp.factor;
    if (f.is_variable()) {
      if (f.variable_id() >= base) {
        for (std::uint32_t k = 0; k < fp.exponent; ++k) extra = extra * sigma[f.variable_id() - base];
      } else {
        kept.push_back(fp);
      }
      continue;
    }
    std::vector<Word> args;
    for (const auto& a : f.args()) args.push_back(substitute(a, base, sigma));
    kept.push_back({Factor::apply(f.op(), std::move(args)), fp.exponent});
  }
  return Word::from_powers(std::move(kept), true) * extra;
}

Context substitute(const Context& c, VarId base, const std::vector<Word>& sigma) {
  std::vector<ContextStep> path;
  for (const auto& step : c.path()) {
    std::vector<Word> args;
    for (const auto& a : step.factor.args()) args.push_back(substitute(a, base, sigma));
    path.push_back({Factor::apply(step.factor.op(), std::move(args)), step.arg_index,
                    substitute(step.residual, base, sigma)});
  }
  return Context(std::move(path), substitute(c.hole_residual(), base, sigma));
}

}  // namespace

FamilyInstance build_family(const SchemaSet& s, TheoryId theory, const std::string& family,
                            const FamilyParams& params) {
  const auto& wd = params.words;
  if (wd.size() < kFamilyWords || params.contexts.empty()) throw Error("family parameters incomplete");
  const Context& ctx0 = params.contexts[0];
  const OpId P = s.p_op();
  const OpId D = s.d_op();

  auto intersection = [&](Rule f, Rule g, Word a, Word b, Word c) {
    Overlap o{a, b, c, a * f.lhs};
    return FamilyInstance{f, g, intersection_composition(f, g, o), params};
  };
  auto inclusion = [&](Rule f, Rule g, const Context& ctx) {
    if (!(ctx.plug(g.lhs) == f.lhs)) throw InvariantError("family context does not reproduce the ambiguity");
    return FamilyInstance{f, g, inclusion_composition(f, g, ctx), params};
  };

  if (family == "i" || family == "1^1a") {
    return intersection(s.rota_baxter(wd[0], wd[1]), s.rota_baxter(wd[1], wd[2]), op_word(P, wd[2]),
                        op_word(P, wd[0]), op_word(P, wd[1]));
  }
  if (family == "ii") {
    // P(z|P(v)P(w)) P(u)
    Rule g = s.rota_baxter(wd[0], wd[1]);
    Word inner = ctx0.plug(g.lhs);
    Rule f = s.rota_baxter(inner, wd[2]);
    return inclusion(f, g, around(Factor::apply(P, {inner}), op_word(P, wd[2]), Word()).compose(ctx0));
  }
  if (family == "1^1b") {
    // P(v) P(u|P(w)P(z))
    Rule g = s.rota_baxter(wd[1], wd[2]);
    Word inner = ctx0.plug(g.lhs);
    Rule f = s.rota_baxter(wd[0], inner);
    return inclusion(f, g, around(Factor::apply(P, {inner}), op_word(P, wd[0]), Word()).compose(ctx0));
  }

  // The inner relation g by family suffix.
  auto inner_rule = [&](char kind) {
    if (kind == '3') return s.inverse(wd[0]);
    return kind == '2' ? s.differential(wd[0], wd[1]) : s.rota_baxter(wd[0], wd[1]);
  };
  const bool known = (theory == TheoryId::diff && family == "2^2") ||
                     (theory == TheoryId::drb && family.size() == 3 && family[1] == '^' &&
                      std::string("123").find(family[0]) != std::string::npos &&
                      std::string("123").find(family[2]) != std::string::npos && family != "1^1");
  if (!known) throw Error("unknown ambiguity family '" + family + "'");

  Rule g = inner_rule(family[2]);
  Word host = ctx0.plug(g.lhs);
  const Word& z = wd[3];
  if (family[0] == '2') {
    // D(u|g * z)
    Rule f = s.differential(host, z);
    return inclusion(f, g, around(Factor::apply(D, {host * z}), Word(), z).compose(ctx0));
  }
  if (family[0] == '3') {
    // D(P(u|g))
    Rule f = s.inverse(host);
    Factor p_host = Factor::apply(P, {host});
    Context ctx({ContextStep{Factor::apply(D, {Word::of(p_host)}), 0, Word()}, ContextStep{p_host, 0, Word()}},
                Word());
    return inclusion(f, g, ctx.compose(ctx0));
  }
  // P(u|g) P(z)
  Rule f = s.rota_baxter(host, z);
  return inclusion(f, g, around(Factor::apply(P, {host}), op_word(P, z), Word()).compose(ctx0));
}

FamilyInstance sample_family(const TheoryPreset& t, const std::string& family, const SamplerConfig& cfg, Rng& rng) {
  WordSampler sampler(t.signature, cfg);
  FamilyParams params;
  for (std::size_t i = 0; i < kFamilyWords; ++i) params.words.push_back(sampler.word(rng));
  params.contexts.push_back(sampler.context(rng, std::min<std::uint32_t>(cfg.max_depth, 2)));
  return build_family(t.schemas, t.id, family, params);
}

bool check_certificate(const Composition& comp, const ReductionTrace& certificate, const MonomialOrder& order,
                       std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  std::unordered_map<Word, Coefficient, WordHash> sum;
  for (const auto& step : certificate.steps) {
    if (step.rule.origin.kind != RuleOrigin::Kind::schema) return fail("certificate step is not a relation instance");
    Polynomial placed = step.context.plug(step.rule.polynomial());
    for (const auto& [w, c] : placed.terms()) {
      if (order.compare(w, comp.w) >= 0) return fail("certificate step reaches the ambiguity");
      sum[w] += step.coefficient * c;
    }
  }
  if (!(Polynomial::from_map(std::move(sum)) == comp.value)) return fail("certificate does not sum to the composition");
  return true;
}

std::optional<ReductionTrace> certify_family(const TheoryPreset& t, const std::string& family,
                                             const FamilyInstance& inst) {
  std::vector<std::string> vars = t.signature.variables();
  const auto base = static_cast<VarId>(vars.size());
  std::vector<Word> sigma;
  auto fresh = [&](const Word& w) {
    for (std::size_t k = 0;; ++k) {
      std::string name = "atom" + std::to_string(sigma.size()) + std::string(k, '_');
      if (std::find(vars.begin(), vars.end(), name) == vars.end()) {
        vars.push_back(std::move(name));
        break;
      }
    }
    sigma.push_back(w);
    return Word::variable(static_cast<VarId>(base + sigma.size() - 1));
  };
  auto atom_or_unit = [&](const Word& w) { return w.is_unit() ? w : fresh(w); };

  FamilyParams atomized;
  for (const auto& w : inst.params.words) atomized.words.push_back(fresh(w));
  for (const auto& c : inst.params.contexts) {
    std::vector<ContextStep> path;
    for (const auto& step : c.path()) {
      std::vector<Word> args;
      for (std::size_t i = 0; i < step.factor.args().size(); ++i)
        args.push_back(i == step.arg_index ? step.factor.args()[i] : fresh(step.factor.args()[i]));
      path.push_back({Factor::apply(step.factor.op(), std::move(args)), step.arg_index, atom_or_unit(step.residual)});
    }
    atomized.contexts.emplace_back(std::move(path), atom_or_unit(c.hole_residual()));
  }

  Signature sig(vars, t.signature.operators());
  MonomialOrder order(t.order.id(), sig);
  SchemaSet schemas(t.id, sig, t.schemas.weight());
  FamilyInstance small = build_family(schemas, t.id, family, atomized);
  ReduceOptions opts;
  opts.step_cap = 100'000;
  ReductionTrace trace;
  try {
    auto [nf, tr] = normal_form(small.composition.value, RuleSet(schemas), order, opts);
    if (!nf.is_zero()) return std::nullopt;
    trace = std::move(tr);
  } catch (const ResourceLimitError&) {
    return std::nullopt;
  }

  ReductionTrace concrete;
  for (const auto& step : trace.steps) {
    std::vector<Word> ps;
    for (const auto& p : step.rule.origin.params) ps.push_back(substitute(p, base, sigma));
    Rule rule;
    switch (step.rule.origin.relation) {
      case RelationId::rota_baxter: rule = t.schemas.rota_baxter(ps[0], ps[1]); break;
      case RelationId::differential: rule = t.schemas.differential(ps[0], ps[1]); break;
      case RelationId::inverse: rule = t.schemas.inverse(ps[0]); break;
    }
    Context ctx = substitute(step.context, base, sigma);
    Word leading = ctx.plug(rule.lhs);
    concrete.steps.push_back({std::move(ctx), std::move(rule), step.coefficient, std::move(leading)});
  }
  if (!check_certificate(inst.composition, concrete, t.order)) return std::nullopt;
  return concrete;
}

TheoryReport verify_theory(const TheoryPreset& t, const SamplerConfig& cfg, ExecPolicy policy) {
  TheoryReport report;
  report.theory = std::string(to_string(t.id));
  report.order = std::string(to_string(t.order.id()));
  report.mode = "instances";
  report.sampler = cfg;
  const RuleSet rules = t.rules();
  const auto families = theory_families(t.id);

  struct Outcome {
    bool trivial = false;
    bool certified = false;
    bool reduced = false;
    bool capped = false;
    std::string failure;
    std::optional<LeadingWordError> leading;
  };
  std::vector<Outcome> outcomes(families.size() * cfg.trials);

  for_each_index(outcomes.size(), policy, [&](std::size_t k) {
    const std::size_t fam = k / cfg.trials;
    const std::size_t index = k % cfg.trials;
    Rng rng = instance_rng(cfg.seed, fam + 1, index);
    FamilyInstance inst = sample_family(t, families[fam], cfg, rng);
    Outcome& out = outcomes[k];
    try {
      assert_leading_word(inst.f, t.order, t.signature);
      assert_leading_word(inst.g, t.order, t.signature);
    } catch (const LeadingWordError& e) {
      out.leading = e;
      return;
    }
    const Composition& comp = inst.composition;
    auto where = [&] { return "w = " + format_word(comp.w, t.signature); };
    if (!composition_is_sound(comp, t.order)) {
      out.failure = "unsound composition at " + where();
      return;
    }
    out.certified = certify_family(t, families[fam], inst).has_value();
    ReduceOptions opts;
    opts.record_trace = false;
    opts.step_cap = out.certified ? kCrossCheckSteps : opts.step_cap;
    try {
      auto res = is_trivial(comp, rules, t.order, opts);
      out.reduced = res.trivial;
      if (!res.trivial) {
        out.failure = where() + ", remainder = " + format_polynomial(res.remainder, t.signature, &t.order);
        return;
      }
    } catch (const ResourceLimitError&) {
      out.capped = true;
      if (!out.certified) {
        out.failure = where() + ": no certificate and full reduction exceeded its step cap";
        return;
      }
    }
    out.trivial = true;
  });

  for (std::size_t fam = 0; fam < families.size(); ++fam) {
    FamilyTally tally;
    tally.name = families[fam];
    tally.ambiguity = family_ambiguity(t.id, families[fam]);
    for (std::size_t i = 0; i < cfg.trials; ++i) {
      const Outcome& o = outcomes[fam * cfg.trials + i];
      ++tally.instances;
      if (o.leading && !report.leading_word_failure) {
        report.leading_word_failure = o.leading->what();
        report.leading_word_expected = o.leading->expected();
        report.leading_word_actual = o.leading->actual();
      }
      tally.trivial += o.trivial;
      tally.certified += o.certified;
      tally.reduced += o.reduced;
      tally.capped += o.capped;
      if (!o.failure.empty() && tally.failures.size() < PropertyReport::kMaxWitnesses)
        tally.failures.push_back(o.failure);
    }
    report.families.push_back(std::move(tally));
  }
  return report;
}

TheoryReport verify_theory(TheoryId id, std::vector<std::string> variables, std::optional<OrderId> order,
                           const SamplerConfig& cfg, ExecPolicy policy) {
  try {
    return verify_theory(preset(id, variables, order), cfg, policy);
  } catch (const LeadingWordError& e) {
    TheoryReport report;
    report.theory = std::string(to_string(id));
    report.order = std::string(to_string(order.value_or(default_order(id))));
    report.mode = "instances";
    report.sampler = cfg;
    report.leading_word_failure = e.what();
    report.leading_word_expected = e.expected();
    report.leading_word_actual = e.actual();
    return report;
  }
}

// ---- probes -----------------------------------------------------------------

namespace {

Rule random_relation(const TheoryPreset& t, WordSampler& sampler, Rng& rng) {
  std::vector<RelationId> rels;
  if (t.schemas.has_rota_baxter()) rels.push_back(RelationId::rota_baxter);
  if (t.schemas.has_differential()) rels.push_back(RelationId::differential);
  if (t.schemas.has_inverse()) rels.push_back(RelationId::inverse);
  switch (rels[std::uniform_int_distribution<std::size_t>(0, rels.size() - 1)(rng)]) {
    case RelationId::rota_baxter: {
      Word u = sampler.word(rng), v = sampler.word(rng);
      return t.schemas.rota_baxter(u, v);
    }
    case RelationId::differential: {
      Word u = sampler.word(rng), v = sampler.word(rng);
      return t.schemas.differential(u, v);
    }
    case RelationId::inverse:
      return t.schemas.inverse(sampler.word(rng));
  }
  throw Error("unreachable");
}

}  // namespace

PropertyReport ideal_probe(const TheoryPreset& t, const SamplerConfig& cfg, std::size_t max_summands,
                           ExecPolicy policy) {
  PropertyReport report;
  report.name = "ideal-probe/" + std::string(to_string(t.id));
  report.trials = cfg.trials;
  const RuleSet rules = t.rules();
  struct Outcome {
    std::vector<std::string> violations;
    bool nonzero = false;
  };
  std::vector<Outcome> outcomes(cfg.trials);
  for_each_index(cfg.trials, policy, [&](std::size_t i) {
    Rng rng = instance_rng(cfg.seed, 0x1dea1, i);
    // Smaller parameters keep the member within the stated depth.
    SamplerConfig inner = cfg;
    inner.max_depth = cfg.max_depth > 0 ? cfg.max_depth - 1 : 0;
    inner.max_deg = std::min<std::uint32_t>(cfg.max_deg, 3);
    WordSampler sampler(t.signature, inner);
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_summands)(rng);
    Polynomial f;
    for (std::size_t j = 0; j < k; ++j) {
      Rule s = random_relation(t, sampler, rng);
      Context c = sampler.context(rng, 1);
      f += sampler.coefficient(rng) * c.plug(s.polynomial());
    }
    Outcome& out = outcomes[i];
    ReduceOptions opts;
    opts.record_trace = false;
    if (!f.is_zero()) {
      out.nonzero = true;
      const Word lead = leading_term(f, t.order).first;
      if (!rules.first_match(lead))
        out.violations.push_back("leading word " + format_word(lead, t.signature) + " contains no relation lhs");
    }
    auto [nf, trace] = normal_form(f, rules, t.order, opts);
    if (!nf.is_zero())
      out.violations.push_back("member " + format_polynomial(f, t.signature, &t.order) + " reduces to " +
                               format_polynomial(nf, t.signature, &t.order));
    const Polynomial x(Word::variable(0));
    auto [perturbed, trace2] = normal_form(f + x, rules, t.order, opts);
    if (!(perturbed == x))
      out.violations.push_back("member + x reduces to " + format_polynomial(perturbed, t.signature, &t.order));
  });
  for (const auto& o : outcomes) {
    if (o.nonzero) report.counters["nonzero"] += 1;
    for (const auto& v : o.violations) report.violation(v);
  }
  report.settings["seed"] = std::to_string(cfg.seed);
  report.settings["max_depth"] = std::to_string(cfg.max_depth);
  report.settings["max_summands"] = std::to_string(max_summands);
  return report;
}

PropertyReport confluence_probe(const TheoryPreset& t, const SamplerConfig& cfg, std::size_t strategies,
                                ExecPolicy policy) {
  PropertyReport report;
  report.name = "confluence/" + std::string(to_string(t.id));
  report.trials = cfg.trials * strategies;
  const RuleSet rules = t.rules();
  std::vector<std::vector<std::string>> outcomes(cfg.trials);
  for_each_index(cfg.trials, policy, [&](std::size_t i) {
    Rng rng = instance_rng(cfg.seed, 0xc0f1, i);
    WordSampler sampler(t.signature, cfg);
    const Word w = sampler.word(rng);
    ReduceOptions opts;
    opts.record_trace = false;
    auto [reference, trace] = normal_form(Polynomial(w), rules, t.order, opts);
    for (std::size_t s = 0; s < strategies; ++s) {
      opts.strategy = Strategy::seeded_random;
      opts.seed = rng();
      auto [other, other_trace] = normal_form(Polynomial(w), rules, t.order, opts);
      if (!(other == reference))
        outcomes[i].push_back(format_word(w, t.signature) + ": " + format_polynomial(reference, t.signature) +
                              " vs " + format_polynomial(other, t.signature));
    }
  });
  for (const auto& o : outcomes)
    for (const auto& v : o) report.violation(v);
  report.settings["seed"] = std::to_string(cfg.seed);
  report.settings["strategies"] = std::to_string(strategies);
  return report;
}

// ---- basis enumeration ------------------------------------------------------------

std::vector<Word> enumerate_irr(const TheoryPreset& t, std::uint32_t max_deg, std::uint32_t max_depth,
                                std::size_t cap) {
  const bool with_p = t.id != TheoryId::diff;
  const bool with_d = t.id != TheoryId::rb;
  const auto nvars = static_cast<VarId>(t.signature.variable_count());

  // Letters D^i(x) with their depth i.
  std::vector<std::pair<Factor, std::uint32_t>> letters;
  for (VarId v = 0; v < nvars; ++v) {
    Factor f = Factor::variable(v);
    letters.emplace_back(f, 0);
    for (std::uint32_t i = 1; with_d && i <= max_depth; ++i) {
      f = Factor::apply(t.d(), {Word::of(f)});
      letters.emplace_back(f, i);
    }
  }

  std::size_t produced = 0;
  auto bump = [&] {
    if (++produced > cap) throw ResourceLimitError("basis enumeration exceeds cap of " + std::to_string(cap));
  };

  // Monomials over letters of depth <= d with exactly `deg` factors.
  std::function<void(std::size_t, std::uint32_t, std::uint32_t, std::vector<Factor>&, std::vector<Word>&)> monomials =
      [&](std::size_t from, std::uint32_t deg, std::uint32_t d, std::vector<Factor>& acc, std::vector<Word>& out) {
        if (deg == 0) {
          out.push_back(Word::from_factors(acc, true));
          return;
        }
        for (std::size_t i = from; i < letters.size(); ++i) {
          if (letters[i].second > d) continue;
          acc.push_back(letters[i].first);
          monomials(i, deg - 1, d, acc, out);
          acc.pop_back();
        }
      };

  // words(d, k): basis words with dep <= d and 1 <= deg <= k.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Word>> memo;
  std::function<const std::vector<Word>&(std::uint32_t, std::uint32_t)> words =
      [&](std::uint32_t d, std::uint32_t k) -> const std::vector<Word>& {
    auto key = std::pair{d, k};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Word> out;
    for (std::uint32_t j = 0; j <= k; ++j) {
      std::vector<Word> mons;
      std::vector<Factor> acc;
      monomials(0, j, d, acc, mons);
      for (const auto& m : mons) {
        if (j > 0) {
          bump();
          out.push_back(m);
        }
        if (with_p && d >= 1 && j < k) {
          for (const auto& inner : words(d - 1, k - j)) {
            bump();
            out.push_back(m * op_word(t.p(), inner));
          }
        }
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };

  if (max_deg == 0) return {};
  std::vector<Word> result = words(max_depth, max_deg);
  std::sort(result.begin(), result.end(), [&](const Word& a, const Word& b) { return t.order.less(a, b); });
  return result;
}

// ---- json ---------------------------------------------------------------------------

namespace {

nlohmann::json rule_json(const Rule& r, const Signature& sig, const MonomialOrder& order) {
  nlohmann::json j;
  if (r.origin.kind == RuleOrigin::Kind::finite) {
    j["id"] = "finite:" + std::to_string(r.origin.index);
  } else {
    j["id"] = std::string(to_string(r.origin.relation));
    std::vector<std::string> params;
    for (const auto& p : r.origin.params) params.push_back(format_word(p, sig));
    j["params"] = params;
  }
  j["lhs"] = format_word(r.lhs, sig);
  j["rhs"] = format_polynomial(r.rhs, sig, &order);
  return j;
}

nlohmann::json context_json(const Context& c, const Signature& sig) {
  nlohmann::json path = nlohmann::json::array();
  for (const auto& step : c.path()) {
    path.push_back({{"factor", sig.op(step.factor.op()).name},
                    {"arg", step.arg_index},
                    {"residual", format_word(step.residual, sig)}});
  }
  return {{"path", path}, {"hole_residual", format_word(c.hole_residual(), sig)}, {"text", format_context(c, sig)}};
}

}  // namespace

nlohmann::json to_json(const ReductionTrace& trace, const Signature& sig, const MonomialOrder& order) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : trace.steps) {
    steps.push_back({{"leading", format_word(s.leading, sig)},
                     {"coefficient", s.coefficient.to_string()},
                     {"rule", rule_json(s.rule, sig, order)},
                     {"context", context_json(s.context, sig)}});
  }
  return {{"steps", steps}, {"final", format_polynomial(trace.final, sig, &order)}};
}

nlohmann::json to_json(const GsReport& report, const Signature& sig, const MonomialOrder& order) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& o : report.outcomes) {
    nlohmann::json c{{"f", o.f_index},
                     {"g", o.g_index},
                     {"kind", std::string(to_string(o.composition.kind))},
                     {"w", format_word(o.composition.w, sig)},
                     {"value", format_polynomial(o.composition.value, sig, &order)},
                     {"trivial", o.result.trivial}};
    if (!o.result.trivial) c["remainder"] = format_polynomial(o.result.remainder, sig, &order);
    comps.push_back(std::move(c));
  }
  return {{"version", kVersion},
          {"order", report.order},
          {"mode", report.mode},
          {"compositions", comps},
          {"summary", {{"trivial", report.trivial}, {"nontrivial", report.nontrivial}, {"basis", report.is_basis()}}}};
}

nlohmann::json to_json(const TheoryReport& report) {
  nlohmann::json fams = nlohmann::json::array();
  for (const auto& f : report.families) {
    fams.push_back({{"family", f.name},
                    {"ambiguity", f.ambiguity},
                    {"instances", f.instances},
                    {"trivial", f.trivial},
                    {"certified", f.certified},
                    {"fully_reduced", f.reduced},
                    {"cross_check_capped", f.capped},
                    {"failures", f.failures}});
  }
  nlohmann::json j{{"version", kVersion},
                   {"theory", report.theory},
                   {"order", report.order},
                   {"seed", report.sampler.seed},
                   {"samples", report.sampler.trials},
                   {"bounds",
                    {{"max_depth", report.sampler.max_depth},
                     {"max_deg", report.sampler.max_deg},
                     {"max_breadth", report.sampler.max_breadth}}},
                   {"families", fams},
                   {"summary", {{"instances", report.instances()}, {"trivial", report.trivial()}, {"ok", report.ok()}}}};
  if (report.leading_word_failure) {
    j["leading_word_failure"] = {{"message", *report.leading_word_failure},
                                 {"expected", *report.leading_word_expected},
                                 {"actual", *report.leading_word_actual}};
  }
  return j;
}

}  // namespace omega
