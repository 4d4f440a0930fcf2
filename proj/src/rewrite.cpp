#include "omega/rewrite.hpp"

#include <map>
#include <set>
#include <unordered_map>

#include "omega/error.hpp"

namespace omega {

std::string_view to_string(TheoryId id) {
  switch (id) {
    case TheoryId::rb: return "rb";
    case TheoryId::diff: return "diff";
    case TheoryId::drb: return "drb";
  }
  return "?";
}

std::optional<TheoryId> parse_theory_id(std::string_view name) {
  for (auto id : {TheoryId::rb, TheoryId::diff, TheoryId::drb})
    if (to_string(id) == name) return id;
  return std::nullopt;
}

std::string_view to_string(RelationId id) {
  switch (id) {
    case RelationId::rota_baxter: return "rota-baxter";
    case RelationId::differential: return "differential";
    case RelationId::inverse: return "inverse";
  }
  return "?";
}

Rule make_rule(const Polynomial& f, const MonomialOrder& order, std::size_t index) {
  auto [lead, coeff] = leading_term(f, order);
  auto inv = coeff.inverse();
  if (!inv) throw NonInvertibleError("leading coefficient " + coeff.to_string() + " is not invertible");
  Polynomial monic = *inv * f;
  Rule rule;
  rule.lhs = lead;
  rule.rhs = Polynomial(lead) - monic;
  rule.origin.kind = RuleOrigin::Kind::finite;
  rule.origin.index = index;
  return rule;
}

// ---- schemas ----------------------------------------------------------------

SchemaSet::SchemaSet(TheoryId theory, const Signature& sig, Coefficient weight)
    : theory_(theory), weight_(std::move(weight)) {
  auto p = sig.find_operator("P");
  auto d = sig.find_operator("D");
  if (has_rota_baxter() && (!p || sig.op(*p).arity != 1))
    throw SignatureError(std::string(to_string(theory)) + " needs a unary operator P");
  if (has_differential() && (!d || sig.op(*d).arity != 1))
    throw SignatureError(std::string(to_string(theory)) + " needs a unary operator D");
  if (p) p_ = *p;
  if (d) d_ = *d;
}

namespace {

Word op_word(OpId op, const Word& arg) { return Word::of(Factor::apply(op, {arg})); }

}  // namespace

Rule SchemaSet::rota_baxter(const Word& u, const Word& v) const {
  const Word pu = op_word(p_, u);
  const Word pv = op_word(p_, v);
  Rule r;
  r.lhs = pu * pv;
  r.rhs = Polynomial(op_word(p_, pu * v)) + Polynomial(op_word(p_, u * pv)) +
          Polynomial(op_word(p_, u * v), weight_);
  r.origin = {RuleOrigin::Kind::schema, 0, RelationId::rota_baxter, {u, v}};
  return r;
}

Rule SchemaSet::differential(const Word& u, const Word& v) const {
  const Word du = op_word(d_, u);
  const Word dv = op_word(d_, v);
  Rule r;
  r.lhs = op_word(d_, u * v);
  r.rhs = Polynomial(du * v) + Polynomial(u * dv) + Polynomial(du * dv, weight_);
  r.origin = {RuleOrigin::Kind::schema, 0, RelationId::differential, {u, v}};
  return r;
}

Rule SchemaSet::inverse(const Word& u) const {
  Rule r;
  r.lhs = op_word(d_, op_word(p_, u));
  r.rhs = Polynomial(u);
  r.origin = {RuleOrigin::Kind::schema, 0, RelationId::inverse, {u}};
  return r;
}

namespace {

std::uint32_t p_count_at(const SchemaSet& s, const Word& node) {
  std::uint32_t n = 0;
  for (const auto& fp : node.factors())
    if (!fp.factor.is_variable() && fp.factor.op() == s.p_op()) n += fp.exponent;
  return n;
}

bool is_inverse_redex(const SchemaSet& s, const Factor& f) {
  if (f.is_variable() || f.op() != s.d_op()) return false;
  const Word& arg = f.args()[0];
  if (arg.bre() != 1) return false;
  const Factor& inner = arg.factors()[0].factor;
  return !inner.is_variable() && inner.op() == s.p_op();
}

bool is_differential_redex(const SchemaSet& s, const Factor& f) {
  return !f.is_variable() && f.op() == s.d_op() && f.args()[0].bre() >= 2;
}

Match make_match(const std::vector<ContextStep>& path, const Word& node, Rule rule) {
  Word rest = *node.divide(rule.lhs);
  Word matched = rule.lhs;
  return Match{Occurrence{Context(path, std::move(rest)), std::move(matched)}, std::move(rule)};
}

// Schema matches at one node, deterministic instantiation.
void schema_matches_at(const SchemaSet& s, const std::vector<ContextStep>& path, const Word& node,
                       std::vector<Match>& out, bool first_only) {
  if (s.has_rota_baxter() && p_count_at(s, node) >= 2) {
    std::vector<Word> picked;
    for (const auto& fp : node.factors()) {
      if (fp.factor.is_variable() || fp.factor.op() != s.p_op()) continue;
      for (std::uint32_t k = 0; k < fp.exponent && picked.size() < 2; ++k) picked.push_back(fp.factor.args()[0]);
      if (picked.size() == 2) break;
    }
    out.push_back(make_match(path, node, s.rota_baxter(picked[0], picked[1])));
    if (first_only) return;
  }
  if (s.has_differential()) {
    for (const auto& fp : node.factors()) {
      if (!is_differential_redex(s, fp.factor)) continue;
      const Word& arg = fp.factor.args()[0];
      const Word head = Word::of(arg.factors()[0].factor);
      out.push_back(make_match(path, node, s.differential(head, *arg.divide(head))));
      if (first_only) return;
    }
  }
  if (s.has_inverse()) {
    for (const auto& fp : node.factors()) {
      if (!is_inverse_redex(s, fp.factor)) continue;
      out.push_back(make_match(path, node, s.inverse(fp.factor.args()[0].factors()[0].factor.args()[0])));
      if (first_only) return;
    }
  }
}

}  // namespace

std::vector<Match> match_schemas(const SchemaSet& schemas, const Word& w) {
  std::vector<Match> out;
  for_each_node(w, [&](const std::vector<ContextStep>& path, const Word& node) {
    schema_matches_at(schemas, path, node, out, false);
    return true;
  });
  return out;
}

std::optional<Match> RuleSet::match_at(const std::vector<ContextStep>& path, const Word& node) const {
  for (const auto& rule : finite_) {
    if (node.bre() < rule.lhs.bre()) continue;
    if (auto rest = node.divide(rule.lhs)) return Match{Occurrence{Context(path, *rest), rule.lhs}, rule};
  }
  if (schemas_) {
    std::vector<Match> here;
    schema_matches_at(*schemas_, path, node, here, true);
    if (!here.empty()) return std::move(here.front());
  }
  return std::nullopt;
}

std::optional<Match> RuleSet::first_match(const Word& w) const {
  std::optional<Match> found;
  for_each_node(w, [&](const std::vector<ContextStep>& path, const Word& node) {
    found = match_at(path, node);
    return !found;
  });
  return found;
}

std::optional<Match> RuleSet::innermost_match(const Word& w) const {
  std::optional<Match> found;
  for_each_node(w, [&](const std::vector<ContextStep>& path, const Word& node) {
    if (auto m = match_at(path, node)) found = std::move(m);
    return true;
  });
  return found;
}

std::optional<Match> RuleSet::random_match(const Word& w, std::mt19937_64& rng) const {
  enum class Kind { finite, rota_baxter, differential, inverse };
  struct Site {
    std::vector<ContextStep> path;
    Word node;
    Kind kind;
    std::size_t rule = 0;
    Factor factor = Factor::variable(0);
  };
  std::vector<Site> sites;
  for_each_node(w, [&](const std::vector<ContextStep>& path, const Word& node) {
    for (std::size_t i = 0; i < finite_.size(); ++i)
      if (node.contains(finite_[i].lhs)) sites.push_back({path, node, Kind::finite, i});
    if (schemas_) {
      const auto& s = *schemas_;
      if (s.has_rota_baxter() && p_count_at(s, node) >= 2) sites.push_back({path, node, Kind::rota_baxter});
      for (const auto& fp : node.factors()) {
        if (s.has_differential() && is_differential_redex(s, fp.factor))
          sites.push_back({path, node, Kind::differential, 0, fp.factor});
        if (s.has_inverse() && is_inverse_redex(s, fp.factor))
          sites.push_back({path, node, Kind::inverse, 0, fp.factor});
      }
    }
    return true;
  });
  if (sites.empty()) return std::nullopt;
  const Site& site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
  switch (site.kind) {
    case Kind::finite: {
      const Rule& rule = finite_[site.rule];
      return Match{Occurrence{Context(site.path, *site.node.divide(rule.lhs)), rule.lhs}, rule};
    }
    case Kind::rota_baxter: {
      std::vector<Word> copies;
      for (const auto& fp : site.node.factors())
        if (!fp.factor.is_variable() && fp.factor.op() == schemas_->p_op())
          for (std::uint32_t k = 0; k < fp.exponent; ++k) copies.push_back(fp.factor.args()[0]);
      std::uniform_int_distribution<std::size_t> pick(0, copies.size() - 1);
      std::size_t i = pick(rng), j = pick(rng);
      while (j == i) j = pick(rng);
      return make_match(site.path, site.node, schemas_->rota_baxter(copies[i], copies[j]));
    }
    case Kind::differential: {
      const Word& arg = site.factor.args()[0];
      std::vector<Factor> copies;
      for (const auto& fp : arg.factors())
        for (std::uint32_t k = 0; k < fp.exponent; ++k) copies.push_back(fp.factor);
      std::vector<Factor> left, right;
      while (left.empty() || right.empty()) {
        left.clear();
        right.clear();
        for (const auto& f : copies) (rng() & 1 ? left : right).push_back(f);
      }
      return make_match(site.path, site.node,
                        schemas_->differential(Word::from_factors(left), Word::from_factors(right)));
    }
    case Kind::inverse:
      return make_match(site.path, site.node, schemas_->inverse(site.factor.args()[0].factors()[0].factor.args()[0]));
  }
  return std::nullopt;
}

// ---- reduction -------------------------------------------------------------

namespace {

void check_descent(const Word& from, const Word& to, const MonomialOrder& order) {
  if (order.compare(to, from) >= 0)
    throw InvariantError("reduction step does not descend under " + std::string(to_string(order.id())));
}

}  // namespace

std::optional<std::pair<Polynomial, ReductionStep>> reduce_once(const Polynomial& f, const RuleSet& rules,
                                                                const MonomialOrder& order) {
  if (f.is_zero()) return std::nullopt;
  auto [lead, alpha] = leading_term(f, order);
  auto match = rules.first_match(lead);
  if (!match) return std::nullopt;
  Polynomial lower = match->occurrence.context.plug(match->rule.rhs);
  for (const auto& [w, c] : lower.terms()) check_descent(lead, w, order);
  Polynomial next = f - Polynomial(lead, alpha) + alpha * lower;
  ReductionStep step{match->occurrence.context, match->rule, alpha, lead};
  return std::pair{std::move(next), std::move(step)};
}

namespace {

// Shallowest redex first, greatest word among equals. Every step still
// replaces one word by smaller ones, so the multiset of words descends and
// the loop terminates; terms meet and cancel at a level before any of them
// is expanded further down.
std::pair<Polynomial, ReductionTrace> staged_normal_form(const Polynomial& f, const RuleSet& rules,
                                                         const MonomialOrder& order, const ReduceOptions& options) {
  struct Entry {
    Coefficient coefficient;
    std::optional<Match> match;
    std::size_t depth = 0;
  };
  auto key_less = [&order](const std::pair<std::size_t, Word>& a, const std::pair<std::size_t, Word>& b) {
    if (a.first != b.first) return a.first < b.first;
    return order.compare(a.second, b.second) > 0;
  };
  std::unordered_map<Word, Entry, WordHash> terms;
  std::set<std::pair<std::size_t, Word>, decltype(key_less)> queue(key_less);

  auto add = [&](const Word& w, const Coefficient& c) {
    auto [it, inserted] = terms.try_emplace(w);
    Entry& e = it->second;
    if (inserted) {
      e.match = rules.first_match(w);
      if (e.match) e.depth = e.match->occurrence.context.path().size();
    }
    const bool was_zero = e.coefficient.is_zero();
    e.coefficient += c;
    if (e.coefficient.is_zero()) {
      if (e.match) queue.erase({e.depth, w});
      terms.erase(it);
    } else if (was_zero && e.match) {
      queue.emplace(e.depth, w);
    }
  };
  for (const auto& [w, c] : f.terms()) add(w, c);

  ReductionTrace trace;
  std::size_t steps = 0;
  while (!queue.empty()) {
    Word w = queue.begin()->second;
    queue.erase(queue.begin());
    auto node = terms.extract(w);
    Entry e = std::move(node.mapped());
    if (++steps > options.step_cap)
      throw ResourceLimitError("step cap of " + std::to_string(options.step_cap) + " exceeded");
    for (const auto& [rw, rc] : e.match->rule.rhs.terms()) {
      Word plugged = e.match->occurrence.context.plug(rw);
      check_descent(w, plugged, order);
      add(plugged, e.coefficient * rc);
    }
    if (options.record_trace)
      trace.steps.push_back(ReductionStep{e.match->occurrence.context, e.match->rule, e.coefficient, w});
  }
  std::vector<Polynomial::Term> done;
  done.reserve(terms.size());
  for (auto& [w, e] : terms) done.emplace_back(w, std::move(e.coefficient));
  Polynomial result = Polynomial::from_terms(std::move(done));
  trace.final = result;
  return {std::move(result), std::move(trace)};
}

}  // namespace

std::pair<Polynomial, ReductionTrace> normal_form(const Polynomial& f, const RuleSet& rules,
                                                  const MonomialOrder& order, const ReduceOptions& options) {
  if (options.strategy == Strategy::staged) return staged_normal_form(f, rules, order, options);
  std::map<Word, Coefficient, OrderGreater> pending(OrderGreater{&order});
  for (const auto& [w, c] : f.terms()) pending.emplace(w, c);
  std::mt19937_64 rng(options.seed);
  std::vector<Polynomial::Term> done;
  ReductionTrace trace;
  std::size_t steps = 0;
  std::optional<Word> previous;

  while (!pending.empty()) {
    auto top = pending.begin();
    Word w = top->first;
    Coefficient alpha = std::move(top->second);
    pending.erase(top);
    if (previous && order.compare(w, *previous) >= 0)
      throw InvariantError("leading words of successive remainders must strictly decrease");
    previous = w;

    std::optional<Match> match;
    switch (options.strategy) {
      case Strategy::deterministic: match = rules.first_match(w); break;
      case Strategy::innermost: match = rules.innermost_match(w); break;
      case Strategy::seeded_random: match = rules.random_match(w, rng); break;
      case Strategy::staged: break;
    }
    if (!match) {
      done.emplace_back(std::move(w), std::move(alpha));
      continue;
    }
    if (++steps > options.step_cap)
      throw ResourceLimitError("step cap of " + std::to_string(options.step_cap) + " exceeded");
    for (const auto& [rw, rc] : match->rule.rhs.terms()) {
      Word plugged = match->occurrence.context.plug(rw);
      check_descent(w, plugged, order);
      auto [it, inserted] = pending.try_emplace(plugged);
      it->second += alpha * rc;
      if (it->second.is_zero()) pending.erase(it);
    }
    if (options.record_trace)
      trace.steps.push_back(ReductionStep{match->occurrence.context, match->rule, alpha, w});
  }
  Polynomial result = Polynomial::from_terms(std::move(done));
  trace.final = result;
  return {std::move(result), std::move(trace)};
}

std::vector<ReductionRound> reduce_in_rounds(const Polynomial& f, const RuleSet& rules, const MonomialOrder& order,
                                             std::size_t max_rounds) {
  std::vector<ReductionRound> rounds;
  Polynomial current = f;
  while (true) {
    std::vector<const Polynomial::Term*> terms;
    for (const auto& t : current.terms()) terms.push_back(&t);
    std::stable_sort(terms.begin(), terms.end(),
                     [&](const Polynomial::Term* a, const Polynomial::Term* b) { return order.greater(a->first, b->first); });
    ReductionRound round;
    bool any = false;
    for (const auto* t : terms) {
      auto match = rules.first_match(t->first);
      if (!match) {
        round.expansion.push_back(*t);
        continue;
      }
      any = true;
      for (const auto& [rw, rc] : match->rule.rhs.terms()) {
        Word plugged = match->occurrence.context.plug(rw);
        check_descent(t->first, plugged, order);
        round.expansion.emplace_back(std::move(plugged), t->second * rc);
      }
    }
    if (!any) return rounds;
    if (rounds.size() == max_rounds)
      throw ResourceLimitError("round cap of " + std::to_string(max_rounds) + " exceeded");
    std::unordered_map<Word, Coefficient, WordHash> acc;
    for (const auto& [w, c] : round.expansion) acc[w] += c;
    round.collected = Polynomial::from_map(std::move(acc));
    current = round.collected;
    rounds.push_back(std::move(round));
  }
}

Polynomial replay(const Polynomial& f, const ReductionTrace& trace) {
  Polynomial cur = f;
  for (const auto& step : trace.steps) cur -= step.coefficient * step.context.plug(step.rule.polynomial());
  return cur;
}

const Polynomial& NormalFormCache::reduce(const Word& w) {
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  auto match = rules_->first_match(w);
  Polynomial result;
  if (!match) {
    result = Polynomial(w);
  } else {
    if (++steps_ > step_cap_)
      throw ResourceLimitError("step cap of " + std::to_string(step_cap_) + " exceeded");
    std::unordered_map<Word, Coefficient, WordHash> acc;
    for (const auto& [rw, rc] : match->rule.rhs.terms()) {
      Word plugged = match->occurrence.context.plug(rw);
      check_descent(w, plugged, *order_);
      const Polynomial& sub = reduce(plugged);
      for (const auto& [sw, sc] : sub.terms()) acc[sw] += rc * sc;
    }
    result = Polynomial::from_map(std::move(acc));
  }
  return memo_.emplace(w, std::move(result)).first->second;
}

Polynomial NormalFormCache::reduce(const Polynomial& f) {
  std::unordered_map<Word, Coefficient, WordHash> acc;
  for (const auto& [w, c] : f.terms()) {
    const Polynomial& sub = reduce(w);
    for (const auto& [sw, sc] : sub.terms()) acc[sw] += c * sc;
  }
  return Polynomial::from_map(std::move(acc));
}

}  // namespace omega
