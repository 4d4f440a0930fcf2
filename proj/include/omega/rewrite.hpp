#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "omega/context.hpp"
#include "omega/order.hpp"
#include "omega/polynomial.hpp"

namespace omega {

enum class TheoryId { rb, diff, drb };
std::string_view to_string(TheoryId id);
std::optional<TheoryId> parse_theory_id(std::string_view name);

// Relations of the built-in theories:
//   rota_baxter   P(u)P(v) -> P(P(u)v) + P(uP(v)) + lam P(uv)
//   differential  D(uv)    -> D(u)v + uD(v) + lam D(u)D(v)
//   inverse       D(P(u))  -> u
enum class RelationId { rota_baxter, differential, inverse };
std::string_view to_string(RelationId id);

struct RuleOrigin {
  enum class Kind { finite, schema } kind = Kind::finite;
  std::size_t index = 0;  // position in the finite rule list
  RelationId relation = RelationId::rota_baxter;
  std::vector<Word> params;
};

// lhs -> rhs, i.e. the monic polynomial lhs - rhs with every word of rhs
// below lhs under the order the rule was built for.
struct Rule {
  Word lhs;
  Polynomial rhs;
  RuleOrigin origin;

  Polynomial polynomial() const { return Polynomial(lhs) - rhs; }
};

// Normalises f to a monic rule under `order`. Throws NonInvertibleError when
// the leading coefficient has no inverse, Error on zero.
Rule make_rule(const Polynomial& f, const MonomialOrder& order, std::size_t index = 0);

// Instantiates the relation schemas of a theory.
class SchemaSet {
 public:
  SchemaSet(TheoryId theory, const Signature& sig, Coefficient weight = Coefficient::lambda());

  TheoryId theory() const { return theory_; }
  OpId p_op() const { return p_; }
  OpId d_op() const { return d_; }
  const Coefficient& weight() const { return weight_; }
  bool has_rota_baxter() const { return theory_ != TheoryId::diff; }
  bool has_differential() const { return theory_ != TheoryId::rb; }
  bool has_inverse() const { return theory_ == TheoryId::drb; }

  Rule rota_baxter(const Word& u, const Word& v) const;
  Rule differential(const Word& u, const Word& v) const;
  Rule inverse(const Word& u) const;

 private:
  TheoryId theory_;
  OpId p_ = 0;
  OpId d_ = 0;
  Coefficient weight_;
};

struct Match {
  Occurrence occurrence;
  Rule rule;
};

// Every schema redex in w in deterministic order: nodes outermost-first;
// within a node rota_baxter (two structurally greatest P-factors), then
// differential per D-factor (split greatest factor x rest), then inverse.
std::vector<Match> match_schemas(const SchemaSet& schemas, const Word& w);

class RuleSet {
 public:
  RuleSet() = default;
  explicit RuleSet(std::vector<Rule> finite) : finite_(std::move(finite)) {}
  explicit RuleSet(SchemaSet schemas) : schemas_(std::move(schemas)) {}
  RuleSet(std::vector<Rule> finite, SchemaSet schemas)
      : finite_(std::move(finite)), schemas_(std::move(schemas)) {}

  const std::vector<Rule>& finite_rules() const { return finite_; }
  const std::optional<SchemaSet>& schemas() const { return schemas_; }

  // First redex in deterministic order: by node, then finite rules in list
  // order, then schemas.
  std::optional<Match> first_match(const Word& w) const;
  // The first redex of the last reducible node in that order (a deepest one).
  std::optional<Match> innermost_match(const Word& w) const;
  // A redex chosen uniformly among all sites of w, with random schema
  // instantiation (any pair of P-factors, any split of a D argument).
  std::optional<Match> random_match(const Word& w, std::mt19937_64& rng) const;
  bool is_irreducible(const Word& w) const { return !first_match(w).has_value(); }

 private:
  std::optional<Match> match_at(const std::vector<ContextStep>& path, const Word& node) const;

  std::vector<Rule> finite_;
  std::optional<SchemaSet> schemas_;
};

struct ReductionStep {
  Context context;
  Rule rule;
  Coefficient coefficient;
  Word leading;  // the word eliminated by this step
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Polynomial final;
};

// deterministic: outermost redex of the leading word (the reported traces).
// innermost: deepest redex first; the same normal forms for a Groebner-Shirshov
// set, with far fewer steps when arguments are themselves reducible.
// staged: shallowest redex over all terms first, so equal terms cancel
// before their arguments are expanded. Not an elimination of the leading
// word, but each step still replaces a word by smaller ones.
enum class Strategy { deterministic, innermost, seeded_random, staged };

struct ReduceOptions {
  Strategy strategy = Strategy::deterministic;
  std::uint64_t seed = 0;
  std::size_t step_cap = 1'000'000;
  bool record_trace = true;
};

// One elimination of the leading word, or nullopt if it is irreducible.
std::optional<std::pair<Polynomial, ReductionStep>> reduce_once(const Polynomial& f, const RuleSet& rules,
                                                                const MonomialOrder& order);

// Full reduction: repeatedly eliminates the greatest reducible word until
// every word is irreducible. Throws ResourceLimitError past step_cap and
// InvariantError if a step fails to descend.
std::pair<Polynomial, ReductionTrace> normal_form(const Polynomial& f, const RuleSet& rules,
                                                  const MonomialOrder& order, const ReduceOptions& options = {});

// One round rewrites every reducible term of the current polynomial once, at
// its deterministic redex. `expansion` lists the resulting terms before
// like terms are collected; `collected` is their sum.
struct ReductionRound {
  std::vector<Polynomial::Term> expansion;
  Polynomial collected;
};

// Rounds until no term is reducible (or 0). Throws ResourceLimitError past
// max_rounds.
std::vector<ReductionRound> reduce_in_rounds(const Polynomial& f, const RuleSet& rules, const MonomialOrder& order,
                                             std::size_t max_rounds = 10'000);

// Applies trace steps to f; equals trace.final for a trace of f.
Polynomial replay(const Polynomial& f, const ReductionTrace& trace);

// Deterministic normal forms with a per-word memo. Produces the same result
// as normal_form() with the deterministic strategy; no trace.
class NormalFormCache {
 public:
  NormalFormCache(const RuleSet& rules, const MonomialOrder& order, std::size_t step_cap = 1'000'000)
      : rules_(&rules), order_(&order), step_cap_(step_cap) {}

  Polynomial reduce(const Polynomial& f);
  const Polynomial& reduce(const Word& w);
  std::size_t steps() const { return steps_; }

 private:
  const RuleSet* rules_;
  const MonomialOrder* order_;
  std::size_t step_cap_;
  std::size_t steps_ = 0;
  std::unordered_map<Word, Polynomial, WordHash> memo_;
};

}  // namespace omega
