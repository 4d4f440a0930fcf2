#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omega/context.hpp"
#include "omega/report.hpp"
#include "omega/rewrite.hpp"
#include "omega/sampler.hpp"
#include "omega/theory.hpp"

namespace omega {

enum class CompositionKind { intersection, inclusion };
std::string_view to_string(CompositionKind kind);

// (f,g)_w: a*f - b*g for a root overlap, f - c|g for an occurrence of g's
// leading word inside f's.
struct Composition {
  CompositionKind kind = CompositionKind::intersection;
  Word w;
  Polynomial value;
  Rule f;
  Rule g;
  std::optional<Overlap> overlap;
  std::optional<Occurrence> occurrence;
};

// Recomputes the value from provenance and checks value < w.
bool composition_is_sound(const Composition& comp, const MonomialOrder& order);

// All compositions of the ordered pair (f, g). `same_rule` suppresses the
// trivial root self-inclusion.
std::vector<Composition> compositions(const Rule& f, const Rule& g, const MonomialOrder& order, OverlapMode mode,
                                      bool same_rule = false);
// Polynomial form; throws Error unless both are monic under `order`.
std::vector<Composition> compositions(const Polynomial& f, const Polynomial& g, const MonomialOrder& order,
                                      OverlapMode mode);

Composition intersection_composition(const Rule& f, const Rule& g, const Overlap& overlap);
Composition inclusion_composition(const Rule& f, const Rule& g, const Context& context);

struct TrivialityResult {
  bool trivial = false;
  Polynomial remainder;
  ReductionTrace trace;
};

// Reduces the composition modulo `rules`; trivial iff the normal form is 0.
// Throws InvariantError if a step would touch a word >= comp.w.
TrivialityResult is_trivial(const Composition& comp, const RuleSet& rules, const MonomialOrder& order,
                            const ReduceOptions& options = {});

struct CompositionOutcome {
  std::size_t f_index = 0;
  std::size_t g_index = 0;
  Composition composition;
  TrivialityResult result;
};

struct GsReport {
  std::string order;
  std::string mode;
  std::vector<CompositionOutcome> outcomes;
  std::size_t trivial = 0;
  std::size_t nontrivial = 0;
  bool is_basis() const { return nontrivial == 0; }
};

// Every ordered pair of S (self-pairs included). Compositions are reduced
// modulo S plus `extra` schemas when given.
GsReport check_finite_gs(const std::vector<Polynomial>& S, const MonomialOrder& order, OverlapMode mode,
                         const std::optional<SchemaSet>& extra = std::nullopt, const ReduceOptions& options = {});

// ---- schema theories ----------------------------------------------------------

// One ambiguity family of a theory: a recipe producing the two relation
// instances and their composition from a random stream.
struct FamilyTally {
  std::string name;
  std::string ambiguity;  // shape of w
  std::size_t instances = 0;
  std::size_t trivial = 0;
  std::size_t certified = 0;  // trivial by a checked certificate
  std::size_t reduced = 0;    // full reduction of the composition reached 0
  std::size_t capped = 0;     // full reduction cross-check hit its step cap
  std::vector<std::string> failures;
};

struct TheoryReport {
  std::string theory;
  std::string order;
  std::string mode;
  SamplerConfig sampler;
  std::vector<FamilyTally> families;
  std::optional<std::string> leading_word_failure;
  std::optional<std::string> leading_word_expected;
  std::optional<std::string> leading_word_actual;

  std::size_t instances() const;
  std::size_t trivial() const;
  bool ok() const { return !leading_word_failure && trivial() == instances(); }
};

// The random parameters of an instance: words u, v, w, ... and contexts.
struct FamilyParams {
  std::vector<Word> words;
  std::vector<Context> contexts;
};

struct FamilyInstance {
  Rule f;
  Rule g;
  Composition composition;
  FamilyParams params;
};

// Builds the instance of `family` from explicit parameters.
FamilyInstance build_family(const SchemaSet& schemas, TheoryId theory, const std::string& family,
                            const FamilyParams& params);

// Checks that `certificate` proves comp trivial modulo (S, w): every step is
// an instance alpha*c|s of a relation with all words of c|s below w, and the
// steps sum to the composition value.
bool check_certificate(const Composition& comp, const ReductionTrace& certificate, const MonomialOrder& order,
                       std::string* why = nullptr);

// Reduces the instance with its parameters replaced by fresh variables (the
// contexts keep their operator skeleton), then substitutes the parameters
// back into the steps. Returns the concrete certificate when the atomized
// composition reduces to 0 and check_certificate accepts the result.
std::optional<ReductionTrace> certify_family(const TheoryPreset& theory, const std::string& family,
                                             const FamilyInstance& instance);

// Per-instance cost bound on the full-reduction cross-check.
inline constexpr std::size_t kCrossCheckSteps = 2000;

// The ambiguity families of a theory: 2 for rb, 1 for diff, 10 for drb.
std::vector<std::string> theory_families(TheoryId id);
FamilyInstance sample_family(const TheoryPreset& theory, const std::string& family, const SamplerConfig& sampler,
                             Rng& rng);

// Instantiates every family `sampler.trials` times, checks each instance's
// leading words, then the triviality of each composition: by certificate,
// cross-checked by full reduction up to kCrossCheckSteps steps (a nonzero
// normal form is a failure). Without a certificate the full reduction runs
// to the usual cap. A leading-word failure is reported (not thrown).
TheoryReport verify_theory(const TheoryPreset& theory, const SamplerConfig& sampler,
                           ExecPolicy policy = ExecPolicy::parallel);
// Same, building the preset itself so an incompatible order surfaces as a
// leading-word failure.
TheoryReport verify_theory(TheoryId id, std::vector<std::string> variables, std::optional<OrderId> order,
                           const SamplerConfig& sampler, ExecPolicy policy = ExecPolicy::parallel);

// Random ideal members sum(alpha_i * c_i|s_i), up to `max_summands` terms:
// every nonzero member's leading word must contain a relation's leading word
// and reduce to 0; member + x must reduce to x.
PropertyReport ideal_probe(const TheoryPreset& theory, const SamplerConfig& sampler, std::size_t max_summands = 3,
                           ExecPolicy policy = ExecPolicy::parallel);

// Deterministic normal forms against `strategies` seeded random strategies.
PropertyReport confluence_probe(const TheoryPreset& theory, const SamplerConfig& sampler, std::size_t strategies = 5,
                                ExecPolicy policy = ExecPolicy::parallel);

// Basis words with deg <= max_deg and dep <= max_depth, ascending under the
// theory's order. Throws ResourceLimitError beyond `cap` words.
std::vector<Word> enumerate_irr(const TheoryPreset& theory, std::uint32_t max_deg, std::uint32_t max_depth,
                                std::size_t cap = 1'000'000);

nlohmann::json to_json(const GsReport& report, const Signature& sig, const MonomialOrder& order);
nlohmann::json to_json(const TheoryReport& report);
nlohmann::json to_json(const ReductionTrace& trace, const Signature& sig, const MonomialOrder& order);

}  // namespace omega
