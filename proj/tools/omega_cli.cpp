// omega: command line front end for normal forms and Groebner-Shirshov checks
// in commutative algebras with operators.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "omega/error.hpp"
#include "omega/gs.hpp"
#include "omega/order_check.hpp"
#include "omega/syntax.hpp"
#include "omega/theory.hpp"

using namespace omega;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kCap = 3 };

struct UsageError : Error {
  using Error::Error;
};

struct Global {
  std::string vars = "x,y,z";
  std::string ops;
  std::string theory;
  std::string order;
  std::string mode = "lcm";
  std::uint64_t seed = 42;
  std::string format = "text";
  std::size_t step_cap = 1'000'000;
  std::string lambda;
  std::string rules_file;
  bool unit = false;
  bool serial = false;
};

std::vector<std::string> split_vars(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string read_arg(const std::string& arg) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(std::cin), {});
}

TheoryId theory_arg(const std::string& name) {
  auto id = parse_theory_id(name);
  if (!id) throw UsageError("unknown theory '" + name + "' (expected rb, diff or drb)");
  return *id;
}

OrderId order_arg(const std::string& name) {
  auto id = parse_order_id(name);
  if (!id) throw UsageError("unknown order '" + name + "'");
  return *id;
}

// Signature, order and (optionally) theory schemas resolved from the flags.
struct Setup {
  Signature sig;
  MonomialOrder order;
  std::optional<TheoryPreset> theory;
  std::optional<Rational> lambda;
  std::vector<Rule> finite;

  RuleSet rules() const {
    if (theory) return RuleSet(finite, theory->schemas);
    return RuleSet(finite);
  }
};

std::optional<Rational> lambda_arg(const Global& g) {
  if (g.lambda.empty()) return std::nullopt;
  try {
    Rational r(g.lambda);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw UsageError("invalid --lambda value '" + g.lambda + "'");
  }
}

Coefficient weight_of(const std::optional<Rational>& lambda) {
  return lambda ? Coefficient(*lambda) : Coefficient::lambda();
}

ParseOptions parse_options(const Global& g, const std::optional<Rational>& lambda) {
  ParseOptions o;
  o.allow_unit = g.unit;
  o.lambda_value = lambda;
  return o;
}

std::vector<Polynomial> read_rules_file(const std::string& path, const Signature& sig, const ParseOptions& opts) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read rules file '" + path + "'");
  std::vector<Polynomial> out;
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_polynomial(line, sig, opts));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what(), e.position());
    }
  }
  return out;
}

Setup make_setup(const Global& g, const std::string& theory_name = {}) {
  const std::string tname = theory_name.empty() ? g.theory : theory_name;
  auto lambda = lambda_arg(g);
  auto vars = split_vars(g.vars);
  std::optional<OrderId> order;
  if (!g.order.empty()) order = order_arg(g.order);

  if (!tname.empty()) {
    const TheoryId id = theory_arg(tname);
    Signature expected = theory_signature(id, vars);
    if (!g.ops.empty() && Signature::from_lists(g.vars, g.ops).operators() != expected.operators())
      throw UsageError("--ops contradicts the operators of theory '" + tname + "'");
    TheoryPreset t = preset(id, vars, order, weight_of(lambda));
    Setup s{t.signature, t.order, t, lambda, {}};
    if (!g.rules_file.empty()) {
      for (const auto& f : read_rules_file(g.rules_file, s.sig, parse_options(g, lambda)))
        s.finite.push_back(make_rule(f, s.order, s.finite.size()));
    }
    return s;
  }
  Signature sig = Signature::from_lists(g.vars, g.ops);
  MonomialOrder mo(order.value_or(OrderId::order1), sig);
  Setup s{sig, mo, std::nullopt, lambda, {}};
  if (!g.rules_file.empty()) {
    for (const auto& f : read_rules_file(g.rules_file, s.sig, parse_options(g, lambda)))
      s.finite.push_back(make_rule(f, s.order, s.finite.size()));
  }
  return s;
}

OverlapMode mode_arg(const std::string& m) {
  if (m == "lcm") return OverlapMode::lcm;
  if (m == "all") return OverlapMode::all;
  throw UsageError("unknown mode '" + m + "' (expected lcm or all)");
}

ExecPolicy policy(const Global& g) { return g.serial ? ExecPolicy::serial : ExecPolicy::parallel; }

void emit(const Global& g, const json& j, const std::string& text) {
  if (g.format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

std::string trace_text(const ReductionTrace& trace, const Signature& sig) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    out << "step " << i + 1 << ": " << format_word(s.leading, sig) << "  by "
        << to_string(s.rule.origin.relation) << " in " << format_context(s.context, sig) << ", coefficient "
        << s.coefficient.to_string() << "\n";
  }
  return out.str();
}

json rounds_json(const std::vector<ReductionRound>& rounds, const Signature& sig, const MonomialOrder& order) {
  json arr = json::array();
  for (const auto& r : rounds) {
    arr.push_back({{"expansion", format_terms(r.expansion, sig)},
                   {"terms", r.expansion.size()},
                   {"collected", format_polynomial(r.collected, sig, &order)}});
  }
  return arr;
}

// ---- subcommands ------------------------------------------------------------

struct NormalizeArgs {
  std::string expr;
  bool trace = false;
  bool stages = false;
  std::string strategy = "deterministic";
  std::uint64_t strategy_seed = 0;
};

int run_normalize(const Global& g, const NormalizeArgs& a) {
  Setup s = make_setup(g);
  Polynomial f = parse_polynomial(read_arg(a.expr), s.sig, parse_options(g, s.lambda));
  ReduceOptions opts;
  opts.step_cap = g.step_cap;
  if (a.strategy == "random") opts.strategy = Strategy::seeded_random;
  else if (a.strategy == "innermost") opts.strategy = Strategy::innermost;
  else if (a.strategy == "staged") opts.strategy = Strategy::staged;
  else if (a.strategy != "deterministic") throw UsageError("unknown strategy '" + a.strategy + "'");
  opts.seed = a.strategy_seed;
  RuleSet rules = s.rules();
  auto [nf, trace] = normal_form(f, rules, s.order, opts);

  json j{{"version", kVersion},
         {"order", std::string(to_string(s.order.id()))},
         {"input", format_polynomial(f, s.sig, &s.order)},
         {"normal_form", format_polynomial(nf, s.sig, &s.order)}};
  std::string text;
  if (a.trace) {
    j["trace"] = to_json(trace, s.sig, s.order);
    text += trace_text(trace, s.sig);
  }
  if (a.stages) {
    auto rounds = reduce_in_rounds(f, rules, s.order);
    j["rounds"] = rounds_json(rounds, s.sig, s.order);
    text += format_rounds(rounds, s.sig, s.order);
  }
  text += format_polynomial(nf, s.sig, &s.order) + "\n";
  if (!s.finite.empty()) {
    // Normal forms are unique only modulo a Groebner-Shirshov basis.
    std::vector<Polynomial> S;
    for (const auto& r : s.finite) S.push_back(r.polynomial());
    std::optional<SchemaSet> extra;
    if (s.theory) extra = s.theory->schemas;
    ReduceOptions check;
    check.step_cap = g.step_cap;
    check.record_trace = false;
    const bool confluent = check_finite_gs(S, s.order, mode_arg(g.mode), extra, check).is_basis();
    j["confluent"] = confluent;
    if (!confluent) text += "note: non-confluent rule set\n";
  }
  emit(g, j, text);
  return kOk;
}

int run_multiply(const Global& g, const std::string& e1, const std::string& e2, bool algorithm) {
  Setup s = make_setup(g);
  auto popts = parse_options(g, s.lambda);
  Polynomial f = parse_polynomial(read_arg(e1), s.sig, popts);
  Polynomial h = parse_polynomial(read_arg(e2), s.sig, popts);
  RuleSet rules = s.rules();
  ReduceOptions opts;
  opts.step_cap = g.step_cap;
  opts.record_trace = false;
  Polynomial product = normal_form(f * h, rules, s.order, opts).first;
  json j{{"version", kVersion}, {"product", format_polynomial(product, s.sig, &s.order)}};
  if (algorithm) {
    if (!s.theory || s.theory->id == TheoryId::drb)
      throw UsageError("--algorithm needs --theory rb or diff");
    Polynomial nf = normal_form(f, rules, s.order, opts).first;
    Polynomial nh = normal_form(h, rules, s.order, opts).first;
    // In the differential algebra basis words multiply as words.
    Polynomial fast = s.theory->id == TheoryId::rb ? rb_product(*s.theory, nf, nh) : nf * nh;
    j["algorithm"] = format_polynomial(fast, s.sig, &s.order);
    j["agree"] = fast == product;
    if (!(fast == product)) {
      emit(g, j,
           "algorithm disagrees with reduction:\n  reduction: " + format_polynomial(product, s.sig, &s.order) +
               "\n  algorithm: " + format_polynomial(fast, s.sig, &s.order) + "\n");
      return kFailure;
    }
  }
  emit(g, j, format_polynomial(product, s.sig, &s.order) + "\n");
  return kOk;
}

int run_derive(const Global& g, const std::string& e, bool algorithm) {
  Setup s = make_setup(g);
  if (!s.theory || s.theory->id == TheoryId::rb) throw UsageError("derive needs --theory diff or drb");
  Polynomial f = parse_polynomial(read_arg(e), s.sig, parse_options(g, s.lambda));
  RuleSet rules = s.rules();
  ReduceOptions opts;
  opts.step_cap = g.step_cap;
  opts.record_trace = false;
  Polynomial result = normal_form(apply_unary(s.theory->d(), f), rules, s.order, opts).first;
  json j{{"version", kVersion}, {"derivative", format_polynomial(result, s.sig, &s.order)}};
  if (algorithm) {
    if (s.theory->id != TheoryId::diff) throw UsageError("--algorithm needs --theory diff");
    Polynomial fast = diff_apply(*s.theory, normal_form(f, rules, s.order, opts).first);
    j["algorithm"] = format_polynomial(fast, s.sig, &s.order);
    j["agree"] = fast == result;
    if (!(fast == result)) {
      emit(g, j,
           "algorithm disagrees with reduction:\n  reduction: " + format_polynomial(result, s.sig, &s.order) +
               "\n  algorithm: " + format_polynomial(fast, s.sig, &s.order) + "\n");
      return kFailure;
    }
  }
  emit(g, j, format_polynomial(result, s.sig, &s.order) + "\n");
  return kOk;
}

std::string gs_text(const GsReport& r, const Signature& sig, const MonomialOrder& order) {
  std::ostringstream out;
  for (const auto& o : r.outcomes) {
    out << "(" << o.f_index << "," << o.g_index << ") " << to_string(o.composition.kind)
        << " w = " << format_word(o.composition.w, sig) << ": "
        << format_polynomial(o.composition.value, sig, &order);
    if (o.result.trivial) out << "  -> trivial\n";
    else out << "  -> remainder " << format_polynomial(o.result.remainder, sig, &order) << "\n";
  }
  out << r.trivial << " trivial, " << r.nontrivial << " nontrivial: "
      << (r.is_basis() ? "Groebner-Shirshov basis" : "not a Groebner-Shirshov basis") << "\n";
  return out.str();
}

int run_compose(const Global& g, const std::string& e1, const std::string& e2) {
  Setup s = make_setup(g);
  auto popts = parse_options(g, s.lambda);
  Rule f = make_rule(parse_polynomial(read_arg(e1), s.sig, popts), s.order, 0);
  Rule h = make_rule(parse_polynomial(read_arg(e2), s.sig, popts), s.order, 1);
  std::vector<Rule> finite = s.finite;
  finite.push_back(f);
  finite.push_back(h);
  RuleSet rules = s.theory ? RuleSet(finite, s.theory->schemas) : RuleSet(finite);
  ReduceOptions opts;
  opts.step_cap = g.step_cap;
  GsReport report;
  report.order = std::string(to_string(s.order.id()));
  report.mode = g.mode;
  for (auto& comp : compositions(f, h, s.order, mode_arg(g.mode), f.polynomial() == h.polynomial())) {
    CompositionOutcome o{0, 1, comp, is_trivial(comp, rules, s.order, opts)};
    (o.result.trivial ? report.trivial : report.nontrivial) += 1;
    report.outcomes.push_back(std::move(o));
  }
  emit(g, to_json(report, s.sig, s.order), gs_text(report, s.sig, s.order));
  return report.is_basis() ? kOk : kFailure;
}

int run_check_gs(const Global& g) {
  if (g.rules_file.empty()) throw UsageError("check-gs needs --rules <file>");
  Global plain = g;
  plain.rules_file.clear();
  Setup s = make_setup(plain);
  auto S = read_rules_file(g.rules_file, s.sig, parse_options(g, s.lambda));
  ReduceOptions opts;
  opts.step_cap = g.step_cap;
  std::optional<SchemaSet> extra;
  if (s.theory) extra = s.theory->schemas;
  GsReport report = check_finite_gs(S, s.order, mode_arg(g.mode), extra, opts);
  emit(g, to_json(report, s.sig, s.order), gs_text(report, s.sig, s.order));
  return report.is_basis() ? kOk : kFailure;
}

struct SampleArgs {
  std::string theory;
  std::size_t samples = 200;
  std::uint32_t max_depth = 3;
  std::uint32_t max_deg = 4;
  std::uint32_t max_breadth = 3;
};

SamplerConfig sampler_of(const Global& g, const SampleArgs& a) {
  SamplerConfig cfg;
  cfg.trials = a.samples;
  cfg.seed = g.seed;
  cfg.max_depth = a.max_depth;
  cfg.max_deg = a.max_deg;
  cfg.max_breadth = a.max_breadth;
  return cfg;
}

int run_verify_theory(const Global& g, const SampleArgs& a) {
  const TheoryId id = theory_arg(a.theory);
  mode_arg(g.mode);
  std::optional<OrderId> order;
  if (!g.order.empty()) order = order_arg(g.order);
  TheoryReport r = verify_theory(id, split_vars(g.vars), order, sampler_of(g, a), policy(g));
  r.mode = g.mode;
  std::ostringstream out;
  out << "theory " << r.theory << " under " << r.order << ", seed " << g.seed << ", " << a.samples
      << " samples per family\n";
  if (r.leading_word_failure) {
    out << *r.leading_word_failure << "\n";
  }
  for (const auto& f : r.families) {
    out << "  " << f.name << "  " << f.ambiguity << ": " << f.trivial << "/" << f.instances << " trivial\n";
    for (const auto& w : f.failures) out << "    " << w << "\n";
  }
  out << (r.ok() ? "all compositions trivial\n" : "verification FAILED\n");
  emit(g, to_json(r), out.str());
  return r.ok() ? kOk : kFailure;
}

int run_enumerate(const Global& g, const std::string& theory, std::uint32_t max_deg, std::uint32_t max_depth,
                  bool count_only) {
  TheoryPreset t = preset(theory_arg(theory), split_vars(g.vars),
                          g.order.empty() ? std::nullopt : std::optional(order_arg(g.order)));
  auto words = enumerate_irr(t, max_deg, max_depth, g.step_cap);
  json j{{"version", kVersion}, {"theory", theory}, {"max_deg", max_deg}, {"max_depth", max_depth},
         {"count", words.size()}};
  std::ostringstream out;
  if (!count_only) {
    json list = json::array();
    for (const auto& w : words) {
      list.push_back(format_word(w, t.signature));
      out << format_word(w, t.signature) << "\n";
    }
    j["words"] = list;
  }
  out << words.size() << " words\n";
  emit(g, j, out.str());
  return kOk;
}

int run_probe_ideal(const Global& g, const SampleArgs& a, std::size_t summands) {
  TheoryPreset t = preset(theory_arg(a.theory), split_vars(g.vars),
                          g.order.empty() ? std::nullopt : std::optional(order_arg(g.order)));
  PropertyReport r = ideal_probe(t, sampler_of(g, a), summands, policy(g));
  std::ostringstream out;
  out << r.name << ": " << r.trials << " members, " << r.violation_count << " violations\n";
  for (const auto& w : r.witnesses) out << "  " << w << "\n";
  emit(g, to_json(r), out.str());
  return r.ok() ? kOk : kFailure;
}

int run_order_test(const Global& g, const std::string& name, const SampleArgs& a) {
  const OrderId id = order_arg(name);
  std::string ops = g.ops;
  if (ops.empty()) {
    switch (id) {
      case OrderId::order1: ops = "P:1,D:1,T:2"; break;
      case OrderId::order2: ops = "D:1"; break;
      default: ops = "D:1,P:1"; break;
    }
  }
  Signature sig = Signature::from_lists(g.vars, ops);
  MonomialOrder order(id, sig);
  PropertyReport r = check_monomial_property(order, sig, sampler_of(g, a), policy(g));
  std::ostringstream out;
  out << r.name << ": " << r.trials << " trials, " << r.violation_count << " violations\n";
  for (const auto& w : r.witnesses) out << "  " << w << "\n";
  emit(g, to_json(r), out.str());
  return r.ok() ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms and Groebner-Shirshov bases for commutative operated algebras"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--vars", g.vars, "variables, greatest first")->capture_default_str();
  app.add_option("--ops", g.ops, "operators name:arity, greatest first");
  app.add_option("--theory", g.theory, "rb, diff or drb");
  app.add_option("--order", g.order, "order1, order2, order3-printed or order3-corrected");
  app.add_option("--mode", g.mode, "composition overlaps: lcm or all")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--step-cap", g.step_cap, "reduction step cap")->capture_default_str();
  app.add_option("--lambda", g.lambda, "specialize the weight lam to a rational");
  app.add_option("--rules", g.rules_file, "file of polynomials, one per line, '#' comments");
  app.add_flag("--unit", g.unit, "accept the empty word (constants) in expressions");
  app.add_flag("--serial", g.serial, "run sampled checks on one thread");

  NormalizeArgs norm;
  auto* normalize = app.add_subcommand("normalize", "normal form of an expression");
  normalize->add_option("expr", norm.expr, "expression, or - for stdin")->required();
  normalize->add_flag("--trace", norm.trace, "print the reduction steps");
  normalize->add_flag("--stages", norm.stages, "print the reduction in rounds, before and after collecting");
  normalize->add_option("--strategy", norm.strategy, "deterministic, innermost, staged or random");
  normalize->add_option("--strategy-seed", norm.strategy_seed, "seed of the random strategy");

  std::string e1, e2;
  bool algorithm = false;
  auto* multiply = app.add_subcommand("multiply", "product in the theory's algebra");
  multiply->add_option("lhs", e1)->required();
  multiply->add_option("rhs", e2)->required();
  multiply->add_flag("--algorithm", algorithm, "also run the direct product algorithm and compare");

  auto* derive = app.add_subcommand("derive", "apply D and normalize");
  derive->add_option("expr", e1)->required();
  derive->add_flag("--algorithm", algorithm, "also run the direct derivation algorithm and compare");

  auto* compose = app.add_subcommand("compose", "compositions of two polynomials and their triviality");
  compose->add_option("f", e1)->required();
  compose->add_option("g", e2)->required();

  auto* check_gs = app.add_subcommand("check-gs", "Groebner-Shirshov check of the --rules file");

  SampleArgs sample;
  auto* verify = app.add_subcommand("verify-theory", "sampled composition check of a built-in theory");
  verify->add_option("theory", sample.theory)->required();
  verify->add_option("--samples", sample.samples, "instances per ambiguity family")->capture_default_str();
  verify->add_option("--max-depth", sample.max_depth)->capture_default_str();
  verify->add_option("--max-deg", sample.max_deg)->capture_default_str();
  verify->add_option("--max-breadth", sample.max_breadth)->capture_default_str();

  std::string enum_theory;
  std::uint32_t enum_deg = 3, enum_depth = 2;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate-basis", "list the basis words within bounds");
  enumerate->add_option("theory", enum_theory)->required();
  enumerate->add_option("--max-deg", enum_deg)->capture_default_str();
  enumerate->add_option("--max-depth", enum_depth)->capture_default_str();
  enumerate->add_flag("--count-only", count_only);

  std::size_t summands = 3;
  SampleArgs probe;
  probe.samples = 500;
  auto* probe_ideal = app.add_subcommand("probe-ideal", "random ideal members must reduce to 0");
  probe_ideal->add_option("theory", probe.theory)->required();
  probe_ideal->add_option("--samples", probe.samples)->capture_default_str();
  probe_ideal->add_option("--max-depth", probe.max_depth)->capture_default_str();
  probe_ideal->add_option("--max-summands", summands)->capture_default_str();

  std::string order_name;
  SampleArgs otest;
  otest.samples = 10'000;
  auto* order_test = app.add_subcommand("order-test", "sampled monomial-order law");
  order_test->add_option("order", order_name)->required();
  order_test->add_option("--trials", otest.samples)->capture_default_str();
  order_test->add_option("--max-depth", otest.max_depth)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*normalize) return run_normalize(g, norm);
    if (*multiply) return run_multiply(g, e1, e2, algorithm);
    if (*derive) return run_derive(g, e1, algorithm);
    if (*compose) return run_compose(g, e1, e2);
    if (*check_gs) return run_check_gs(g);
    if (*verify) return run_verify_theory(g, sample);
    if (*enumerate) return run_enumerate(g, enum_theory, enum_deg, enum_depth, count_only);
    if (*probe_ideal) return run_probe_ideal(g, probe, summands);
    if (*order_test) return run_order_test(g, order_name, otest);
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCap;
  } catch (const LeadingWordError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const InvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const Error& e) {
    // Parse, signature, arity, non-invertible and usage errors.
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
