#include "omega/word.hpp"

#include <algorithm>

#include "omega/error.hpp"

namespace omega {

namespace detail {

struct Measures {
  std::uint32_t deg = 0;
  std::uint32_t dep = 0;
  std::vector<std::uint32_t> op_count;
  std::vector<std::uint64_t> op_weight;

  template <typename T>
  void add_ops(const T& source, std::uint32_t times) {
    const std::size_t n = source.op_span();
    if (op_count.size() < n) {
      op_count.resize(n, 0);
      op_weight.resize(n, 0);
    }
    for (std::size_t i = 0; i < n; ++i) {
      op_count[i] += source.op_count(static_cast<OpId>(i)) * times;
      op_weight[i] += source.op_weight(static_cast<OpId>(i)) * times;
    }
  }
};

struct FactorNode {
  bool is_variable = true;
  std::uint32_t id = 0;  // variable or operator id
  std::vector<Word> args;
  std::size_t hash = 0;
  Measures measures;
};

struct WordNode {
  std::vector<FactorPower> powers;
  std::uint32_t bre = 0;
  std::size_t hash = 0;
  Measures measures;
};

}  // namespace detail

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

// ---- Factor ---------------------------------------------------------------

Factor Factor::variable(VarId id) {
  auto node = std::make_shared<detail::FactorNode>();
  node->is_variable = true;
  node->id = id;
  node->hash = mix(0x51ed27, id);
  node->measures.deg = 1;
  return Factor(std::move(node));
}

Factor Factor::apply(OpId op, std::vector<Word> args) {
  if (args.empty()) throw ArityError("operator application needs at least one argument");
  auto node = std::make_shared<detail::FactorNode>();
  node->is_variable = false;
  node->id = op;
  std::size_t h = mix(0xa11ce5, op);
  auto& m = node->measures;
  std::uint32_t max_dep = 0;
  for (const auto& a : args) {
    if (a.is_unit()) throw ArityError("operator argument cannot be the unit word");
    h = mix(h, a.hash());
    max_dep = std::max(max_dep, a.dep());
    m.deg += a.deg();
    m.add_ops(a, 1);
  }
  if (m.op_count.size() <= op) {
    m.op_count.resize(op + 1, 0);
    m.op_weight.resize(op + 1, 0);
  }
  m.op_count[op] += 1;
  m.op_weight[op] += args.front().deg();
  m.dep = max_dep + 1;
  node->hash = h;
  node->args = std::move(args);
  return Factor(std::move(node));
}

bool Factor::is_variable() const { return node_->is_variable; }
VarId Factor::variable_id() const { return node_->id; }
OpId Factor::op() const { return node_->id; }
const std::vector<Word>& Factor::args() const { return node_->args; }
std::uint32_t Factor::deg() const { return node_->measures.deg; }
std::uint32_t Factor::dep() const { return node_->measures.dep; }
std::size_t Factor::hash() const { return node_->hash; }

std::uint32_t Factor::op_count(OpId op) const {
  const auto& c = node_->measures.op_count;
  return op < c.size() ? c[op] : 0;
}

std::uint64_t Factor::op_weight(OpId op) const {
  const auto& c = node_->measures.op_weight;
  return op < c.size() ? c[op] : 0;
}

std::size_t Factor::op_span() const { return node_->measures.op_count.size(); }

std::strong_ordering structural_compare(const Factor& a, const Factor& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.is_variable != y.is_variable)
    return x.is_variable ? std::strong_ordering::less : std::strong_ordering::greater;
  // Earlier declarations are greater.
  if (x.id != y.id) return y.id <=> x.id;
  if (x.is_variable) return std::strong_ordering::equal;
  if (x.args.size() != y.args.size()) return x.args.size() <=> y.args.size();
  for (std::size_t i = 0; i < x.args.size(); ++i) {
    auto c = structural_compare(x.args[i], y.args[i]);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool operator==(const Factor& a, const Factor& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash) return false;
  return structural_compare(a, b) == 0;
}

Factor make_factor(const Signature& sig, OpId op, std::vector<Word> args) {
  if (op >= sig.operator_count()) throw SignatureError("operator id outside the signature");
  const auto& decl = sig.op(op);
  if (args.size() != decl.arity) {
    throw ArityError("operator '" + decl.name + "' expects " + std::to_string(decl.arity) +
                     " argument(s), got " + std::to_string(args.size()));
  }
  return Factor::apply(op, std::move(args));
}

// ---- Word -----------------------------------------------------------------

Word Word::build(std::vector<FactorPower> sorted) {
  if (sorted.empty()) return Word();
  auto node = std::make_shared<detail::WordNode>();
  std::size_t h = 0x3c6ef372;
  std::uint32_t max_dep = 0;
  bool any_op = false;
  for (const auto& p : sorted) {
    node->bre += p.exponent;
    h = mix(mix(h, p.factor.hash()), p.exponent);
    if (!p.factor.is_variable()) {
      any_op = true;
      max_dep = std::max(max_dep, p.factor.dep());
    }
  }
  auto& m = node->measures;
  for (const auto& p : sorted) {
    m.deg += p.factor.deg() * p.exponent;
    if (!p.factor.is_variable()) m.add_ops(p.factor, p.exponent);
  }
  m.dep = any_op ? max_dep : 0;
  node->hash = h;
  node->powers = std::move(sorted);
  return Word(std::move(node));
}

Word Word::of(const Factor& f, std::uint32_t exponent) {
  if (exponent == 0) return Word();
  return build({FactorPower{f, exponent}});
}

Word Word::from_powers(std::vector<FactorPower> powers, bool allow_unit) {
  std::erase_if(powers, [](const FactorPower& p) { return p.exponent == 0; });
  if (powers.empty() && !allow_unit) throw ArityError("a word needs at least one factor");
  std::sort(powers.begin(), powers.end(), [](const FactorPower& a, const FactorPower& b) {
    return structural_compare(a.factor, b.factor) > 0;
  });
  std::vector<FactorPower> merged;
  merged.reserve(powers.size());
  for (auto& p : powers) {
    if (!merged.empty() && merged.back().factor == p.factor) {
      merged.back().exponent += p.exponent;
    } else {
      merged.push_back(std::move(p));
    }
  }
  return build(std::move(merged));
}

Word Word::from_factors(std::vector<Factor> factors, bool allow_unit) {
  std::vector<FactorPower> powers;
  powers.reserve(factors.size());
  for (auto& f : factors) powers.push_back(FactorPower{std::move(f), 1});
  return from_powers(std::move(powers), allow_unit);
}

Word make_word(std::vector<Factor> factors, bool allow_unit) {
  return Word::from_factors(std::move(factors), allow_unit);
}

std::span<const FactorPower> Word::factors() const {
  if (!node_) return {};
  return node_->powers;
}

std::uint32_t Word::bre() const { return node_ ? node_->bre : 0; }
std::uint32_t Word::dep() const { return node_ ? node_->measures.dep : 0; }
std::uint32_t Word::deg() const { return node_ ? node_->measures.deg : 0; }
std::size_t Word::hash() const { return node_ ? node_->hash : 0x1; }

std::uint32_t Word::op_count(OpId op) const {
  if (!node_) return 0;
  const auto& c = node_->measures.op_count;
  return op < c.size() ? c[op] : 0;
}

std::uint64_t Word::op_weight(OpId op) const {
  if (!node_) return 0;
  const auto& c = node_->measures.op_weight;
  return op < c.size() ? c[op] : 0;
}

std::size_t Word::op_span() const { return node_ ? node_->measures.op_count.size() : 0; }

std::uint32_t Word::total_op_count() const {
  if (!node_) return 0;
  std::uint32_t n = 0;
  for (auto c : node_->measures.op_count) n += c;
  return n;
}

std::uint32_t Word::exponent_of(const Factor& f) const {
  for (const auto& p : factors())
    if (p.factor == f) return p.exponent;
  return 0;
}

namespace {

// Walks two descending entry lists in lockstep.
template <typename Fn>
void merge_walk(std::span<const FactorPower> a, std::span<const FactorPower> b, Fn&& fn) {
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      fn(&a[i].factor, a[i].exponent, 0u);
      ++i;
    } else if (i == a.size()) {
      fn(&b[j].factor, 0u, b[j].exponent);
      ++j;
    } else {
      auto c = structural_compare(a[i].factor, b[j].factor);
      if (c > 0) {
        fn(&a[i].factor, a[i].exponent, 0u);
        ++i;
      } else if (c < 0) {
        fn(&b[j].factor, 0u, b[j].exponent);
        ++j;
      } else {
        fn(&a[i].factor, a[i].exponent, b[j].exponent);
        ++i;
        ++j;
      }
    }
  }
}

}  // namespace

std::optional<Word> Word::divide(const Word& divisor) const {
  if (divisor.is_unit()) return *this;
  if (divisor.bre() > bre()) return std::nullopt;
  std::vector<FactorPower> out;
  bool ok = true;
  merge_walk(factors(), divisor.factors(), [&](const Factor* f, std::uint32_t ea, std::uint32_t eb) {
    if (eb > ea) ok = false;
    else if (ea > eb) out.push_back(FactorPower{*f, ea - eb});
  });
  if (!ok) return std::nullopt;
  return build(std::move(out));
}

Word Word::gcd(const Word& other) const {
  std::vector<FactorPower> out;
  merge_walk(factors(), other.factors(), [&](const Factor* f, std::uint32_t ea, std::uint32_t eb) {
    if (std::min(ea, eb) > 0) out.push_back(FactorPower{*f, std::min(ea, eb)});
  });
  return build(std::move(out));
}

Word Word::lcm(const Word& other) const {
  std::vector<FactorPower> out;
  merge_walk(factors(), other.factors(), [&](const Factor* f, std::uint32_t ea, std::uint32_t eb) {
    out.push_back(FactorPower{*f, std::max(ea, eb)});
  });
  return build(std::move(out));
}

Word operator*(const Word& a, const Word& b) {
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<FactorPower> out;
  out.reserve(a.distinct_factors() + b.distinct_factors());
  merge_walk(a.factors(), b.factors(), [&](const Factor* f, std::uint32_t ea, std::uint32_t eb) {
    out.push_back(FactorPower{*f, ea + eb});
  });
  return Word::build(std::move(out));
}

std::strong_ordering structural_compare(const Word& a, const Word& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  auto fa = a.factors();
  auto fb = b.factors();
  const std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = structural_compare(fa[i].factor, fb[i].factor);
    if (c != 0) return c;
    if (fa[i].exponent != fb[i].exponent) return fa[i].exponent <=> fb[i].exponent;
  }
  return fa.size() <=> fb.size();
}

bool operator==(const Word& a, const Word& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.node_->hash != b.node_->hash || a.node_->bre != b.node_->bre) return false;
  return structural_compare(a, b) == 0;
}

}  // namespace omega
