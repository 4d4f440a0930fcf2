#include "omega/context.hpp"

#include <deque>
#include <set>

namespace omega {

Word Context::plug(const Word& w) const {
  Word node = hole_residual_ * w;
  for (auto it = path_.rbegin(); it != path_.rend(); ++it) {
    std::vector<Word> args = it->factor.args();
    args[it->arg_index] = std::move(node);
    node = it->residual * Word::of(Factor::apply(it->factor.op(), std::move(args)));
  }
  return node;
}

Polynomial Context::plug(const Polynomial& f) const {
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.size());
  for (const auto& [w, c] : f.terms()) terms.emplace_back(plug(w), c);
  return Polynomial::from_terms(std::move(terms));
}

Context Context::compose(const Context& inner) const {
  if (inner.path_.empty()) return Context(path_, hole_residual_ * inner.hole_residual_);
  std::vector<ContextStep> path = path_;
  auto first = inner.path_.front();
  first.residual = hole_residual_ * first.residual;
  path.push_back(std::move(first));
  for (std::size_t i = 1; i < inner.path_.size(); ++i) path.push_back(inner.path_[i]);
  return Context(std::move(path), inner.hole_residual_);
}

Context Context::enter(const Factor& factor, std::uint32_t arg, Word inner_residual) const {
  std::vector<ContextStep> path = path_;
  path.push_back(ContextStep{factor, arg, hole_residual_});
  return Context(std::move(path), std::move(inner_residual));
}

void for_each_node(const Word& host,
                   const std::function<bool(const std::vector<ContextStep>&, const Word&)>& visit) {
  struct Pending {
    std::vector<ContextStep> path;
    Word node;
  };
  std::deque<Pending> queue;
  queue.push_back({{}, host});
  while (!queue.empty()) {
    Pending cur = std::move(queue.front());
    queue.pop_front();
    if (!visit(cur.path, cur.node)) return;
    for (const auto& fp : cur.node.factors()) {
      if (fp.factor.is_variable()) continue;
      Word residual = *cur.node.divide(Word::of(fp.factor));
      const auto& args = fp.factor.args();
      for (std::uint32_t i = 0; i < args.size(); ++i) {
        auto path = cur.path;
        path.push_back(ContextStep{fp.factor, i, residual});
        queue.push_back({std::move(path), args[i]});
      }
    }
  }
}

std::vector<Occurrence> occurrences(const Word& host, const Word& pattern) {
  std::vector<Occurrence> out;
  if (pattern.is_unit()) return out;
  for_each_node(host, [&](const std::vector<ContextStep>& path, const Word& node) {
    if (node.bre() >= pattern.bre()) {
      if (auto rest = node.divide(pattern)) out.push_back({Context(path, *rest), pattern});
    }
    return true;
  });
  return out;
}

namespace {

// All nonempty sub-multisets of w.
void sub_multisets(const Word& w, std::vector<Word>& out) {
  auto f = w.factors();
  std::vector<std::uint32_t> e(f.size(), 0);
  while (true) {
    std::size_t k = 0;
    while (k < f.size() && ++e[k] > f[k].exponent) e[k++] = 0;
    if (k == f.size()) break;
    std::vector<FactorPower> powers;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (e[i] > 0) powers.push_back({f[i].factor, e[i]});
    out.push_back(Word::from_powers(std::move(powers)));
  }
}

}  // namespace

std::vector<Overlap> top_overlaps(const Word& fbar, const Word& gbar, OverlapMode mode) {
  std::vector<Overlap> out;
  const Word g0 = fbar.gcd(gbar);
  if (g0.is_unit()) return out;

  auto try_shared = [&](const Word& c) {
    Word a = *gbar.divide(c);
    Word b = *fbar.divide(c);
    if (a.is_unit() || b.is_unit()) return;
    Word w = a * fbar;
    for (const auto& o : out)
      if (o.w == w) return;
    out.push_back({std::move(a), std::move(b), c, std::move(w)});
  };

  if (mode == OverlapMode::all) {
    std::vector<Word> subs;
    sub_multisets(g0, subs);
    for (const auto& c : subs) try_shared(c);
    return out;
  }
  try_shared(g0);
  if (out.empty()) {
    // g0 covers one side entirely; drop one copy of each distinct factor.
    for (const auto& fp : g0.factors()) {
      Word c = *g0.divide(Word::of(fp.factor));
      if (!c.is_unit()) try_shared(c);
    }
  }
  return out;
}

}  // namespace omega
