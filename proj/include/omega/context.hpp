#pragma once

#include <functional>
#include <vector>

#include "omega/polynomial.hpp"
#include "omega/word.hpp"

namespace omega {

// One level of descent into a word: the operator factor entered, which of
// its arguments holds the hole, and the sibling factors left at that node
// (including remaining copies of the entered factor).
struct ContextStep {
  Factor factor;
  std::uint32_t arg_index = 0;
  Word residual;

  friend bool operator==(const ContextStep&, const ContextStep&) = default;
};

// A word with exactly one hole. The hole sits in the node reached by
// following `path`, next to the factors of `hole_residual`.
class Context {
 public:
  Context() = default;  // the bare hole
  Context(std::vector<ContextStep> path, Word hole_residual)
      : path_(std::move(path)), hole_residual_(std::move(hole_residual)) {}

  static Context root(Word residual) { return Context({}, std::move(residual)); }

  const std::vector<ContextStep>& path() const { return path_; }
  const Word& hole_residual() const { return hole_residual_; }
  bool is_bare() const { return path_.empty() && hole_residual_.is_unit(); }

  Word plug(const Word& w) const;
  Polynomial plug(const Polynomial& f) const;

  // c.compose(d) plugs d's hole-carrying word into c's hole: (c o d)|s = c|(d|s).
  Context compose(const Context& inner) const;
  // Descends into argument `arg` of one copy of `factor` at this hole's node;
  // the new hole sits at the argument node, next to `inner_residual`.
  Context enter(const Factor& factor, std::uint32_t arg, Word inner_residual) const;

  friend bool operator==(const Context&, const Context&) = default;

 private:
  std::vector<ContextStep> path_;
  Word hole_residual_;
};

inline Polynomial plug(const Context& c, const Polynomial& f) { return c.plug(f); }

struct Occurrence {
  Context context;
  Word matched;
};

// Every node of `host` (root first, then breadth-first through operator
// arguments, distinct factors in structural order) whose factor multiset
// contains pattern's top-level factors.
std::vector<Occurrence> occurrences(const Word& host, const Word& pattern);

// Visits every node of `host` in the same deterministic order. The visitor
// receives the path to the node and the node's word; returning false stops.
void for_each_node(const Word& host,
                   const std::function<bool(const std::vector<ContextStep>&, const Word&)>& visit);

struct Overlap {
  Word a;  // cofactor of fbar
  Word b;  // cofactor of gbar
  Word c;  // shared part
  Word w;  // a*fbar == b*gbar
};

enum class OverlapMode { lcm, all };

// Root-level intersections of two leading words. Cofactors are always
// nonempty words; an overlap whose cofactor would be the unit is an
// inclusion and is left to occurrences(). In lcm mode the shared part is the
// multiset gcd; when that leaves a unit cofactor, the maximal proper shared
// parts are used instead.
std::vector<Overlap> top_overlaps(const Word& fbar, const Word& gbar, OverlapMode mode);

}  // namespace omega
