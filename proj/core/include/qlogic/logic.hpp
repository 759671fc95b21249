#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Orthogonality diagrams: atoms pasted together along shared contexts.
namespace qlogic {

using AtomId = std::size_t;
using ContextId = std::size_t;

struct Context {
  std::string name;
  std::vector<AtomId> atoms;  // in declaration order

  friend bool operator==(const Context&, const Context&) = default;
};

/// A pasting of contexts. Immutable once built; atoms are numbered in order
/// of first appearance, contexts in declaration order.
class Logic {
 public:
  struct ContextSpec {
    std::string name;
    std::vector<std::string> atoms;
  };

  /// Validates and builds. Throws Error on a context with fewer than two
  /// atoms, a repeated atom inside one context, two contexts with the same
  /// atom set, or a repeated context name.
  static Logic from_contexts(const std::vector<ContextSpec>& specs);

  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::vector<Context>& contexts() const noexcept { return contexts_; }
  std::size_t atom_count() const noexcept { return atoms_.size(); }
  std::size_t context_count() const noexcept { return contexts_.size(); }

  const std::string& atom_name(AtomId a) const { return atoms_.at(a); }
  std::optional<AtomId> find_atom(std::string_view name) const;
  AtomId atom(std::string_view name) const;  // throws Error when unknown

  /// Contexts containing atom `a`, ascending.
  const std::vector<ContextId>& contexts_of(AtomId a) const { return membership_.at(a); }

  /// True iff the two atoms share a context (and are distinct).
  bool orthogonal(AtomId a, AtomId b) const;

  friend bool operator==(const Logic&, const Logic&) = default;

 private:
  std::vector<std::string> atoms_;
  std::vector<Context> contexts_;
  std::vector<std::vector<ContextId>> membership_;
};

/// Line-oriented text:   context NAME: atom atom ...
/// `#` starts a comment, blank lines are ignored. Errors carry line numbers.
Logic parse_logic(std::string_view text);
std::string serialize(const Logic& logic);

/// `n` pairwise disjoint contexts of `arity` atoms each (MO_n for arity 2).
Logic horizontal_pasting(std::size_t n, std::size_t arity);

struct LoopReport {
  std::size_t order = 0;
  std::vector<ContextId> contexts;    // cyclic sequence
  std::vector<AtomId> linking_atoms;  // linking_atoms[i] joins contexts[i] and contexts[i+1 mod n]

  friend bool operator==(const LoopReport&, const LoopReport&) = default;
};

/// All loops of order 3..max_order: cyclic sequences of distinct contexts in
/// which consecutive contexts share exactly one atom, the linking atoms are
/// pairwise distinct and non-consecutive contexts are disjoint. Each loop is
/// reported once (rotation/reflection normalized to start at its smallest
/// context id), sorted by order and then by context sequence.
std::vector<LoopReport> detect_loops(const Logic& logic, std::size_t max_order);

struct ContextProfile {
  std::map<std::size_t, std::size_t> arity_histogram;
  bool mixed_arity = false;
};
ContextProfile context_profile(const Logic& logic);

/// Three boxes, each empty (e) or filled (f).
struct SpeckerReport {
  struct Row {
    std::string state;  // e.g. "efe"
    std::vector<std::pair<int, int>> equal_pairs;  // 1-based box numbers
  };
  std::vector<Row> rows;                         // all 8 states, eee..fff
  bool every_state_has_equal_pair = false;
  std::vector<std::vector<std::string>> classes;  // by number of filled boxes, 0..3
};
SpeckerReport specker_oracle_check();

/// Graphviz text: one node per atom, one styled path per context.
std::string to_dot(const Logic& logic);

}  // namespace qlogic
