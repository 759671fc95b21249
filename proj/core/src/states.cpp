#include "qlogic/states.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "qlogic/error.hpp"

namespace qlogic {

std::string TwoValuedMeasure::to_string() const {
  std::string s;
  s.reserve(values.size());
  for (auto v : values) s += v ? '1' : '0';
  return s;
}

bool is_admissible(const Logic& logic, const TwoValuedMeasure& v) {
  if (v.values.size() != logic.atom_count()) return false;
  for (const auto& ctx : logic.contexts()) {
    std::size_t ones = 0;
    for (AtomId a : ctx.atoms) ones += v.values[a] ? 1 : 0;
    if (ones != 1) return false;
  }
  return true;
}

StateSet::StateSet(const Logic& logic, std::vector<TwoValuedMeasure> measures)
    : measures_(std::move(measures)), atom_count_(logic.atom_count()) {
  for (const auto& m : measures_)
    if (!is_admissible(logic, m)) throw Error("measure " + m.to_string() + " is not admissible");
  std::sort(measures_.begin(), measures_.end());
  if (std::adjacent_find(measures_.begin(), measures_.end()) != measures_.end())
    throw Error("duplicate measure in state set");
}

std::string StateSet::to_text() const {
  std::string out;
  for (const auto& m : measures_) out += m.to_string() + '\n';
  return out;
}

namespace {

enum : signed char { kUnset = -1, kZero = 0, kOne = 1 };

class Enumerator {
 public:
  explicit Enumerator(const Logic& logic) : logic_(logic) {}

  std::vector<TwoValuedMeasure> run() {
    std::vector<signed char> values(logic_.atom_count(), kUnset);
    search(values);
    return std::move(found_);
  }

 private:
  // Sets `a` to one and every atom orthogonal to it to zero. Returns false
  // if that empties some context.
  bool assign_one(std::vector<signed char>& values, AtomId a) const {
    values[a] = kOne;
    for (ContextId c : logic_.contexts_of(a))
      for (AtomId b : logic_.contexts()[c].atoms)
        if (b != a) {
          if (values[b] == kOne) return false;
          values[b] = kZero;
        }
    for (ContextId c : logic_.contexts_of(a))
      for (AtomId b : logic_.contexts()[c].atoms)
        if (b != a)
          for (ContextId d : logic_.contexts_of(b)) {
            bool alive = false;
            for (AtomId x : logic_.contexts()[d].atoms)
              if (values[x] != kZero) {
                alive = true;
                break;
              }
            if (!alive) return false;
          }
    return true;
  }

  void search(std::vector<signed char>& values) {
    // Fail-first: the unsatisfied context with the fewest open atoms.
    std::size_t best_open = std::numeric_limits<std::size_t>::max();
    const Context* best = nullptr;
    for (const auto& ctx : logic_.contexts()) {
      bool satisfied = false;
      std::size_t open = 0;
      for (AtomId a : ctx.atoms) {
        if (values[a] == kOne) satisfied = true;
        if (values[a] == kUnset) ++open;
      }
      if (satisfied) continue;
      if (open < best_open) {
        best_open = open;
        best = &ctx;
      }
    }
    if (best == nullptr) {
      TwoValuedMeasure m;
      m.values.reserve(values.size());
      for (auto v : values) m.values.push_back(v == kOne ? 1 : 0);
      found_.push_back(std::move(m));
      return;
    }
    if (best_open == 0) return;

    for (AtomId a : best->atoms) {
      if (values[a] != kUnset) continue;
      auto next = values;
      if (assign_one(next, a)) search(next);
    }
  }

  const Logic& logic_;
  std::vector<TwoValuedMeasure> found_;
};

}  // namespace

StateSet enumerate_states(const Logic& logic) {
  Enumerator e(logic);
  return StateSet(logic, e.run());
}

Classification classify(const Logic& logic, const StateSet& states) {
  Classification c;
  c.has_states = !states.empty();
  const std::size_t n = logic.atom_count();

  c.unital = true;
  for (AtomId a = 0; a < n && c.unital; ++a) {
    bool some = std::any_of(states.measures().begin(), states.measures().end(),
                            [a](const TwoValuedMeasure& v) { return v(a); });
    if (!some) {
      c.unital = false;
      c.unital_witness = a;
    }
  }

  c.separating = true;
  for (AtomId a = 0; a < n && c.separating; ++a)
    for (AtomId b = a + 1; b < n && c.separating; ++b) {
      bool told_apart = std::any_of(states.measures().begin(), states.measures().end(),
                                    [a, b](const TwoValuedMeasure& v) { return v(a) != v(b); });
      if (!told_apart) {
        c.separating = false;
        c.separating_witness = std::make_pair(a, b);
      }
    }
  return c;
}

bool implication_check(const StateSet& states, AtomId premise, AtomId consequent) {
  if (states.empty()) throw Error("implication_check: empty state set");
  bool premise_seen = false;
  bool holds = true;
  for (const auto& v : states.measures()) {
    if (!v(premise)) continue;
    premise_seen = true;
    if (v(consequent)) holds = false;
  }
  if (!premise_seen) throw Error("implication_check: premise is never valued 1 (vacuous)");
  return holds;
}

std::string PartitionLogic::to_text() const {
  std::ostringstream out;
  for (const auto& ctx : blocks) {
    out << '{';
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      if (i) out << ',';
      out << '{';
      for (std::size_t j = 0; j < ctx[i].size(); ++j) out << (j ? "," : "") << ctx[i][j];
      out << '}';
    }
    out << "}\n";
  }
  return out.str();
}

PartitionLogic partition_logic(const Logic& logic, const StateSet& states) {
  auto cls = classify(logic, states);
  if (!cls.unital) {
    if (cls.unital_witness)
      throw Error("state set is not unital: atom '" + logic.atom_name(*cls.unital_witness) +
                  "' is never valued 1");
    throw Error("state set is not unital");
  }
  const auto sets = symbolic_mix(states);
  PartitionLogic p;
  p.state_count = states.size();
  for (const auto& ctx : logic.contexts()) {
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> seen(states.size() + 1, 0);
    for (AtomId a : ctx.atoms) {
      blocks.push_back(sets[a]);
      for (auto k : sets[a]) ++seen[k];
    }
    for (std::size_t k = 1; k <= states.size(); ++k)
      if (seen[k] != 1) throw InvariantError("context '" + ctx.name + "' does not partition the state indices");
    p.blocks.push_back(std::move(blocks));
  }
  return p;
}

ProbabilityAssignment mix(const StateSet& states, const RatVector& weights) {
  if (weights.size() != states.size())
    throw Error("mix: expected " + std::to_string(states.size()) + " weights, got " +
                std::to_string(weights.size()));
  Rational total = 0;
  for (const auto& w : weights) {
    if (sgn(w) < 0) throw Error("mix: negative weight " + to_string(w));
    total += w;
  }
  if (total != 1) throw Error("mix: weights sum to " + to_string(total) + ", not 1");

  ProbabilityAssignment f;
  f.values.assign(states.atom_count(), 0);
  for (std::size_t k = 0; k < states.size(); ++k)
    for (AtomId a = 0; a < states.atom_count(); ++a)
      if (states.measures()[k](a)) f.values[a] += weights[k];
  return f;
}

std::vector<std::vector<std::size_t>> symbolic_mix(const StateSet& states) {
  std::vector<std::vector<std::size_t>> out(states.atom_count());
  for (std::size_t k = 0; k < states.size(); ++k)
    for (AtomId a = 0; a < states.atom_count(); ++a)
      if (states.measures()[k](a)) out[a].push_back(k + 1);
  return out;
}

bool is_frame_function(const Logic& logic, const ProbabilityAssignment& p) {
  if (p.values.size() != logic.atom_count()) return false;
  for (const auto& v : p.values)
    if (sgn(v) < 0 || v > 1) return false;
  for (const auto& ctx : logic.contexts()) {
    Rational s = 0;
    for (AtomId a : ctx.atoms) s += p.values[a];
    if (s != 1) return false;
  }
  return true;
}

}  // namespace qlogic
