#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlogic/logic.hpp"
#include "qlogic/rational.hpp"

// Two-valued measures (admissible 0/1 valuations) on a logic and the
// classical probabilities they span.
namespace qlogic {

/// 0/1 per atom, indexed by AtomId. Admissible iff every context holds
/// exactly one 1.
struct TwoValuedMeasure {
  std::vector<unsigned char> values;

  bool operator()(AtomId a) const { return values.at(a) != 0; }
  std::string to_string() const;  // '0'/'1' per atom, logic order

  friend auto operator<=>(const TwoValuedMeasure&, const TwoValuedMeasure&) = default;
};

bool is_admissible(const Logic& logic, const TwoValuedMeasure& v);

/// Sorted, duplicate-free collection of admissible measures. Index k in the
/// public API is 1-based (measure k is `measures()[k-1]`).
class StateSet {
 public:
  StateSet() = default;
  /// Validates admissibility against `logic`, sorts and rejects duplicates.
  StateSet(const Logic& logic, std::vector<TwoValuedMeasure> measures);

  const std::vector<TwoValuedMeasure>& measures() const noexcept { return measures_; }
  std::size_t size() const noexcept { return measures_.size(); }
  bool empty() const noexcept { return measures_.empty(); }
  std::size_t atom_count() const noexcept { return atom_count_; }

  /// One line per measure, '0'/'1' per atom.
  std::string to_text() const;

 private:
  std::vector<TwoValuedMeasure> measures_;
  std::size_t atom_count_ = 0;
};

/// Complete set of admissible two-valued measures, found by fail-first
/// backtracking over contexts.
StateSet enumerate_states(const Logic& logic);

struct Classification {
  bool has_states = false;
  bool unital = false;      // every atom is 1 in some measure
  bool separating = false;  // every pair of distinct atoms is told apart
  std::optional<AtomId> unital_witness;                      // atom that is never 1
  std::optional<std::pair<AtomId, AtomId>> separating_witness;  // first inseparable pair
};
Classification classify(const Logic& logic, const StateSet& states);

/// True iff every measure with v(premise)=1 has v(consequent)=0. Throws
/// Error when the state set is empty or the premise is never 1.
bool implication_check(const StateSet& states, AtomId premise, AtomId consequent);

/// Per context, per atom: the 1-based indices of the measures valuing that
/// atom 1.
struct PartitionLogic {
  std::size_t state_count = 0;
  std::vector<std::vector<std::vector<std::size_t>>> blocks;  // [context][position in context]

  /// One line per context, e.g. {{1,2,3},{7,8,9,10,11},{4,5,6}}
  std::string to_text() const;
};

/// Throws Error when the state set is not unital (some atom's index set
/// would be empty) or when a context's sets fail to partition {1..m}.
PartitionLogic partition_logic(const Logic& logic, const StateSet& states);

/// Exact probability per atom, indexed by AtomId.
struct ProbabilityAssignment {
  RatVector values;
};

/// f = sum_k weights[k] v_k. Weights must be non-negative and sum to one.
ProbabilityAssignment mix(const StateSet& states, const RatVector& weights);

/// For each atom, the 1-based indices k of the measures that contribute
/// lambda_k to its probability.
std::vector<std::vector<std::size_t>> symbolic_mix(const StateSet& states);

/// Exact per-context additivity check: values in [0,1], each context sums
/// to 1.
bool is_frame_function(const Logic& logic, const ProbabilityAssignment& p);

}  // namespace qlogic
