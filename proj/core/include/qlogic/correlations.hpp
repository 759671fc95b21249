#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "qlogic/geometry.hpp"
#include "qlogic/logic.hpp"

// Product observables over contexts for arbitrary (not necessarily
// admissible) 0/1 assignments.
namespace qlogic {

/// Largest atom count accepted by the exhaustive scans.
inline constexpr std::size_t max_scan_atoms = 24;

/// Arbitrary 0/1 value per atom, indexed by AtomId.
struct Assignment {
  std::vector<unsigned char> values;

  /// Bit a of `bits` is the value of atom a.
  static Assignment from_bits(std::uint64_t bits, std::size_t atoms);
};

/// P_i = prod v(a), E_i = prod (1 - 2 v(a)) over the atoms of context i.
struct ContextProducts {
  std::vector<int> P;
  std::vector<int> E;
};

ContextProducts products(const Logic& logic, const Assignment& assignment);

enum class Objective { sum_E, sum_P };
std::string_view to_string(Objective objective);
Objective parse_objective(std::string_view text);

struct ScanResult {
  Objective objective = Objective::sum_E;
  long min = 0;
  long max = 0;
  std::uint64_t count_at_min = 0;
  std::uint64_t count_at_max = 0;
  std::uint64_t total = 0;                  // 2^atoms
  std::vector<std::uint64_t> histogram;     // histogram[v - min] = #assignments with value v
};

/// Exhaustive over all 2^n assignments, split across threads. Throws Error
/// when n exceeds max_scan_atoms.
ScanResult scan(const Logic& logic, Objective objective, unsigned threads = 0);

/// Every assignment attaining `value` as bitmasks (bit a = atom a),
/// ascending. Throws Error when n exceeds max_scan_atoms.
std::vector<std::uint64_t> assignments_with(const Logic& logic, Objective objective, long value, unsigned threads = 0);

enum class Coordinates { P, E, PE };
std::string_view to_string(Coordinates coords);
Coordinates parse_coordinates(std::string_view text);

/// Distinct product vectors over all assignments, sorted; labels P1..Pk,
/// E1..Ek (or both, P first).
VPolytope correlation_polytope(const Logic& logic, Coordinates coords, unsigned threads = 0);

struct SubclassicalClaim {
  bool holds = false;                  // every admissible pattern has E = -1
  std::size_t patterns_checked = 0;
  long hypothetical_sum_E = 0;         // -(number of contexts)
};

/// Checks, by scanning each context's admissible patterns, that an
/// admissible assignment would give E_i = -1 on every context. Throws Error
/// when some context has odd arity.
SubclassicalClaim subclassical_E_claim(const Logic& logic);

}  // namespace qlogic
