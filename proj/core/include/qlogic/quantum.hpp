#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/logic.hpp"
#include "qlogic/states.hpp"

// Hilbert-space realizations of a logic and Born-rule probabilities.
namespace qlogic {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

inline constexpr double default_tolerance = 1e-9;

/// One vector per atom in a d-dimensional space. Atoms without a vector are
/// allowed (partial realization).
struct Realization {
  std::size_t dimension = 0;
  std::map<std::string, CVector> vectors;

  const CVector* find(std::string_view atom) const;
};

/// `dim <d>` header, then `<atom>: <c1> ... <cd>`; entries are decimals or
/// complex numbers written `re+imj`. `#` comments and blank lines ignored.
Realization parse_realization(std::string_view text);
/// Round-trips through parse_realization; 17 significant digits.
std::string serialize(const Realization& realization);

/// Parses one component ("0.5", "-1e-3", "0.2-0.7j", "2j").
Complex parse_complex(std::string_view text);
/// Whitespace- or comma-separated components.
CVector parse_vector(std::string_view text);

struct PureState {
  CVector amplitudes;

  /// Throws Error unless |norm - 1| <= tolerance.
  static PureState from_vector(CVector v, double tolerance = default_tolerance);
  /// Normalizes v (throws on the zero vector).
  static PureState normalized(CVector v);
};

struct ContextCheck {
  ContextId context = 0;
  std::size_t present = 0;  // atoms of the context that have a vector
  bool covered = false;     // every atom has a vector
  double deviation = 0;     // worst |<u|v> - delta_uv| over present pairs
  bool orthonormal = false;
};

struct RealizationReport {
  std::vector<ContextCheck> contexts;
  double worst_deviation = 0;
  bool complete = false;  // every atom has a vector
  bool pass = false;      // worst_deviation <= tolerance
};

/// Per-context orthonormality. Throws Error when a context's size differs
/// from the dimension, when a vector has the wrong length or names an
/// unknown atom, and (if require_complete) when an atom has no vector.
RealizationReport validate_realization(const Logic& logic, const Realization& realization,
                                       double tolerance = default_tolerance, bool require_complete = true);

/// |<e|rho>|^2.
double born(const PureState& state, const CVector& e);

/// Per atom (AtomId order); nullopt for atoms without a vector.
std::vector<std::optional<double>> born(const PureState& state, const Realization& realization,
                                        const Logic& logic);

/// Values in [-tol, 1+tol] and every context sum within tol of 1.
bool is_frame_function(const Logic& logic, const std::vector<double>& values, double tolerance = default_tolerance);

struct FrameCheck {
  bool frame_function = false;   // every checked context and value passes
  std::size_t checked = 0;       // contexts with all values present
  std::size_t unchecked = 0;     // contexts skipped for missing values
  double worst_deviation = 0;    // worst |context sum - 1|
};
/// Same test on a partial assignment; contexts with missing values are
/// skipped and counted.
FrameCheck check_frame_function(const Logic& logic, const std::vector<std::optional<double>>& values,
                                double tolerance = default_tolerance);

std::vector<double> to_double(const ProbabilityAssignment& p);

}  // namespace qlogic
