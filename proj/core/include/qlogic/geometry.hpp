#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/double_description.hpp"
#include "qlogic/logic.hpp"
#include "qlogic/rational.hpp"
#include "qlogic/states.hpp"

// Exact polytopes: vertex (V) and half-space (H) descriptions and the
// conversions between them.
namespace qlogic {

/// sum_i coefficients[i] * x_i >= bound, stored as a primitive integer row
/// (gcd of all coefficients and the bound is 1).
struct Inequality {
  IntVector coefficients;
  Integer bound;

  /// Clears denominators and divides out the common gcd; the orientation
  /// of the half-space is kept.
  static Inequality from_rational(const RatVector& coefficients, const Rational& bound);

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

/// sum_i coefficients[i] * x_i == rhs; primitive, and the first nonzero
/// entry of (coefficients, -rhs) is positive.
struct Equality {
  IntVector coefficients;
  Integer rhs;

  friend bool operator==(const Equality&, const Equality&) = default;
};

struct VPolytope {
  std::vector<std::string> labels;  // one per coordinate
  std::vector<RatVector> vertices;

  std::size_t ambient_dimension() const noexcept { return labels.size(); }
  long dimension() const;  // affine dimension of the vertex set
};

struct HPolytope {
  std::vector<std::string> labels;
  std::vector<Equality> equalities;
  std::vector<Inequality> inequalities;
};

/// Facets and affine hull of conv(vertices). Equalities come as a reduced
/// echelon basis; each facet is the representative with zero coefficients
/// on that basis' pivot coordinates. Output order is canonical, so the
/// result does not depend on the order of the input vertices.
HPolytope hull(const VPolytope& polytope, const DoubleDescriptionOptions& options = {});

/// Vertices of { x : equalities, inequalities }, sorted. Empty when the
/// system is infeasible; throws Error when the polyhedron is unbounded.
VPolytope vertex_enumerate(const HPolytope& polytope, const DoubleDescriptionOptions& options = {});

enum class Verdict { invalid, valid, supporting, facet };
std::string_view to_string(Verdict v);

/// invalid: some vertex violates it. valid: no vertex is tight.
/// facet: the tight vertices span an affine space of dimension dim-1.
/// supporting: tight somewhere but not a facet.
Verdict verify_inequality(const VPolytope& polytope, const Inequality& inequality);

struct Evaluation {
  bool satisfied = false;
  Rational slack;  // sum c_i x_i - bound, in the row's integer scaling
};
Evaluation evaluate(const RatVector& point, const Inequality& inequality);
double evaluate_slack(const std::vector<double>& point, const Inequality& inequality);

/// Two-valued measures as 0/1 vertices, coordinates labelled by atom name.
VPolytope state_polytope(const Logic& logic, const StateSet& states);

/// Frame functions of weight one: per-context sums equal 1, all values >= 0.
HPolytope frame_function_polytope(const Logic& logic);

/// `labels` name the coordinates. Besides a label itself, a variable may be
/// written as a letter prefix followed by N to mean the N-th coordinate
/// (p4, P2, E7). Terms: [coefficient][*]variable or a bare rational
/// constant; either side of >= or <= may hold terms.
Inequality parse_inequality(std::string_view text, const std::vector<std::string>& labels);

/// Human form, positive terms left: "p2 + p6 >= p4".
std::string to_human(const Inequality& inequality, const std::vector<std::string>& labels);

/// Tab-separated rows: equalities first under "# affine hull", then facets.
std::string format_h_polytope(const HPolytope& polytope);
/// One TSV row per equality/facet, with a header naming the coordinates.
std::string format_h_polytope_tsv(const HPolytope& polytope);
std::string format_v_polytope(const VPolytope& polytope);

}  // namespace qlogic
