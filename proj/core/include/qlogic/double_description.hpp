#pragma once

#include <cstddef>
#include <vector>

#include "qlogic/error.hpp"
#include "qlogic/rational.hpp"

namespace qlogic {

/// Homogeneous cone { y : a.y >= 0 for every inequality row, e.y = 0 for
/// every equality row } in `dimension` coordinates.
struct ConeSystem {
  std::size_t dimension = 0;
  std::vector<IntVector> inequalities;
  std::vector<IntVector> equalities;
};

/// cone = span(lineality) + cone(rays); rays are extreme modulo the
/// lineality space and are primitive integer vectors.
struct ConeGenerators {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};

struct DoubleDescriptionOptions {
  /// Abort with RayLimitExceeded once an intermediate cone holds more rays
  /// than this (0 = no limit).
  std::size_t max_rays = 0;
};

class RayLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// H-to-V conversion of a polyhedral cone by the double description method,
/// exact integer arithmetic throughout. Inequalities are inserted in order
/// of ascending nonzero count; adjacency of rays is decided combinatorially
/// from their sets of tight constraints.
ConeGenerators double_description(const ConeSystem& system, const DoubleDescriptionOptions& options = {});

}  // namespace qlogic
