#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/logic.hpp"
#include "qlogic/quantum.hpp"
#include "qlogic/states.hpp"

namespace qlogic::cli {

struct Fixture {
  std::string_view name;
  std::string_view description;
  std::string_view logic;                // logic-file text
  std::string_view realization;          // realization-file text, or empty
  std::string_view partial_realization;  // only the vectors printed with the figure, or empty
  std::string_view assignment;           // named rational assignment (`atom: value` lines), or empty
  std::string_view assignment_name;
  std::optional<std::size_t> expected_states;
  std::vector<std::string_view> printed_facets;  // inequalities quoted from the figure captions and text
};

const std::vector<Fixture>& fixtures();

/// Throws Error for an unknown name.
const Fixture& fixture(std::string_view name);

Logic fixture_logic(const Fixture& f);

/// `atom: value` lines with rational values; atoms not listed are 0.
ProbabilityAssignment parse_assignment(const Logic& logic, std::string_view text);

}  // namespace qlogic::cli
