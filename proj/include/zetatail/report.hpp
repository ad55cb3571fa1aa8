// Structured result of a tail/mean-value bound evaluation: the enclosing
// interval, the inputs, and a per-term breakdown for display and JSON output.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zetatail/interval.hpp"

namespace zetatail {

struct BoundReport {
  std::string family;  // which bound family produced this report
  Interval sigma;
  Interval T;
  Interval value;  // enclosure of the full bound
  std::vector<std::pair<std::string, Interval>> terms;

  std::string to_text(int digits = 20) const;
  std::string to_json(int digits = 20) const;
};

}  // namespace zetatail
