// Crossover thresholds between the two tail-bound families: the smallest T
// at which the numerical-integration bound exceeds the asymptotic bound,
// found by bisection over integers with rigorous interval comparisons.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zetatail/interval.hpp"

namespace zetatail {

// Which pair of bounds to compare:
//  - Simplified: the published two-decimal display forms (both scaled by T).
//  - Full: pi times the numerical-integration family against the mean-value
//    family, evaluated through the full bound evaluators.
enum class CrossoverForms { Simplified, Full };

struct ThresholdResult {
  enum class Kind {
    Value,            // crossover at the stored integer
    BelowLowerLimit,  // numerical form already larger below T = 200
    AboveUpperLimit,  // crossover beyond 10^40
    NoCrossing        // the ratio never passes 1 on the search range
  };
  Kind kind = Kind::NoCrossing;
  cpp_int value;  // meaningful only when kind == Kind::Value

  std::string str() const;
};

// Smallest integer T in (t_min, t_max] with numerical(T) > asymptotic(T),
// assuming the ratio crosses 1 once on the range.  sigma must lie in (0, 1)
// and must not straddle 1/2; comparisons that the working precision cannot
// resolve fall back to midpoints (deterministic, noted in the result docs).
ThresholdResult find_crossover_threshold(CrossoverForms forms, const Interval& sigma,
                                         const cpp_int& t_min, const cpp_int& t_max);

// Thresholds on the grid sigma = s/1000 for s in [milli_lo, milli_hi],
// searched on (200, 10^39].
std::vector<std::pair<long, ThresholdResult>> crossover_scan(CrossoverForms forms,
                                                             long milli_lo, long milli_hi,
                                                             long step = 1);

// Plain-text table of a scan: one "sigma<TAB>threshold" line per grid point.
std::string format_scan(const std::vector<std::pair<long, ThresholdResult>>& scan);

}  // namespace zetatail
