#include "zetatail/thresholds.hpp"

#include <functional>
#include <sstream>

#include "zetatail/meanvalue.hpp"
#include "zetatail/smoothing.hpp"
#include "zetatail/zeta.hpp"

namespace zetatail {

std::string ThresholdResult::str() const {
  switch (kind) {
    case Kind::Value: {
      std::ostringstream out;
      out << value;
      return out.str();
    }
    case Kind::BelowLowerLimit: return "<200";
    case Kind::AboveUpperLimit: return ">10^40";
    case Kind::NoCrossing: return "none";
  }
  return "none";
}

namespace {

using BoundFn = std::function<Interval(const Interval&)>;

Interval half() { return Interval::from_ratio(1, 2); }

Interval from_int(const cpp_int& n) { return Interval::from_rational(cpp_rational(n)); }

// Builds the two T-scaled display forms for a fixed sigma.  All
// sigma-dependent prefactors are evaluated once.
std::pair<BoundFn, BoundFn> make_simplified_pair(const Interval& sigma) {
  static const HeadlineConstants h = simplify_to_headline();
  const auto& fa = first_approach_constants();
  const auto& sc = second_approach_constants();
  const Interval pi = Interval::pi();

  if (sigma.is_point() && sigma.contains(cpp_rational(1, 2))) {
    const Interval c21 = Interval::from_rational(fa.c21s_pub);
    const Interval c22 = Interval::from_rational(fa.c22s_pub);
    const Interval a = Interval::from_rational(sc.c12_a_pub);
    const Interval b = Interval::from_rational(sc.c12_b_pub);
    BoundFn numer = [pi, c21, c22](const Interval& T) {
      return pi * (Interval::from_ratio(3, 5) * log(T) + c21 + c22 / T);
    };
    BoundFn asymp = [a, b](const Interval& T) {
      const Interval lt = log(T);
      return lt + a * sqrt(lt) + b;
    };
    return {numer, asymp};
  }
  if (sigma.certainly_gt(half()) && sigma.certainly_lt(Interval::from_long(1))) {
    const Interval z = zeta_real(2 * sigma);
    const Interval num_const =
        Interval::from_ratio(3, 5) * pi * z;
    const Interval num_coef = Interval::from_rational(h.t_121_num_a) -
                              Interval::from_rational(h.t_121_num_b) / (sigma - half());
    const Interval asy_coef = Interval::from_rational(h.t_121_opt) /
                              ((sigma - half()) * (1 - sigma));
    const Interval expnt = 1 - 2 * sigma;
    BoundFn numer = [num_const, num_coef, expnt](const Interval& T) {
      return num_const + num_coef * pow(T, expnt);
    };
    BoundFn asymp = [z, asy_coef, expnt](const Interval& T) {
      return z + asy_coef * pow(T, expnt);
    };
    return {numer, asymp};
  }
  if (sigma.certainly_positive() && sigma.certainly_lt(half())) {
    const Interval num_const = Interval::from_rational(h.t_012_num_a) / sigma +
                               Interval::from_rational(h.t_012_num_b) / (half() - sigma) +
                               Interval::from_rational(h.t_012_num_c);
    const Interval num_coef =
        Interval::from_rational(h.t_012_num_d) * abs(zeta_real(2 * sigma));
    const Interval asy_const =
        zeta_real(2 - 2 * sigma) * pow(2 * pi, 2 * sigma - 1) / (2 * sigma);
    const Interval asy_coef = Interval::from_rational(h.t_012_opt) /
                              (sqr(sigma) * (half() - sigma));
    const Interval expnt = 2 * sigma - 1;
    BoundFn numer = [num_const, num_coef, expnt](const Interval& T) {
      return num_const + num_coef * pow(T, expnt);
    };
    BoundFn asymp = [asy_const, asy_coef, expnt](const Interval& T) {
      return asy_const + asy_coef * pow(T, expnt);
    };
    return {numer, asymp};
  }
  throw DomainError("sigma must lie in (0, 1) without straddling 1/2");
}

std::pair<BoundFn, BoundFn> make_full_pair(const Interval& sigma) {
  const Interval pi = Interval::pi();
  BoundFn numer = [pi, sigma](const Interval& T) {
    return pi * tail_bound_first_approach(sigma, T).value;
  };
  BoundFn asymp = [sigma](const Interval& T) {
    return tail_bound_second_approach(sigma, T).value;
  };
  return {numer, asymp};
}

// true when the numerical form exceeds the asymptotic one at T; midpoint
// fallback keeps the bisection deterministic when the enclosures touch.
bool numer_exceeds(const BoundFn& numer, const BoundFn& asymp, const cpp_int& t) {
  const Interval T = from_int(t);
  const Interval a = numer(T);
  const Interval b = asymp(T);
  if (a.certainly_gt(b)) return true;
  if (a.certainly_le(b)) return false;
  return (a.lo_double() + a.hi_double()) > (b.lo_double() + b.hi_double());
}

}  // namespace

ThresholdResult find_crossover_threshold(CrossoverForms forms, const Interval& sigma,
                                         const cpp_int& t_min, const cpp_int& t_max) {
  if (t_min < 1 || t_max <= t_min) throw DomainError("need 1 <= t_min < t_max");
  auto [numer, asymp] = forms == CrossoverForms::Simplified ? make_simplified_pair(sigma)
                                                            : make_full_pair(sigma);
  ThresholdResult out;
  if (numer_exceeds(numer, asymp, t_min)) {
    out.kind = t_min >= 200 ? ThresholdResult::Kind::NoCrossing
                            : ThresholdResult::Kind::BelowLowerLimit;
    return out;
  }
  if (!numer_exceeds(numer, asymp, t_max)) {
    out.kind = ThresholdResult::Kind::NoCrossing;
    return out;
  }
  cpp_int lo = t_min, hi = t_max;
  while (hi - lo > 1) {
    const cpp_int mid = (hi + lo) / 2;
    if (numer_exceeds(numer, asymp, mid))
      hi = mid;
    else
      lo = mid;
  }
  if (hi > pow(cpp_int(10), 40)) {
    out.kind = ThresholdResult::Kind::AboveUpperLimit;
  } else if (hi < 200) {
    out.kind = ThresholdResult::Kind::BelowLowerLimit;
  } else {
    out.kind = ThresholdResult::Kind::Value;
    out.value = hi;
  }
  return out;
}

std::vector<std::pair<long, ThresholdResult>> crossover_scan(CrossoverForms forms,
                                                             long milli_lo, long milli_hi,
                                                             long step) {
  if (step < 1) throw DomainError("scan step must be positive");
  const cpp_int t_min = 200;
  const cpp_int t_max = pow(cpp_int(10), 39);
  std::vector<std::pair<long, ThresholdResult>> out;
  for (long s = milli_lo; s <= milli_hi; s += step) {
    const Interval sigma = Interval::from_ratio(s, 1000);
    out.emplace_back(s, find_crossover_threshold(forms, sigma, t_min, t_max));
  }
  return out;
}

std::string format_scan(const std::vector<std::pair<long, ThresholdResult>>& scan) {
  std::ostringstream out;
  for (const auto& [s, r] : scan) {
    out << s / 1000 << "." << (s % 1000 < 100 ? "0" : "") << (s % 1000 < 10 ? "0" : "")
        << s % 1000 << "\t" << r.str() << "\n";
  }
  return out.str();
}

}  // namespace zetatail
