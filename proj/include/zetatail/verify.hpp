// Certified quadrature of the mean-square integrands and direct containment
// checks of the closed-form bound evaluators against integrated values.
#pragma once

#include "zetatail/interval.hpp"
#include "zetatail/zeta.hpp"

namespace zetatail {

// Enclosure of zeta'(s) on the box, obtained by differentiating the
// Euler-Maclaurin evaluation term by term (including a rigorous bound for
// the derivative of the remainder).  Same domain as zeta_enclosure.
ComplexInterval zeta_prime_enclosure(const ComplexInterval& s, const ZetaEMParams& params);
ComplexInterval zeta_prime_enclosure(const ComplexInterval& s);

enum class Integrand {
  ZetaSquared,      // |zeta(sigma + it)|^2
  ZetaOverSSquared  // |zeta(sigma + it) / (sigma + it)|^2
};

struct QuadratureResult {
  Interval value;   // enclosure of the integral over [t1, t2]
  long panels = 0;  // accepted panels
};

// Encloses int_{t1}^{t2} of the chosen integrand with total enclosure width
// at most target_width.  Each panel contributes its length times a midpoint
// evaluation, plus a deviation certified by a derivative enclosure over the
// whole panel; panels split until their share of the width budget is met.
// Requires 0 < t1 < t2 (the boxes then stay away from the pole).
QuadratureResult integral_enclosure(const Interval& sigma, const cpp_rational& t1,
                                    const cpp_rational& t2, Integrand integrand,
                                    double target_width);

// Quadrature of int_1^T |zeta(sigma+it)|^2 dt checked against the
// closed-form mean-square evaluators: passes when the integral enclosure
// sits certainly between the lower and the upper bound.
struct FiniteContainmentReport {
  Interval integral;
  Interval lower;
  Interval upper;
  long panels = 0;
  bool passed = false;
};
FiniteContainmentReport check_finite_mean_square(const Interval& sigma, long T,
                                                 double target_width);

// Quadrature of int_T^{5T} |zeta/s|^2 dt checked against both closed-form
// tail bounds.  The smoothing-route bound is two-sided and 2 pi normalised,
// so it enters multiplied by pi; the mean-value route is one-sided already.
struct TailContainmentReport {
  Interval integral;
  Interval smoothing_bound;  // pi * smoothing-route tail bound at T
  Interval meanvalue_bound;  // mean-value-route tail bound at T
  long panels = 0;
  bool passed = false;
};
TailContainmentReport check_tail_bounds(const Interval& sigma, long T, double target_width);

}  // namespace zetatail
