// Explicit Stirling-type bounds for the gamma function on vertical strips and
// the functional-equation transfer factor for the left half of the critical
// strip.
#pragma once

#include "zetatail/interval.hpp"

namespace zetatail {

// F(theta) = 1/(12 sin^2(theta/2)), the Stirling remainder coefficient for
// arguments in the sector |arg z| <= pi - theta.  F(pi/2) = 1/6.
struct StirlingBound {
  Interval theta;
  Interval F;
};
StirlingBound stirling_bound(const Interval& theta);

// G_sigma = sigma^3/3 + sigma^2/2 * |sigma - 1/2| + 1/6; controls the decay
// |Gamma(sigma+it)| = sqrt(2 pi) |t|^{sigma-1/2} e^{-pi|t|/2} e^{+-G_sigma/T}.
Interval gamma_decay_G(const Interval& sigma);

// Encloses |Gamma(sigma+it)| for sigma >= 0 and |t| >= T >= 1 using the decay
// bound above with T = inf |t|.
Interval gamma_abs_enclosure(const Interval& sigma, const Interval& t);

// Encloses |sin(pi s / 2)|^2 for 0 <= sigma < 1/2, t >= 1, as
// (e^{pi t}/4) cos^2(pi sigma/2) (1 + O*(2 e^{-pi t})) — returned with the
// cos^2 factor included.
Interval sin_half_plane_factor(const Interval& sigma, const Interval& t);

// K1 = e^{3/4} - 1 and K2 = 2K1 + K1^2 + 2e^{-pi} + 4K1 e^{-pi} + 2K1^2 e^{-pi}.
Interval transfer_constant_K1();
Interval transfer_constant_K2();

// Multiplicative enclosure (1 +- K2/t) such that for 0 <= sigma < 1/2, t >= 1,
//   |zeta(sigma+it)|^2 = (2 pi)^{2 sigma - 1} t^{1-2 sigma}
//                        |zeta(1-sigma+it)|^2 * factor.
Interval functional_transfer_factor(const Interval& sigma, const Interval& t);

}  // namespace zetatail
