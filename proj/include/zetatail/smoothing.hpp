// Polynomial smoothing of the unit-interval indicator: admissible coefficient
// sets, their Mellin transforms, the resulting L^2 bound on the smoothing
// defect, and the two tail-bound families built from it.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zetatail/interval.hpp"
#include "zetatail/report.hpp"

namespace zetatail {

// g(x) = 1 for x < 1-delta, 0 for x > 1+delta, and on [1-delta, 1+delta]
//   g(x) = 1/2 + sum_{k=0}^{n} a_k (1+delta-x)^k (1-x) (1-delta-x)^k / delta^{2k+1},
// with delta = r/T substituted at evaluation time.
struct SmoothingPolynomial {
  int n = 0;
  std::vector<cpp_rational> a;  // a_0 .. a_n, exact
  cpp_rational r;               // transition scale; delta = r/T
};

// The degree-6 production coefficient set with r = 5.28035.
SmoothingPolynomial default_smoothing();

// Admissibility: a_0 = 1/2, a_1 = -1/4, sign(a_k) = (-1)^k, and
// |a_{k+1}| <= (2k+1)/(2k+2) |a_k|.  Returns human-readable violations
// (empty means admissible).  All checks are exact on rationals.
std::vector<std::string> validate(const SmoothingPolynomial& g);

// Exact coefficients b_j (j = 0..2n+1; b_0 = 0) of the expansion of g around
// the transition point; everything downstream (beta, the Mellin transform,
// d_min/d_max) is built from these.
std::vector<cpp_rational> b_coefficients(const SmoothingPolynomial& g);

// beta = sum_{i=0}^{4n+2} ((-1)^i/(i+1)) sum_l b_l b_{i-l}; equals
// (1/delta) * integral_1^{1+delta} g(y)^2 dy for every delta.
cpp_rational beta_exact(const SmoothingPolynomial& g);
Interval beta_of(const SmoothingPolynomial& g);

// alpha = (delta/16) * TV(g') where TV is the total variation of g' on
// (0, infinity).  After certifying that g'' changes sign only at the center
// of the transition interval, TV(g') = 2|g'(1)| and alpha is exact and
// delta-free; on certification failure a wider subdivided TV bound is used.
// Requires delta in (0, 1/2].
Interval alpha_of(const SmoothingPolynomial& g, const Interval& delta);

// Mellin transform of g at s (Re(s) > 0), delta in (0, 1/2].
ComplexInterval mellin_G(const SmoothingPolynomial& g, const ComplexInterval& s,
                         const Interval& delta);

// sum_{j=1}^{2n+1} 2 j! |b_j| / r^j * sum_{i even <= j+1} C(j+1, i) (r/T)^i,
// the quantity that must stay below 1 for the Mellin inversion to be usable.
Interval transition_sum(const SmoothingPolynomial& g, const Interval& r, const Interval& T);

// d_min = (1 - S)^2, d_max = (1 + S)^2 with S = transition_sum; throws if
// S >= 1 cannot be excluded.
std::pair<Interval, Interval> d_min_max(const SmoothingPolynomial& g, const Interval& r,
                                        const Interval& T);

// Bound on I(sigma) = (1/2 pi i) int |1/s - G(s)|^2 |zeta(s)|^2 ds over the
// vertical line Re(s) = sigma, for sigma in (0, 1]:
//   sigma != 1/2: 2 beta (delta zeta(2 sigma) - delta^{2 sigma}/(2 sigma - 1)
//                         + delta^{2 sigma + 1}/(2 (1 - delta^2)))
//                 + delta^{2 sigma} (1/(8 sigma) + alpha/(2 sigma + 1)
//                                    + alpha^2/(2 (sigma + 1)))
//   sigma  = 1/2: 2 beta (delta log(1/delta) + gamma delta
//                         + delta^2/(2 (1 - delta^2)))
//                 + delta (1/4 + alpha/2 + alpha^2/3).
// sigma must not straddle 1/2 (unless it is exactly 1/2).
Interval i_sigma_bound(const Interval& sigma, const Interval& delta, const Interval& alpha,
                       const Interval& beta);

// Constants of the first tail-bound family, assembled once from the default
// coefficient set at T0 = 200.  `raw` members are sharp interval values;
// `pub` members are the 5-decimal decimals shipped in the bound statement
// (upper roundings, except k114/c30s which round the lower endpoint down
// because they enter with the opposite sign).
struct FirstApproachConstants {
  Interval kappa, k111, k112, k113, k114, k12s, c21s, c22s, k314, c30s;
  Interval certificate;  // 2 beta r / d_min, certified <= 3/5
  // published 5-decimal values as exact rationals
  cpp_rational kappa_pub, k111_pub, k112_pub, k113_pub, k114_pub, k12s_pub, c21s_pub, c22s_pub,
      k314_pub, c30s_pub;
};
const FirstApproachConstants& first_approach_constants();

// First tail-bound family: for sigma in (0, 1] and T >= 200, a bound on
// (1/2 pi i) int_{|Im s| >= T, Re s = sigma} |zeta(s)/s|^2 ds, in three
// cases (sigma > 1/2, = 1/2, < 1/2) with c_1i = kappa^sigma k_1i etc.
BoundReport tail_bound_first_approach(const Interval& sigma, const Interval& T);

// Linear-transition corollary: for sigma in (0, 1], T > max{3, 1 + 1/sigma},
// the same integral is at most rho_{sigma,T} * {three-case expression} with
// delta = 3/T (sigma >= 1/2) or (1 + 1/sigma)/T (sigma < 1/2).
BoundReport corollary_tail_bound(const Interval& sigma, const Interval& T);

// Objective minimized by the optimizer: 2 beta r / d_min at T = 200, with g's
// own r.  Smaller is better; the shipped set certifies <= 3/5.
Interval smoothing_objective(const SmoothingPolynomial& g);

// Coordinate descent on (a_2 .. a_n): tries every increment in {0, +-step}^{n-1},
// keeps admissible tuples whose objective (with r re-optimized by golden
// section) improves, and repeats until no increment helps.
SmoothingPolynomial optimize_coefficients(int n, const SmoothingPolynomial& seed,
                                          const cpp_rational& step);

// Config records: plain text {n, numerators/denominators of a_k, r}.
SmoothingPolynomial read_smoothing_config(const std::string& path);
void write_smoothing_config(const std::string& path, const SmoothingPolynomial& g);

}  // namespace zetatail
