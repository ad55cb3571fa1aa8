// Bernoulli numbers/polynomials, elementary sum enclosures, and the small
// inequality helpers (harmonic bounds, power-sum enclosure, zeta pinching,
// arithmetic-geometric splits, improved second-order Euler-Maclaurin).
#pragma once

#include <utility>
#include <vector>

#include "zetatail/interval.hpp"

namespace zetatail {

// Exact Bernoulli numbers b_0..b_{K_max} and polynomial evaluation of B_k(x)
// on [0,1].  b_1 = -1/2 convention.
class BernoulliTable {
 public:
  static constexpr int kMaxIndex = 64;

  BernoulliTable();

  const cpp_rational& number(int k) const;  // b_k, 0 <= k <= kMaxIndex

  // Encloses B_k(x) for x within [0,1].
  Interval poly(int k, const Interval& x) const;

  // Enclosure of max_{x in [0,1]} |B_k(x)| <= 2 zeta(k) k! / (2 pi)^k, k >= 2.
  Interval sup_norm_bound(int k) const;

  // Shared global instance (construction is cheap but not free).
  static const BernoulliTable& instance();

 private:
  std::vector<cpp_rational> numbers_;
  std::vector<std::vector<cpp_rational>> poly_coeffs_;  // B_k monomial coeffs
};

// Enclosure of zeta(k) for integer k >= 2: Bernoulli closed form for even k,
// partial sum plus Euler-Maclaurin tail bracket for odd k.  Self-contained
// (does not use the analytic continuation).
Interval zeta_int(int k);

// Bounds for the harmonic sum: sum_{n<=X} 1/n lies between
// log X + gamma - 2/(3X) and log X + gamma + 1/(2X), for X >= 1.
std::pair<Interval, Interval> harmonic_bounds(const Interval& X);

// Enclosure of sum_{n<=X} n^{-alpha} = zeta(alpha) - X^{1-alpha}/(alpha-1)
// + O*(1/(2 X^alpha)), for alpha > 0, alpha != 1.
Interval power_sum_enclosure(const Interval& alpha, const Interval& X);

// Pinching bounds for zeta near s=1: lower = 1/(sigma-1) always (sigma in
// (0,2)\{1}); upper = 1/(sigma-1) + zeta(2) - 1 available when sigma in (1,2).
struct StieltjesBounds {
  Interval lower;
  bool has_upper = false;
  Interval upper;
};
StieltjesBounds stieltjes_zeta_bounds(const Interval& sigma);

// Arithmetic-geometric mean split: for rho > 0,
//   (A+B)^2 <= (1+rho) A^2 + (1+1/rho) B^2,
// and for -1 < rho < 0 the same right-hand side is a LOWER bound for (A-B)^2.
struct RhoCoefficients {
  Interval a_coef;  // 1 + rho
  Interval b_coef;  // 1 + 1/rho
  bool is_upper;    // true if rho > 0 (upper split), false if -1 < rho < 0
};
RhoCoefficients rho_split(const Interval& rho);

// Applies the split to nonnegative A, B: encloses (1+rho)A^2 + (1+1/rho)B^2.
Interval rho_split_apply(const Interval& A, const Interval& B, const Interval& rho);

// Improved second-order Euler-Maclaurin: for f piecewise C^2 with f, f', f''
// integrable on [0, inf) and f(x) -> 0,
//   sum_{n>=1} f(n) = int_0^inf f - f(0)/2 - f'(0+)/16 + O*(||f''||_1 / 16).
// The caller certifies the four functionals.
struct EmSecondOrderSpec {
  Interval integral;     // int_0^inf f
  Interval f_at_0;       // f(0)
  Interval fprime_at_0;  // lim_{x->0+} f'(x)
  Interval tv_fprime;    // ||f''||_1 = total variation of f' (must be >= 0)
};
Interval improved_em_second_order(const EmSecondOrderSpec& spec);

}  // namespace zetatail
