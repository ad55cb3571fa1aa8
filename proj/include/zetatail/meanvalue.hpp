// Mean-square bounds for zeta on vertical segments and the tail bounds
// derived from them: general segment estimates with a fixed or moving
// Dirichlet-series cutoff, the assembled explicit constants for
// int_1^T |zeta(sigma+it)|^2 dt on the whole strip 0 <= sigma <= 1, the
// integration-by-parts transfer, the resulting tail bound for
// int_T^inf |zeta(s)/s|^2 dt, and the simplified two-decimal constants.
#pragma once

#include <array>
#include <functional>
#include <utility>

#include "zetatail/interval.hpp"
#include "zetatail/report.hpp"

namespace zetatail {

// Enclosures of int_{T1}^{T2} |zeta(sigma+it)|^2 dt from one splitting
// parameter rho: the upper bound uses +rho, the lower bound uses -rho
// (available only when rho < 1; otherwise the trivial lower bound 0 is kept).
struct SegmentBound {
  Interval sigma;
  Interval T1;
  Interval T2;
  Interval upper;
  Interval lower;
};

// Segment bound with the Dirichlet cutoff fixed at X = T2.
// Requires sigma in [1/2, 1] (point 1/2 and 1 handled exactly), 1 <= T1 <= T2,
// rho > 0.
SegmentBound segment_bound_fixed_cutoff(const Interval& sigma, const Interval& T1,
                                        const Interval& T2, const Interval& rho);

// Segment bound with the moving cutoff X = t; the off-diagonal terms are
// handled through the Montgomery-Vaughan/Preissmann inequality.
// Same preconditions as above.
SegmentBound segment_bound_moving_cutoff(const Interval& sigma, const Interval& T1,
                                         const Interval& T2, const Interval& rho);

// All constants produced by the second-approach assembly pipeline at the
// built-in threshold T0 = 4, together with their published roundings
// (exact rationals).  Upper-bound constants are rounded up at five decimals;
// so are the magnitudes of lower-bound constants.
struct SecondApproachConstants {
  // shared ingredients
  Interval dz;       // truncation constant D at C = 4
  Interval e_const;  // mean-value constant E
  Interval h_const;  // zeta(2) - 1
  Interval k1;       // e^{3/4} - 1
  Interval k2;       // functional-equation transfer constant

  // sigma = 1/2 segment constants (T sqrt(log T) and T coefficients)
  Interval cz12_ua, cz12_ub, cz12_la, cz12_lb;
  // sigma = 1 segment constants (log T coefficients), and the u-generic
  // variants used by the sigma = 0 case
  Interval cz1_u, cz1_l, cz1gen_u, cz1gen_l;
  // coarser sigma = 1 merge with the log factor absorbed (sqrt(T) coefficient)
  Interval cz1_coarse;
  // sigma in (1/2,1) error decomposition over the channels
  // {1, 1/(1-s), 1/(1-s)^2, 1/(2s-1), 1/((1-s)(2s-1))}
  std::array<Interval, 5> cz121_u, cz121_l;
  // generic-lower-extremum remainder coefficients over {1, 1/s, 1/(1-2s)}
  std::array<Interval, 3> n_u, n_l;
  // merged remainder coefficients after the integration step
  Interval s_u_1, s_u_12, s_u_0, s_l_1, s_l_12, s_l_0;
  // final linear-term coefficients for sigma in (0,1/2)
  Interval l_u_1, l_u_11, l_u_12, l_u_0;
  Interval l_l_1, l_l_11, l_l_12, l_l_0;
  // sigma = 0 coefficients
  Interval cz0_u_a, cz0_u_b, cz0_l_a;
  // tail-bound constants for sigma = 1/2 and sigma = 1
  Interval c12_a, c12_b, c1_a, c1_b;

  // published five-decimal roundings
  cpp_rational cz12_ua_pub{2, 1};
  cpp_rational cz12_ub_pub{211524, 10000};
  cpp_rational cz12_la_pub{2, 1};
  cpp_rational cz12_lb_pub{99061, 100000};
  cpp_rational cz1_u_pub{2223757, 100000};
  cpp_rational cz1_l_mag_pub{20288, 100000};  // -roundup(cz1_l)
  std::array<cpp_rational, 5> cz121_u_pub{
      cpp_rational{8140, 100000}, cpp_rational{748615, 100000},
      cpp_rational{180183, 100000}, cpp_rational{594688, 100000},
      cpp_rational{0, 1}};
  std::array<cpp_rational, 5> cz121_l_pub{
      cpp_rational{69962, 100000}, cpp_rational{415475, 100000},
      cpp_rational{1, 1}, cpp_rational{463011, 100000},
      cpp_rational{70046, 100000}};
  std::array<cpp_rational, 3> n_u_pub{cpp_rational{666238, 100000},
                                      cpp_rational{826495, 100000},
                                      cpp_rational{469872, 100000}};
  cpp_rational l_u_1_pub{4549404, 100000};
  cpp_rational l_u_11_pub{697134, 100000};
  cpp_rational l_u_12_pub{4408609, 100000};
  cpp_rational l_u_0_pub{2240776, 100000};
  cpp_rational l_l_1_pub{3722909, 100000};
  cpp_rational l_l_11_pub{697134, 100000};
  cpp_rational l_l_12_pub{4238738, 100000};
  cpp_rational l_l_0_pub{1546041, 100000};
  cpp_rational cz0_u_a_pub{398664, 100000};
  cpp_rational cz0_u_b_pub{736493, 100000};
  cpp_rational cz0_l_a_pub{12432, 100000};
  cpp_rational c12_a_pub{4, 1};
  cpp_rational c12_b_pub{4600343, 100000};
  cpp_rational c1_a_pub{2504878, 100000};
  cpp_rational c1_b_pub{1594452, 100000};
};

// Runs the full assembly once and caches it.
const SecondApproachConstants& second_approach_constants();

// Upper/lower bounds for int_1^T |zeta(sigma+it)|^2 dt, valid for T >= 4 and
// sigma in [0, 1] (sigma must not straddle 0, 1/2 or 1).  Evaluates the
// published-constant forms.
BoundReport finite_mean_square_upper(const Interval& sigma, const Interval& T);
BoundReport finite_mean_square_lower(const Interval& sigma, const Interval& T);

// Upper bound for int_T^inf |zeta(sigma+it)/(sigma+it)|^2 dt via the
// mean-value route, valid for T >= 4 and sigma in (0, 1].  sigma = 0 is
// rejected: the corresponding integral diverges.
BoundReport tail_bound_second_approach(const Interval& sigma, const Interval& T);

// Integration-by-parts transfer: given enclosures for f, f', the partial
// derivative of the main term F, and the remainders r^+/r^- on [a, b],
// returns rigorous (upper, lower) enclosures of the two displayed integrals.
// LeftAnchored requires f(a) = 0 and f' >= 0; RightAnchored requires
// f(b) = 0 and f' <= 0.
enum class ExtensionCase { LeftAnchored, RightAnchored };

struct ExtensionSpec {
  ExtensionCase kind = ExtensionCase::LeftAnchored;
  std::function<Interval(const Interval&)> f;
  std::function<Interval(const Interval&)> f_prime;
  std::function<Interval(const Interval&)> dF_du;  // d/du of the main term
  std::function<Interval(const Interval&)> r_plus;
  std::function<Interval(const Interval&)> r_minus;
};

std::pair<Interval, Interval> extension_transfer(const ExtensionSpec& spec,
                                                 const Interval& a, const Interval& b,
                                                 int cells = 256);

// The simplified two-decimal constants, recomputed from the assembled
// values and rounded per the documented convention (round-up, except the
// one coefficient that enters negatively, which is rounded down).
struct HeadlineConstants {
  // finite mean-square forms, by sigma case
  cpp_rational mz_1;             // sqrt(T) coefficient at sigma = 1
  cpp_rational mz_121;           // error numerator for 1/2 < sigma < 1
  cpp_rational mz_12_a, mz_12_b; // T sqrt(log T) and T coefficients at 1/2
  cpp_rational mz_012;           // error numerator for 0 < sigma < 1/2
  cpp_rational mz_0;             // T log T coefficient at sigma = 0
  // tail forms, by sigma case
  cpp_rational t_1;                                       // sigma = 1
  cpp_rational t_121_num_a, t_121_num_b, t_121_opt;       // 1/2 < sigma < 1
  cpp_rational t_12_num, t_12_opt;                        // sigma = 1/2
  cpp_rational t_012_num_a, t_012_num_b, t_012_num_c,
      t_012_num_d, t_012_opt;                             // 0 < sigma < 1/2
};

HeadlineConstants simplify_to_headline();

// Evaluation of the simplified tail forms (used for threshold comparisons
// and dominance checks).  `use_asymptotic` selects the second member of each
// published pair; thresholds differ per case and are enforced.
BoundReport tail_bound_headline(const Interval& sigma, const Interval& T,
                                bool use_asymptotic);

}  // namespace zetatail
