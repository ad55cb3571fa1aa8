// Certified enclosures of the Riemann zeta function via Euler-Maclaurin
// summation, the truncated-approximation constant D, and the mean-value
// constant E.
#pragma once

#include "zetatail/interval.hpp"

namespace zetatail {

// Euler-Maclaurin truncation parameters: partial sum to N-1 plus correction
// terms up to order K.  Valid for Re(s) > 1 - K, s != 1.
struct ZetaEMParams {
  long N = 32;  // truncation point, >= 2
  int K = 10;   // correction order, even, 2 <= K <= BernoulliTable::kMaxIndex
};

// Default policy: N = max(2 ceil(|t|), 32), K = 10.  Any larger N is valid.
ZetaEMParams default_zeta_params(const Interval& t_abs_upper);

// Encloses zeta(s) over the rectangle s.  Throws if the box contains the
// pole s = 1 or if Re(s) <= 1 - K.
ComplexInterval zeta_enclosure(const ComplexInterval& s, const ZetaEMParams& params);
ComplexInterval zeta_enclosure(const ComplexInterval& s);

// Real-argument enclosure of zeta(alpha), alpha != 1 (analytic continuation
// for alpha < 1).  Uses a high-order truncation for tight constants.
Interval zeta_real(const Interval& alpha);

// The truncated-approximation constant D(C):
//   |zeta(s) - sum_{n<=X} n^{-s} - X^{1-s}/(s-1)| <= D/X^sigma
// for 0 < sigma <= 1, |t| <= X, X >= C.  D decreases in C, D(1) < 5/6, and
// D(C) -> 7/12 + zeta(3)/(4 pi^2 (pi-1)) as C -> inf.
struct TruncationConstant {
  long C = 1;
  Interval D;
};
TruncationConstant d_constant(long C);

// D(C)/X^sigma where C = floor(X); bound on the truncation residual above.
Interval truncated_zeta_error(const Interval& sigma, const Interval& t_abs,
                              const Interval& X);

// E = 2 pi sqrt(1 + (2/3) sqrt(6/5)), the mean-value constant.
Interval meanvalue_constant_E();

}  // namespace zetatail
