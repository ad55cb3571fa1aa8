#include "zetatail/zeta.hpp"

#include <cmath>

#include "zetatail/special.hpp"

namespace zetatail {

namespace {

// Upper bound on |s| over the box.
Interval abs_upper(const ComplexInterval& s) { return s.abs().upper_endpoint(); }

}  // namespace

ZetaEMParams default_zeta_params(const Interval& t_abs_upper) {
  ZetaEMParams p;
  const double t = t_abs_upper.hi_double();
  long n = 32;
  if (t > 16.0) n = 2 * static_cast<long>(std::ceil(t)) + 2;
  p.N = n;
  p.K = 10;
  return p;
}

ComplexInterval zeta_enclosure(const ComplexInterval& s, const ZetaEMParams& params) {
  const long N = params.N;
  const int K = params.K;
  if (N < 2) throw DomainError("zeta_enclosure needs N >= 2");
  if (K < 2 || K % 2 != 0 || K > BernoulliTable::kMaxIndex)
    throw DomainError("zeta_enclosure needs even K in [2, K_max]");
  const Interval& sigma = s.re();
  if (s.re().contains(1.0) && s.im().contains_zero())
    throw DomainError("zeta_enclosure: box contains the pole s = 1");
  if (!sigma.certainly_gt(Interval::from_long(1 - K)))
    throw DomainError("zeta_enclosure: Re(s) <= 1 - K");

  const BernoulliTable& bt = BernoulliTable::instance();

  // Partial sum sum_{n=1}^{N-1} n^{-s}, with n^{-s} = exp(-s log n).
  ComplexInterval sum;
  for (long n = 1; n < N; ++n) {
    const Interval ln = log(Interval::from_long(n));
    sum = sum + cexp(-(ln * s));
  }

  const Interval lnN = log(Interval::from_long(N));
  const ComplexInterval one = ComplexInterval::from_real(Interval::from_long(1));
  // N^{1-s}/(s-1)
  const ComplexInterval pole_term = cexp(lnN * (one - s)) / (s - one);
  // N^{-s}/2
  const ComplexInterval n_pow_minus_s = cexp(-(lnN * s));
  ComplexInterval result = sum + pole_term + n_pow_minus_s / Interval::from_long(2);

  // Correction terms: sum over even k in [2, K] of
  //   (b_k / k!) a_k(s) N^{1-s-k},  a_k(s) = s (s+1) ... (s+k-2).
  ComplexInterval rising = s;  // a_2(s) = s
  cpp_rational factorial = 2;  // 2!
  const ComplexInterval n_pow_1_minus_s = cexp(lnN * (one - s));
  ComplexInterval n_pow = n_pow_1_minus_s / sqr(Interval::from_long(N));  // N^{1-s-2}
  const Interval invN = Interval::from_long(1) / Interval::from_long(N);
  for (int k = 2; k <= K; ++k) {
    if (k % 2 == 0) {
      const Interval coef = Interval::from_rational(bt.number(k) / factorial);
      result = result + coef * (rising * n_pow);
    }
    // advance to k+1: a_{k+1}(s) = a_k(s) (s + k - 1), (k+1)!, N^{1-s-(k+1)}
    rising = rising * (s + ComplexInterval::from_real(Interval::from_long(k - 1)));
    factorial *= k + 1;
    n_pow = invN * n_pow;
  }

  // Remainder: |R| <= (sup|B_K| / K!) |A_K(s)| N^{1-sigma-K} / (sigma+K-1),
  // A_K(s) = s (s+1) ... (s+K-1); "rising" now holds A_K(s).
  Interval a_abs = abs_upper(rising);
  cpp_rational k_factorial = 1;
  for (int i = 2; i <= K; ++i) k_factorial *= i;
  const Interval supB = bt.sup_norm_bound(K);
  const Interval skm1 = sigma + Interval::from_long(K - 1);
  const Interval n_dec = pow(Interval::from_long(N), 1 - sigma - Interval::from_long(K));
  const Interval R =
      (supB / Interval::from_rational(k_factorial) * a_abs * n_dec / skm1).upper_endpoint();
  const Interval pad = Interval::hull(-R, R);
  result.re() += pad;
  result.im() += pad;
  return result;
}

ComplexInterval zeta_enclosure(const ComplexInterval& s) {
  return zeta_enclosure(s, default_zeta_params(abs(s.im())));
}

Interval zeta_real(const Interval& alpha) {
  if (alpha.contains(1.0)) throw DomainError("zeta_real: pole at alpha = 1");
  ZetaEMParams p;
  p.N = 128;
  p.K = 16;
  while (!alpha.certainly_gt(Interval::from_long(1 - p.K))) {
    p.K += 8;
    if (p.K > BernoulliTable::kMaxIndex)
      throw DomainError("zeta_real: alpha too far left for available corrections");
  }
  return zeta_enclosure(ComplexInterval::from_real(alpha), p).re();
}

TruncationConstant d_constant(long C) {
  if (C < 1) throw DomainError("d_constant needs C >= 1");
  TruncationConstant out;
  out.C = C;
  // Evaluation degenerates for astronomically large C; the bound is monotone
  // decreasing, so clamping is sound.
  const long Ce = (C > 10000) ? 10000 : C;
  const Interval Ci = Interval::from_long(Ce);
  const Interval one(1);
  const Interval s1 = sqrt(one + one / sqr(Ci));      // sqrt(1 + 1/C^2)
  const Interval s2 = sqrt(one + 2 / sqr(Ci));        // sqrt(1 + 2/C^2)
  const Interval pi = Interval::pi();
  const Interval q = (s1 + 1) / (2 * pi);             // Q_C < 1
  const Interval zeta3 = zeta_real(Interval::from_long(3));
  const Interval mid = s1 * (Interval::from_ratio(1, 12) +
                             zeta3 / (4 * pow_si(pi, 3) * (one - q)) * s2);
  const Interval zc2 = zeta_real(Interval::from_long(Ce + 2));
  const Interval last = zc2 / (pi * pow_si(2 * pi, Ce + 1)) * s1 *
                        pow_si(s1 + 1 + one / Ci, Ce + 1);
  out.D = Interval::from_ratio(1, 2) + mid + last;
  return out;
}

Interval truncated_zeta_error(const Interval& sigma, const Interval& t_abs,
                              const Interval& X) {
  if (!sigma.certainly_positive() || !sigma.certainly_le(Interval::from_long(1)))
    throw DomainError("truncated_zeta_error needs 0 < sigma <= 1");
  if (!X.certainly_ge(t_abs) || !X.certainly_ge(Interval::from_long(1)))
    throw DomainError("truncated_zeta_error needs X >= max(1, |t|)");
  const long C = static_cast<long>(std::floor(X.lo_double()));
  const Interval D = d_constant(C).D;
  return D / pow(X, sigma);
}

Interval meanvalue_constant_E() {
  const Interval inner = sqrt(Interval::from_ratio(6, 5));
  return 2 * Interval::pi() * sqrt(1 + Interval::from_ratio(2, 3) * inner);
}

}  // namespace zetatail
