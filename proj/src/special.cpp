#include "zetatail/special.hpp"

#include <cmath>
#include <stdexcept>

#include "zetatail/zeta.hpp"

namespace zetatail {

namespace {

cpp_rational binom(int n, int k) {
  cpp_int num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return cpp_rational(num, den);
}

}  // namespace

BernoulliTable::BernoulliTable() {
  const int K = kMaxIndex;
  numbers_.resize(K + 1);
  numbers_[0] = 1;
  // b_m = -1/(m+1) * sum_{j<m} C(m+1, j) b_j
  for (int m = 1; m <= K; ++m) {
    cpp_rational acc = 0;
    for (int j = 0; j < m; ++j) acc += binom(m + 1, j) * numbers_[j];
    numbers_[m] = -acc / (m + 1);
  }
  // Monomial coefficients of B_k(x) = sum_i C(k,i) b_{k-i} x^i.
  poly_coeffs_.resize(K + 1);
  for (int k = 0; k <= K; ++k) {
    poly_coeffs_[k].resize(k + 1);
    for (int i = 0; i <= k; ++i) poly_coeffs_[k][i] = binom(k, i) * numbers_[k - i];
  }
}

const cpp_rational& BernoulliTable::number(int k) const {
  if (k < 0 || k > kMaxIndex) throw DomainError("Bernoulli index out of range");
  return numbers_[k];
}

Interval BernoulliTable::poly(int k, const Interval& x) const {
  if (k < 0 || k > kMaxIndex) throw DomainError("Bernoulli index out of range");
  if (!Interval::from_endpoints(0.0, 1.0).contains(x))
    throw DomainError("Bernoulli polynomial argument must lie in [0,1]");
  // Horner evaluation in interval arithmetic.
  Interval acc = Interval::from_rational(poly_coeffs_[k][k]);
  for (int i = k - 1; i >= 0; --i)
    acc = acc * x + Interval::from_rational(poly_coeffs_[k][i]);
  return acc;
}

Interval BernoulliTable::sup_norm_bound(int k) const {
  if (k < 2 || k > kMaxIndex) throw DomainError("sup-norm bound needs 2 <= k <= K_max");
  // 2 zeta(k) k! / (2 pi)^k
  Interval fact(1);
  for (int i = 2; i <= k; ++i) fact *= Interval::from_long(i);
  return 2 * zeta_int(k) * fact / pow_si(2 * Interval::pi(), k);
}

const BernoulliTable& BernoulliTable::instance() {
  static const BernoulliTable table;
  return table;
}

Interval zeta_int(int k) {
  if (k < 2) throw DomainError("zeta_int requires k >= 2");
  // Even k: closed form zeta(k) = (-1)^{k/2+1} b_k (2 pi)^k / (2 k!), exact up
  // to the working precision.
  if (k % 2 == 0 && k <= BernoulliTable::kMaxIndex) {
    const cpp_rational& bk = BernoulliTable::instance().number(k);
    Interval fact(1);
    for (int i = 2; i <= k; ++i) fact *= Interval::from_long(i);
    Interval v = Interval::from_rational(bk) * pow_si(2 * Interval::pi(), k) / (2 * fact);
    return (k / 2) % 2 == 0 ? -v : v;
  }
  // Otherwise partial sum to N plus an Euler-Maclaurin tail bracket: for the
  // completely monotone f(x) = x^{-k},
  //   sum_{n>N} f(n) = 1/((k-1)N^{k-1}) - 1/(2N^k) + k/(12 N^{k+1}) + R,
  //   -k(k+1)(k+2)/(720 N^{k+3}) <= R <= 0.
  const long N = (k >= 8) ? 64 : 1024;
  Interval sum;
  for (long n = 1; n <= N; ++n) sum += Interval::from_long(1) / pow_si(Interval::from_long(n), k);
  const Interval Ni = Interval::from_long(N);
  const Interval ki = Interval::from_long(k);
  const Interval main = 1 / ((ki - 1) * pow_si(Ni, k - 1)) - 1 / (2 * pow_si(Ni, k)) +
                        ki / (12 * pow_si(Ni, k + 1));
  const Interval rem = ki * (ki + 1) * (ki + 2) / (720 * pow_si(Ni, k + 3));
  return sum + main + Interval::hull(Interval(), -rem);
}

std::pair<Interval, Interval> harmonic_bounds(const Interval& X) {
  if (!X.certainly_ge(Interval::from_long(1))) throw DomainError("harmonic_bounds needs X >= 1");
  const Interval base = log(X) + Interval::euler_gamma();
  const Interval lower = base - Interval::from_ratio(2, 3) / X;
  const Interval upper = base + Interval::from_ratio(1, 2) / X;
  return {lower, upper};
}

Interval power_sum_enclosure(const Interval& alpha, const Interval& X) {
  if (!alpha.certainly_positive()) throw DomainError("power_sum_enclosure needs alpha > 0");
  if (alpha.contains(1.0)) throw DomainError("power_sum_enclosure needs alpha != 1");
  if (!X.certainly_positive()) throw DomainError("power_sum_enclosure needs X > 0");
  // sum_{n<=X} n^{-alpha} = zeta(alpha) - T_M where T_M is the (regularized)
  // tail over m >= M, M = floor(X)+1.  Convexity of u^{-alpha} gives the
  // sharp two-sided bracket
  //   J(M) + M^{-alpha}/2  <=  T_M  <=  J(M - 1/2),
  // with J(a) = a^{1-alpha}/(alpha-1) (the regularized integral to infinity).
  // This bracket stays within the classical +-1/(2X^alpha) band away from
  // the jumps of floor(X) and remains valid arbitrarily close to them.
  const long M = static_cast<long>(std::floor(X.lo_double())) + 1;
  if (X.hi_double() >= static_cast<double>(M))
    throw DomainError("power_sum_enclosure: X must not straddle an integer");
  const Interval Mi = Interval::from_long(M);
  const Interval am1 = alpha - 1;
  const Interval j_m = pow(Mi, 1 - alpha) / am1;
  const Interval j_mh = pow(Mi - Interval::from_ratio(1, 2), 1 - alpha) / am1;
  const Interval tail_lo = j_m + pow(Mi, -alpha) / 2;
  const Interval tail = Interval::hull(tail_lo, j_mh);
  return zeta_real(alpha) - tail;
}

StieltjesBounds stieltjes_zeta_bounds(const Interval& sigma) {
  if (!sigma.certainly_positive() || !sigma.certainly_lt(Interval::from_long(2)) ||
      sigma.contains(1.0))
    throw DomainError("stieltjes_zeta_bounds needs sigma in (0,2), sigma != 1");
  StieltjesBounds out;
  out.lower = Interval::from_long(1) / (sigma - 1);
  if (sigma.certainly_gt(Interval::from_long(1))) {
    out.has_upper = true;
    out.upper = out.lower + zeta_int(2) - 1;
  }
  return out;
}

RhoCoefficients rho_split(const Interval& rho) {
  RhoCoefficients out;
  if (rho.certainly_positive()) {
    out.is_upper = true;
  } else if (rho.certainly_negative() && rho.certainly_gt(Interval::from_long(-1))) {
    out.is_upper = false;
  } else {
    throw DomainError("rho_split needs rho > 0 or -1 < rho < 0");
  }
  out.a_coef = 1 + rho;
  out.b_coef = 1 + Interval::from_long(1) / rho;
  return out;
}

Interval rho_split_apply(const Interval& A, const Interval& B, const Interval& rho) {
  if (!A.certainly_nonnegative() || !B.certainly_nonnegative())
    throw DomainError("rho_split_apply needs A, B >= 0");
  const RhoCoefficients c = rho_split(rho);
  return c.a_coef * sqr(A) + c.b_coef * sqr(B);
}

Interval improved_em_second_order(const EmSecondOrderSpec& spec) {
  if (!spec.tv_fprime.certainly_nonnegative())
    throw DomainError("improved_em_second_order needs a certified nonnegative TV bound");
  const Interval main =
      spec.integral - spec.f_at_0 / 2 - spec.fprime_at_0 / Interval::from_long(16);
  const Interval rad = spec.tv_fprime.upper_endpoint() / Interval::from_long(16);
  return Interval::hull(main - rad, main + rad);
}

}  // namespace zetatail
