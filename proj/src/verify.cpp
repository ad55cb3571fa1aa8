#include "zetatail/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "zetatail/meanvalue.hpp"
#include "zetatail/smoothing.hpp"
#include "zetatail/special.hpp"

namespace zetatail {

namespace {

// Powers log^1(n)..log^4(n), reused across every panel evaluation.
const std::array<Interval, 4>& log_powers(long n) {
  static std::vector<std::array<Interval, 4>> cache{
      {Interval(), Interval(), Interval(), Interval()},
      {Interval(), Interval(), Interval(), Interval()}};
  while (static_cast<long>(cache.size()) <= n) {
    const Interval ln = log(Interval::from_long(static_cast<long>(cache.size())));
    const Interval ln2 = sqr(ln);
    cache.push_back({ln, ln2, ln2 * ln, sqr(ln2)});
  }
  return cache[static_cast<std::size_t>(n)];
}

const Interval& log_of(long n) { return log_powers(n)[0]; }

// zeta and its first `order` derivatives on the box (order <= 4), evaluated
// in a single Euler-Maclaurin pass so every term's exponential is shared.
struct EmDerivs {
  std::array<ComplexInterval, 5> d;
};

EmDerivs em_core(const ComplexInterval& s, const ZetaEMParams& params, int order) {
  const long N = params.N;
  const int K = params.K;
  if (order < 0 || order > 4) throw DomainError("em_core supports orders 0..4");
  if (N < 2) throw DomainError("em_core needs N >= 2");
  if (K < 2 || K % 2 != 0 || K > BernoulliTable::kMaxIndex)
    throw DomainError("em_core needs even K in [2, K_max]");
  const Interval& sigma = s.re();
  if (s.re().contains(1.0) && s.im().contains_zero())
    throw DomainError("em_core: box contains the pole s = 1");
  if (!sigma.certainly_gt(Interval::from_long(1 - K)))
    throw DomainError("em_core: Re(s) <= 1 - K");

  const BernoulliTable& bt = BernoulliTable::instance();
  EmDerivs out;

  // Partial sums: the d-th derivative of n^{-s} is (-log n)^d n^{-s}.
  out.d[0] = ComplexInterval::from_real(Interval::from_long(1));  // n = 1
  for (long n = 2; n < N; ++n) {
    const auto& lp = log_powers(n);
    const ComplexInterval term = cexp(-(lp[0] * s));
    out.d[0] = out.d[0] + term;
    if (order >= 1) out.d[1] = out.d[1] - lp[0] * term;
    if (order >= 2) out.d[2] = out.d[2] + lp[1] * term;
    if (order >= 3) out.d[3] = out.d[3] - lp[2] * term;
    if (order >= 4) out.d[4] = out.d[4] + lp[3] * term;
  }

  // Pole block N^{1-s}/(s-1) = P Q with P' = -L P and Q' = -Q^2.
  const auto& lpN = log_powers(N);
  const Interval& L = lpN[0];
  const ComplexInterval one = ComplexInterval::from_real(Interval::from_long(1));
  const ComplexInterval P = cexp(L * (one - s));
  const ComplexInterval Q = one / (s - one);
  const ComplexInterval PQ = P * Q;
  out.d[0] = out.d[0] + PQ;
  if (order >= 1) {
    const ComplexInterval PQ2 = PQ * Q;
    out.d[1] = out.d[1] - L * PQ - PQ2;
    if (order >= 2) {
      const ComplexInterval PQ3 = PQ2 * Q;
      out.d[2] = out.d[2] + lpN[1] * PQ + Interval::from_long(2) * (L * PQ2) +
                 Interval::from_long(2) * PQ3;
      if (order >= 3) {
        const ComplexInterval PQ4 = PQ3 * Q;
        out.d[3] = out.d[3] - lpN[2] * PQ - Interval::from_long(3) * (lpN[1] * PQ2) -
                   Interval::from_long(6) * (L * PQ3) - Interval::from_long(6) * PQ4;
        if (order >= 4) {
          const ComplexInterval PQ5 = PQ4 * Q;
          out.d[4] = out.d[4] + lpN[3] * PQ + Interval::from_long(4) * (lpN[2] * PQ2) +
                     Interval::from_long(12) * (lpN[1] * PQ3) +
                     Interval::from_long(24) * (L * PQ4) + Interval::from_long(24) * PQ5;
        }
      }
    }
  }

  // Boundary block N^{-s}/2: d-th derivative is (-L)^d N^{-s}/2.
  const ComplexInterval half_term = cexp(-(L * s)) / Interval::from_long(2);
  out.d[0] = out.d[0] + half_term;
  if (order >= 1) out.d[1] = out.d[1] - L * half_term;
  if (order >= 2) out.d[2] = out.d[2] + lpN[1] * half_term;
  if (order >= 3) out.d[3] = out.d[3] - lpN[2] * half_term;
  if (order >= 4) out.d[4] = out.d[4] + lpN[3] * half_term;

  // Correction terms (b_k / k!) a_k(s) N^{1-s-k} with a_k(s) = s...(s+k-2);
  // the d-th derivative mixes a_k^{(j)} with powers of -L by Leibniz.
  ComplexInterval a0 = s;    // a_2
  ComplexInterval a1 = one;  // a_2'
  ComplexInterval a2, a3, a4;
  cpp_rational factorial = 2;
  ComplexInterval n_pow = P / sqr(Interval::from_long(N));  // N^{1-s-2}
  const Interval invN = Interval::from_long(1) / Interval::from_long(N);
  for (int k = 2; k <= K; ++k) {
    if (k % 2 == 0) {
      const Interval coef = Interval::from_rational(bt.number(k) / factorial);
      out.d[0] = out.d[0] + coef * (a0 * n_pow);
      if (order >= 1) out.d[1] = out.d[1] + coef * ((a1 - L * a0) * n_pow);
      if (order >= 2)
        out.d[2] = out.d[2] +
                   coef * ((a2 - Interval::from_long(2) * (L * a1) + lpN[1] * a0) * n_pow);
      if (order >= 3)
        out.d[3] = out.d[3] + coef * ((a3 - Interval::from_long(3) * (L * a2) +
                                       Interval::from_long(3) * (lpN[1] * a1) - lpN[2] * a0) *
                                      n_pow);
      if (order >= 4)
        out.d[4] = out.d[4] + coef * ((a4 - Interval::from_long(4) * (L * a3) +
                                       Interval::from_long(6) * (lpN[1] * a2) -
                                       Interval::from_long(4) * (lpN[2] * a1) + lpN[3] * a0) *
                                      n_pow);
    }
    const ComplexInterval shift = s + ComplexInterval::from_real(Interval::from_long(k - 1));
    a4 = a4 * shift + Interval::from_long(4) * a3;
    a3 = a3 * shift + Interval::from_long(3) * a2;
    a2 = a2 * shift + Interval::from_long(2) * a1;
    a1 = a1 * shift + a0;
    a0 = a0 * shift;
    factorial *= k + 1;
    n_pow = invN * n_pow;
  }

  // Remainder R = -(A_K(s)/K!) int_N^inf B_K({x}) x^{-s-K} dx with
  // A_K(s) = s...(s+K-1) held in a0 (derivatives in a1..a4).  Its d-th
  // derivative mixes A_K^{(j)} with log-weighted tail integrals
  //   J_m = int_N^inf log^m(x) x^{-sigma-K} dx,
  //   J_0 = N^{1-sigma-K}/(sigma+K-1),
  //   J_m = (log^m(N) N^{1-sigma-K} + m J_{m-1}) / (sigma+K-1).
  cpp_rational k_factorial = 1;
  for (int i = 2; i <= K; ++i) k_factorial *= i;
  const Interval scale = bt.sup_norm_bound(K) / Interval::from_rational(k_factorial);
  const Interval skm1 = sigma + Interval::from_long(K - 1);
  const Interval n_dec = pow(Interval::from_long(N), 1 - sigma - Interval::from_long(K));
  std::array<Interval, 5> J;
  J[0] = n_dec / skm1;
  Interval lpow(1);
  for (int m = 1; m <= order; ++m) {
    lpow *= L;
    J[m] = (lpow * n_dec + m * J[m - 1]) / skm1;
  }
  const std::array<Interval, 5> a_abs = {
      a0.abs().upper_endpoint(), a1.abs().upper_endpoint(), a2.abs().upper_endpoint(),
      a3.abs().upper_endpoint(), a4.abs().upper_endpoint()};
  static constexpr int kBinom[5][5] = {
      {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
  for (int d = 0; d <= order; ++d) {
    Interval bound;
    for (int j = 0; j <= d; ++j)
      bound += Interval::from_long(kBinom[d][j]) * a_abs[j] * J[d - j];
    const Interval R = (scale * bound).upper_endpoint();
    const Interval pad = Interval::hull(-R, R);
    out.d[d].re() += pad;
    out.d[d].im() += pad;
  }
  return out;
}

// Parameters tuned for quadrature: a short partial sum (N about t/4) traded
// against a deeper correction stack keeps evaluations cheap while the
// remainder stays far below the per-panel width budget.
ZetaEMParams quadrature_params(const cpp_rational& t_hi) {
  ZetaEMParams p;
  p.K = 20;
  const double t = t_hi.convert_to<double>();
  long n = 32;
  if (t > 128.0) n = static_cast<long>(std::ceil(t / 4.0)) + 1;
  p.N = n;
  return p;
}

// Quadrature runs at a reduced working precision: endpoint rounding stays
// orders of magnitude below the panel budgets, and every operation remains
// outward-rounded, so rigor is unaffected.
class PrecisionScope {
 public:
  explicit PrecisionScope(mpfr_prec_t bits) : saved_(default_precision()) {
    set_default_precision(bits);
  }
  ~PrecisionScope() { set_default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

// t-derivatives of f(t) = |zeta(sigma+it)|^2 from the s-derivatives Z_d
// (Leibniz on Z conj(Z) with d/dt Z_d = i Z_{d+1}):
//   f     = |Z_0|^2
//   f'    = -2 Im(conj(Z_0) Z_1)
//   f''   = -2 Re(conj(Z_0) Z_2) + 2 |Z_1|^2
//   f'''  =  2 Im(conj(Z_0) Z_3) - 6 Im(conj(Z_1) Z_2)
//   f'''' =  2 Re(conj(Z_0) Z_4) - 8 Re(conj(Z_1) Z_3) + 6 |Z_2|^2
Interval f_deriv(const EmDerivs& z, int d) {
  switch (d) {
    case 0: return z.d[0].abs2();
    case 1: return -2 * (z.d[0].conj() * z.d[1]).im();
    case 2: return -2 * (z.d[0].conj() * z.d[2]).re() + 2 * z.d[1].abs2();
    case 3: return 2 * (z.d[0].conj() * z.d[3]).im() - 6 * (z.d[1].conj() * z.d[2]).im();
    default:
      return 2 * (z.d[0].conj() * z.d[4]).re() - 8 * (z.d[1].conj() * z.d[3]).re() +
             6 * z.d[2].abs2();
  }
}

// t-derivatives of v(t) = 1/(sigma^2 + t^2) up to order 4.
std::array<Interval, 5> v_derivs(const Interval& sigma, const Interval& t) {
  const Interval u = sqr(sigma) + sqr(t);
  const Interval u2 = sqr(u);
  const Interval u3 = u2 * u;
  const Interval t2 = sqr(t);
  std::array<Interval, 5> v;
  v[0] = 1 / u;
  v[1] = -2 * t / u2;
  v[2] = -2 / u2 + 8 * t2 / u3;
  v[3] = 24 * t / u3 - 48 * (t2 * t) / (u2 * u2);
  v[4] = 24 / u3 - 288 * t2 / (u2 * u2) + 384 * sqr(t2) / (u2 * u3);
  return v;
}

// Upper bound for the fourth t-derivative of the integrand over [lo, hi],
// from one wide-box evaluation.  The bound is coarse but enters the panel
// enclosures only multiplied by the fifth power of the panel length.
Interval fourth_derivative_bound(const Interval& sigma, const cpp_rational& lo,
                                 const cpp_rational& hi, Integrand kind) {
  const Interval tbox =
      Interval::hull(Interval::from_rational(lo), Interval::from_rational(hi));
  const EmDerivs z = em_core(ComplexInterval(sigma, tbox), quadrature_params(hi), 4);
  Interval g4 = f_deriv(z, 4);
  if (kind == Integrand::ZetaOverSSquared) {
    const auto v = v_derivs(sigma, tbox);
    g4 = g4 * v[0] + 4 * f_deriv(z, 3) * v[1] + 6 * f_deriv(z, 2) * v[2] +
         4 * f_deriv(z, 1) * v[3] + f_deriv(z, 0) * v[4];
  }
  return abs(g4).upper_endpoint();
}

// Panel integral enclosure by a fourth-order midpoint rule.  Taylor at the
// midpoint with the quartic Lagrange remainder gives
//   int = w f(m) + f''(m) w^3/24 + E,  E in [-1,1] M4 w^5/1920,
// since the odd terms integrate to zero over the symmetric panel; M4 is the
// regional bound for |f''''|.  All zeta data comes from one point
// evaluation at the midpoint, so no box dependency widths enter the value.
Interval panel_enclosure(const Interval& sigma, const cpp_rational& a, const cpp_rational& b,
                         Integrand kind, const Interval& m4) {
  const Interval ia = Interval::from_rational(a);
  const Interval ib = Interval::from_rational(b);
  const Interval w = ib - ia;
  const Interval m = Interval::from_rational((a + b) / 2);
  const EmDerivs zm = em_core(ComplexInterval(sigma, m), quadrature_params(b), 2);

  Interval f0 = f_deriv(zm, 0);
  Interval f2 = f_deriv(zm, 2);
  if (kind == Integrand::ZetaOverSSquared) {
    const Interval f1 = f_deriv(zm, 1);
    const auto v = v_derivs(sigma, m);
    f2 = f2 * v[0] + 2 * f1 * v[1] + f0 * v[2];
    f0 = f0 * v[0];
  }
  const Interval w2 = sqr(w);
  return w * f0 + f2 * (w2 * w) / 24 + Interval::hull(-m4, m4) * (sqr(w2) * w) / 1920;
}

// Dyadic blocks covering [t1, t2]; each carries one fourth-derivative bound.
struct Region {
  cpp_rational lo, hi;
  Interval m4;
};

std::vector<Region> build_regions(const Interval& sigma, const cpp_rational& t1,
                                  const cpp_rational& t2, Integrand kind) {
  std::vector<Region> regions;
  cpp_rational lo = t1;
  while (lo < t2) {
    cpp_rational hi = lo * 5 / 4;
    if (hi > t2) hi = t2;
    regions.push_back({lo, hi, fourth_derivative_bound(sigma, lo, hi, kind)});
    lo = hi;
  }
  return regions;
}

// Largest regional bound touching [a, b].
Interval region_bound(const std::vector<Region>& regions, const cpp_rational& a,
                      const cpp_rational& b) {
  Interval m4;
  for (const Region& r : regions)
    if (r.lo < b && a < r.hi) m4 = imax(m4, r.m4);
  return m4;
}

}  // namespace

ComplexInterval zeta_prime_enclosure(const ComplexInterval& s, const ZetaEMParams& params) {
  return em_core(s, params, 1).d[1];
}

ComplexInterval zeta_prime_enclosure(const ComplexInterval& s) {
  return zeta_prime_enclosure(s, default_zeta_params(abs(s.im())));
}

QuadratureResult integral_enclosure(const Interval& sigma, const cpp_rational& t1,
                                    const cpp_rational& t2, Integrand integrand,
                                    double target_width) {
  if (!(t1 > 0) || !(t2 > t1)) throw DomainError("integral_enclosure needs 0 < t1 < t2");
  if (!(target_width > 0)) throw DomainError("integral_enclosure needs a positive width target");

  const PrecisionScope scope(64);
  const double total_len = (t2 - t1).convert_to<double>();
  const double rate = target_width / total_len;  // width budget per unit length
  const std::vector<Region> regions = build_regions(sigma, t1, t2, integrand);

  std::vector<std::pair<cpp_rational, cpp_rational>> stack;
  const long seeds = std::max(1L, static_cast<long>(std::ceil(total_len)));
  for (long j = seeds; j-- > 0;)
    stack.emplace_back(t1 + (t2 - t1) * j / seeds, t1 + (t2 - t1) * (j + 1) / seeds);

  QuadratureResult out;
  long attempts = 0;
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (++attempts > 4000000) throw DomainError("integral_enclosure: panel limit exceeded");
    const Interval enc = panel_enclosure(sigma, a, b, integrand, region_bound(regions, a, b));
    const double len = (b - a).convert_to<double>();
    const double budget = rate * len;
    if (enc.width_double() <= budget) {
      out.value += enc;
      ++out.panels;
      continue;
    }
    if (len < 1e-7)
      throw DomainError("integral_enclosure: width target unreachable at this precision");
    // On coarse panels the deviation scales like the fifth power of the panel
    // length and the budget like the length, so the fourth root of the excess
    // sets the split; finer regimes just re-split once more.
    const double excess = enc.width_double() / budget;
    const long parts =
        std::clamp(static_cast<long>(std::ceil(std::pow(excess, 0.25))), 2L, 32L);
    for (long j = parts; j-- > 0;)
      stack.emplace_back(a + (b - a) * j / parts, a + (b - a) * (j + 1) / parts);
  }
  return out;
}

FiniteContainmentReport check_finite_mean_square(const Interval& sigma, long T,
                                                 double target_width) {
  FiniteContainmentReport r;
  const auto q = integral_enclosure(sigma, cpp_rational(1), cpp_rational(T),
                                    Integrand::ZetaSquared, target_width);
  r.integral = q.value;
  r.panels = q.panels;
  r.lower = finite_mean_square_lower(sigma, Interval::from_long(T)).value;
  r.upper = finite_mean_square_upper(sigma, Interval::from_long(T)).value;
  r.passed = r.lower.certainly_le(r.integral) && r.integral.certainly_le(r.upper);
  return r;
}

TailContainmentReport check_tail_bounds(const Interval& sigma, long T, double target_width) {
  TailContainmentReport r;
  const auto q = integral_enclosure(sigma, cpp_rational(T), cpp_rational(5 * T),
                                    Integrand::ZetaOverSSquared, target_width);
  r.integral = q.value;
  r.panels = q.panels;
  r.smoothing_bound =
      Interval::pi() * tail_bound_first_approach(sigma, Interval::from_long(T)).value;
  r.meanvalue_bound = tail_bound_second_approach(sigma, Interval::from_long(T)).value;
  r.passed = r.integral.certainly_le(r.smoothing_bound) &&
             r.integral.certainly_le(r.meanvalue_bound);
  return r;
}

}  // namespace zetatail
