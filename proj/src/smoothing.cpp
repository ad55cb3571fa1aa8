#include "zetatail/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "zetatail/zeta.hpp"

namespace zetatail {

namespace {

cpp_int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  cpp_int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

cpp_int factorial(int n) {
  cpp_int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

cpp_rational pow2_rational(int e) {
  if (e >= 0) return cpp_rational(cpp_int(1) << e, 1);
  return cpp_rational(1, cpp_int(1) << (-e));
}

// On the transition interval write x = 1 + delta*u; then
//   g(1 + delta*u) = 1/2 - sum_k a_k (-1)^k u (1 - u^2)^k =: phi(u),
// independent of delta.  phi - 1/2 is odd, phi' is even.
cpp_rational phi_prime_at0(const SmoothingPolynomial& g) {
  // phi'(0) = -sum_k (-1)^k a_k
  cpp_rational s = 0;
  for (int k = 0; k <= g.n; ++k) s += (k % 2 ? g.a[k] : -g.a[k]);
  return s;
}

cpp_rational phi_prime_at1(const SmoothingPolynomial& g) {
  // only the k = 0, 1 terms survive at u = 1
  cpp_rational s = -g.a[0];
  if (g.n >= 1) s -= 2 * g.a[1];
  return s;
}

// phi''(u) = u * q(u^2) with
//   q(v) = sum_{k>=1} a_k (-1)^k (6k (1-v)^{k-1} - 4k(k-1) v (1-v)^{k-2}).
Interval q_eval(const SmoothingPolynomial& g, const Interval& v) {
  Interval total;
  const Interval one_minus_v = 1 - v;
  for (int k = 1; k <= g.n; ++k) {
    Interval term = 6 * k * pow_si(one_minus_v, k - 1);
    if (k >= 2) term -= 4 * k * (k - 1) * v * pow_si(one_minus_v, k - 2);
    const cpp_rational c = (k % 2 ? -g.a[k] : g.a[k]);
    total += Interval::from_rational(c) * term;
  }
  return total;
}

Interval phi_second(const SmoothingPolynomial& g, const Interval& u) {
  return u * q_eval(g, sqr(u));
}

}  // namespace

SmoothingPolynomial default_smoothing() {
  SmoothingPolynomial g;
  g.n = 6;
  const cpp_int ten7 = 10000000;
  g.a = {cpp_rational(1, 2),           cpp_rational(-1, 4),         cpp_rational(3, 16),
         cpp_rational(-533639, ten7),  cpp_rational(81112, ten7),   cpp_rational(-7415, ten7),
         cpp_rational(370, ten7)};
  g.r = cpp_rational(528035, 100000);
  return g;
}

std::vector<std::string> validate(const SmoothingPolynomial& g) {
  std::vector<std::string> out;
  if (g.n < 0 || static_cast<int>(g.a.size()) != g.n + 1) {
    out.push_back("coefficient count must be n+1");
    return out;
  }
  if (g.a[0] != cpp_rational(1, 2)) out.push_back("a_0 must be 1/2");
  if (g.n >= 1 && g.a[1] != cpp_rational(-1, 4)) out.push_back("a_1 must be -1/4");
  for (int k = 0; k <= g.n; ++k) {
    const bool want_nonneg = (k % 2 == 0);
    if (g.a[k] == 0) continue;  // zero is allowed either way
    if ((g.a[k] > 0) != want_nonneg)
      out.push_back("sign violation at k=" + std::to_string(k));
  }
  using boost::multiprecision::abs;
  for (int k = 0; k + 1 <= g.n; ++k) {
    if (abs(g.a[k + 1]) * (2 * k + 2) > abs(g.a[k]) * (2 * k + 1))
      out.push_back("ratio violation at k=" + std::to_string(k));
  }
  return out;
}

std::vector<cpp_rational> b_coefficients(const SmoothingPolynomial& g) {
  std::vector<cpp_rational> B(4 * g.n + 3, 0);
  for (int j = 1; j <= 2 * g.n + 1; ++j) {
    for (int k = 0; k <= g.n; ++k) {
      cpp_int c = 0;
      if (0 <= j - k - 1 && j - k - 1 <= k) c += 2 * binomial(k, j - k - 1);
      if (0 <= j - k && j - k <= k) c += binomial(k, j - k);
      if (c != 0) B[j] += pow2_rational(2 * k - j) * c * g.a[k];
    }
  }
  return B;
}

cpp_rational beta_exact(const SmoothingPolynomial& g) {
  const std::vector<cpp_rational> B = b_coefficients(g);
  cpp_rational beta = 0;
  for (int j = 0; j <= 4 * g.n + 2; ++j) {
    cpp_rational inner = 0;
    for (int k = 0; k <= j; ++k) inner += B[k] * B[j - k];
    beta += cpp_rational(j % 2 ? -1 : 1, j + 1) * inner;
  }
  return beta;
}

Interval beta_of(const SmoothingPolynomial& g) { return Interval::from_rational(beta_exact(g)); }

Interval alpha_of(const SmoothingPolynomial& g, const Interval& delta) {
  if (!delta.certainly_positive() || !delta.certainly_le(Interval::from_ratio(1, 2)))
    throw DomainError("alpha_of needs delta in (0, 1/2]");

  // Certify phi'' = u q(u^2) changes sign only at u = 0, i.e. q >= 0 on [0,1].
  // In the variable w = 1 - v the polynomial q has exact rational coefficients
  //   c_j = (j+1) ((4j+6) atil_{j+1} - 4(j+2) atil_{j+2}),  atil_k = (-1)^k a_k,
  // so first try the exact route: after stripping leading zero coefficients,
  // all-nonnegative c_j certify q >= 0 outright.  (q typically vanishes at
  // w = 0, which defeats a naive interval evaluation near that endpoint.)
  std::vector<cpp_rational> c(std::max(g.n, 1), 0);
  for (int j = 0; j <= g.n - 1; ++j) {
    const cpp_rational a1 = (j + 1 <= g.n) ? ((j + 1) % 2 ? -g.a[j + 1] : g.a[j + 1]) : 0;
    const cpp_rational a2 = (j + 2 <= g.n) ? ((j + 2) % 2 ? -g.a[j + 2] : g.a[j + 2]) : 0;
    c[j] = (j + 1) * ((4 * j + 6) * a1 - 4 * (j + 2) * a2);
  }
  bool certified = true;
  for (const cpp_rational& cj : c)
    if (cj < 0) certified = false;
  if (!certified) {
    // fall back to interval evaluation of the quotient after the exact zeros
    size_t lead = 0;
    while (lead < c.size() && c[lead] == 0) ++lead;
    certified = true;
    const int cells = 64;
    for (int i = 0; i < cells && certified; ++i) {
      const Interval w = Interval::hull(Interval::from_ratio(i, cells),
                                        Interval::from_ratio(i + 1, cells));
      Interval horner;  // quotient polynomial sum_{j >= lead} c_j w^{j - lead}
      for (size_t j = c.size(); j-- > lead;)
        horner = horner * w + Interval::from_rational(c[j]);
      if (!horner.certainly_nonnegative()) certified = false;
    }
  }
  if (certified) {
    // phi' is even and nondecreasing on [0,1]; with the boundary jumps of g'
    // the total variation in u-units is 2(phi'(1) - phi'(0)) + 2|phi'(1)|,
    // and alpha = TV/16 exactly (delta cancels).
    using boost::multiprecision::abs;
    const cpp_rational p0 = phi_prime_at0(g);
    const cpp_rational p1 = phi_prime_at1(g);
    const cpp_rational tv = 2 * (p1 - p0) + 2 * abs(p1);
    return Interval::from_rational(tv / 16);
  }

  // Fallback: subdivided upper bound on the interior variation plus the
  // boundary jumps; returns [0, upper] (wider but always sound).
  const int fine = 256;
  Interval interior;
  for (int i = 0; i < fine; ++i) {
    const Interval u = Interval::hull(Interval::from_ratio(i, fine),
                                      Interval::from_ratio(i + 1, fine));
    interior += abs(phi_second(g, u)) / fine;
  }
  using boost::multiprecision::abs;
  const Interval jump = Interval::from_rational(abs(phi_prime_at1(g)));
  const Interval tv = 2 * interior + 2 * jump;
  return Interval::hull(Interval(), tv / 16);
}

ComplexInterval mellin_G(const SmoothingPolynomial& g, const ComplexInterval& s,
                         const Interval& delta) {
  if (!s.re().certainly_positive()) throw DomainError("mellin_G needs Re(s) > 0");
  if (!delta.certainly_positive() || !delta.certainly_le(Interval::from_ratio(1, 2)))
    throw DomainError("mellin_G needs delta in (0, 1/2]");
  const std::vector<cpp_rational> B = b_coefficients(g);
  const Interval log_hi = log(1 + delta);
  const Interval log_lo = log(1 - delta);
  ComplexInterval total;
  ComplexInterval denom = s;  // s (s+1) ... (s+j), built incrementally
  Interval delta_pow = Interval::from_long(1);
  cpp_int fact = 1;
  for (int j = 1; j <= 2 * g.n + 1; ++j) {
    fact *= j;
    denom = denom * ComplexInterval{s.re() + j, s.im()};
    delta_pow *= delta;
    if (B[j] == 0) continue;
    const ComplexInterval sj{s.re() + j, s.im()};
    const ComplexInterval p_hi = cexp(ComplexInterval{sj.re() * log_hi, sj.im() * log_hi});
    const ComplexInterval p_lo = cexp(ComplexInterval{sj.re() * log_lo, sj.im() * log_lo});
    const ComplexInterval num = (j % 2 ? p_hi : -p_hi) - p_lo;  // (-1)^{j+1}(1+d)^{s+j} - (1-d)^{s+j}
    const Interval coef = Interval::from_rational(cpp_rational(fact) * B[j]) / delta_pow;
    total = total + (coef * num) / denom;
  }
  return total;
}

Interval transition_sum(const SmoothingPolynomial& g, const Interval& r, const Interval& T) {
  if (!r.certainly_positive()) throw DomainError("transition_sum needs r > 0");
  if (!(2 * r).certainly_le(T)) throw DomainError("transition_sum needs T >= 2r");
  using boost::multiprecision::abs;
  const std::vector<cpp_rational> B = b_coefficients(g);
  const Interval ratio = r / T;
  Interval total;
  cpp_int fact = 1;
  for (int j = 1; j <= 2 * g.n + 1; ++j) {
    fact *= j;
    if (B[j] == 0) continue;
    Interval inner;
    for (int i = 0; i <= j + 1; i += 2)
      inner += Interval::from_cpp_int(binomial(j + 1, i)) * pow_si(ratio, i);
    total += 2 * Interval::from_rational(cpp_rational(fact) * abs(B[j])) / pow_si(r, j) * inner;
  }
  return total;
}

std::pair<Interval, Interval> d_min_max(const SmoothingPolynomial& g, const Interval& r,
                                        const Interval& T) {
  const Interval S = transition_sum(g, r, T);
  if (!S.certainly_lt(Interval::from_long(1)))
    throw DomainError("d_min_max: transition sum not certainly below 1");
  return {sqr(1 - S), sqr(1 + S)};
}

Interval i_sigma_bound(const Interval& sigma, const Interval& delta, const Interval& alpha,
                       const Interval& beta) {
  if (!sigma.certainly_positive() || !sigma.certainly_le(Interval::from_long(1)))
    throw DomainError("i_sigma_bound needs sigma in (0, 1]");
  if (!delta.certainly_positive() || !delta.certainly_le(Interval::from_ratio(1, 2)))
    throw DomainError("i_sigma_bound needs delta in (0, 1/2]");
  const Interval half = Interval::from_ratio(1, 2);
  const Interval d2 = sqr(delta);
  if (sigma.is_point() && sigma.contains(cpp_rational(1, 2))) {
    const Interval first =
        2 * beta * (delta * log(1 / delta) + Interval::euler_gamma() * delta + d2 / (2 * (1 - d2)));
    const Interval second =
        delta * (Interval::from_ratio(1, 4) + alpha / 2 + sqr(alpha) / 3);
    return first + second;
  }
  if (!sigma.certainly_lt(half) && !sigma.certainly_gt(half))
    throw DomainError("i_sigma_bound: sigma must not straddle 1/2");
  const Interval z = zeta_real(2 * sigma);
  const Interval dpow = pow(delta, 2 * sigma);
  const Interval first =
      2 * beta * (delta * z - dpow / (2 * sigma - 1) + dpow * delta / (2 * (1 - d2)));
  const Interval second =
      dpow * (1 / (8 * sigma) + alpha / (2 * sigma + 1) + sqr(alpha) / (2 * (sigma + 1)));
  return first + second;
}

const FirstApproachConstants& first_approach_constants() {
  static const FirstApproachConstants cached = [] {
    FirstApproachConstants c;
    const SmoothingPolynomial g = default_smoothing();
    const Interval r = Interval::from_rational(g.r);
    const Interval T = Interval::from_long(200);
    const Interval delta = r / T;
    const Interval alpha = alpha_of(g, delta);
    const Interval beta = beta_of(g);
    const Interval S = transition_sum(g, r, T);
    const Interval dmin = sqr(1 - S);
    const Interval dmax = sqr(1 + S);
    const Interval one_m = 1 - sqr(r) / sqr(T);
    c.kappa = sqr(r);
    c.k111 = 1 / (8 * dmin);
    c.k112 = alpha / dmin;
    c.k113 = sqr(alpha) / (2 * dmin);
    c.k114 = 2 * beta * (1 - Interval::from_ratio(1, 100000) / c.kappa) / dmax;
    c.k12s = beta * r / (one_m * dmin);
    c.c21s =
        (r / 4 + alpha * r / 2 + sqr(alpha) * r / 3 + 2 * beta * Interval::euler_gamma() * r) /
        dmin;
    c.c22s = beta * sqr(r) / (one_m * dmin);
    c.c30s = 2 * beta * r / dmax;
    c.k314 = 2 * beta / dmin;
    c.certificate = 2 * beta * r / dmin;
    c.kappa_pub = cpp_rational(278821, 10000);
    c.k111_pub = cpp_rational(15659, 100000);
    c.k112_pub = cpp_rational(15655, 100000);
    c.k113_pub = cpp_rational(979, 100000);
    c.k114_pub = cpp_rational(7407, 100000);
    c.k12s_pub = cpp_rational(30016, 100000);
    c.c21s_pub = cpp_rational(24476, 10000);
    c.c22s_pub = cpp_rational(158493, 100000);
    c.k314_pub = cpp_rational(11361, 100000);
    c.c30s_pub = cpp_rational(39113, 100000);
    return c;
  }();
  return cached;
}

BoundReport tail_bound_first_approach(const Interval& sigma, const Interval& T) {
  if (!sigma.certainly_positive() || !sigma.certainly_le(Interval::from_long(1)))
    throw DomainError("tail_bound_first_approach needs sigma in (0, 1]");
  if (!T.certainly_ge(Interval::from_long(200)))
    throw DomainError("tail_bound_first_approach needs T >= 200");
  const auto& C = first_approach_constants();
  BoundReport rep;
  rep.family = "tail bound, smoothing route";
  rep.sigma = sigma;
  rep.T = T;
  const Interval half = Interval::from_ratio(1, 2);
  if (sigma.is_point() && sigma.contains(cpp_rational(1, 2))) {
    const Interval main = Interval::from_ratio(3, 5) * log(T) / T;
    const Interval t1 = Interval::from_rational(C.c21s_pub) / T;
    const Interval t2 = Interval::from_rational(C.c22s_pub) / sqr(T);
    rep.terms = {{"(3/5) log T / T", main}, {"c21*/T", t1}, {"c22*/T^2", t2}};
    rep.value = main + t1 + t2;
    return rep;
  }
  const Interval kpow = pow(Interval::from_rational(C.kappa_pub), sigma);
  const Interval tpow = pow(T, 2 * sigma);
  const Interval z = zeta_real(2 * sigma);
  if (sigma.certainly_gt(half)) {
    const Interval main = Interval::from_ratio(3, 5) * z / T;
    const Interval mid = kpow *
                         (Interval::from_rational(C.k111_pub) / sigma +
                          Interval::from_rational(C.k112_pub) / (2 * sigma + 1) +
                          Interval::from_rational(C.k113_pub) / (sigma + 1) -
                          Interval::from_rational(C.k114_pub) / (2 * sigma - 1)) /
                         tpow;
    const Interval tail = kpow * Interval::from_rational(C.k12s_pub) / (tpow * T);
    rep.terms = {{"(3/5) zeta(2s)/T", main}, {"c11./T^2s", mid}, {"c12*/T^(2s+1)", tail}};
    rep.value = main + mid + tail;
    return rep;
  }
  if (sigma.certainly_lt(half)) {
    const Interval mid = kpow *
                         (Interval::from_rational(C.k111_pub) / sigma +
                          Interval::from_rational(C.k112_pub) / (2 * sigma + 1) +
                          Interval::from_rational(C.k113_pub) / (sigma + 1) +
                          Interval::from_rational(C.k314_pub) / (1 - 2 * sigma)) /
                         tpow;
    const Interval main = Interval::from_rational(C.c30s_pub) * z / T;
    const Interval tail = kpow * Interval::from_rational(C.k12s_pub) / (tpow * T);
    rep.terms = {{"c31./T^2s", mid}, {"c30* zeta(2s)/T", main}, {"c32*/T^(2s+1)", tail}};
    rep.value = mid + main + tail;
    return rep;
  }
  throw DomainError("tail_bound_first_approach: sigma must not straddle 1/2");
}

BoundReport corollary_tail_bound(const Interval& sigma, const Interval& T) {
  if (!sigma.certainly_positive() || !sigma.certainly_le(Interval::from_long(1)))
    throw DomainError("corollary_tail_bound needs sigma in (0, 1]");
  if (!T.certainly_gt(Interval::from_long(3)) || !T.certainly_gt(1 + 1 / sigma))
    throw DomainError("corollary_tail_bound needs T > max{3, 1 + 1/sigma}");
  BoundReport rep;
  rep.family = "tail bound, linear transition";
  rep.sigma = sigma;
  rep.T = T;
  const Interval half = Interval::from_ratio(1, 2);
  const Interval cprime =
      1 / (8 * sigma) + 1 / (16 * (2 * sigma + 1)) + 1 / (512 * (sigma + 1));
  const auto c0 = [&](const Interval& kap) {
    return pow(kap, 2 * sigma) * (cprime + kap / (12 * T * (1 - sqr(kap) / sqr(T))));
  };
  const auto c1 = [&](const Interval& kap) { return pow(kap, 2 * sigma) / (6 * (2 * sigma - 1)); };
  const bool at_half = sigma.is_point() && sigma.contains(cpp_rational(1, 2));
  if (at_half || sigma.certainly_gt(half)) {
    const Interval rho = Interval::from_long(9) / (4 * sqr(1 - Interval::from_ratio(9, 2) / sqr(T)));
    Interval core;
    if (at_half) {
      const Interval c2 = (log(Interval::from_long(3)) - Interval::euler_gamma()) / 2;
      core = log(T) / (2 * T) + (c0(Interval::from_long(3)) - c2) / T;
      rep.terms = {{"rho", rho}, {"log T/(2T) + (c0(3) - c2)/T", core}};
    } else {
      const Interval z = zeta_real(2 * sigma);
      core = z / (2 * T) +
             (c0(Interval::from_long(3)) - c1(Interval::from_long(3))) / pow(T, 2 * sigma);
      rep.terms = {{"rho", rho}, {"zeta(2s)/(2T) + (c0(3) - c1(3))/T^2s", core}};
    }
    rep.value = rho * core;
    return rep;
  }
  if (sigma.certainly_lt(half)) {
    const Interval kap = 1 + 1 / sigma;
    const Interval rho = sqr(1 + sigma) / sqr(1 - sqr(1 + sigma) / (sigma * sqr(T)));
    const Interval z = zeta_real(2 * sigma);
    const Interval c3 = (sigma + 1) * z / (6 * sigma);
    const Interval core = (c0(kap) - c1(kap)) / pow(T, 2 * sigma) + c3 / T;
    rep.terms = {{"rho", rho}, {"(c0(k) - c1(k))/T^2s + c3/T", core}};
    rep.value = rho * core;
    return rep;
  }
  throw DomainError("corollary_tail_bound: sigma must not straddle 1/2");
}

Interval smoothing_objective(const SmoothingPolynomial& g) {
  if (!validate(g).empty()) throw DomainError("smoothing_objective needs an admissible set");
  const Interval r = Interval::from_rational(g.r);
  const Interval T = Interval::from_long(200);
  const auto [dmin, dmax] = d_min_max(g, r, T);
  (void)dmax;
  return 2 * beta_of(g) * r / dmin;
}

namespace {

// Fast double-precision objective used inside the optimizer's search loop.
// The certified interval value is recomputed by callers via
// smoothing_objective; here only comparisons between candidates matter.
struct CandidateEval {
  double objective = std::numeric_limits<double>::infinity();
  double r_opt = 0.0;
};

double sum_expr_double(const std::vector<double>& babs, int n, double r, double T) {
  double total = 0.0;
  double fact = 1.0;
  double rj = 1.0;
  const double ratio2 = (r / T) * (r / T);
  for (int j = 1; j <= 2 * n + 1; ++j) {
    fact *= j;
    rj *= r;
    if (babs[j] == 0.0) continue;
    double inner = 0.0;
    double rp = 1.0;
    for (int i = 0; i <= j + 1; i += 2) {
      inner += static_cast<double>(binomial(j + 1, i)) * rp;
      rp *= ratio2;
    }
    total += 2.0 * fact * babs[j] / rj * inner;
  }
  return total;
}

CandidateEval evaluate_candidate(const SmoothingPolynomial& g) {
  const std::vector<cpp_rational> B = b_coefficients(g);
  std::vector<double> babs(B.size());
  for (size_t i = 0; i < B.size(); ++i)
    babs[i] = std::fabs(static_cast<double>(B[i]));
  const double beta = static_cast<double>(beta_exact(g));
  const double T = 200.0;
  const auto obj = [&](double r) {
    const double s = sum_expr_double(babs, g.n, r, T);
    if (s >= 1.0) return std::numeric_limits<double>::infinity();
    const double dmin = (1.0 - s) * (1.0 - s);
    return 2.0 * beta * r / dmin;
  };
  // golden-section minimum over the transition scale
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.5, hi = 15.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = obj(x1), f2 = obj(x2);
  for (int it = 0; it < 120; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = obj(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = obj(x2);
    }
  }
  CandidateEval out;
  out.r_opt = (lo + hi) / 2.0;
  out.objective = obj(out.r_opt);
  return out;
}

}  // namespace

SmoothingPolynomial optimize_coefficients(int n, const SmoothingPolynomial& seed,
                                          const cpp_rational& step) {
  if (seed.n != n || !validate(seed).empty())
    throw DomainError("optimize_coefficients needs an admissible seed of the stated degree");
  if (step <= 0) throw DomainError("optimize_coefficients needs step > 0");
  SmoothingPolynomial best = seed;
  CandidateEval best_eval = evaluate_candidate(best);
  bool changed = false;
  const int dims = n - 1;  // a_2 .. a_n vary
  if (dims <= 0) return seed;
  long combos = 1;
  for (int i = 0; i < dims; ++i) combos *= 3;
  for (int sweep = 0; sweep < 500; ++sweep) {
    bool improved = false;
    SmoothingPolynomial sweep_best = best;
    CandidateEval sweep_eval = best_eval;
    for (long code = 1; code < combos; ++code) {
      SmoothingPolynomial cand = best;
      long c = code;
      for (int k = 0; k < dims; ++k) {
        const int trit = static_cast<int>(c % 3);  // 0, +1, -1
        c /= 3;
        if (trit == 1) cand.a[2 + k] += step;
        if (trit == 2) cand.a[2 + k] -= step;
      }
      if (!validate(cand).empty()) continue;
      const CandidateEval ev = evaluate_candidate(cand);
      if (ev.objective < sweep_eval.objective - 1e-15) {
        sweep_best = cand;
        sweep_eval = ev;
        improved = true;
      }
    }
    if (!improved) break;
    best = sweep_best;
    best_eval = sweep_eval;
    changed = true;
  }
  if (!changed) return seed;  // idempotence: local optimum returned unchanged
  best.r = cpp_rational(static_cast<long long>(std::llround(best_eval.r_opt * 100000.0)), 100000);
  return best;
}

SmoothingPolynomial read_smoothing_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open smoothing config: " + path);
  SmoothingPolynomial g;
  in >> g.n;
  if (!in || g.n < 0) throw DomainError("bad smoothing config: " + path);
  g.a.resize(g.n + 1);
  cpp_int num, den;
  for (int k = 0; k <= g.n; ++k) {
    in >> num >> den;
    if (!in || den == 0) throw DomainError("bad smoothing config: " + path);
    g.a[k] = cpp_rational(num, den);
  }
  in >> num >> den;
  if (!in || den == 0) throw DomainError("bad smoothing config: " + path);
  g.r = cpp_rational(num, den);
  return g;
}

void write_smoothing_config(const std::string& path, const SmoothingPolynomial& g) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write smoothing config: " + path);
  out << g.n << "\n";
  for (int k = 0; k <= g.n; ++k)
    out << boost::multiprecision::numerator(g.a[k]) << " "
        << boost::multiprecision::denominator(g.a[k]) << "\n";
  out << boost::multiprecision::numerator(g.r) << " " << boost::multiprecision::denominator(g.r)
      << "\n";
}

}  // namespace zetatail
