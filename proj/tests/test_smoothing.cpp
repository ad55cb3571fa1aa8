// Tests for the smoothing-polynomial machinery: admissibility, derived
// coefficients, the Mellin transform, the I(sigma) bound, the two tail-bound
// families, and the coefficient optimizer.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <vector>

#include "zetatail/smoothing.hpp"
#include "zetatail/zeta.hpp"

using namespace zetatail;

namespace {

SmoothingPolynomial linear_g() {
  SmoothingPolynomial g;
  g.n = 0;
  g.a = {cpp_rational(1, 2)};
  g.r = 3;
  return g;
}

// Direct numeric value of the linear transition g at t for a given delta.
double linear_g_value(double t, double delta) {
  if (t <= 1 - delta) return 1.0;
  if (t >= 1 + delta) return 0.0;
  return 0.5 - (t - 1) / (2 * delta);
}

}  // namespace

TEST_CASE("admissibility validation") {
  CHECK(validate(default_smoothing()).empty());
  CHECK(validate(linear_g()).empty());

  SmoothingPolynomial bad1 = default_smoothing();
  bad1.a[1] = cpp_rational(-3, 10);
  CHECK(!validate(bad1).empty());  // a_1 must be -1/4 and 0.3 > (1/2)(1/2)

  SmoothingPolynomial bad2 = default_smoothing();
  bad2.a[2] = cpp_rational(-3, 16);
  CHECK(!validate(bad2).empty());  // sign violation at k = 2

  SmoothingPolynomial bad3 = default_smoothing();
  bad3.a[3] = cpp_rational(-1, 4);  // |a_3| > (5/6)|a_2| = 5/32
  bool ratio_found = false;
  for (const auto& v : validate(bad3))
    if (v.find("ratio") != std::string::npos) ratio_found = true;
  CHECK(ratio_found);
}

TEST_CASE("b coefficients") {
  // n = 0: only b_1 = 1/2 survives
  const auto b0 = b_coefficients(linear_g());
  CHECK(b0[0] == 0);
  CHECK(b0[1] == cpp_rational(1, 2));
  CHECK(b0[2] == 0);

  // production set: b_0 = 0 exactly; 13 entries b_1..b_13, of which 11 are
  // nonzero (b_1 and b_2 vanish identically for this coefficient set)
  const auto b6 = b_coefficients(default_smoothing());
  CHECK(b6[0] == 0);
  CHECK(b6[1] == 0);
  CHECK(b6[2] == 0);
  int nonzero = 0;
  for (const auto& v : b6)
    if (v != 0) ++nonzero;
  CHECK(nonzero == 11);
  // frozen leading value and exact total (independently recomputed)
  CHECK(b6[3] == cpp_rational(1028861, 1250000));
  cpp_rational total = 0;
  for (const auto& v : b6) total += v;
  CHECK(total == cpp_rational(39136, 78125));

  // independent recomputation with Pascal-triangle binomials
  const SmoothingPolynomial g6 = default_smoothing();
  std::vector<std::vector<cpp_int>> pas(2 * g6.n + 2);
  for (size_t i = 0; i < pas.size(); ++i) {
    pas[i].assign(i + 1, 1);
    for (size_t k = 1; k < i; ++k) pas[i][k] = pas[i - 1][k - 1] + pas[i - 1][k];
  }
  std::vector<cpp_rational> alt(b6.size(), 0);
  for (int j = 1; j <= 2 * g6.n + 1; ++j) {
    for (int k = 0; k <= g6.n; ++k) {
      cpp_int cc = 0;
      if (0 <= j - k - 1 && j - k - 1 <= k) cc += 2 * pas[k][j - k - 1];
      if (0 <= j - k && j - k <= k) cc += pas[k][j - k];
      if (cc != 0) {
        cpp_rational p2 = (2 * k - j >= 0) ? cpp_rational(cpp_int(1) << (2 * k - j), 1)
                                           : cpp_rational(1, cpp_int(1) << (j - 2 * k));
        alt[j] += p2 * cc * g6.a[k];
      }
    }
  }
  CHECK(alt == b6);
}

TEST_CASE("beta") {
  // n = 0: beta = 1/12
  CHECK(beta_exact(linear_g()) == cpp_rational(1, 12));

  // production set: frozen exact value, cross-checked against direct numeric
  // integration of g^2 over the transition half-interval
  const cpp_rational beta6 = beta_exact(default_smoothing());
  CHECK(beta6 == cpp_rational(cpp_int("5173290592354408399"),
                              cpp_int("114081581250000000000")));
  const double beta6d = static_cast<double>(beta6);
  CHECK(beta6d == doctest::Approx(0.0453472903835158614).epsilon(1e-12));

  // numeric oracle: (1/delta) int_1^{1+delta} g(y)^2 dy via midpoint rule
  const double delta = 0.02;
  const SmoothingPolynomial g = default_smoothing();
  const int cells = 200000;
  double acc = 0.0;
  for (int i = 0; i < cells; ++i) {
    const double y = 1.0 + delta * (i + 0.5) / cells;
    double val = 0.5;
    for (int k = 0; k <= g.n; ++k) {
      const double ak = static_cast<double>(g.a[k]);
      val += ak * std::pow(1 + delta - y, k) * (1 - y) * std::pow(1 - delta - y, k) /
             std::pow(delta, 2 * k + 1);
    }
    acc += val * val * (delta / cells);
  }
  CHECK(acc / delta == doctest::Approx(beta6d).epsilon(1e-8));

  CHECK(beta_of(default_smoothing()).contains(beta6));
}

TEST_CASE("alpha") {
  const Interval delta = Interval::from_decimal("0.01");
  // n = 0: alpha = 1/16
  CHECK(alpha_of(linear_g(), delta).contains(cpp_rational(1, 16)));

  // production set: alpha = |sum (-1)^k a_k| / 8 exactly (certified path)
  const SmoothingPolynomial g = default_smoothing();
  cpp_rational s = 0;
  for (int k = 0; k <= g.n; ++k) s += (k % 2 ? -g.a[k] : g.a[k]);
  const Interval a = alpha_of(g, delta);
  CHECK(a.contains(boost::multiprecision::abs(s) / 8));
  CHECK(a.contains(cpp_rational(1249692, 10000000)));  // = 0.1249692 exactly
  CHECK(a.width_double() < 1e-35);

  // alpha is delta-free
  const Interval a2 = alpha_of(g, Interval::from_ratio(1, 2));
  CHECK(a2.contains(boost::multiprecision::abs(s) / 8));

  CHECK_THROWS_AS(alpha_of(g, Interval::from_long(1)), DomainError);
  CHECK_THROWS_AS(alpha_of(g, Interval()), DomainError);
}

TEST_CASE("Mellin transform") {
  const Interval delta = Interval::from_decimal("0.05");
  const SmoothingPolynomial g = default_smoothing();

  // G(1) = 1 for any admissible set
  const ComplexInterval g1 =
      mellin_G(g, ComplexInterval::from_real(Interval::from_long(1)), delta);
  CHECK(g1.re().contains(1.0));
  CHECK(g1.im().contains(0.0));
  CHECK(g1.re().width_double() < 1e-24);
  const ComplexInterval g1l =
      mellin_G(linear_g(), ComplexInterval::from_real(Interval::from_long(1)), delta);
  CHECK(g1l.re().contains(1.0));

  // n = 0 closed form vs direct numeric Mellin integral at s = 2
  const double d = 0.05;
  const int cells = 400000;
  double acc = 0.0;
  for (int i = 0; i < cells; ++i) {
    const double x = (1 + d) * (i + 0.5) / cells;
    acc += linear_g_value(x, d) * x * ((1 + d) / cells);  // x^{s-1} = x
  }
  const ComplexInterval g2 =
      mellin_G(linear_g(), ComplexInterval::from_real(Interval::from_long(2)),
               Interval::from_decimal("0.05"));
  CHECK(std::abs(g2.re().mid_double() - acc) < 1e-6);
  CHECK(g2.im().contains(0.0));

  // |1 - G(s) s| at s = 1/2 + 200i with the production delta = r/200
  const Interval r = Interval::from_rational(g.r);
  const ComplexInterval s{Interval::from_ratio(1, 2), Interval::from_long(200)};
  const ComplexInterval G = mellin_G(g, s, r / 200);
  const ComplexInterval one = ComplexInterval::from_real(Interval::from_long(1));
  const Interval gap = (one - G * s).abs();
  CHECK(gap.certainly_positive());
  CHECK(gap.certainly_lt(Interval::from_long(1)));

  CHECK_THROWS_AS(mellin_G(g, ComplexInterval{Interval::from_long(-1), Interval()}, delta),
                  DomainError);
}

TEST_CASE("transition sum and d_min/d_max") {
  const SmoothingPolynomial g = default_smoothing();
  const Interval r = Interval::from_rational(g.r);
  const Interval T = Interval::from_long(200);
  const auto [dmin, dmax] = d_min_max(g, r, T);
  CHECK(dmin.certainly_positive());
  CHECK(dmin.certainly_lt(Interval::from_long(1)));
  CHECK(dmax.certainly_gt(Interval::from_long(1)));
  CHECK(dmax.certainly_lt(Interval::from_long(4)));
  // frozen oracle values of (1 -+ S)^2 at r = 5.28035, T = 200
  CHECK(abs(dmin - Interval::from_decimal("0.79831087628627551509")).hi_double() < 1e-18);
  CHECK(abs(dmax - Interval::from_decimal("1.22438110353186278163")).hi_double() < 1e-18);

  // T -> infinity limit: both approach (1 -+ sum 2 j! |b_j| / r^j)^2
  const auto [dminL, dmaxL] = d_min_max(g, r, Interval::from_long(2000000000));
  const Interval s_limit = transition_sum(g, r, Interval::from_long(2000000000));
  CHECK(dminL.contains(sqr(1 - s_limit)));
  CHECK((dminL - dmin).certainly_positive());
  CHECK((dmax - dmaxL).certainly_positive());

  // r too small: the sum exceeds 1
  CHECK_THROWS_AS(d_min_max(g, Interval::from_long(1), T), DomainError);
  // T < 2r violates the scale hypothesis
  CHECK_THROWS_AS(transition_sum(g, Interval::from_long(8), Interval::from_long(10)),
                  DomainError);
}

TEST_CASE("I(sigma) bound") {
  const Interval alpha = Interval::from_ratio(1, 16);
  const Interval beta = Interval::from_ratio(1, 12);
  const Interval delta = Interval::from_decimal("0.01");

  // sigma = 1/2 closed form
  const Interval v = i_sigma_bound(Interval::from_ratio(1, 2), delta, alpha, beta);
  const Interval expect =
      2 * beta *
          (delta * log(1 / delta) + Interval::euler_gamma() * delta +
           sqr(delta) / (2 * (1 - sqr(delta)))) +
      delta * (Interval::from_ratio(1, 4) + alpha / 2 + sqr(alpha) / 3);
  CHECK(v.contains(expect));
  CHECK(v.certainly_positive());

  // continuity across sigma = 1/2: one-sided evaluations approach the
  // sigma = 1/2 value
  const Interval vm =
      i_sigma_bound(Interval::from_decimal("0.499999"), delta, alpha, beta);
  const Interval vp =
      i_sigma_bound(Interval::from_decimal("0.500001"), delta, alpha, beta);
  CHECK(std::abs(vm.mid_double() - v.mid_double()) < 1e-4);
  CHECK(std::abs(vp.mid_double() - v.mid_double()) < 1e-4);

  // nonnegative for representative sigma (production parameters)
  const SmoothingPolynomial g = default_smoothing();
  const Interval a6 = alpha_of(g, delta);
  const Interval b6 = beta_of(g);
  for (const char* s : {"0.25", "0.5", "0.75", "1"}) {
    const Interval sig = Interval::from_decimal(s);
    CHECK(!i_sigma_bound(sig, delta, a6, b6).certainly_negative());
    CHECK(i_sigma_bound(sig, delta, a6, b6).hi_double() > 0.0);
  }

  // beta scaling: doubling beta doubles the first summand exactly; with
  // alpha = 0 the remainder is beta-free, so v(2 beta) - v(beta) = first part
  const Interval z = Interval();  // alpha = 0
  const Interval s34 = Interval::from_decimal("0.75");
  const Interval v1 = i_sigma_bound(s34, delta, z, beta);
  const Interval v2 = i_sigma_bound(s34, delta, z, 2 * beta);
  const Interval first = v2 - v1;  // equals the beta-linear part once
  const Interval direct =
      2 * beta *
      (delta * zeta_real(Interval::from_decimal("1.5")) -
       pow(delta, Interval::from_decimal("1.5")) / Interval::from_ratio(1, 2) +
       pow(delta, Interval::from_decimal("1.5")) * delta / (2 * (1 - sqr(delta))));
  CHECK(first.intersects(direct));

  CHECK_THROWS_AS(i_sigma_bound(Interval::from_long(2), delta, alpha, beta), DomainError);
  CHECK_THROWS_AS(i_sigma_bound(Interval::from_endpoints(0.4, 0.6), delta, alpha, beta),
                  DomainError);
}

TEST_CASE("Plancherel sanity for the linear transition") {
  // direct numeric evaluation of int_0^inf |h(x)|^2 x^{2 sigma - 1} dx with
  // h(x) = floor(1/x) - sum_n g(n x), for the n = 0 transition, sigma = 3/4
  const double delta = 0.1;
  const double sigma = 0.75;
  const double xmin = 1e-3;
  const double xmax = 1.0 + delta;
  const int cells = 40000;
  double acc = 0.0;
  for (int i = 0; i < cells; ++i) {
    const double x = xmin + (xmax - xmin) * (i + 0.5) / cells;
    double gsum = 0.0;
    const int nmax = static_cast<int>((1 + delta) / x) + 1;
    for (int n = 1; n <= nmax; ++n) gsum += linear_g_value(n * x, delta);
    const double h = std::floor(1.0 / x) - gsum;
    acc += h * h * std::pow(x, 2 * sigma - 1) * ((xmax - xmin) / cells);
  }
  const Interval bound =
      i_sigma_bound(Interval::from_decimal("0.75"), Interval::from_decimal("0.1"),
                    Interval::from_ratio(1, 16), Interval::from_ratio(1, 12));
  CHECK(bound.hi_double() >= acc * 0.999);
}

TEST_CASE("first-approach constant table") {
  const auto& C = first_approach_constants();
  // the published 5-decimal table, reproduced by directed rounding of the raw
  // interval values
  CHECK(C.kappa.round_up_scaled(4) == 278821);
  CHECK(C.k111.round_up_scaled(5) == 15659);
  CHECK(C.k112.round_up_scaled(5) == 15655);
  CHECK(C.k113.round_up_scaled(5) == 979);
  CHECK(C.k114.round_down_scaled(5) == 7407);
  CHECK(C.k12s.round_up_scaled(5) == 30016);
  CHECK(C.c21s.round_up_scaled(4) == 24476);
  CHECK(C.c22s.round_up_scaled(5) == 158493);
  CHECK(C.k314.round_up_scaled(5) == 11361);
  CHECK(C.c30s.round_down_scaled(5) == 39113);

  // leading-coefficient certificate 2 beta r / d_min <= 3/5
  CHECK(C.certificate.certainly_le(Interval::from_ratio(3, 5)));
  CHECK(C.certificate.certainly_gt(Interval::from_decimal("0.59")));
}

TEST_CASE("first-approach tail bound") {
  // sigma = 1/2, T = 200: (3/5) log(200)/200 + 2.4476/200 + 1.58493/200^2
  const BoundReport r =
      tail_bound_first_approach(Interval::from_ratio(1, 2), Interval::from_long(200));
  const Interval expect = Interval::from_ratio(3, 5) * log(Interval::from_long(200)) / 200 +
                          Interval::from_decimal("2.4476") / 200 +
                          Interval::from_decimal("1.58493") / (200 * 200);
  CHECK(r.value.contains(expect));
  CHECK(r.value.certainly_positive());
  CHECK(r.terms.size() == 3);

  // all three cases produce positive, finite bounds
  for (const char* s : {"0.2", "0.5", "0.8", "1"}) {
    const BoundReport b =
        tail_bound_first_approach(Interval::from_decimal(s), Interval::from_long(250));
    CHECK(b.value.certainly_positive());
  }

  // monotone decreasing in T for fixed sigma
  for (const char* s : {"0.3", "0.5", "0.9"}) {
    Interval prev = tail_bound_first_approach(Interval::from_decimal(s),
                                              Interval::from_long(200)).value;
    for (long T : {400L, 1000L, 10000L, 1000000L}) {
      const Interval cur =
          tail_bound_first_approach(Interval::from_decimal(s), Interval::from_long(T)).value;
      CHECK(cur.certainly_lt(prev));
      prev = cur;
    }
  }

  CHECK_THROWS_AS(tail_bound_first_approach(Interval::from_ratio(1, 2), Interval::from_long(100)),
                  DomainError);
  CHECK_THROWS_AS(tail_bound_first_approach(Interval::from_long(2), Interval::from_long(300)),
                  DomainError);

  // report serialization round-trips basic structure
  const std::string txt = r.to_text();
  CHECK(txt.find("bound") != std::string::npos);
  const std::string js = r.to_json();
  CHECK(js.find("\"family\"") != std::string::npos);
  CHECK(js.find("\"terms\"") != std::string::npos);
}

TEST_CASE("linear-transition corollary bound") {
  // c(1/2) = 217/768 appears as the c' value at sigma = 1/2
  const Interval s_half = Interval::from_ratio(1, 2);
  const Interval cprime =
      1 / (8 * s_half) + 1 / (16 * (2 * s_half + 1)) + 1 / (512 * (s_half + 1));
  CHECK(cprime.contains(cpp_rational(217, 768)));

  // rho -> 9/4 as T -> infinity for sigma in [1/2, 1]
  const BoundReport big =
      corollary_tail_bound(Interval::from_decimal("0.7"), Interval::from_long(1000000000));
  REQUIRE(big.terms.size() == 2);
  CHECK(abs(big.terms[0].second - Interval::from_ratio(9, 4)).hi_double() < 1e-8);

  // positive finite bounds across all three cases
  for (const char* s : {"0.1", "0.3", "0.5", "0.7", "1"}) {
    const BoundReport b =
        corollary_tail_bound(Interval::from_decimal(s), Interval::from_long(100));
    CHECK(b.value.certainly_positive());
  }

  // near sigma = 0 the corollary's main coefficient beats the first
  // approach's: compare at sigma = 0.04, T = 10^4
  const Interval sig = Interval::from_decimal("0.04");
  const Interval T = Interval::from_long(10000);
  const Interval cor = corollary_tail_bound(sig, T).value;
  const Interval first = tail_bound_first_approach(sig, T).value;
  CHECK(cor.certainly_lt(first));
  // ... and loses at sigma = 0.3
  const Interval sig3 = Interval::from_decimal("0.3");
  CHECK(corollary_tail_bound(sig3, T).value.certainly_gt(
      tail_bound_first_approach(sig3, T).value));

  CHECK_THROWS_AS(corollary_tail_bound(Interval::from_decimal("0.5"), Interval::from_long(3)),
                  DomainError);
  CHECK_THROWS_AS(corollary_tail_bound(Interval::from_decimal("0.05"), Interval::from_long(20)),
                  DomainError);  // T must exceed 1 + 1/sigma = 21
}

TEST_CASE("optimizer") {
  const SmoothingPolynomial g = default_smoothing();
  // the shipped set is (near-)locally optimal: objective stays <= 0.6
  const SmoothingPolynomial opt = optimize_coefficients(6, g, cpp_rational(1, 10000000));
  const Interval obj = smoothing_objective(opt);
  CHECK(obj.certainly_lt(Interval::from_ratio(3, 5)));

  // idempotence: re-optimizing the optimum returns it unchanged
  const SmoothingPolynomial opt2 = optimize_coefficients(6, opt, cpp_rational(1, 10000000));
  CHECK(opt2.a == opt.a);
  CHECK(opt2.r == opt.r);

  // lower degree does worse: optimize n = 2 from scratch
  SmoothingPolynomial seed2;
  seed2.n = 2;
  seed2.a = {cpp_rational(1, 2), cpp_rational(-1, 4), cpp_rational(1, 8)};
  seed2.r = 4;
  const SmoothingPolynomial opt_n2 = optimize_coefficients(2, seed2, cpp_rational(1, 1000));
  const Interval obj2 = smoothing_objective(opt_n2);
  CHECK(obj2.certainly_gt(obj));

  CHECK_THROWS_AS(optimize_coefficients(3, g, cpp_rational(1, 100)), DomainError);
}

TEST_CASE("config round trip") {
  const std::string path = "smoothing_config_test.txt";
  const SmoothingPolynomial g = default_smoothing();
  write_smoothing_config(path, g);
  const SmoothingPolynomial back = read_smoothing_config(path);
  CHECK(back.n == g.n);
  CHECK(back.a == g.a);
  CHECK(back.r == g.r);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_smoothing_config("does_not_exist.cfg"), DomainError);
}
