// End-to-end acceptance run: one pass/fail line per shipped claim, each with
// a wall-clock budget.  Exits nonzero if any line fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "zetatail/interval.hpp"
#include "zetatail/meanvalue.hpp"
#include "zetatail/smoothing.hpp"
#include "zetatail/thresholds.hpp"
#include "zetatail/verify.hpp"

using namespace zetatail;

namespace {

bool g_all_passed = true;

void criterion(int id, const char* name, double budget_seconds,
               const std::function<bool()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::printf("criterion %2d: FAIL (%s) %s\n", id, e.what(), name);
    g_all_passed = false;
    return;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_seconds) ok = false;
  std::printf("criterion %2d: %s (%.1fs/%.0fs) %s\n", id, ok ? "PASS" : "FAIL", secs,
              budget_seconds, name);
  if (!ok) g_all_passed = false;
}

cpp_rational ru5(const Interval& x) { return cpp_rational(x.round_up_scaled(5), 100000); }

// --- criterion 9 helpers: randomized interval property suites -------------

std::mt19937_64 rng(0x5EEDBEEFu);

double rand_double(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng);
}

Interval rand_interval(double lo, double hi) {
  double a = rand_double(lo, hi), b = rand_double(lo, hi);
  if (a > b) std::swap(a, b);
  return Interval::from_endpoints(a, b);
}

Interval rand_subinterval(const Interval& x) {
  const double lo = x.lo_double(), hi = x.hi_double();
  double a = rand_double(lo, hi), b = rand_double(lo, hi);
  if (a > b) std::swap(a, b);
  if (a < lo) a = lo;
  if (b > hi) b = hi;
  return Interval::from_endpoints(a, b);
}

using Unary = std::function<Interval(const Interval&)>;
using Binary = std::function<Interval(const Interval&, const Interval&)>;

bool inclusion_unary(const Unary& f, double lo, double hi, int n) {
  for (int i = 0; i < n; ++i) {
    const Interval x = rand_interval(lo, hi);
    if (!f(x).contains(f(rand_subinterval(x)))) return false;
  }
  return true;
}

bool inclusion_binary(const Binary& f, double lo, double hi, int n) {
  for (int i = 0; i < n; ++i) {
    const Interval x = rand_interval(lo, hi);
    const Interval y = rand_interval(lo, hi);
    if (!f(x, y).contains(f(rand_subinterval(x), rand_subinterval(y)))) return false;
  }
  return true;
}

bool point_unary(const Unary& f, double lo, double hi, int n) {
  for (int i = 0; i < n; ++i) {
    const double v = rand_double(lo, hi);
    const Interval coarse = f(Interval::from_double(v));
    Interval fine;
    {
      PrecisionGuard guard(512);
      fine = f(Interval::from_double(v));
    }
    if (!coarse.contains(fine)) return false;
  }
  return true;
}

bool point_binary(const Binary& f, double lo, double hi, int n) {
  for (int i = 0; i < n; ++i) {
    const double a = rand_double(lo, hi);
    const double b = rand_double(lo, hi);
    const Interval coarse = f(Interval::from_double(a), Interval::from_double(b));
    Interval fine;
    {
      PrecisionGuard guard(512);
      fine = f(Interval::from_double(a), Interval::from_double(b));
    }
    if (!coarse.contains(fine)) return false;
  }
  return true;
}

}  // namespace

int main() {
  const Interval kZero;
  const Interval kQuarter = Interval::from_ratio(1, 4);
  const Interval kHalf = Interval::from_ratio(1, 2);
  const Interval kThreeQ = Interval::from_ratio(3, 4);
  const Interval kOne = Interval::from_long(1);

  criterion(1, "smoothing-route constant table under directed rounding", 10, [] {
    const auto& C = first_approach_constants();
    return C.kappa.round_up_scaled(4) == 278821 && C.k111.round_up_scaled(5) == 15659 &&
           C.k112.round_up_scaled(5) == 15655 && C.k113.round_up_scaled(5) == 979 &&
           C.k114.round_down_scaled(5) == 7407 && C.k12s.round_up_scaled(5) == 30016 &&
           C.c21s.round_up_scaled(4) == 24476 && C.c22s.round_up_scaled(5) == 158493 &&
           C.k314.round_up_scaled(5) == 11361 && C.c30s.round_down_scaled(5) == 39113;
  });

  criterion(2, "leading-coefficient certificate stays below 3/5", 1, [] {
    return first_approach_constants().certificate.certainly_le(Interval::from_ratio(3, 5));
  });

  criterion(3, "simplified two-decimal mean-square constants", 30, [] {
    const auto h = simplify_to_headline();
    return h.mz_1 == cpp_rational(1834, 100) && h.mz_121 == cpp_rational(212, 100) &&
           h.mz_12_a == cpp_rational(2, 1) && h.mz_12_b == cpp_rational(2116, 100) &&
           h.mz_012 == cpp_rational(775, 100) && h.mz_0 == cpp_rational(93, 10);
  });

  criterion(4, "simplified two-decimal tail constants", 30, [] {
    const auto h = simplify_to_headline();
    return h.t_1 == cpp_rational(2806, 100) && h.t_121_num_a == cpp_rational(1885, 100) &&
           h.t_121_num_b == cpp_rational(61, 100) && h.t_121_opt == cpp_rational(1213, 100) &&
           h.t_12_num == cpp_rational(772, 100) && h.t_12_opt == cpp_rational(899, 100) &&
           h.t_012_num_a == cpp_rational(50, 100) && h.t_012_num_b == cpp_rational(95, 100) &&
           h.t_012_num_c == cpp_rational(562, 100) && h.t_012_num_d == cpp_rational(66, 100) &&
           h.t_012_opt == cpp_rational(1549, 100);
  });

  criterion(5, "five-decimal strip and tail constants", 30, [] {
    const auto& sc = second_approach_constants();
    return ru5(sc.l_u_11) == cpp_rational(697134, 100000) &&
           ru5(sc.l_u_1) == cpp_rational(4549404, 100000) &&
           ru5(sc.l_u_12) == cpp_rational(4408609, 100000) &&
           ru5(sc.l_u_0) == cpp_rational(2240776, 100000) &&
           ru5(sc.l_l_11) == cpp_rational(697134, 100000) &&
           ru5(sc.l_l_1) == cpp_rational(3722909, 100000) &&
           ru5(sc.l_l_12) == cpp_rational(4238738, 100000) &&
           ru5(sc.l_l_0) == cpp_rational(1546041, 100000) &&
           ru5(sc.cz0_u_a) == cpp_rational(398664, 100000) &&
           ru5(sc.cz0_u_b) == cpp_rational(736493, 100000) &&
           ru5(sc.cz0_l_a) == cpp_rational(12432, 100000) &&
           ru5(sc.c12_a) == cpp_rational(4, 1) &&
           ru5(sc.c12_b) == cpp_rational(4600343, 100000) &&
           ru5(sc.c1_a) == cpp_rational(2504878, 100000) &&
           ru5(sc.c1_b) == cpp_rational(1594452, 100000);
  });

  criterion(6, "crossover thresholds: grid minima and the 37-digit value", 60, [] {
    cpp_int best_hi = -1;
    for (const auto& [s, r] : crossover_scan(CrossoverForms::Simplified, 922, 926)) {
      if (r.kind != ThresholdResult::Kind::Value) return false;
      if (best_hi < 0 || r.value < best_hi) best_hi = r.value;
    }
    cpp_int best_lo = -1;
    for (const auto& [s, r] : crossover_scan(CrossoverForms::Simplified, 97, 99)) {
      if (r.kind != ThresholdResult::Kind::Value) return false;
      if (best_lo < 0 || r.value < best_lo) best_lo = r.value;
    }
    const auto half = find_crossover_threshold(CrossoverForms::Simplified,
                                               Interval::from_ratio(1, 2), cpp_int(100),
                                               pow(cpp_int(10), 39));
    if (half.kind != ThresholdResult::Kind::Value) return false;
    const std::string s = half.str();
    return best_hi == 590 && best_lo == 1554 && s.size() == 37 &&
           s.substr(0, 9) == "787390185";
  });

  criterion(7, "quadrature of the finite mean square lands inside the bounds", 300,
            [&] {
    for (const Interval& sigma : {kZero, kQuarter, kHalf, kThreeQ, kOne}) {
      for (long T : {10L, 50L, 200L}) {
        const Interval TT = Interval::from_long(T);
        const double gap = (finite_mean_square_upper(sigma, TT).value -
                            finite_mean_square_lower(sigma, TT).value)
                               .hi_double();
        const double target = std::min(std::max(0.05 * gap, 0.05), 50.0);
        if (!check_finite_mean_square(sigma, T, target).passed) return false;
      }
    }
    return true;
  });

  criterion(8, "quadrature of the tail integral stays below both tail bounds", 300,
            [&] {
    return check_tail_bounds(kOne, 200, 2e-3).passed &&
           check_tail_bounds(kOne, 500, 4e-4).passed &&
           check_tail_bounds(kHalf, 200, 1.5e-2).passed &&
           check_tail_bounds(kHalf, 500, 8e-3).passed;
  });

  criterion(9, "interval inclusion-monotonicity and point-consistency suites", 60, [] {
    const int n = 10000;
    const auto add = [](const Interval& a, const Interval& b) { return a + b; };
    const auto sub = [](const Interval& a, const Interval& b) { return a - b; };
    const auto mul = [](const Interval& a, const Interval& b) { return a * b; };
    const auto div = [](const Interval& a, const Interval& b) { return a / b; };
    const auto powf = [](const Interval& a, const Interval& b) { return pow(a, b); };
    return inclusion_binary(add, -100, 100, n) && inclusion_binary(sub, -100, 100, n) &&
           inclusion_binary(mul, -100, 100, n) && inclusion_binary(div, 0.01, 100, n) &&
           inclusion_binary(powf, 0.1, 5, n) &&
           inclusion_unary([](const Interval& a) { return exp(a); }, -30, 30, n) &&
           inclusion_unary([](const Interval& a) { return log(a); }, 1e-6, 1e6, n) &&
           inclusion_unary([](const Interval& a) { return sqrt(a); }, 0, 1e6, n) &&
           inclusion_unary([](const Interval& a) { return sin(a); }, -50, 50, n) &&
           inclusion_unary([](const Interval& a) { return abs(a); }, -100, 100, n) &&
           point_binary(add, -100, 100, n) && point_binary(mul, -100, 100, n) &&
           point_binary(div, 0.01, 100, n) && point_binary(powf, 0.1, 5, n) &&
           point_unary([](const Interval& a) { return exp(a); }, -30, 30, n) &&
           point_unary([](const Interval& a) { return log(a); }, 1e-6, 1e6, n) &&
           point_unary([](const Interval& a) { return sin(a); }, -50, 50, n);
  });

  criterion(10, "tail-bound families cross over once on the upper strip", 10, [&] {
    const auto r = find_crossover_threshold(CrossoverForms::Full, kThreeQ, cpp_int(200),
                                            cpp_int(100000));
    if (r.kind != ThresholdResult::Kind::Value || r.value <= 250 || r.value >= 3000)
      return false;
    const Interval pi = Interval::pi();
    const Interval t250 = Interval::from_long(250);
    if (!tail_bound_second_approach(kThreeQ, t250).value.certainly_gt(
            pi * tail_bound_first_approach(kThreeQ, t250).value))
      return false;
    for (long T : {3000L, 5000L, 10000L, 100000L, 1000000L}) {
      const Interval TT = Interval::from_long(T);
      if (!tail_bound_second_approach(kThreeQ, TT).value.certainly_lt(
              pi * tail_bound_first_approach(kThreeQ, TT).value))
        return false;
    }
    return true;
  });

  std::printf("%s\n", g_all_passed ? "all criteria passed" : "SOME CRITERIA FAILED");
  return g_all_passed ? 0 : 1;
}
