// Tests for the asymptotic term ledger: evaluation, rho splitting,
// zeta-channel elimination, and lower-order absorption.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "zetatail/ledger.hpp"
#include "zetatail/zeta.hpp"

using namespace zetatail;

namespace {
Interval sig_range(double lo, double hi) { return Interval::from_endpoints(lo, hi); }
}  // namespace

TEST_CASE("evaluate basic terms") {
  // single term T log T at T = e evaluates to e
  AsymptoticTermSum s(BasisMode::UpperStrip, sig_range(0.5, 1.0), 2);
  s.add_term({2, 0, 2}, 0, Interval::from_long(1));
  const Interval e = exp(Interval::from_long(1));
  const Interval v = s.evaluate(Interval::from_decimal("0.75"), e);
  CHECK(abs(v - e).hi_double() < 1e-25);

  // zeta(2 sigma) T + C T^{2-2 sigma} log T at sigma = 0.75, T = 100
  AsymptoticTermSum f(BasisMode::UpperStrip, sig_range(0.5, 1.0), 4);
  f.add_term({2, 0, 0}, 5, Interval::from_long(1));  // zeta(2s) * T
  const Interval C = Interval::from_decimal("2.12") /
                     (Interval::from_decimal("0.25") * sqr(Interval::from_decimal("0.25")));
  f.add_term({2, 1, 2}, 0, C);  // C * T^{1 + (1-2s)} log T = C T^{2-2s} log T
  const Interval sigma = Interval::from_decimal("0.75");
  const Interval T = Interval::from_long(100);
  const Interval got = f.evaluate(sigma, T);
  const Interval want = zeta_real(Interval::from_decimal("1.5")) * 100 +
                        C * pow(T, Interval::from_ratio(1, 2)) * log(T);
  CHECK(got.intersects(want));
  CHECK(abs(got - want).hi_double() < 1e-20);

  // additivity
  const AsymptoticTermSum both = s + s;
  const Interval v2 = both.evaluate(Interval::from_decimal("0.75"), e);
  CHECK(v2.contains(v + v));

  // preconditions
  CHECK_THROWS_AS(s.evaluate(Interval::from_decimal("0.2"), e), DomainError);
  CHECK_THROWS_AS(s.evaluate(Interval::from_decimal("0.75"), Interval::from_long(1)),
                  DomainError);
  CHECK_THROWS_AS(s.add_term({0, 0, 0}, 6, Interval::from_long(1)), DomainError);
}

TEST_CASE("basis functions") {
  const Interval s34 = Interval::from_decimal("0.75");
  CHECK(basis_value(BasisMode::UpperStrip, 1, s34).contains(cpp_rational(4, 1)));
  CHECK(basis_value(BasisMode::UpperStrip, 2, s34).contains(cpp_rational(16, 1)));
  CHECK(basis_value(BasisMode::UpperStrip, 3, s34).contains(cpp_rational(2, 1)));
  CHECK(basis_value(BasisMode::UpperStrip, 4, s34).contains(cpp_rational(8, 1)));
  const Interval s14 = Interval::from_decimal("0.25");
  CHECK(basis_value(BasisMode::LowerStrip, 1, s14).contains(cpp_rational(4, 1)));
  CHECK(basis_value(BasisMode::LowerStrip, 2, s14).contains(cpp_rational(2, 1)));
  CHECK(basis_value(BasisMode::LowerStrip, 3, s14)
            .intersects(zeta_real(Interval::from_decimal("1.5"))));
  CHECK_THROWS_AS(basis_value(BasisMode::LowerStrip, 4, s14), DomainError);
}

TEST_CASE("rho combine") {
  const Interval sigma = Interval::from_decimal("0.75");

  // zero penalty: output = (1 + rho) main exactly
  AsymptoticTermSum main(BasisMode::UpperStrip, sig_range(0.5, 1.0), 4);
  main.add_term({2, 0, 2}, 0, Interval::from_long(1));  // T log T
  AsymptoticTermSum zero(BasisMode::UpperStrip, sig_range(0.5, 1.0), 4);
  const RhoSpec rho_log{Interval::from_long(1), 0, -1};  // 1/sqrt(log T)
  const AsymptoticTermSum up = rho_combine(main, zero, rho_log, Direction::Upper);
  const Interval T = Interval::from_long(100);
  const Interval expect =
      (1 + 1 / sqrt(log(T))) * T * log(T);
  CHECK(up.evaluate(sigma, T).intersects(expect));

  // rho = 1/sqrt(log T) with penalty log T produces the T sqrt(log T) and
  // (log T)^{3/2} cross terms
  AsymptoticTermSum pen(BasisMode::UpperStrip, sig_range(0.5, 1.0), 4);
  pen.add_term({0, 0, 2}, 0, Interval::from_long(1));
  const AsymptoticTermSum comb = rho_combine(main, pen, rho_log, Direction::Upper);
  CHECK(comb.terms().count({2, 0, 1}) == 1);  // T sqrt(log T)
  CHECK(comb.terms().count({0, 0, 3}) == 1);  // (log T)^{3/2}
  CHECK(comb.coefficient({2, 0, 1}, 0).contains(1.0));

  // rho = 1/sqrt(zeta(2) T) applied to main = zeta(2) T, penalty = 1 yields a
  // combined sqrt(T) coefficient of pi sqrt(2/3)
  AsymptoticTermSum m1(BasisMode::UpperStrip, sig_range(0.5, 1.0), 4);
  const Interval z2 = sqr(Interval::pi()) / 6;
  m1.add_term({2, 0, 0}, 0, z2);
  AsymptoticTermSum p1(BasisMode::UpperStrip, sig_range(0.5, 1.0), 4);
  p1.add_term({0, 0, 0}, 0, Interval::from_long(1));
  const RhoSpec rho_z{1 / sqrt(z2), -1, 0};
  const AsymptoticTermSum c1 = rho_combine(m1, p1, rho_z, Direction::Upper);
  const Interval sqrtT_coef = c1.coefficient({1, 0, 0}, 0);
  const Interval want = Interval::pi() * sqrt(Interval::from_ratio(2, 3));
  CHECK(sqrtT_coef.intersects(want));

  // tight point rho = sqrt(B/A): (1+rho)A + (1+1/rho)B = (sqrt A + sqrt B)^2
  AsymptoticTermSum A(BasisMode::UpperStrip, sig_range(0.5, 1.0), 4);
  A.add_term({0, 0, 0}, 0, Interval::from_long(4));
  AsymptoticTermSum B(BasisMode::UpperStrip, sig_range(0.5, 1.0), 4);
  B.add_term({0, 0, 0}, 0, Interval::from_long(9));
  const RhoSpec tight{Interval::from_ratio(3, 2), 0, 0};
  const AsymptoticTermSum best = rho_combine(A, B, tight, Direction::Upper);
  CHECK(best.evaluate(sigma, Interval::from_long(10)).contains(cpp_rational(25, 1)));

  // lower direction requires |rho| < 1 at T0
  const RhoSpec too_big{Interval::from_long(2), 0, 0};
  CHECK_THROWS_AS(rho_combine(A, B, too_big, Direction::Lower), DomainError);
  const RhoSpec ok_small{Interval::from_ratio(1, 2), 0, 0};
  const AsymptoticTermSum low = rho_combine(A, B, ok_small, Direction::Lower);
  // (1 - 1/2) 4 + (1 - 2) 9 = 2 - 9 = -7
  CHECK(low.evaluate(sigma, Interval::from_long(10)).contains(cpp_rational(-7, 1)));

  // mode mixing rejected
  AsymptoticTermSum other(BasisMode::LowerStrip, sig_range(0.1, 0.4), 4);
  CHECK_THROWS_AS(rho_combine(A, other, tight, Direction::Upper), DomainError);
  CHECK_THROWS_AS(A + other, DomainError);
}

TEST_CASE("zeta elimination") {
  const Interval sigma = Interval::from_decimal("0.75");
  const Interval T = Interval::from_long(10);
  AsymptoticTermSum s(BasisMode::UpperStrip, sig_range(0.55, 1.0), 4);
  s.add_term({2, 0, 0}, 5, Interval::from_long(1));  // zeta(2s) T
  const Interval direct = s.evaluate(sigma, T);

  const AsymptoticTermSum upper = eliminate_zeta(s, Direction::Upper);
  const AsymptoticTermSum lower = eliminate_zeta(s, Direction::Lower);
  CHECK(upper.coefficient({2, 0, 0}, 5).contains_zero());
  CHECK(upper.evaluate(sigma, T).certainly_ge(direct));
  CHECK(lower.evaluate(sigma, T).certainly_le(direct));

  // negative coefficient flips the inequality side used
  AsymptoticTermSum neg(BasisMode::UpperStrip, sig_range(0.55, 1.0), 4);
  neg.add_term({2, 0, 0}, 5, Interval::from_long(-1));
  CHECK(eliminate_zeta(neg, Direction::Upper)
            .evaluate(sigma, T)
            .certainly_ge(neg.evaluate(sigma, T)));
  CHECK(eliminate_zeta(neg, Direction::Lower)
            .evaluate(sigma, T)
            .certainly_le(neg.evaluate(sigma, T)));

  // lower-strip variant: zeta(2-2s) at sigma = 0.25
  AsymptoticTermSum ls(BasisMode::LowerStrip, sig_range(0.1, 0.4), 4);
  ls.add_term({0, 0, 0}, 3, Interval::from_long(1));
  const Interval s14 = Interval::from_decimal("0.25");
  CHECK(eliminate_zeta(ls, Direction::Upper)
            .evaluate(s14, T)
            .certainly_ge(ls.evaluate(s14, T)));
}

TEST_CASE("absorption") {
  // c sqrt(T) into T at T0 = 4 contributes c/2
  AsymptoticTermSum s(BasisMode::UpperStrip, sig_range(0.5, 1.0), 4);
  s.add_term({2, 0, 0}, 0, Interval::from_long(1));
  s.add_term({1, 0, 0}, 0, Interval::from_long(1));
  const AsymptoticTermSum a = absorb(s, 4, {2, 0, 0}, Direction::Upper);
  CHECK(a.terms().size() == 1);
  CHECK(a.coefficient({2, 0, 0}, 0).contains(cpp_rational(3, 2)));

  // (log T)/sqrt(T) into a constant target at T0 = 4 < e^2: correction 2/e
  AsymptoticTermSum t(BasisMode::UpperStrip, sig_range(0.5, 1.0), 4);
  t.add_term({0, 0, 0}, 0, Interval::from_long(1));
  t.add_term({-1, 0, 2}, 0, Interval::from_long(1));
  const AsymptoticTermSum at = absorb(t, 4, {0, 0, 0}, Direction::Upper);
  const Interval expect = 1 + 2 / exp(Interval::from_long(1));
  CHECK(at.coefficient({0, 0, 0}, 0).intersects(expect));

  // negative lower-order coefficient dropped in the upper direction
  AsymptoticTermSum n(BasisMode::UpperStrip, sig_range(0.5, 1.0), 4);
  n.add_term({2, 0, 0}, 0, Interval::from_long(1));
  n.add_term({1, 0, 0}, 0, Interval::from_long(-5));
  const AsymptoticTermSum an = absorb(n, 4, {2, 0, 0}, Direction::Upper);
  CHECK(an.coefficient({2, 0, 0}, 0).contains(cpp_rational(1, 1)));
  CHECK(an.coefficient({2, 0, 0}, 0).hi_double() <= 1.0 + 1e-30);
  // ... and kept in the lower direction
  const AsymptoticTermSum an_low = absorb(n, 4, {2, 0, 0}, Direction::Lower);
  CHECK(an_low.coefficient({2, 0, 0}, 0).contains(cpp_rational(1, 1) - cpp_rational(5, 2)));

  // higher-order term rejected
  AsymptoticTermSum h(BasisMode::UpperStrip, sig_range(0.5, 1.0), 4);
  h.add_term({2, 0, 0}, 0, Interval::from_long(1));
  h.add_term({3, 0, 0}, 0, Interval::from_long(1));
  CHECK_THROWS_AS(absorb(h, 4, {2, 0, 0}, Direction::Upper), DomainError);
  // mismatched sigma coupling rejected
  AsymptoticTermSum qmix(BasisMode::UpperStrip, sig_range(0.5, 1.0), 4);
  qmix.add_term({2, 0, 0}, 0, Interval::from_long(1));
  qmix.add_term({1, 1, 0}, 0, Interval::from_long(1));
  CHECK_THROWS_AS(absorb(qmix, 4, {2, 0, 0}, Direction::Upper), DomainError);
}

TEST_CASE("absorption soundness on random sums") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coefd(-3.0, 3.0), td(4.0, 5000.0);
  const Interval sigma = Interval::from_decimal("0.75");
  for (int trial = 0; trial < 25; ++trial) {
    AsymptoticTermSum s(BasisMode::UpperStrip, sig_range(0.5, 1.0), 4);
    const TermKey target{4, 0, 2};  // T^2 log T dominates everything below
    s.add_term(target, 0, Interval::from_double(std::abs(coefd(rng)) + 0.5));
    const TermKey lows[] = {{4, 0, 0}, {3, 0, 2}, {2, 0, 0}, {1, 0, 4}, {0, 0, 0}};
    for (const TermKey& k : lows) s.add_term(k, 0, Interval::from_double(coefd(rng)));
    const AsymptoticTermSum up = absorb(s, 4, target, Direction::Upper);
    const AsymptoticTermSum low = absorb(s, 4, target, Direction::Lower);
    for (int i = 0; i < 40; ++i) {
      const Interval T = Interval::from_double(td(rng));
      const Interval orig = s.evaluate(sigma, T);
      CHECK(orig.lo_double() <= up.evaluate(sigma, T).hi_double() + 1e-12);
      CHECK(low.evaluate(sigma, T).lo_double() <= orig.hi_double() + 1e-12);
    }
  }
}

TEST_CASE("stable dump") {
  AsymptoticTermSum s(BasisMode::LowerStrip, sig_range(0.1, 0.4), 4);
  s.add_term({2, 0, 0}, 0, Interval::from_long(1));
  s.add_term({0, 1, 0}, 1, Interval::from_long(2));
  const std::string d = s.dump(5);
  CHECK(d == "lower-strip T0=4\n"
             "p2=0 q=1 m2=0 | [0, 0] [2, 2] [0, 0] [0, 0]\n"
             "p2=2 q=0 m2=0 | [1, 1] [0, 0] [0, 0] [0, 0]\n");
}
