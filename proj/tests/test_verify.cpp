// Tests for the derivative enclosure and the certified quadrature: frozen
// high-precision integrals, self-consistency of box versus point
// evaluations, containment checks, and domain guards.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zetatail/verify.hpp"

using namespace zetatail;

namespace {
const Interval kHalf = Interval::from_ratio(1, 2);
const Interval kOne = Interval::from_long(1);
}  // namespace

TEST_CASE("derivative enclosure at real points") {
  // zeta'(2) and zeta'(3), frozen from a 40-digit evaluation
  const Interval d2 = Interval::from_decimal("-0.9375482543158437537025740945678650968622");
  const Interval d3 = Interval::from_decimal("-0.1981262428856368533306818215032857968755");
  ZetaEMParams p;
  p.N = 64;
  p.K = 16;
  const auto z2 = zeta_prime_enclosure(ComplexInterval::from_real(Interval::from_long(2)), p);
  const auto z3 = zeta_prime_enclosure(ComplexInterval::from_real(Interval::from_long(3)), p);
  CHECK(z2.re().contains(d2));
  CHECK(abs(z2.re() - d2).hi_double() < 1e-20);
  CHECK(z2.im().contains_zero());
  CHECK(z3.re().contains(d3));
  CHECK(abs(z3.re() - d3).hi_double() < 1e-20);
}

TEST_CASE("box evaluation contains interior point evaluations") {
  const Interval tlo = Interval::from_decimal("9.75");
  const Interval thi = Interval::from_decimal("10.25");
  const ComplexInterval box(kHalf, Interval::hull(tlo, thi));
  const auto zp_box = zeta_prime_enclosure(box);
  for (const char* t : {"9.75", "10.0", "10.25"}) {
    const ComplexInterval pt(kHalf, Interval::from_decimal(t));
    const auto zp = zeta_prime_enclosure(pt);
    CHECK(zp_box.re().contains(zp.re()));
    CHECK(zp_box.im().contains(zp.im()));
  }
}

TEST_CASE("quadrature reproduces a certified critical-line integral") {
  // int_1^10 |zeta(1/2+it)|^2 dt
  const Interval golden = Interval::from_decimal("8.73981177631784673602053225111");
  const auto q = integral_enclosure(kHalf, cpp_rational(1), cpp_rational(10),
                                    Integrand::ZetaSquared, 1e-6);
  CHECK(q.value.contains(golden));
  CHECK(q.value.width_double() <= 1e-6);
  CHECK(q.panels > 0);
}

TEST_CASE("quadrature reproduces a certified tail integral") {
  // int_200^1000 |zeta(1+it)/(1+it)|^2 dt
  const Interval golden = Interval::from_decimal("0.00648387755555610974933494360048");
  const auto q = integral_enclosure(kOne, cpp_rational(200), cpp_rational(1000),
                                    Integrand::ZetaOverSSquared, 2e-5);
  CHECK(q.value.contains(golden));
  CHECK(q.value.width_double() <= 2e-5);
}

TEST_CASE("containment checks pass on sample cases") {
  const auto fin = check_finite_mean_square(kHalf, 10, 0.05);
  CHECK(fin.passed);
  CHECK(fin.lower.certainly_le(fin.integral));
  CHECK(fin.integral.certainly_le(fin.upper));

  const auto tail = check_tail_bounds(kOne, 200, 7.5e-4);
  CHECK(tail.passed);
  CHECK(tail.integral.certainly_le(tail.smoothing_bound));
  CHECK(tail.integral.certainly_le(tail.meanvalue_bound));
}

TEST_CASE("domain guards") {
  CHECK_THROWS_AS(integral_enclosure(kHalf, cpp_rational(0), cpp_rational(10),
                                     Integrand::ZetaSquared, 1e-3),
                  DomainError);
  CHECK_THROWS_AS(integral_enclosure(kHalf, cpp_rational(10), cpp_rational(10),
                                     Integrand::ZetaSquared, 1e-3),
                  DomainError);
  CHECK_THROWS_AS(integral_enclosure(kHalf, cpp_rational(1), cpp_rational(10),
                                     Integrand::ZetaSquared, 0.0),
                  DomainError);
}
