// Tests for the Stirling decay bounds and the functional-equation transfer.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "zetatail/gamma.hpp"
#include "zetatail/zeta.hpp"

using namespace zetatail;

namespace {

// Test-only gamma oracle (Lanczos, g=7).  Double precision with conservative
// relative padding; used solely to cross-check the certified bounds.
std::complex<double> gamma_lanczos(std::complex<double> z) {
  static const double c[9] = {0.99999999999980993,  676.5203681218851,
                              -1259.1392167224028,  771.32342877765313,
                              -176.61502916214059,  12.507343278686905,
                              -0.13857109526572012, 9.9843695780195716e-6,
                              1.5056327351493116e-7};
  if (z.real() < 0.5) {
    // reflection formula
    const double pi = 3.14159265358979323846;
    return pi / (std::sin(pi * z) * gamma_lanczos(1.0 - z));
  }
  z -= 1.0;
  std::complex<double> x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
  const std::complex<double> t = z + 7.5;
  const double pi = 3.14159265358979323846;
  return std::sqrt(2 * pi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

TEST_CASE("Stirling remainder coefficient") {
  const StirlingBound b = stirling_bound(Interval::pi() / 2);
  CHECK(b.F.contains(cpp_rational(1, 6)));
  CHECK(b.F.certainly_ge(Interval::from_ratio(1, 12)));
  // F >= 1/12 for all theta in (0, pi)
  for (int i = 1; i < 16; ++i) {
    const StirlingBound bi = stirling_bound(Interval::pi() * i / 16);
    CHECK(bi.F.certainly_ge(Interval::from_ratio(1, 12)));
  }
  CHECK_THROWS_AS(stirling_bound(Interval::from_long(4)), DomainError);
  CHECK_THROWS_AS(stirling_bound(Interval()), DomainError);
}

TEST_CASE("gamma decay exponent G") {
  // G_{1/2} = (1/2)^3/3 + 0 + 1/6 = 1/24 + 1/6 = 5/24
  CHECK(gamma_decay_G(Interval::from_ratio(1, 2)).contains(cpp_rational(5, 24)));
  // G_1 = 1/3 + 1/2 * 1/2 + 1/6 = 3/4
  CHECK(gamma_decay_G(Interval::from_long(1)).contains(cpp_rational(3, 4)));
  // G_{1-sigma} <= 3/4 for sigma in [0, 1/2) (equality at sigma = 0)
  for (int i = 0; i < 50; ++i) {
    const Interval sigma = Interval::from_ratio(i, 100);
    CHECK(gamma_decay_G(1 - sigma).lo_double() <= 0.75 + 1e-30);
  }
  CHECK_THROWS_AS(gamma_decay_G(Interval::from_long(-1)), DomainError);
}

TEST_CASE("gamma modulus enclosure on vertical lines") {
  // |Gamma(1+i)| = 0.4980156681183560427...
  const Interval g = gamma_abs_enclosure(Interval::from_long(1), Interval::from_long(1));
  CHECK(g.contains(0.4980156681183560427));
  CHECK(g.lo_double() > 0.246);
  CHECK(g.hi_double() < 1.104);

  // the band shrinks as T grows
  const Interval g10 = gamma_abs_enclosure(Interval::from_long(1), Interval::from_long(10));
  const double rel10 = g10.width_double() / g10.lo_double();
  const double rel1 = g.width_double() / g.lo_double();
  CHECK(rel10 < rel1 / 5);
  const std::complex<double> ref10 = gamma_lanczos({1.0, 10.0});
  CHECK(g10.contains(std::abs(ref10)));

  CHECK_THROWS_AS(gamma_abs_enclosure(Interval::from_long(1), Interval::from_ratio(1, 2)),
                  DomainError);

  // oracle cross-check at random (sigma, t)
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> sd(0.0, 2.0), td(1.0, 20.0);
  for (int i = 0; i < 100; ++i) {
    const double sigma = sd(rng), t = td(rng);
    const Interval enc =
        gamma_abs_enclosure(Interval::from_double(sigma), Interval::from_double(t));
    const double ref = std::abs(gamma_lanczos({sigma, t}));
    CHECK(enc.lo_double() * (1 - 1e-9) <= ref);
    CHECK(ref <= enc.hi_double() * (1 + 1e-9));
  }
}

TEST_CASE("Stirling main-term bound off the cut") {
  // |Gamma(s)| within sqrt(2 pi) |s^{s-1/2} e^{-s}| e^{+-F/|s|} for
  // |arg s| <= pi/2 (theta = pi/2, F = 1/6).
  const double F = 1.0 / 6.0;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> xd(0.5, 10.0), yd(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    const std::complex<double> s(xd(rng), yd(rng));
    const double mag = std::abs(s);
    const std::complex<double> main =
        std::sqrt(2 * 3.14159265358979323846) * std::pow(s, s - 0.5) * std::exp(-s);
    const double ref = std::abs(gamma_lanczos(s));
    const double lo = std::abs(main) * std::exp(-F / mag) * (1 - 1e-9);
    const double hi = std::abs(main) * std::exp(F / mag) * (1 + 1e-9);
    CHECK(lo <= ref);
    CHECK(ref <= hi);
  }
}

TEST_CASE("sine factor on the left half of the strip") {
  // sigma=0, t=1: true value sinh^2(pi/2) = 5.32572...; enclosure
  // (e^pi/4)(1 +- 2 e^{-pi}) contains it
  const Interval f = sin_half_plane_factor(Interval(), Interval::from_long(1));
  const Interval truth = sqr((exp(Interval::pi() / 2) - exp(-Interval::pi() / 2)) / 2);
  CHECK(f.intersects(truth));  // equal up to rounding: both enclose sinh^2(pi/2)
  CHECK(f.lo_double() > 5.28);
  CHECK(f.hi_double() < 6.29);

  // monotone envelope in t
  const Interval f2 = sin_half_plane_factor(Interval(), Interval::from_long(2));
  CHECK(f2.certainly_gt(f));

  // near sigma = 1/2 the cos^2 factor stays above 1/2
  const Interval fh = sin_half_plane_factor(Interval::from_decimal("0.49"),
                                            Interval::from_long(3));
  CHECK(fh.certainly_positive());

  CHECK_THROWS_AS(sin_half_plane_factor(Interval::from_ratio(1, 2), Interval::from_long(2)),
                  DomainError);
  CHECK_THROWS_AS(sin_half_plane_factor(Interval(), Interval::from_ratio(1, 2)), DomainError);

  // oracle: |sin(pi s/2)|^2 at random points lies inside
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> sd(0.0, 0.49), td(1.0, 8.0);
  for (int i = 0; i < 100; ++i) {
    const double sigma = sd(rng), t = td(rng);
    const std::complex<double> s(sigma, t);
    const std::complex<double> v = std::sin(3.14159265358979323846 * s / 2.0);
    const double ref = std::norm(v);
    const Interval enc =
        sin_half_plane_factor(Interval::from_double(sigma), Interval::from_double(t));
    CHECK(enc.lo_double() * (1 - 1e-16) <= ref * (1 + 1e-12));
    CHECK(ref * (1 - 1e-12) <= enc.hi_double() * (1 + 1e-16));
    // the enclosure sits inside the asymptotic band (e^{pi t}/4)(1 +- 2e^{-pi t})
    const Interval ti = Interval::from_double(t);
    const Interval main = exp(Interval::pi() * ti) / 4;
    const Interval eps = 2 * exp(-Interval::pi() * ti);
    const Interval band = Interval::hull(main * (1 - eps), main * (1 + eps));
    CHECK(band.contains(enc));
  }
}

TEST_CASE("transfer constants") {
  const Interval k1 = transfer_constant_K1();
  CHECK(abs(k1 - Interval::from_decimal("1.11700001661267466854536981983709")).hi_double() <
        1e-28);
  const Interval k2 = transfer_constant_K2();
  CHECK(abs(k2 - Interval::from_decimal("3.86903176067652597139225511693736")).hi_double() <
        1e-28);
}

TEST_CASE("functional-equation transfer closes with direct evaluation") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> sd(0.0, 0.49), td(2.0, 50.0);
  const Interval two_pi = 2 * Interval::pi();
  for (int i = 0; i < 100; ++i) {
    const double sigma = sd(rng), t = td(rng);
    const Interval si = Interval::from_double(sigma);
    const Interval ti = Interval::from_double(t);
    const ComplexInterval left = zeta_enclosure({si, ti});
    const ComplexInterval right = zeta_enclosure({1 - si, ti});
    const Interval direct = left.abs2();
    const Interval transferred = pow(two_pi, 2 * si - 1) * pow(ti, 1 - 2 * si) *
                                 right.abs2() * functional_transfer_factor(si, ti);
    CHECK(direct.intersects(transferred));
  }
}
