#include "zetatail/gamma.hpp"

namespace zetatail {

StirlingBound stirling_bound(const Interval& theta) {
  if (!theta.certainly_positive() || !theta.certainly_lt(Interval::pi()))
    throw DomainError("stirling_bound needs theta in (0, pi)");
  StirlingBound out;
  out.theta = theta;
  out.F = Interval::from_long(1) / (12 * sqr(sin(theta / 2)));
  return out;
}

Interval gamma_decay_G(const Interval& sigma) {
  if (!sigma.certainly_nonnegative()) throw DomainError("gamma_decay_G needs sigma >= 0");
  return pow_si(sigma, 3) / 3 + sqr(sigma) / 2 * abs(sigma - Interval::from_ratio(1, 2)) +
         Interval::from_ratio(1, 6);
}

Interval gamma_abs_enclosure(const Interval& sigma, const Interval& t) {
  const Interval ta = abs(t);
  if (!ta.certainly_ge(Interval::from_long(1)))
    throw DomainError("gamma_abs_enclosure needs |t| >= 1");
  const Interval T = ta.lower_endpoint();
  const Interval G = gamma_decay_G(sigma);
  const Interval main = sqrt(2 * Interval::pi()) * pow(ta, sigma - Interval::from_ratio(1, 2)) *
                        exp(-Interval::pi() * ta / 2);
  const Interval wiggle = G / T;
  return main * Interval::hull(exp(-wiggle), exp(wiggle));
}

Interval sin_half_plane_factor(const Interval& sigma, const Interval& t) {
  if (!sigma.certainly_nonnegative() || !sigma.certainly_lt(Interval::from_ratio(1, 2)))
    throw DomainError("sin_half_plane_factor needs 0 <= sigma < 1/2");
  if (!t.certainly_ge(Interval::from_long(1)))
    throw DomainError("sin_half_plane_factor needs t >= 1");
  // Exact: |sin(pi s/2)|^2 = (cosh(pi t) - cos(pi sigma))/2.  For sigma in
  // [0,1/2), t >= 1 this always lies inside (e^{pi t}/4)(1 +- 2 e^{-pi t}).
  const Interval pi = Interval::pi();
  const Interval cosh_pt = (exp(pi * t) + exp(-pi * t)) / 2;
  return (cosh_pt - cos(pi * sigma)) / 2;
}

Interval transfer_constant_K1() { return exp(Interval::from_ratio(3, 4)) - 1; }

Interval transfer_constant_K2() {
  const Interval k1 = transfer_constant_K1();
  const Interval em = exp(-Interval::pi());
  return 2 * k1 + sqr(k1) + 2 * em + 4 * k1 * em + 2 * sqr(k1) * em;
}

Interval functional_transfer_factor(const Interval& sigma, const Interval& t) {
  if (!sigma.certainly_nonnegative() || !sigma.certainly_lt(Interval::from_ratio(1, 2)))
    throw DomainError("functional_transfer_factor needs 0 <= sigma < 1/2");
  if (!t.certainly_ge(Interval::from_long(1)))
    throw DomainError("functional_transfer_factor needs t >= 1");
  const Interval eps = transfer_constant_K2() / t;
  return Interval::hull(1 - eps, 1 + eps);
}

}  // namespace zetatail
