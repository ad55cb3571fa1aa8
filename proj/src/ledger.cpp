#include "zetatail/ledger.hpp"

#include <sstream>

#include "zetatail/zeta.hpp"

namespace zetatail {

int basis_size(BasisMode mode) { return mode == BasisMode::UpperStrip ? 6 : 4; }

Interval basis_value(BasisMode mode, int index, const Interval& sigma) {
  const Interval one = Interval::from_long(1);
  if (mode == BasisMode::UpperStrip) {
    switch (index) {
      case 0: return one;
      case 1: return 1 / (1 - sigma);
      case 2: return 1 / sqr(1 - sigma);
      case 3: return 1 / (2 * sigma - 1);
      case 4: return 1 / ((1 - sigma) * (2 * sigma - 1));
      case 5: return zeta_real(2 * sigma);
      default: throw DomainError("basis_value: bad index");
    }
  }
  switch (index) {
    case 0: return one;
    case 1: return 1 / sigma;
    case 2: return 1 / (1 - 2 * sigma);
    case 3: return zeta_real(2 - 2 * sigma);
    default: throw DomainError("basis_value: bad index");
  }
}

AsymptoticTermSum::AsymptoticTermSum(BasisMode mode, Interval sigma_range, long t0)
    : mode_(mode), sigma_range_(std::move(sigma_range)), t0_(t0) {}

void AsymptoticTermSum::add_term(const TermKey& key, int basis_index, const Interval& coef) {
  if (basis_index < 0 || basis_index >= basis_size(mode_))
    throw DomainError("add_term: basis index out of range");
  auto& vec = terms_[key];
  if (vec.empty()) vec.assign(basis_size(mode_), Interval());
  vec[basis_index] += coef;
}

Interval AsymptoticTermSum::coefficient(const TermKey& key, int basis_index) const {
  const auto it = terms_.find(key);
  if (it == terms_.end()) return Interval();
  return it->second[basis_index];
}

AsymptoticTermSum AsymptoticTermSum::operator+(const AsymptoticTermSum& o) const {
  if (mode_ != o.mode_ || t0_ != o.t0_)
    throw DomainError("term sums with different modes or thresholds cannot be added");
  AsymptoticTermSum out = *this;
  if (!sigma_range_.contains(o.sigma_range_) || !o.sigma_range_.contains(sigma_range_)) {
    // intersect the admissible ranges: keep the narrower hull-safe choice
    out.sigma_range_ = sigma_range_.contains(o.sigma_range_) ? o.sigma_range_ : sigma_range_;
  }
  for (const auto& [key, vec] : o.terms_)
    for (int i = 0; i < basis_size(mode_); ++i) out.add_term(key, i, vec[i]);
  return out;
}

AsymptoticTermSum AsymptoticTermSum::scaled(const Interval& c) const {
  AsymptoticTermSum out(mode_, sigma_range_, t0_);
  for (const auto& [key, vec] : terms_)
    for (int i = 0; i < basis_size(mode_); ++i) out.add_term(key, i, vec[i] * c);
  return out;
}

AsymptoticTermSum AsymptoticTermSum::shifted(int dp2, int dm2) const {
  AsymptoticTermSum out(mode_, sigma_range_, t0_);
  for (const auto& [key, vec] : terms_) {
    const TermKey shifted_key{key.p2 + dp2, key.q, key.m2 + dm2};
    for (int i = 0; i < basis_size(mode_); ++i) out.add_term(shifted_key, i, vec[i]);
  }
  return out;
}

Interval AsymptoticTermSum::evaluate(const Interval& sigma, const Interval& T) const {
  if (!sigma_range_.contains(sigma))
    throw DomainError("evaluate: sigma outside the declared range");
  if (!T.certainly_ge(Interval::from_long(t0_)))
    throw DomainError("evaluate: T below the declared threshold");
  const Interval logT = log(T);
  Interval total;
  for (const auto& [key, vec] : terms_) {
    const Interval coupling = (mode_ == BasisMode::UpperStrip) ? (1 - 2 * sigma) : sigma;
    const Interval expnt = Interval::from_ratio(key.p2, 2) + key.q * coupling;
    Interval factor = pow(T, expnt);
    if (key.m2 != 0) {
      if (key.m2 % 2 == 0)
        factor *= pow_si(logT, key.m2 / 2);
      else
        factor *= pow(logT, Interval::from_ratio(key.m2, 2));
    }
    Interval channel_sum;
    for (int i = 0; i < basis_size(mode_); ++i) {
      if (vec[i].contains_zero() && vec[i].is_point()) continue;
      channel_sum += vec[i] * basis_value(mode_, i, sigma);
    }
    total += channel_sum * factor;
  }
  return total;
}

std::string AsymptoticTermSum::dump(int digits) const {
  std::ostringstream out;
  out << (mode_ == BasisMode::UpperStrip ? "upper-strip" : "lower-strip") << " T0=" << t0_
      << "\n";
  for (const auto& [key, vec] : terms_) {
    out << "p2=" << key.p2 << " q=" << key.q << " m2=" << key.m2 << " |";
    for (int i = 0; i < basis_size(mode_); ++i) out << " " << vec[i].str(digits);
    out << "\n";
  }
  return out.str();
}

namespace {

// value of rho at T = t0 (its maximum when p2, m2 <= 0 and t0 >= 3)
Interval rho_at(const RhoSpec& rho, long t0) {
  const Interval T = Interval::from_long(t0);
  Interval v = rho.c * pow(T, Interval::from_ratio(rho.p2, 2));
  if (rho.m2 != 0) v *= pow(log(T), Interval::from_ratio(rho.m2, 2));
  return v;
}

AsymptoticTermSum scaled_shift(const AsymptoticTermSum& s, const Interval& c, int dp2, int dm2) {
  return s.scaled(c).shifted(dp2, dm2);
}

}  // namespace

AsymptoticTermSum rho_combine(const AsymptoticTermSum& main, const AsymptoticTermSum& penalty,
                              const RhoSpec& rho, Direction dir) {
  if (!rho.c.certainly_positive()) throw DomainError("rho_combine: rho magnitude must be > 0");
  if (main.mode() != penalty.mode() || main.t0() != penalty.t0())
    throw DomainError("rho_combine: mismatched sums");
  if (dir == Direction::Lower) {
    if (rho.p2 > 0 || rho.m2 > 0)
      throw DomainError("rho_combine: lower direction needs a nonincreasing rho");
    if (!rho_at(rho, main.t0()).certainly_lt(Interval::from_long(1)))
      throw DomainError("rho_combine: |rho| not certainly below 1 at T0");
  }
  const Interval sign = dir == Direction::Upper ? Interval::from_long(1) : Interval::from_long(-1);
  AsymptoticTermSum out = main + penalty;
  out = out + scaled_shift(main, sign * rho.c, rho.p2, rho.m2);
  out = out + scaled_shift(penalty, sign / rho.c, -rho.p2, -rho.m2);
  return out;
}

AsymptoticTermSum eliminate_zeta(const AsymptoticTermSum& sum, Direction dir) {
  const int zi = sum.mode() == BasisMode::UpperStrip ? 5 : 3;
  const int ri = sum.mode() == BasisMode::UpperStrip ? 3 : 2;
  const Interval H = zeta_real(Interval::from_long(2)) - 1;
  AsymptoticTermSum out(sum.mode(), sum.sigma_range(), sum.t0());
  for (const auto& [key, vec] : sum.terms()) {
    for (int i = 0; i < basis_size(sum.mode()); ++i) {
      if (i != zi) {
        out.add_term(key, i, vec[i]);
        continue;
      }
      const Interval& c = vec[i];
      if (c.contains_zero() && c.is_point()) continue;
      out.add_term(key, ri, c);
      const bool take_sup = (dir == Direction::Upper) ? c.certainly_nonnegative()
                                                      : c.certainly_negative();
      const bool take_inf = (dir == Direction::Upper) ? c.certainly_negative()
                                                      : c.certainly_nonnegative();
      if (take_sup)
        out.add_term(key, 0, c * H);
      else if (!take_inf)  // sign indeterminate: keep the full band
        out.add_term(key, 0, c * Interval::hull(Interval(), H));
    }
  }
  return out;
}

AsymptoticTermSum absorb(const AsymptoticTermSum& sum, long T0, const TermKey& target,
                         Direction dir) {
  if (T0 < 2) throw DomainError("absorb needs T0 >= 2");
  const Interval T0i = Interval::from_long(T0);
  const Interval logT0 = log(T0i);
  AsymptoticTermSum out(sum.mode(), sum.sigma_range(), sum.t0());
  for (const auto& [key, vec] : sum.terms()) {
    if (key == target) {
      for (int i = 0; i < basis_size(sum.mode()); ++i) out.add_term(target, i, vec[i]);
      continue;
    }
    if (key.q != target.q)
      throw DomainError("absorb: sigma-coupled exponents must match the target");
    const int dp2 = key.p2 - target.p2;
    const int dm2 = key.m2 - target.m2;
    if (dp2 > 0 || (dp2 == 0 && dm2 > 0))
      throw DomainError("absorb: term of higher order than the target");
    Interval corr;
    if (dp2 == 0 && dm2 == 0) {
      corr = Interval::from_long(1);
    } else {
      const Interval at_t0 = pow(T0i, Interval::from_ratio(dp2, 2)) *
                             pow(logT0, Interval::from_ratio(dm2, 2));
      if (dm2 <= 0) {
        corr = at_t0;  // ratio nonincreasing on [T0, inf)
      } else {
        // max of (log x)^a / x^b at x = e^{a/b}, a = dm2/2, b = -dp2/2
        const Interval ab = Interval::from_ratio(dm2, -dp2);  // a/b
        const Interval peak_x = exp(ab);
        const Interval peak_val = pow(ab / exp(Interval::from_long(1)),
                                      Interval::from_ratio(dm2, 2));
        if (T0i.certainly_ge(peak_x))
          corr = at_t0;
        else if (T0i.certainly_lt(peak_x))
          corr = peak_val;
        else
          corr = imax(at_t0, peak_val);
      }
    }
    for (int i = 0; i < basis_size(sum.mode()); ++i) {
      const Interval& c = vec[i];
      if (c.contains_zero() && c.is_point()) continue;
      const Interval kept =
          dir == Direction::Upper ? imax(c, Interval()) : imin(c, Interval());
      out.add_term(target, i, kept * corr);
    }
  }
  // make sure the target key exists even if everything was dropped
  out.add_term(target, 0, Interval());
  return out;
}

}  // namespace zetatail
