// Formal bookkeeping of asymptotic sums  sum_k c_k * T^{p + q*sigma-part} *
// (log T)^m * phi_k(sigma): the data structure used to assemble explicit
// constants, split rho-weighted bounds, and merge lower-order terms at a
// threshold T0.
#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "zetatail/interval.hpp"

namespace zetatail {

// Two exponent/basis conventions:
//  - UpperStrip: exponent p + q(1-2 sigma), basis
//      {1, 1/(1-s), 1/(1-s)^2, 1/(2s-1), 1/((1-s)(2s-1)), zeta(2s)}  (6 entries)
//  - LowerStrip: exponent p + q*sigma, basis
//      {1, 1/s, 1/(1-2s), zeta(2-2s)}                                (4 entries)
enum class BasisMode { UpperStrip, LowerStrip };

enum class Direction { Upper, Lower };

int basis_size(BasisMode mode);
Interval basis_value(BasisMode mode, int index, const Interval& sigma);

// Half-integer T- and log-powers are stored doubled so keys stay integral.
struct TermKey {
  int p2 = 0;  // twice the sigma-free part of the T-exponent
  int q = 0;   // multiplier of the sigma-coupled exponent part
  int m2 = 0;  // twice the log-power
  auto operator<=>(const TermKey&) const = default;
};

class AsymptoticTermSum {
 public:
  AsymptoticTermSum(BasisMode mode, Interval sigma_range, long t0);

  BasisMode mode() const { return mode_; }
  const Interval& sigma_range() const { return sigma_range_; }
  long t0() const { return t0_; }
  const std::map<TermKey, std::vector<Interval>>& terms() const { return terms_; }

  void add_term(const TermKey& key, int basis_index, const Interval& coef);
  Interval coefficient(const TermKey& key, int basis_index) const;  // zero if absent

  AsymptoticTermSum operator+(const AsymptoticTermSum& o) const;
  AsymptoticTermSum scaled(const Interval& c) const;
  // Multiply by T^{dp2/2} (log T)^{dm2/2}: a pure key shift.
  AsymptoticTermSum shifted(int dp2, int dm2) const;

  Interval evaluate(const Interval& sigma, const Interval& T) const;

  // Stable text table: one sorted line per term with all channel enclosures.
  std::string dump(int digits = 17) const;

 private:
  BasisMode mode_;
  Interval sigma_range_;
  long t0_;
  std::map<TermKey, std::vector<Interval>> terms_;
};

// rho = c * T^{p2/2} (log T)^{m2/2}, c > 0.
struct RhoSpec {
  Interval c;
  int p2 = 0;
  int m2 = 0;
};

// (1 +- rho) main + (1 +- 1/rho) penalty expanded into the ledger.  The lower
// direction requires |rho| < 1 for all T >= T0, certified at T0 (rho must be
// nonincreasing: p2 <= 0 and m2 <= 0).
AsymptoticTermSum rho_combine(const AsymptoticTermSum& main, const AsymptoticTermSum& penalty,
                              const RhoSpec& rho, Direction dir);

// Rewrites the zeta basis channel through 1/(2s-1) < zeta(2s) <= 1/(2s-1) + H
// (UpperStrip) or 1/(1-2s) < zeta(2-2s) <= 1/(1-2s) + H (LowerStrip), with
// H = zeta(2) - 1, choosing the inequality side per coefficient sign and
// direction.
AsymptoticTermSum eliminate_zeta(const AsymptoticTermSum& sum, Direction dir);

// Merges every non-target term into the target by bounding the ratio
// T^{dp}(log T)^{dm} over T >= T0: at T0 when the ratio is nonincreasing
// there, else at the interior maximum x = e^{dm/(-dp)}.  Requires every term
// to share the target's sigma coupling and to be of order <= the target;
// contributions whose sign opposes the direction are dropped (bounded by 0).
AsymptoticTermSum absorb(const AsymptoticTermSum& sum, long T0, const TermKey& target,
                         Direction dir);

}  // namespace zetatail
