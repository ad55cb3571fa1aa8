// Directed-rounding interval arithmetic over MPFR endpoints.
//
// Every operation returns an interval that encloses the exact image of the
// operands (inclusion property).  Endpoints are rounded outward: the lower
// endpoint toward -inf, the upper endpoint toward +inf.
#pragma once

#include <mpfr.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace zetatail {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Working precision (bits) used for newly created interval endpoints.
void set_default_precision(mpfr_prec_t bits);
mpfr_prec_t default_precision();

// RAII guard that raises the working precision within a scope.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(mpfr_prec_t bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  mpfr_prec_t saved_;
};

class Interval {
 public:
  Interval();                 // [0, 0]
  explicit Interval(long v);  // exact
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  // Exact constructions.
  static Interval from_long(long v);
  static Interval from_double(double v);
  static Interval from_ratio(long num, long den);
  static Interval from_rational(const cpp_rational& q);
  static Interval from_cpp_int(const cpp_int& n);
  // Parses a decimal literal such as "5.28035" exactly (as a rational).
  static Interval from_decimal(const std::string& s);
  static Interval from_endpoints(double lo, double hi);
  static Interval hull(const Interval& a, const Interval& b);

  // Mathematical constants, enclosed at the working precision.
  static Interval pi();
  static Interval euler_gamma();

  // Raw endpoint access (read-only).
  const mpfr_t& lo_raw() const { return lo_; }
  const mpfr_t& hi_raw() const { return hi_; }
  double lo_double() const;  // rounded toward -inf
  double hi_double() const;  // rounded toward +inf
  double mid_double() const;

  Interval lower_endpoint() const;  // degenerate [lo, lo]
  Interval upper_endpoint() const;  // degenerate [hi, hi]

  double width_double() const;  // hi - lo rounded up
  bool is_point() const;

  bool contains_zero() const;
  bool contains(const Interval& o) const;  // o subset of *this
  bool contains(double v) const;
  bool contains(const cpp_rational& q) const;
  bool intersects(const Interval& o) const;

  // Certain (set-wise) comparisons; false means "not certainly".
  bool certainly_lt(const Interval& o) const;   // hi <  o.lo
  bool certainly_le(const Interval& o) const;   // hi <= o.lo
  bool certainly_gt(const Interval& o) const;   // lo >  o.hi
  bool certainly_ge(const Interval& o) const;   // lo >= o.hi
  bool certainly_positive() const;
  bool certainly_negative() const;
  bool certainly_nonnegative() const;

  std::string str(int digits = 20) const;

  Interval operator-() const;
  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);

  friend Interval exp(const Interval& a);
  friend Interval log(const Interval& a);
  friend Interval sqrt(const Interval& a);
  friend Interval sin(const Interval& a);
  friend Interval cos(const Interval& a);
  friend Interval atan(const Interval& a);
  friend Interval abs(const Interval& a);
  friend Interval pow_si(const Interval& a, long n);
  friend Interval pow(const Interval& a, const Interval& b);  // a > 0
  friend Interval imax(const Interval& a, const Interval& b);
  friend Interval imin(const Interval& a, const Interval& b);

  // Rounds hi up (round_up) or lo down (round_down) at d decimal places and
  // returns the resulting scaled integer, i.e. ceil(hi*10^d) / floor(lo*10^d).
  cpp_int round_up_scaled(int d) const;
  cpp_int round_down_scaled(int d) const;

 private:
  void init();
  mpfr_t lo_;
  mpfr_t hi_;
};

inline Interval operator+(const Interval& a, long b) { return a + Interval::from_long(b); }
inline Interval operator+(long a, const Interval& b) { return Interval::from_long(a) + b; }
inline Interval operator-(const Interval& a, long b) { return a - Interval::from_long(b); }
inline Interval operator-(long a, const Interval& b) { return Interval::from_long(a) - b; }
inline Interval operator*(const Interval& a, long b) { return a * Interval::from_long(b); }
inline Interval operator*(long a, const Interval& b) { return Interval::from_long(a) * b; }
inline Interval operator/(const Interval& a, long b) { return a / Interval::from_long(b); }
inline Interval operator/(long a, const Interval& b) { return Interval::from_long(a) / b; }

Interval sqr(const Interval& a);

// Rectangular complex enclosure.
class ComplexInterval {
 public:
  ComplexInterval() = default;
  ComplexInterval(Interval re, Interval im) : re_(std::move(re)), im_(std::move(im)) {}
  static ComplexInterval from_real(const Interval& re) { return {re, Interval()}; }

  const Interval& re() const { return re_; }
  const Interval& im() const { return im_; }
  Interval& re() { return re_; }
  Interval& im() { return im_; }

  ComplexInterval conj() const { return {re_, -im_}; }
  Interval abs() const;   // encloses |z| over the box
  Interval abs2() const;  // encloses |z|^2

  ComplexInterval operator-() const { return {-re_, -im_}; }
  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);
  friend ComplexInterval operator*(const Interval& a, const ComplexInterval& b);
  friend ComplexInterval operator/(const ComplexInterval& a, const Interval& b);

  friend ComplexInterval cexp(const ComplexInterval& z);  // e^z

 private:
  Interval re_;
  Interval im_;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zetatail
