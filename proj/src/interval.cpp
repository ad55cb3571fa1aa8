#include "zetatail/interval.hpp"

#include <gmp.h>

#include <cmath>
#include <sstream>

namespace zetatail {

namespace {
mpfr_prec_t g_prec = 128;

void set_z(mpfr_t dst, const cpp_int& n, mpfr_rnd_t rnd) {
  // cpp_int -> mpfr via decimal string (setup paths only, not hot loops).
  const std::string s = n.str();
  mpfr_set_str(dst, s.c_str(), 10, rnd);
}
}  // namespace

void set_default_precision(mpfr_prec_t bits) {
  if (bits < 53) throw DomainError("precision must be at least 53 bits");
  g_prec = bits;
}

mpfr_prec_t default_precision() { return g_prec; }

PrecisionGuard::PrecisionGuard(mpfr_prec_t bits) : saved_(g_prec) {
  if (bits > g_prec) g_prec = bits;
}
PrecisionGuard::~PrecisionGuard() { g_prec = saved_; }

void Interval::init() {
  mpfr_init2(lo_, g_prec);
  mpfr_init2(hi_, g_prec);
}

Interval::Interval() {
  init();
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(long v) {
  init();
  mpfr_set_si(lo_, v, MPFR_RNDD);
  mpfr_set_si(hi_, v, MPFR_RNDU);
}

Interval::Interval(const Interval& o) {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept {
  mpfr_init2(lo_, mpfr_get_prec(o.lo_));
  mpfr_init2(hi_, mpfr_get_prec(o.hi_));
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    mpfr_set_prec(lo_, mpfr_get_prec(o.lo_));
    mpfr_set_prec(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_long(long v) { return Interval(v); }

Interval Interval::from_double(double v) {
  if (std::isnan(v)) throw DomainError("NaN endpoint");
  Interval r;
  mpfr_set_d(r.lo_, v, MPFR_RNDD);
  mpfr_set_d(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::from_ratio(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Interval r;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpfr_set_si(r.lo_, num, MPFR_RNDD);
  mpfr_set_si(r.hi_, num, MPFR_RNDU);
  mpfr_div_si(r.lo_, r.lo_, den, MPFR_RNDD);
  mpfr_div_si(r.hi_, r.hi_, den, MPFR_RNDU);
  return r;
}

Interval Interval::from_rational(const cpp_rational& q) {
  Interval num, den;
  set_z(num.lo_, numerator(q), MPFR_RNDD);
  set_z(num.hi_, numerator(q), MPFR_RNDU);
  set_z(den.lo_, denominator(q), MPFR_RNDD);
  set_z(den.hi_, denominator(q), MPFR_RNDU);
  return num / den;
}

Interval Interval::from_cpp_int(const cpp_int& n) {
  Interval r;
  set_z(r.lo_, n, MPFR_RNDD);
  set_z(r.hi_, n, MPFR_RNDU);
  return r;
}

Interval Interval::from_decimal(const std::string& s) {
  // Parse [-]digits[.digits] exactly as a rational.
  std::string t = s;
  bool neg = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = (t[0] == '-');
    t = t.substr(1);
  }
  const auto dot = t.find('.');
  std::string digits = t;
  int frac = 0;
  if (dot != std::string::npos) {
    digits = t.substr(0, dot) + t.substr(dot + 1);
    frac = static_cast<int>(t.size() - dot - 1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw DomainError("bad decimal literal: " + s);
  // Strip leading zeros so the cpp_int parser doesn't treat the string as octal.
  const auto first = digits.find_first_not_of('0');
  digits = (first == std::string::npos) ? "0" : digits.substr(first);
  cpp_int num(digits);
  if (neg) num = -num;
  cpp_int den = 1;
  for (int i = 0; i < frac; ++i) den *= 10;
  return from_rational(cpp_rational(num, den));
}

Interval Interval::from_endpoints(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) throw DomainError("bad endpoints");
  Interval r;
  mpfr_set_d(r.lo_, lo, MPFR_RNDD);
  mpfr_set_d(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::pi() {
  Interval r;
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::euler_gamma() {
  Interval r;
  mpfr_const_euler(r.lo_, MPFR_RNDD);
  mpfr_const_euler(r.hi_, MPFR_RNDU);
  return r;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Interval::mid_double() const {
  return 0.5 * (lo_double() + hi_double());
}

Interval Interval::lower_endpoint() const {
  Interval r;
  mpfr_set(r.lo_, lo_, MPFR_RNDD);
  mpfr_set(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::upper_endpoint() const {
  Interval r;
  mpfr_set(r.lo_, hi_, MPFR_RNDD);
  mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

double Interval::width_double() const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  const double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

bool Interval::is_point() const { return mpfr_equal_p(lo_, hi_); }

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool Interval::contains(const Interval& o) const {
  return mpfr_lessequal_p(lo_, o.lo_) && mpfr_lessequal_p(o.hi_, hi_);
}

bool Interval::contains(double v) const {
  return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0;
}

bool Interval::contains(const cpp_rational& q) const {
  const Interval v = from_rational(q);
  return mpfr_lessequal_p(lo_, v.lo_) && mpfr_lessequal_p(v.hi_, hi_);
}

bool Interval::intersects(const Interval& o) const {
  return !(certainly_lt(o) || o.certainly_lt(*this));
}

bool Interval::certainly_lt(const Interval& o) const { return mpfr_less_p(hi_, o.lo_); }
bool Interval::certainly_le(const Interval& o) const { return mpfr_lessequal_p(hi_, o.lo_); }
bool Interval::certainly_gt(const Interval& o) const { return mpfr_greater_p(lo_, o.hi_); }
bool Interval::certainly_ge(const Interval& o) const { return mpfr_greaterequal_p(lo_, o.hi_); }
bool Interval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::certainly_negative() const { return mpfr_sgn(hi_) < 0; }
bool Interval::certainly_nonnegative() const { return mpfr_sgn(lo_) >= 0; }

std::string Interval::str(int digits) const {
  char* slo = nullptr;
  char* shi = nullptr;
  mpfr_asprintf(&slo, "%.*Rg", digits, lo_);
  mpfr_asprintf(&shi, "%.*Rg", digits, hi_);
  std::string out = std::string("[") + slo + ", " + shi + "]";
  mpfr_free_str(slo);
  mpfr_free_str(shi);
  return out;
}

Interval Interval::operator-() const {
  Interval r;
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_t p;
  mpfr_init2(p, g_prec);
  // lower endpoint: min of the four products rounded down
  mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_mul(p, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
  mpfr_mul(p, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
  mpfr_mul(p, a.hi_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
  // upper endpoint: max of the four products rounded up
  mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_mul(p, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, p, MPFR_RNDU);
  mpfr_mul(p, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, p, MPFR_RNDU);
  mpfr_mul(p, a.hi_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, p, MPFR_RNDU);
  mpfr_clear(p);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("division by interval containing 0");
  Interval r;
  mpfr_t p;
  mpfr_init2(p, g_prec);
  mpfr_div(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_div(p, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
  mpfr_div(p, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
  mpfr_div(p, a.hi_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
  mpfr_div(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_div(p, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, p, MPFR_RNDU);
  mpfr_div(p, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, p, MPFR_RNDU);
  mpfr_div(p, a.hi_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, p, MPFR_RNDU);
  mpfr_clear(p);
  return r;
}

Interval& Interval::operator+=(const Interval& o) { return *this = *this + o; }
Interval& Interval::operator-=(const Interval& o) { return *this = *this - o; }
Interval& Interval::operator*=(const Interval& o) { return *this = *this * o; }
Interval& Interval::operator/=(const Interval& o) { return *this = *this / o; }

Interval exp(const Interval& a) {
  Interval r;
  mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval log(const Interval& a) {
  if (!a.certainly_positive()) throw DomainError("log of non-positive interval");
  Interval r;
  mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& a) {
  if (!a.certainly_nonnegative()) throw DomainError("sqrt of negative interval");
  Interval r;
  mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

// cos on an interval.  Extrema of cos occur at integer multiples of pi; the
// candidate multiple range is computed with outward rounding so it can only
// over-include (never misses an extremum).
Interval cos(const Interval& a) {
  Interval r;
  mpfr_t pi_lo, pi_hi, q, cl, ch, tmp;
  mpfr_init2(pi_lo, g_prec);
  mpfr_init2(pi_hi, g_prec);
  mpfr_init2(q, g_prec);
  mpfr_init2(cl, g_prec);
  mpfr_init2(ch, g_prec);
  mpfr_init2(tmp, g_prec);
  mpfr_const_pi(pi_lo, MPFR_RNDD);
  mpfr_const_pi(pi_hi, MPFR_RNDU);

  // k1 <= a.lo/pi, k2 >= a.hi/pi (directed): multiples of pi possibly inside
  // the interval are k in [ceil(k1), floor(k2)].
  long k1, k2;
  bool huge = false;
  mpfr_div(q, a.lo_raw(), pi_hi, MPFR_RNDD);
  if (mpfr_fits_slong_p(q, MPFR_RNDD))
    k1 = mpfr_get_si(q, MPFR_RNDU) - 1;  // conservative floor-ish lower bound
  else
    huge = true;
  mpfr_div(q, a.hi_raw(), pi_lo, MPFR_RNDU);
  if (!huge && mpfr_fits_slong_p(q, MPFR_RNDU))
    k2 = mpfr_get_si(q, MPFR_RNDD) + 1;
  else
    huge = true;
  if (huge || k2 - k1 > 4) {
    // Wide or extreme argument: decide via width against 2*pi.
    mpfr_sub(tmp, a.hi_raw(), a.lo_raw(), MPFR_RNDU);
    mpfr_mul_ui(q, pi_lo, 2, MPFR_RNDD);
    if (huge || mpfr_greaterequal_p(tmp, q)) {
      mpfr_clear(pi_lo); mpfr_clear(pi_hi); mpfr_clear(q);
      mpfr_clear(cl); mpfr_clear(ch); mpfr_clear(tmp);
      return Interval::from_endpoints(-1.0, 1.0);
    }
  }

  // Hull of the endpoint values (each rounded both ways).
  mpfr_cos(cl, a.lo_raw(), MPFR_RNDD);
  mpfr_cos(ch, a.lo_raw(), MPFR_RNDU);
  mpfr_cos(tmp, a.hi_raw(), MPFR_RNDD);
  mpfr_min(cl, cl, tmp, MPFR_RNDD);
  mpfr_cos(tmp, a.hi_raw(), MPFR_RNDU);
  mpfr_max(ch, ch, tmp, MPFR_RNDU);

  bool has_even = false, has_odd = false;
  for (long k = k1; k <= k2; ++k) {
    // Is k*pi possibly inside [a.lo, a.hi]?  Use outward-rounded products.
    mpfr_mul_si(q, (k >= 0) ? pi_hi : pi_lo, k, MPFR_RNDU);    // upper bound of k*pi
    mpfr_mul_si(tmp, (k >= 0) ? pi_lo : pi_hi, k, MPFR_RNDD);  // lower bound of k*pi
    const bool inside =
        mpfr_lessequal_p(a.lo_raw(), q) && mpfr_lessequal_p(tmp, a.hi_raw());
    if (inside) {
      if ((k % 2) == 0) has_even = true;
      else has_odd = true;
    }
  }
  if (has_even) mpfr_set_si(ch, 1, MPFR_RNDU);
  if (has_odd) mpfr_set_si(cl, -1, MPFR_RNDD);
  // Clamp to [-1, 1] in all cases.
  mpfr_set_si(tmp, -1, MPFR_RNDD);
  mpfr_max(cl, cl, tmp, MPFR_RNDD);
  mpfr_set_si(tmp, 1, MPFR_RNDU);
  mpfr_min(ch, ch, tmp, MPFR_RNDU);

  mpfr_set(r.lo_, cl, MPFR_RNDD);
  mpfr_set(r.hi_, ch, MPFR_RNDU);
  mpfr_clear(pi_lo); mpfr_clear(pi_hi); mpfr_clear(q);
  mpfr_clear(cl); mpfr_clear(ch); mpfr_clear(tmp);
  return r;
}

Interval sin(const Interval& a) {
  // sin(x) = cos(pi/2 - x); the interval pi/2 shift widens by ~1 ulp only.
  const Interval half_pi = Interval::pi() / 2;
  return cos(half_pi - a);
}

Interval atan(const Interval& a) {
  Interval r;
  mpfr_atan(const_cast<mpfr_ptr>(r.lo_raw()), a.lo_raw(), MPFR_RNDD);
  mpfr_atan(const_cast<mpfr_ptr>(r.hi_raw()), a.hi_raw(), MPFR_RNDU);
  return r;
}

Interval abs(const Interval& a) {
  if (a.certainly_nonnegative()) return a;
  if (a.certainly_negative()) return -a;
  // Straddles zero: [0, max(-lo, hi)].
  Interval r;
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval imax(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_max(const_cast<mpfr_ptr>(r.lo_raw()), a.lo_raw(), b.lo_raw(), MPFR_RNDD);
  mpfr_max(const_cast<mpfr_ptr>(r.hi_raw()), a.hi_raw(), b.hi_raw(), MPFR_RNDU);
  return r;
}

Interval imin(const Interval& a, const Interval& b) {
  Interval r;
  mpfr_min(const_cast<mpfr_ptr>(r.lo_raw()), a.lo_raw(), b.lo_raw(), MPFR_RNDD);
  mpfr_min(const_cast<mpfr_ptr>(r.hi_raw()), a.hi_raw(), b.hi_raw(), MPFR_RNDU);
  return r;
}

Interval pow_si(const Interval& a, long n) {
  if (n == 0) return Interval(1);
  if (n < 0) return Interval(1) / pow_si(a, -n);
  Interval r;
  if (n % 2 == 1 || a.certainly_nonnegative()) {
    mpfr_pow_si(const_cast<mpfr_ptr>(r.lo_raw()), a.lo_raw(), n, MPFR_RNDD);
    mpfr_pow_si(const_cast<mpfr_ptr>(r.hi_raw()), a.hi_raw(), n, MPFR_RNDU);
    return r;
  }
  if (a.certainly_negative()) {
    mpfr_pow_si(const_cast<mpfr_ptr>(r.lo_raw()), a.hi_raw(), n, MPFR_RNDD);
    mpfr_pow_si(const_cast<mpfr_ptr>(r.hi_raw()), a.lo_raw(), n, MPFR_RNDU);
    return r;
  }
  // even power of a straddling interval: [0, max(|lo|,|hi|)^n]
  mpfr_t m;
  mpfr_init2(m, default_precision());
  mpfr_neg(m, a.lo_raw(), MPFR_RNDU);
  mpfr_max(m, m, a.hi_raw(), MPFR_RNDU);
  mpfr_set_zero(const_cast<mpfr_ptr>(r.lo_raw()), 1);
  mpfr_pow_si(const_cast<mpfr_ptr>(r.hi_raw()), m, n, MPFR_RNDU);
  mpfr_clear(m);
  return r;
}

Interval pow(const Interval& a, const Interval& b) {
  if (!a.certainly_positive()) throw DomainError("pow requires positive base");
  return exp(b * log(a));
}

Interval sqr(const Interval& a) { return pow_si(a, 2); }

cpp_int Interval::round_up_scaled(int d) const {
  mpfr_t s;
  mpfr_init2(s, mpfr_get_prec(hi_) + 64);
  mpfr_set(s, hi_, MPFR_RNDU);
  for (int i = 0; i < d; ++i) mpfr_mul_ui(s, s, 10, MPFR_RNDU);
  mpfr_ceil(s, s);
  char* str = nullptr;
  mpfr_asprintf(&str, "%.0Rf", s);
  cpp_int out(str);
  mpfr_free_str(str);
  mpfr_clear(s);
  return out;
}

cpp_int Interval::round_down_scaled(int d) const {
  mpfr_t s;
  mpfr_init2(s, mpfr_get_prec(lo_) + 64);
  mpfr_set(s, lo_, MPFR_RNDD);
  for (int i = 0; i < d; ++i) mpfr_mul_ui(s, s, 10, MPFR_RNDD);
  mpfr_floor(s, s);
  char* str = nullptr;
  mpfr_asprintf(&str, "%.0Rf", s);
  cpp_int out(str);
  mpfr_free_str(str);
  mpfr_clear(s);
  return out;
}

// ---------------------------------------------------------------------------
// ComplexInterval

Interval ComplexInterval::abs2() const { return sqr(re_) + sqr(im_); }

Interval ComplexInterval::abs() const { return sqrt(abs2()); }

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re_ + b.re_, a.im_ + b.im_};
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re_ - b.re_, a.im_ - b.im_};
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  const Interval d = b.abs2();
  if (d.contains_zero()) throw DomainError("complex division by box containing 0");
  const ComplexInterval num = a * b.conj();
  return {num.re_ / d, num.im_ / d};
}

ComplexInterval operator*(const Interval& a, const ComplexInterval& b) {
  return {a * b.re_, a * b.im_};
}

ComplexInterval operator/(const ComplexInterval& a, const Interval& b) {
  return {a.re_ / b, a.im_ / b};
}

ComplexInterval cexp(const ComplexInterval& z) {
  const Interval m = exp(z.re());
  return {m * cos(z.im()), m * sin(z.im())};
}

}  // namespace zetatail
