// Working-precision model: a decimal-digit budget shared by every evaluation,
// an arbitrary-precision real backed by MPFR, and a value-with-error-bound pair.

#ifndef ZETAKIT_PRECISION_HPP
#define ZETAKIT_PRECISION_HPP

#include <mpfr.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace zk {

class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

class IntegrandError : public std::runtime_error {
 public:
  explicit IntegrandError(const std::string& what) : std::runtime_error(what) {}
};

class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Shared evaluation budget. Internally everything runs at
// target_digits + guard_digits decimal digits; nothing silently degrades.
struct PrecisionContext {
  long target_digits = 50;
  long guard_digits = 15;
  long max_terms = 2'000'000;
  long max_quad_level = 14;

  PrecisionContext() = default;
  PrecisionContext(long target, long guard) : target_digits(target), guard_digits(guard) {
    validate();
  }

  void validate() const {
    if (target_digits < 10) throw UsageError("target_digits must be >= 10");
    if (guard_digits < 5) throw UsageError("guard_digits must be >= 5");
    if (max_terms < 1) throw UsageError("max_terms must be positive");
    if (max_quad_level < 1) throw UsageError("max_quad_level must be positive");
  }

  long working_digits() const { return target_digits + guard_digits; }

  // bits = digits * log2(10), rounded up with a small slack.
  static mpfr_prec_t bits_for_digits(long digits) {
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 16;
  }
  mpfr_prec_t working_bits() const { return bits_for_digits(working_digits()); }

  // Termination threshold for tail-bounded series, 10^-(target+2).
  // Declared here so every module stops at the same place.
  double series_threshold_exponent() const { return -(double)target_digits - 2.0; }
};

// Value-semantic wrapper over mpfr_t. The precision travels with the value;
// binary operations promote to the wider operand.
class Real {
 public:
  Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(long n, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, n, MPFR_RNDN); }
  Real(double d, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, d, MPFR_RNDN); }
  Real(const std::string& dec, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, dec.c_str(), 10, MPFR_RNDN) != 0)
      throw UsageError("not a decimal number: " + dec);
  }

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  // Decimal rendering with the requested number of significant digits.
  std::string to_string(long digits) const;

  static Real zero(mpfr_prec_t prec) { return Real(prec); }
  static Real from_long(long n, mpfr_prec_t prec) { return Real(n, prec); }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator+=(long n) { mpfr_add_si(v_, v_, n, MPFR_RNDN); return *this; }
  Real& operator-=(long n) { mpfr_sub_si(v_, v_, n, MPFR_RNDN); return *this; }
  Real& operator*=(long n) { mpfr_mul_si(v_, v_, n, MPFR_RNDN); return *this; }
  Real& operator/=(long n) { mpfr_div_si(v_, v_, n, MPFR_RNDN); return *this; }

  friend Real operator*(const Real& a, long b) {
    Real r(a.prec());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, long b) {
    Real r(a.prec());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator+(const Real& a, long b) {
    Real r(a.prec());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, long b) {
    Real r(a.prec());
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  friend Real abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

 private:
  mpfr_t v_;
};

// Error bounds never need full precision; 96 bits keeps them cheap while
// covering the exponent range that doubles cannot.
inline constexpr mpfr_prec_t kBoundPrec = 96;

inline Real bound_from_exp10(double e10) {
  Real r(kBoundPrec);
  mpfr_set_d(r.raw(), e10, MPFR_RNDN);
  mpfr_exp10(r.raw(), r.raw(), MPFR_RNDU);
  return r;
}

// A numeric result paired with a claimed rigorous absolute error bound.
struct Approx {
  Real value;
  Real error_bound;  // absolute, nonnegative, finite

  Approx() : value(), error_bound(Real(0L, kBoundPrec)) {}
  Approx(Real v, Real b) : value(std::move(v)), error_bound(std::move(b)) {
    if (!error_bound.is_finite() || error_bound.sign() < 0)
      throw DomainError("error bound must be finite and nonnegative");
  }

  // Bound propagation for the four arithmetic operations. The rounding slop of
  // the operation itself is absorbed by one ulp-scale term.
  friend Approx operator+(const Approx& a, const Approx& b) {
    Approx r;
    r.value = a.value + b.value;
    r.error_bound = a.error_bound + b.error_bound + ulp_slop(r.value);
    return r;
  }
  friend Approx operator-(const Approx& a, const Approx& b) {
    Approx r;
    r.value = a.value - b.value;
    r.error_bound = a.error_bound + b.error_bound + ulp_slop(r.value);
    return r;
  }
  friend Approx operator*(const Approx& a, const Approx& b) {
    Approx r;
    r.value = a.value * b.value;
    r.error_bound = abs(a.value) * b.error_bound + abs(b.value) * a.error_bound +
                    a.error_bound * b.error_bound + ulp_slop(r.value);
    return r;
  }
  friend Approx operator/(const Approx& a, const Approx& b) {
    if (b.value.is_zero()) throw DomainError("division by zero");
    Approx r;
    r.value = a.value / b.value;
    Real denom = abs(b.value) - b.error_bound;
    if (denom.sign() <= 0) throw DomainError("divisor interval straddles zero");
    r.error_bound =
        (a.error_bound + abs(r.value) * b.error_bound) / denom + ulp_slop(r.value);
    return r;
  }
  Approx operator-() const { return Approx(-value, error_bound); }

  friend Approx scale(const Approx& a, long k) {
    return Approx(a.value * k, a.error_bound * std::labs(k));
  }

  static Real ulp_slop(const Real& v) {
    if (v.is_zero()) return Real(0L, kBoundPrec);
    Real s(kBoundPrec);
    mpfr_abs(s.raw(), v.raw(), MPFR_RNDU);
    mpfr_mul_2si(s.raw(), s.raw(), -(long)v.prec() + 2, MPFR_RNDU);
    return s;
  }

  static Approx exact(Real v) { return Approx(std::move(v), Real(0L, kBoundPrec)); }
};

}  // namespace zk

#endif  // ZETAKIT_PRECISION_HPP
