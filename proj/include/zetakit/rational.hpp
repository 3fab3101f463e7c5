// Exact integer and rational arithmetic: binomial coefficients, generalized
// harmonic numbers, and the conversions into working-precision reals.

#ifndef ZETAKIT_RATIONAL_HPP
#define ZETAKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "zetakit/precision.hpp"

namespace zk {

using BigInt = mpz_class;

// mpq_class canonicalizes on every operation, which keeps the invariants
// (lowest terms, positive denominator) without extra bookkeeping here.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(n) {}
  Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw DomainError("zero denominator");
    q_.canonicalize();
  }
  Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (den == 0) throw DomainError("zero denominator");
    q_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  const mpq_class& raw() const { return q_; }
  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  std::string to_string() const { return q_.get_str(); }

  Real to_real(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set_q(r.raw(), q_.get_mpq_t(), MPFR_RNDN);
    return r;
  }
  Approx to_approx(mpfr_prec_t prec) const {
    Real v = to_real(prec);
    return Approx(v, Approx::ulp_slop(v));
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.q_ == 0) throw DomainError("rational division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

 private:
  mpq_class q_;
};

// Exact C(n,k); forward differences demand exactness, so no floating route.
BigInt binomial(unsigned long n, unsigned long k);

// Exact H_n^{(r)} = sum_{k=1..n} 1/k^r; H_0 = 0.
Rational harmonic(unsigned long n, unsigned long r = 1);

// Incremental harmonic-number table H_n^{(r)} for n = 0..nmax, one row per r.
std::vector<Rational> harmonic_row(unsigned long nmax, unsigned long r);

// q^e for rational q, integer e (e may be negative if q != 0).
Rational rational_pow(const Rational& q, long e);

}  // namespace zk

#endif  // ZETAKIT_RATIONAL_HPP
