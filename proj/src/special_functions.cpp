#include "zetakit/special_functions.hpp"

#include <mutex>
#include <vector>

#include "zetakit/elementary.hpp"

namespace zk {
namespace {

// Tangent numbers 1, 2, 16, 272, ... by the integer-only recurrence of
// Brent & Harvey, "Fast computation of Bernoulli, Tangent and Secant
// numbers" (2011). No rational arithmetic until the final division.
std::vector<BigInt> tangent_numbers(size_t count) {
  std::vector<BigInt> t(count + 1);
  if (count == 0) return t;
  t[1] = 1;
  for (size_t k = 2; k <= count; ++k) t[k] = t[k - 1] * static_cast<long>(k - 1);
  for (size_t k = 2; k <= count; ++k)
    for (size_t j = k; j <= count; ++j)
      t[j] = t[j - 1] * static_cast<long>(j - k) + t[j] * static_cast<long>(j - k + 2);
  return t;
}

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // g_bernoulli[n] = B_{2n}, n >= 1

}  // namespace

Rational bernoulli_b2n(unsigned long n) {
  if (n == 0) return Rational(1);
  std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
  if (n >= g_bernoulli.size()) {
    size_t grow = std::max<size_t>(n + 8, g_bernoulli.size() * 2);
    std::vector<BigInt> t = tangent_numbers(grow);
    g_bernoulli.assign(grow + 1, Rational(0));
    for (size_t m = 1; m <= grow; ++m) {
      // B_{2m} = (-1)^{m-1} * 2m * T_m / (4^m (4^m - 1))
      BigInt four_m;
      mpz_ui_pow_ui(four_m.get_mpz_t(), 4, m);
      BigInt den = four_m * (four_m - 1);
      BigInt num = t[m] * static_cast<long>(2 * m);
      if (m % 2 == 0) num = -num;
      g_bernoulli[m] = Rational(num, den);
    }
  }
  return g_bernoulli[n];
}

Approx log_gamma(const Real& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0) throw DomainError("log_gamma requires x > 0");
  Real v(ctx.working_bits());
  int s = 0;
  mpfr_lgamma(v.raw(), &s, x.raw(), MPFR_RNDN);
  return Approx(v, Approx::ulp_slop(v) * 4L);
}

Approx digamma(const Real& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0) throw DomainError("digamma requires x > 0");
  Real xe(ctx.working_bits());
  mpfr_set(xe.raw(), x.raw(), MPFR_RNDN);
  Real v(ctx.working_bits());
  mpfr_digamma(v.raw(), xe.raw(), MPFR_RNDN);
  Real slop = Approx::ulp_slop(v) * 4L;
  // ulp-relative bounds collapse near the zeros of psi; keep a small absolute
  // floor tied to the argument's rounding.
  Real floor_b = Approx::ulp_slop(xe) * 4L;
  return Approx(v, slop > floor_b ? slop : floor_b);
}

Approx polygamma(long m, const Real& x, const PrecisionContext& ctx) {
  if (m < 1 || m > 8) throw DomainError("polygamma supports orders 1..8");
  if (x.sign() <= 0) throw DomainError("polygamma requires x > 0");

  const mpfr_prec_t wp = ctx.working_bits() + 32;
  const long digits = ctx.working_digits();

  Real xe(wp);
  mpfr_set(xe.raw(), x.raw(), MPFR_RNDN);

  // Shift until X >= 0.42 * digits + 8 so that the Bernoulli series bottoms
  // out below 10^-digits.
  double xmin = 0.42 * static_cast<double>(digits) + 8.0;
  long shift = 0;
  if (xe.to_double() < xmin) shift = static_cast<long>(xmin - xe.to_double()) + 1;

  // psi^{(m)}(x) = psi^{(m)}(x + S) - sum_{j=0}^{S-1} (-1)^m m! / (x+j)^{m+1}
  Real mfact(1L, wp);
  for (long i = 2; i <= m; ++i) mfact *= i;

  Real shift_sum(wp);
  for (long j = 0; j < shift; ++j) {
    Real xj = xe + j;
    shift_sum += mfact / fn::pow_si(xj, m + 1);
  }
  if (m % 2 != 0) shift_sum = -shift_sum;

  Real X = xe + shift;

  // Asymptotic series at X:
  //   (-1)^{m-1} psi^{(m)}(X) = (m-1)!/X^m + m!/(2 X^{m+1})
  //                             + sum_k B_{2k} (2k+m-1)! / ((2k)! X^{2k+m})
  Real inv_x = Real(1L, wp) / X;
  Real inv_x2 = inv_x * inv_x;
  Real acc = (mfact / m) * fn::pow_si(inv_x, m);  // (m-1)!/X^m
  acc += (mfact / 2L) * fn::pow_si(inv_x, m + 1);

  // factor_k = (2k+m-1)!/(2k)! built incrementally; power = X^-(2k+m)
  Real factor(1L, wp);
  for (long i = 3; i <= m + 1; ++i) factor *= i;  // (m+1)!/2! at k=1
  Real power = fn::pow_si(inv_x, m + 2);
  Real prev_abs(wp);
  mpfr_set_inf(prev_abs.raw(), 1);
  Real tail_bound(0L, kBoundPrec);
  const Real stop = bound_from_exp10(-(double)digits - 4.0) * (abs(acc) + Real(1L, kBoundPrec));

  for (unsigned long k = 1; k < 4096; ++k) {
    Real b2k = bernoulli_b2n(k).to_real(wp);
    Real term = b2k * factor * power;
    Real aterm = abs(term);
    if (aterm > prev_abs) {  // divergence point of the asymptotic series
      tail_bound = prev_abs * 2L;
      break;
    }
    acc += term;
    if (aterm <= stop) {
      tail_bound = aterm * 2L;
      break;
    }
    prev_abs = aterm;
    // advance (2k+m-1)!/(2k)! -> (2k+m+1)!/(2k+2)!
    factor *= (2 * static_cast<long>(k) + m);
    factor *= (2 * static_cast<long>(k) + m + 1);
    factor /= (2 * static_cast<long>(k) + 1);
    factor /= (2 * static_cast<long>(k) + 2);
    power *= inv_x2;
  }

  if (m % 2 == 0) acc = -acc;  // restore the (-1)^{m-1} prefactor
  Real value = acc - shift_sum;

  Real b(kBoundPrec);
  mpfr_set(b.raw(), tail_bound.raw(), MPFR_RNDU);
  b += Approx::ulp_slop(value) * (shift + 8);
  return Approx(value, b);
}

Approx beta_function(const Real& x, const Real& y, const PrecisionContext& ctx) {
  if (x.sign() <= 0 || y.sign() <= 0) throw DomainError("beta requires positive arguments");
  Approx lx = log_gamma(x, ctx);
  Approx ly = log_gamma(y, ctx);
  Approx lxy = log_gamma(x + y, ctx);
  Approx ls = lx + ly - lxy;
  Real v = fn::exp(ls.value);
  // |d exp| = exp * |d log|; the log-scale error is tiny, first order is enough.
  Real b = abs(v) * ls.error_bound * 2L + Approx::ulp_slop(v);
  return Approx(v, b);
}

}  // namespace zk
