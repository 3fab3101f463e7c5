#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "zetakit/binomial_transforms.hpp"

using namespace zk;
using namespace zt;

namespace {

// Brute-force oracle, deliberately structured differently from the
// implementation: fresh binomial() per term, common accumulation on Rational.
Rational brute_power_difference(long n, long s, const Rational& x) {
  Rational sum(0);
  for (long k = 0; k <= n; ++k) {
    Rational base = x + Rational(k);
    Rational f = rational_pow(base, -s);
    Rational c(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)), BigInt(1));
    Rational t = c * f;
    sum += (k % 2 == 0) ? t : -t;
  }
  return sum;
}

}  // namespace

TEST_CASE("forward difference examples") {
  auto ctx = ctx50();
  const mpfr_prec_t wp = ctx.working_bits();

  ForwardDifference a = forward_difference(3, DifferenceKernel::power(1, Rational(1)), ctx);
  CHECK(a.exact);
  CHECK(a.rational == Rational(1, 4));

  ForwardDifference b = forward_difference(0, DifferenceKernel::log_kernel(Rational(1)), ctx);
  CHECK_FALSE(b.exact);
  CHECK(b.approx.value.is_zero());

  ForwardDifference c = forward_difference(2, DifferenceKernel::log_kernel(Rational(1)), ctx);
  Real want = fn::log(Real(3L, wp) / 4L);  // log 1 - 2 log 2 + log 3
  CHECK(within_bound(c.approx, want));
}

TEST_CASE("exactness: bit-identical to the brute-force rational oracle") {
  auto ctx = ctx30();
  for (long s : {0L, 1L, 2L, 3L}) {
    for (auto x : {Rational(1), Rational(2), Rational(1, 2), Rational(3, 7)}) {
      for (long n = 0; n <= 60; n += (n < 8 ? 1 : 7)) {
        ForwardDifference fd = forward_difference(n, DifferenceKernel::power(s, x), ctx);
        REQUIRE(fd.exact);
        CHECK(fd.rational == brute_power_difference(n, s, x));
      }
    }
  }
}

TEST_CASE("negative-exponent kernels annihilate polynomials") {
  auto ctx = ctx30();
  // Delta^n of a degree-d polynomial vanishes for n > d.
  ForwardDifference fd = forward_difference(4, DifferenceKernel::power(-2, Rational(1)), ctx);
  CHECK(fd.exact);
  CHECK(fd.rational == Rational(0));
}

TEST_CASE("log difference through the integral") {
  auto ctx = ctx50();
  const mpfr_prec_t wp = ctx.working_bits();

  Approx one = log_difference_via_integral(1, Real(1L, wp), ctx);
  CHECK(within_bound(one, fn::log2c(wp)));

  // dual-path agreement at moderate n
  Approx five = log_difference_via_integral(5, Real(1L, wp), ctx);
  ForwardDifference direct = forward_difference(5, DifferenceKernel::log_kernel(Rational(1)), ctx);
  Real gap = abs_diff(five.value, -direct.approx.value);
  CHECK(gap <= five.error_bound + direct.approx.error_bound);

  // n = 200: the direct path is the thing being avoided; the integral stays tame
  Approx big = log_difference_via_integral(200, Real(1L, wp), ctx);
  CHECK(big.value.is_finite());
  CHECK(big.error_bound <= bound_from_exp10(-52.0));
}

TEST_CASE("dual-path agreement across the grid") {
  auto ctx = ctx30();
  const mpfr_prec_t wp = ctx.working_bits();
  for (double a : {1.0, 2.0, 0.5}) {
    for (long n : {1L, 7L, 23L, 60L}) {
      Real ar(a, wp);
      Approx via_integral = log_difference_via_integral(n, ar, ctx);
      DifferenceKernel k = (a == 0.5) ? DifferenceKernel::log_kernel(Rational(1, 2))
                                      : DifferenceKernel::log_kernel(Rational((long)a));
      ForwardDifference direct = forward_difference(n, k, ctx);
      // sign convention: the integral path carries (-1)^{k+1}
      Real resid = abs(direct.approx.value + via_integral.value);
      CHECK(resid <= direct.approx.error_bound + via_integral.error_bound);
    }
  }
}

TEST_CASE("cancellation guard: +10 digits does not move the value past its bound") {
  PrecisionContext base(30, 10);
  PrecisionContext more(30, 20);
  for (long n : {40L, 120L, 200L}) {
    ForwardDifference lo = forward_difference(n, DifferenceKernel::log_kernel(Rational(1)), base);
    ForwardDifference hi = forward_difference(n, DifferenceKernel::log_kernel(Rational(1)), more);
    CHECK(abs_diff(lo.approx.value, hi.approx.value) <= lo.approx.error_bound);
  }
}

TEST_CASE("euler transform: log Wallis series accelerates to log(pi/2)") {
  auto ctx = ctx50();
  const mpfr_prec_t wp = ctx.working_bits();
  auto source = [](long k, mpfr_prec_t p) {
    // a_k = log((k+1)/k)
    Real r(k + 1, p);
    r /= k;
    return fn::log(r);
  };
  SeriesResult res = euler_transform_sum(source, ctx);
  Real want = fn::log(fn::pi(wp) / 2L);
  CHECK(within_bound(res.approx, want));
  CHECK(res.approx.error_bound <= bound_from_exp10(-50.0));
}

TEST_CASE("euler transform: alternating harmonic and basel halves") {
  auto ctx = ctx50();
  const mpfr_prec_t wp = ctx.working_bits();

  auto harmonic_src = [](long k, mpfr_prec_t p) { return Real(1L, p) / k; };
  SeriesResult h = euler_transform_sum(harmonic_src, ctx);
  CHECK(within_bound(h.approx, fn::log2c(wp)));
  // freeze the 20-digit reference used by the elementary suite
  CHECK(close_to(h.approx.value, R("0.69314718055994530942"), -19.5));

  auto basel_src = [](long k, mpfr_prec_t p) {
    Real r(k, p);
    return Real(1L, p) / (r * r);
  };
  SeriesResult b = euler_transform_sum(basel_src, ctx);
  Real pi = fn::pi(wp);
  CHECK(within_bound(b.approx, pi * pi / 12L));
}

TEST_CASE("transform limit equals source limit on corpus members") {
  auto ctx = ctx30();
  const mpfr_prec_t wp = ctx.working_bits();
  // partial sums of the source settle on the same limit the transform gives
  auto source = [](long k, mpfr_prec_t p) {
    Real r(k + 1, p);
    r /= k;
    return fn::log(r);
  };
  SeriesResult accel = euler_transform_sum(source, ctx);
  Real direct(wp);
  const long N = 200000;
  for (long k = N; k >= 1; --k) {
    Real t = source(k, wp);
    direct += (k % 2 == 1) ? t : -t;
  }
  // |direct - limit| ~ 1/(2N); the accelerated value is the limit here
  CHECK(abs_diff(direct, accel.approx.value) <= bound_from_exp10(-5.0));
  CHECK(abs_diff(direct, accel.approx.value) >= bound_from_exp10(-7.0));
}

TEST_CASE("resource guard") {
  PrecisionContext tiny(10, 5);
  tiny.max_terms = 50;
  CHECK_THROWS_AS(forward_difference(51, DifferenceKernel::power(1, Rational(1)), tiny),
                  ResourceError);
}
