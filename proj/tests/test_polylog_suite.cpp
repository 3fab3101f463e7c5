#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "zetakit/polylog_suite.hpp"
#include "zetakit/zeta_suite.hpp"

using namespace zk;
using namespace zt;

namespace {

// Direct power-series oracle at elevated precision, independent of li()'s
// argument-splitting machinery.
Real li_oracle(long s, double x, long digits = 70) {
  mpfr_prec_t wp = PrecisionContext::bits_for_digits(digits);
  Real xe(x, wp), pw(1L, wp), acc(wp);
  for (long n = 1; n <= 40000; ++n) {
    pw *= xe;
    acc += pw / fn::pow_si(Real(n, wp), s);
    if (n > 40 && abs(pw) <= bound_from_exp10(-(double)digits - 5.0)) break;
  }
  return acc;
}

}  // namespace

TEST_CASE("li: special values and Landen point") {
  auto ctx = ctx50();
  const mpfr_prec_t wp = ctx.working_bits();
  Real pi = fn::pi(wp);
  Real l2 = fn::log2c(wp);

  // Li_2(1/2) = pi^2/12 - log^2(2)/2, against the direct series oracle too
  Approx a = li(2, Real(0.5, wp), ctx);
  CHECK(close_to(a.value, pi * pi / 12L - l2 * l2 / 2L, -45.0));
  CHECK(close_to(a.value, li_oracle(2, 0.5), -45.0));

  // Li_s(-1) = (2^{1-s}-1) zeta(s) at s = 3
  Approx b = li(3, Real(-1L, wp), ctx);
  Real want = ref_zeta(3, wp) * (Rational(1, 4).to_real(wp) - Real(1L, wp));
  CHECK(close_to(b.value, want, -45.0));

  // Li_1(x) = -log(1-x)
  Approx c = li(1, Real(0.3, wp), ctx);
  CHECK(close_to(c.value, -fn::log1p(Real(-0.3, wp)), -50.0));

  // closure: li(2,1) = zeta(2), li(3,1) = zeta(3), li(s,0) = 0
  CHECK(close_to(li(2, Real(1L, wp), ctx).value, ref_zeta(2, wp), -45.0));
  CHECK(close_to(li(3, Real(1L, wp), ctx).value, ref_zeta(3, wp), -45.0));
  CHECK(li(5, Real(0L, wp), ctx).value.is_zero());

  // near-1 expansion branch vs the series oracle
  CHECK(close_to(li(2, Real(0.9, wp), ctx).value, li_oracle(2, 0.9), -45.0));
  CHECK(close_to(li(4, Real(0.99, wp), ctx).value, li_oracle(4, 0.99), -45.0));
  // negative branch through the duplication split
  CHECK(close_to(li(3, Real(-0.9, wp), ctx).value, li_oracle(3, -0.9), -45.0));

  // Li_3(1/2) = 7 zeta(3)/8 - pi^2 log2 / 12 + log^3 2/6
  Approx d = li(3, Real(0.5, wp), ctx);
  Real want_d = ref_zeta(3, wp) * 7L / 8L - pi * pi * l2 / 12L + l2 * l2 * l2 / 6L;
  CHECK(close_to(d.value, want_d, -45.0));

  // rejections, not clamps
  CHECK_THROWS_AS(li(1, Real(1L, wp), ctx), DomainError);
  CHECK_THROWS_AS(li(2, Real(1.5, wp), ctx), DomainError);
  CHECK_THROWS_AS(li(2, Real(-1.5, wp), ctx), DomainError);
  CHECK_THROWS_AS(li(-1, Real(0.5, wp), ctx), DomainError);
}

TEST_CASE("li derivative ladder") {
  // (li(s, x+h) - li(s, x-h))/(2h) ~ li(s-1,x)/x at elevated precision
  PrecisionContext lifted(70, 15);
  const mpfr_prec_t wp = lifted.working_bits();
  Real h = bound_from_exp10(-10.0);
  Real hh(wp);
  mpfr_set(hh.raw(), h.raw(), MPFR_RNDN);
  Real x(0.4, wp);
  for (long s : {2L, 3L}) {
    Approx up = li(s, x + hh, lifted);
    Approx dn = li(s, x - hh, lifted);
    Real fd = (up.value - dn.value) / (hh * 2L);
    Real want = li(s - 1, x, lifted).value / x;
    CHECK(abs_diff(fd, want) <= bound_from_exp10(-18.0));  // O(h^2)
  }
}

TEST_CASE("li_extended matches inversion data") {
  auto ctx = ctx30();
  const mpfr_prec_t wp = ctx.working_bits();
  // Li_2(-2) + Li_2(-1/2) = -zeta(2) - log^2(2)/2  (known Landen/inversion value)
  Approx a = li_extended(2, Real(-2L, wp), ctx);
  Approx b = li_extended(2, Real(-0.5, wp), ctx);
  Real want = -ref_zeta(2, wp) - fn::log2c(wp) * fn::log2c(wp) / 2L;
  CHECK(abs_diff(a.value + b.value, want) <=
        a.error_bound + b.error_bound + bound_from_exp10(-28.0));
  // continuity across the boundary x = -1
  Approx inside = li(2, Real(-1L, wp), ctx);
  Approx outside = li_extended(2, Real(-1.0000001, wp), ctx);
  CHECK(abs_diff(inside.value, outside.value) <= bound_from_exp10(-6.0));
}

TEST_CASE("binomial series: representation equivalence grid") {
  auto ctx = ctx30();
  const mpfr_prec_t wp = ctx.working_bits();

  auto check_pair = [&](const BinomialSeriesSpec& spec, double slack_exp = -500.0) {
    SeriesSideResult lhs = binomial_series_eval(spec, ctx);
    Approx rhs = binomial_series_closed_form(spec, ctx);
    Real gap = abs_diff(lhs.approx.value, rhs.value);
    Real budget = lhs.approx.error_bound + rhs.error_bound + bound_from_exp10(slack_exp);
    bool ok = gap <= budget;
    if (!ok) {
      MESSAGE("gap=" << gap.to_string(6) << " lhs_bound=" << lhs.approx.error_bound.to_string(6)
                     << " rhs_bound=" << rhs.error_bound.to_string(6));
    }
    CHECK(ok);
  };

  for (long s : {1L, 2L, 3L}) {
    check_pair(BinomialSeriesSpec::t43(s, Real(1L, wp)));
    check_pair(BinomialSeriesSpec::t43(s, Real(-1L, wp)));
    check_pair(BinomialSeriesSpec::t43(s, Real(0.5, wp)));
  }
  for (long s : {0L, 1L, 2L}) {
    check_pair(BinomialSeriesSpec::t44(s, Real(1L, wp)));
    check_pair(BinomialSeriesSpec::t44(s, Real(0.5, wp)));
  }
  for (long s : {1L, 2L, 3L}) {
    for (double x : {1.0, 2.0, 0.5}) check_pair(BinomialSeriesSpec::t45(s, Real(x, wp)));
  }
  for (long s : {2L, 3L}) {
    check_pair(BinomialSeriesSpec::t46(s, Real(1L, wp)));
    check_pair(BinomialSeriesSpec::t46(s, Real(0.5, wp)));
  }
  for (long s : {2L, 3L}) {
    check_pair(BinomialSeriesSpec::t46a(s, Real(0.5, wp), Real(1L, wp)));
    check_pair(BinomialSeriesSpec::t46a(s, Real(0.5, wp), Real(-1L, wp)));
  }
  // the |w| <= 1/2 general family
  check_pair(BinomialSeriesSpec::general(3, Real(0.4, wp), Real(0.5, wp), 1));
  check_pair(BinomialSeriesSpec::general(2, Real(-0.3, wp), Real(1L, wp), 2));
}

TEST_CASE("binomial series: fast branches hit full precision") {
  auto ctx = ctx50();
  const mpfr_prec_t wp = ctx.working_bits();
  Real pi = fn::pi(wp);

  // T4.3 at x = -1, s = 1 sums to zeta_a(2) = pi^2/12 (geometric branch)
  SeriesSideResult za = binomial_series_eval(BinomialSeriesSpec::t43(1, Real(-1L, wp)), ctx);
  CHECK(close_to(-za.approx.value, pi * pi / 12L, -45.0));

  // T4.5 closed-form example: s=2, x=1 -> pi^2/12
  Approx t45 = binomial_series_closed_form(BinomialSeriesSpec::t45(2, Real(1L, wp)), ctx);
  CHECK(abs_diff(t45.value, pi * pi / 12L) <= t45.error_bound);

  // T4.6 bare sum at y=1/2, s=2 equals 2*(log^2 2 + Li_2(1/2)): the closed
  // form hits it to full precision, the subgeometric series side within its
  // honest bound. The n=0 term alone already rules out the printed
  // pi^2/12 - (3/2) log^2 2 value.
  Real l2 = fn::log2c(wp);
  Real li_half = pi * pi / 12L - l2 * l2 / 2L;
  Real want = (l2 * l2 + li_half) * 2L;
  Approx cf = binomial_series_closed_form(BinomialSeriesSpec::t46(2, Real(0.5, wp)), ctx);
  CHECK(close_to(cf.value, want, -40.0));
  SeriesSideResult t46 = binomial_series_eval(BinomialSeriesSpec::t46(2, Real(0.5, wp)), ctx);
  CHECK(abs_diff(t46.approx.value, want) <= t46.approx.error_bound);
  Real printed = pi * pi / 12L - l2 * l2 * 3L / 2L;
  CHECK(abs_diff(t46.approx.value, printed) >= Real(1L, wp));
}

TEST_CASE("slow x=1 branches carry honest bounds") {
  PrecisionContext quick(30, 10);
  quick.max_terms = 60000;
  const mpfr_prec_t wp = quick.working_bits();

  SeriesSideResult slow = binomial_series_eval(BinomialSeriesSpec::t43(1, Real(1L, wp)), quick);
  Real truth = ref_zeta(2, wp);
  CHECK(abs_diff(slow.approx.value, truth) <= slow.approx.error_bound);
  CHECK(slow.approx.error_bound >= bound_from_exp10(-8.0));  // honestly weak
  CHECK(slow.approx.error_bound <= bound_from_exp10(-2.0));  // but not vacuous
}

TEST_CASE("binomial series specs reject out-of-domain parameters") {
  auto ctx = ctx30();
  const mpfr_prec_t wp = ctx.working_bits();
  CHECK_THROWS_AS(binomial_series_eval(BinomialSeriesSpec::t43(1, Real(1.5, wp)), ctx),
                  DomainError);
  CHECK_THROWS_AS(binomial_series_eval(BinomialSeriesSpec::t44(1, Real(-0.5, wp)), ctx),
                  DomainError);
  CHECK_THROWS_AS(
      binomial_series_eval(BinomialSeriesSpec::general(2, Real(0.6, wp), Real(0.5, wp), 1), ctx),
      DomainError);
  CHECK_THROWS_AS(binomial_series_eval(BinomialSeriesSpec::t45(2, Real(-1L, wp)), ctx),
                  DomainError);
  CHECK_THROWS_AS(binomial_series_eval(BinomialSeriesSpec::t46(1, Real(0.5, wp)), ctx),
                  DomainError);
  CHECK_THROWS_AS(
      binomial_series_eval(BinomialSeriesSpec::t46a(2, Real(0.7, wp), Real(1L, wp)), ctx),
      DomainError);
}

TEST_CASE("nielsen polylogarithms") {
  auto ctx = ctx50();
  const mpfr_prec_t wp = ctx.working_bits();
  // S_{n,1}(1) = zeta(n+1): n=1 -> zeta(2), n=2 -> zeta(3)
  Approx s11 = nielsen_S(1, 1, Real(1L, wp), ctx);
  CHECK(abs_diff(s11.value, ref_zeta(2, wp)) <= s11.error_bound * 4L);
  Approx s21 = nielsen_S(2, 1, Real(1L, wp), ctx);
  CHECK(abs_diff(s21.value, ref_zeta(3, wp)) <= s21.error_bound * 4L);
  Approx s31 = nielsen_S(3, 1, Real(1L, wp), ctx);
  CHECK(abs_diff(s31.value, ref_zeta(4, wp)) <= s31.error_bound * 4L);
  // S_{2,1}(z) = Li_3(z) at z = 1/2
  Approx s = nielsen_S(2, 1, Real(0.5, wp), ctx);
  Approx l3 = li(3, Real(0.5, wp), ctx);
  CHECK(abs_diff(s.value, l3.value) <= s.error_bound * 4L + l3.error_bound);
  CHECK_THROWS_AS(nielsen_S(5, 4, Real(0.5, wp), ctx), DomainError);
}

TEST_CASE("identity residuals vanish") {
  auto ctx = ctx50();
  const mpfr_prec_t wp = ctx.working_bits();

  LiIdentityPoint dup{3, Real(0.6, wp)};
  Approx r1 = li_identity_residual(LiIdentity::Duplication, dup, ctx);
  CHECK(abs(r1.value) <= r1.error_bound + bound_from_exp10(-45.0));

  LiIdentityPoint inv{2, Real(2L, wp)};
  Approx r2 = li_identity_residual(LiIdentity::Inversion2, inv, ctx);
  CHECK(abs(r2.value) <= r2.error_bound + bound_from_exp10(-45.0));

  LiIdentityPoint inv3{3, Real(2L, wp)};
  Approx r3 = li_identity_residual(LiIdentity::Inversion3, inv3, ctx);
  CHECK(abs(r3.value) <= r3.error_bound + bound_from_exp10(-45.0));

  for (long n : {4L, 5L}) {
    LiIdentityPoint invn{n, Real(2.5, wp)};
    Approx rn = li_identity_residual(LiIdentity::InversionN, invn, ctx);
    CHECK(abs(rn.value) <= rn.error_bound + bound_from_exp10(-45.0));
  }

  Real pi = fn::pi(wp);
  for (double frac : {1.0 / 3.0, 0.5}) {
    LiIdentityPoint fc{2, pi * Real(frac, wp), 30000};
    Approx rc = li_identity_residual(LiIdentity::FourierCos, fc, ctx);
    CHECK(abs(rc.value) <= rc.error_bound);
    Approx rs = li_identity_residual(LiIdentity::FourierSin, fc, ctx);
    CHECK(abs(rs.value) <= rs.error_bound);
  }
}

TEST_CASE("witten zeta: dual routes agree; bridge values hold") {
  auto ctx = ctx30();
  const mpfr_prec_t wp = ctx.working_bits();

  for (auto [r, s, t] : {std::tuple<long, long, long>{2, 2, 1}, {1, 1, 2}, {2, 1, 2}}) {
    WittenResult w = witten_W(r, s, t, ctx);
    Real gap = abs_diff(w.integral_route.value, w.double_sum_route.value);
    CHECK(gap <= w.integral_route.error_bound + w.double_sum_route.error_bound);
  }

  // int [Li_2]^2/x dx = 2 zeta(2) zeta(3) - 3 zeta(5) = W(2,2,1)
  WittenResult w221 = witten_W(2, 2, 1, ctx);
  Real want = ref_zeta(2, wp) * ref_zeta(3, wp) * 2L - ref_zeta(5, wp) * 3L;
  CHECK(abs_diff(w221.integral_route.value, want) <=
        w221.integral_route.error_bound * 4L + bound_from_exp10(-28.0));
}

TEST_CASE("li moments: closed forms vs quadrature") {
  auto ctx = ctx30();
  const mpfr_prec_t wp = ctx.working_bits();

  // p=2, n=3, q=0 -> zeta(2)/3 - H_3/9
  Approx m1 = li_moment(2, 3, 0, ctx);
  Real want1 = ref_zeta(2, wp) / 3L - harmonic(3, 1).to_real(wp) / 9L;
  CHECK(abs_diff(m1.value, want1) <= m1.error_bound * 4L + bound_from_exp10(-28.0));

  // p=3, n=2, q=0 -> zeta(3)/2 - zeta(2)/4 + H_2/8
  Approx m2 = li_moment(3, 2, 0, ctx);
  Real want2 = ref_zeta(3, wp) / 2L - ref_zeta(2, wp) / 4L + harmonic(2, 1).to_real(wp) / 8L;
  CHECK(abs_diff(m2.value, want2) <= m2.error_bound * 4L + bound_from_exp10(-28.0));

  // p=2, n=1, q=1 -> -2 zeta(2) + 3
  Approx m3 = li_moment(2, 1, 1, ctx);
  Real want3 = -ref_zeta(2, wp) * 2L + Real(3L, wp);
  CHECK(abs_diff(m3.value, want3) <= m3.error_bound * 4L + bound_from_exp10(-28.0));

  for (auto [p, n, q] : {std::tuple<long, long, long>{2, 3, 0}, {3, 2, 0}, {4, 5, 0},
                         {2, 1, 1}, {2, 4, 1}, {2, 2, 2}}) {
    Approx closed = li_moment(p, n, q, ctx);
    Approx quad = li_moment_quadrature(p, n, q, ctx);
    CHECK(abs_diff(closed.value, quad.value) <=
          closed.error_bound + quad.error_bound + bound_from_exp10(-26.0));
  }
}
