#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "zetakit/quadrature.hpp"

using namespace zk;
using namespace zt;

namespace {

IntegrandSpec unit(std::function<Real(const Real&, const Real&, const Real&)> f,
                   EndpointHint l = EndpointHint::Smooth, EndpointHint r = EndpointHint::Smooth) {
  IntegrandSpec s;
  s.domain = QuadDomain::UnitInterval;
  s.left = l;
  s.right = r;
  s.evaluate = std::move(f);
  return s;
}

Real stable_log(const Real& d0, const Real& d1) {
  return (d1 < Real(0.5, d0.prec())) ? fn::log1p(-d1) : fn::log(d0);
}

}  // namespace

TEST_CASE("(y-1)/log y integrates to log 2") {
  auto ctx = ctx50();
  auto spec = unit([](const Real& y, const Real& d0, const Real& d1) {
    return -d1 / stable_log(d0, d1);
  });
  QuadResult q = integrate(spec, ctx);
  CHECK(within_bound(q.approx, fn::log2c(ctx.working_bits())));
  CHECK(q.approx.error_bound <= bound_from_exp10(-50.0));
}

TEST_CASE("Wallis integral equals log(pi/2)") {
  auto ctx = ctx50();
  auto spec = unit([](const Real& y, const Real& d0, const Real& d1) {
    return -d1 / ((Real(1L, y.prec()) + y) * stable_log(d0, d1));
  });
  QuadResult q = integrate(spec, ctx);
  Real want = fn::log(fn::pi(ctx.working_bits()) / 2L);
  CHECK(within_bound(q.approx, want));
  CHECK(q.approx.error_bound <= bound_from_exp10(-50.0));
}

TEST_CASE("half-line: log(1+e^-u) integrates to pi^2/12") {
  auto ctx = ctx50();
  IntegrandSpec spec;
  spec.domain = QuadDomain::HalfLine;
  spec.evaluate = [](const Real& u, const Real&, const Real&) {
    return fn::log1p(fn::exp(-u));
  };
  QuadResult q = integrate(spec, ctx);
  Real pi = fn::pi(ctx.working_bits());
  CHECK(within_bound(q.approx, pi * pi / 12L));
}

TEST_CASE("log-power kernels: int log^s t/(1-t) = (-1)^s s! zeta(s+1)") {
  auto ctx = ctx50();
  const mpfr_prec_t wp = ctx.working_bits();
  for (int s = 1; s <= 6; ++s) {
    auto spec = unit(
        [s](const Real& t, const Real& d0, const Real& d1) {
          return fn::pow_si(stable_log(d0, d1), s) / d1;
        },
        EndpointHint::LogPowerSingular, EndpointHint::Smooth);
    spec.log_power = s;
    QuadResult q = integrate(spec, ctx);
    Real want = ref_zeta(s + 1, wp);
    for (int i = 1; i <= s; ++i) want *= i;
    if (s % 2 == 1) want = -want;
    CHECK(within_bound(q.approx, want));
    CHECK(q.approx.error_bound <= bound_from_exp10(-48.0));
  }
}

TEST_CASE("frullani-type: int (t^a - 1)/log t = log(a+1)") {
  auto ctx = ctx50();
  const mpfr_prec_t wp = ctx.working_bits();
  for (double a : {1.0, 2.0, 5.0, 0.5}) {
    Real ar(a, wp);
    auto spec = unit([ar](const Real& t, const Real& d0, const Real& d1) {
      Real logt = stable_log(d0, d1);
      return fn::expm1(ar * logt) / logt;
    });
    QuadResult q = integrate(spec, ctx);
    CHECK(within_bound(q.approx, fn::log(ar + 1L)));
  }
}

TEST_CASE("log log kernels") {
  auto ctx = ctx50();
  const mpfr_prec_t wp = ctx.working_bits();
  Real g = ref_euler_gamma(wp);
  Real pi = fn::pi(wp);

  // Gamma'(1): int_0^1 loglog(1/t) dt = -gamma
  auto g1 = unit(
      [](const Real& t, const Real& d0, const Real& d1) {
        return fn::log(-stable_log(d0, d1));
      },
      EndpointHint::LogLogSingular, EndpointHint::LogLogSingular);
  QuadResult q1 = integrate_loglog(g1, ctx);
  CHECK(within_bound(q1.approx, -g));

  // int loglog(1/t)/(1+t)^2 dt = (1/2)(log(pi/2) - gamma)
  auto g2 = unit(
      [](const Real& t, const Real& d0, const Real& d1) {
        Real one(1L, t.prec());
        return fn::log(-stable_log(d0, d1)) / ((one + t) * (one + t));
      },
      EndpointHint::Smooth, EndpointHint::LogLogSingular);
  QuadResult q2 = integrate_loglog(g2, ctx);
  CHECK(within_bound(q2.approx, (fn::log(pi / 2L) - g) / 2L));
  CHECK(q2.approx.error_bound <= bound_from_exp10(-48.0));

  // n = 2 case of the x^{n-1}/(1+x^n)^2 family: -(1/4)(gamma + log(4/pi))
  auto g3 = unit(
      [](const Real& t, const Real& d0, const Real& d1) {
        Real one(1L, t.prec());
        Real den = one + t * t;
        return t * fn::log(-stable_log(d0, d1)) / (den * den);
      },
      EndpointHint::Smooth, EndpointHint::LogLogSingular);
  QuadResult q3 = integrate_loglog(g3, ctx);
  Real want = -(g + fn::log(Real(4L, wp) / pi)) / 4L;
  CHECK(within_bound(q3.approx, want));

  CHECK_THROWS_AS(integrate_loglog(unit([](const Real& t, const Real&, const Real&) {
                    return t;
                  }),
                                   ctx),
                  UsageError);
}

TEST_CASE("half-line zeta kernels") {
  auto ctx = ctx50();
  const mpfr_prec_t wp = ctx.working_bits();

  // int u^{s-1}/(e^u - 1)^2 du = Gamma(s)(zeta(s-1) - zeta(s)), s = 3
  IntegrandSpec spec;
  spec.domain = QuadDomain::HalfLine;
  spec.evaluate = [](const Real& u, const Real&, const Real&) {
    Real em = fn::expm1(u);
    return u * u / (em * em);
  };
  QuadResult q = integrate(spec, ctx);
  Real want = (ref_zeta(2, wp) - ref_zeta(3, wp)) * 2L;
  CHECK(within_bound(q.approx, want));
}

TEST_CASE("linearity within summed bounds") {
  auto ctx = ctx30();
  auto f = unit([](const Real& t, const Real&, const Real&) { return t * t; });
  auto g = unit([](const Real& t, const Real&, const Real&) { return fn::exp(t); });
  auto combo = unit([](const Real& t, const Real&, const Real&) {
    return t * t * 3L + fn::exp(t) * 2L;
  });
  Approx qf = integrate(f, ctx).approx;
  Approx qg = integrate(g, ctx).approx;
  Approx qc = integrate(combo, ctx).approx;
  Approx rhs = scale(qf, 3) + scale(qg, 2);
  CHECK(abs_diff(qc.value, rhs.value) <= qc.error_bound + rhs.error_bound);
}

TEST_CASE("self-consistency: refinement stays inside the reported bound") {
  auto ctx = ctx30();
  auto f = unit([](const Real& t, const Real& d0, const Real& d1) {
    return fn::log(d0) * fn::log(d0) / (Real(1L, t.prec()) + t);
  });
  PrecisionContext finer = ctx;
  finer.target_digits += 8;
  Approx coarse = integrate(f, ctx).approx;
  Approx fine = integrate(f, finer).approx;
  CHECK(abs_diff(coarse.value, fine.value) <= coarse.error_bound);
}

TEST_CASE("degenerate zero integrand") {
  auto ctx = ctx30();
  auto f = unit([](const Real& t, const Real&, const Real&) { return Real(0L, t.prec()); });
  QuadResult q = integrate(f, ctx);
  CHECK(q.approx.value.is_zero());
  CHECK(q.approx.error_bound <= bound_from_exp10(-30.0));
}

TEST_CASE("non-finite integrand raises") {
  auto ctx = ctx30();
  auto f = unit([](const Real& t, const Real&, const Real&) {
    Real bad(t.prec());
    mpfr_set_nan(bad.raw());
    return bad;
  });
  CHECK_THROWS_AS(integrate(f, ctx), IntegrandError);
}
