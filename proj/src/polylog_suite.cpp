#include "zetakit/polylog_suite.hpp"

#include <cmath>
#include <memory>
#include <vector>

#include "zetakit/binomial_transforms.hpp"
#include "zetakit/elementary.hpp"
#include "zetakit/quadrature.hpp"
#include "zetakit/special_functions.hpp"
#include "zetakit/zeta_suite.hpp"

namespace zk {
namespace {

Real real_at(const Real& x, mpfr_prec_t p) {
  Real r(p);
  mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

// zeta(m) for any integer m != 1; negative arguments through the exact
// Bernoulli values: zeta(0) = -1/2, zeta(-2k) = 0, zeta(1-2k) = -B_{2k}/(2k).
Approx zeta_any_int(long m, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working_bits();
  if (m >= 2) return zeta_int(m, ctx);
  if (m == 1) throw DomainError("zeta pole at s = 1");
  if (m == 0) return Approx::exact(Real(-0.5, wp));
  if ((-m) % 2 == 0) return Approx::exact(Real(0L, wp));
  unsigned long k = static_cast<unsigned long>((1 - m) / 2);
  Rational v = -(bernoulli_b2n(k) / Rational(2 * static_cast<long>(k)));
  return Approx::exact(v.to_real(wp));
}

// Li_s(e^-u) for 0 < u <= log(4/3) by the zeta-coefficient expansion
//   u^{s-1}/(s-1)! (H_{s-1} - log u) + sum_{j != s-1} zeta(s-j) (-u)^j / j!
// (convergent for |u| < 2 pi; the tail is geometric with ratio u/(2 pi)).
Approx li_log_expansion(long s, const Real& u, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working_bits() + 16;
  Real acc(wp);
  Real bound(0L, kBoundPrec);

  Real upow = fn::pow_si(-u, s - 1);  // the special term rides on (-u)^{s-1}
  Rational fact(1);
  for (long i = 2; i <= s - 1; ++i) fact *= Rational(i);
  acc += upow / fact.to_real(wp) *
         (harmonic(static_cast<unsigned long>(s - 1), 1).to_real(wp) - fn::log(u));

  Real term_pow(1L, wp);  // (-u)^j / j!
  const Real stop = bound_from_exp10(ctx.series_threshold_exponent() - 2.0);
  long j = 0;
  for (;; ++j) {
    if (j != s - 1) {
      Approx zs = zeta_any_int(s - j, ctx);
      if (!zs.value.is_zero()) {
        Real t = zs.value * term_pow;
        acc += t;
        bound += zs.error_bound * abs(term_pow);
        if (j > s + 4 && abs(t) <= stop) break;
      } else if (j > s + 24) {
        break;
      }
    }
    if (j > 4096) throw ConvergenceError("li log-expansion stalled", Approx(acc, bound), j);
    term_pow *= -u;
    term_pow /= (j + 1);
  }
  Real q(0.08, kBoundPrec);
  bound += abs(term_pow) * q / (Real(1L, kBoundPrec) - q) + Approx::ulp_slop(acc) * (j + 8);
  return Approx(acc, bound);
}

Approx li_power_series(long s, const Real& x, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working_bits();
  Real xe = real_at(x, wp);
  auto pw = std::make_shared<Real>(Real(1L, wp));
  auto term = [pw, xe, s](long n) {
    *pw *= xe;
    Real t = *pw;
    for (long i = 0; i < s; ++i) t /= (n + 1);
    return t;
  };
  double q = std::fabs(xe.to_double());
  TailPolicy policy = TailPolicy::geometric(q < 1e-6 ? 1e-6 : q);
  policy.min_terms = 4;
  return sum_with_tail(term, policy, ctx).approx;
}

}  // namespace

Approx li_c(long s, const Real& x, const Real& one_minus_x, const PrecisionContext& ctx) {
  if (s < 0) throw DomainError("li requires integer order s >= 0");
  const mpfr_prec_t wp = ctx.working_bits();
  Real xe = real_at(x, wp);
  Real xc = real_at(one_minus_x, wp);

  if (xc.sign() < 0 || xe < Real(-1L, wp)) throw DomainError("li requires x in [-1, 1]");

  if (xc.is_zero()) {  // x = 1
    if (s < 2) throw DomainError("li at x = 1 requires s >= 2");
    return zeta_int(s, ctx);
  }
  if (xe == Real(-1L, wp)) return -zeta_alternating_int(s, ctx);
  if (xe.is_zero()) return Approx::exact(Real(0L, wp));

  if (s == 0) {
    Real v = xe / xc;
    return Approx(v, Approx::ulp_slop(v) * 4L);
  }
  if (s == 1) {
    Real v = -fn::log(xc);
    return Approx(v, Approx::ulp_slop(v) * 4L);
  }

  if (abs(xe) <= Real(0.75, wp)) return li_power_series(s, xe, ctx);

  if (xe.sign() > 0) {
    Real u = -fn::log1p(-xc);  // -log x through the complement
    return li_log_expansion(s, u, ctx);
  }

  // x in (-1, -3/4): Li_s(x) = 2^{1-s} Li_s(x^2) - Li_s(-x)
  Real ax = -xe;
  Real axc = Real(1L, wp) - ax;
  Real x2 = xe * xe;
  Real x2c = xc * (Real(1L, wp) + xe);  // 1 - x^2 = (1-x)(1+x)
  Approx li_sq = li_c(s, x2, x2c, ctx);
  Approx li_ax = li_c(s, ax, axc, ctx);
  Real sc(1L, wp);
  mpfr_mul_2si(sc.raw(), sc.raw(), 1 - s, MPFR_RNDN);
  return Approx::exact(sc) * li_sq - li_ax;
}

Approx li(long s, const Real& x, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working_bits();
  Real xc = Real(1L, wp) - real_at(x, wp);
  return li_c(s, x, xc, ctx);
}

Approx li_extended(long s, const Real& x, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working_bits();
  Real xe = real_at(x, wp);
  if (xe >= Real(-1L, wp)) return li(s, xe, ctx);
  if (s < 1) throw DomainError("li_extended requires s >= 1 for x < -1");

  // Li_s(x) = (x/Gamma(s)) Int_0^inf u^{s-1}/(e^u - x) du, fine for x < -1.
  IntegrandSpec spec;
  spec.domain = QuadDomain::HalfLine;
  spec.left = (s == 1) ? EndpointHint::Smooth : EndpointHint::LogPowerSingular;
  spec.evaluate = [xe, s](const Real& u, const Real&, const Real&) {
    Real num = (s == 1) ? Real(1L, u.prec()) : fn::pow_si(u, s - 1);
    return num / (fn::exp(u) - xe);
  };
  QuadResult q = integrate(spec, ctx);
  Rational fact(1);
  for (long i = 2; i <= s - 1; ++i) fact *= Rational(i);
  return q.approx * Approx::exact(xe / fact.to_real(wp));
}

BinomialSeriesSpec BinomialSeriesSpec::t43(long s, const Real& x) {
  BinomialSeriesSpec sp;
  sp.theorem = BinomialTheorem::T43;
  sp.s = s;
  sp.x = x;
  return sp;
}
BinomialSeriesSpec BinomialSeriesSpec::t44(long s, const Real& x) {
  BinomialSeriesSpec sp;
  sp.theorem = BinomialTheorem::T44;
  sp.s = s;
  sp.x = x;
  return sp;
}
BinomialSeriesSpec BinomialSeriesSpec::general(long p, const Real& w, const Real& x, long s) {
  BinomialSeriesSpec sp;
  sp.theorem = BinomialTheorem::General;
  sp.p = p;
  sp.w = w;
  sp.x = x;
  sp.s = s;
  return sp;
}
BinomialSeriesSpec BinomialSeriesSpec::t45(long s, const Real& x) {
  BinomialSeriesSpec sp;
  sp.theorem = BinomialTheorem::T45;
  sp.s = s;
  sp.x = x;
  return sp;
}
BinomialSeriesSpec BinomialSeriesSpec::t46(long s, const Real& y) {
  BinomialSeriesSpec sp;
  sp.theorem = BinomialTheorem::T46;
  sp.s = s;
  sp.x = y;
  return sp;
}
BinomialSeriesSpec BinomialSeriesSpec::t46a(long s, const Real& w, const Real& x) {
  BinomialSeriesSpec sp;
  sp.theorem = BinomialTheorem::T46a;
  sp.s = s;
  sp.w = w;
  sp.x = x;
  return sp;
}

void BinomialSeriesSpec::validate(const PrecisionContext& ctx) const {
  const mpfr_prec_t wp = ctx.working_bits();
  Real one(1L, wp), half(0.5, wp);
  switch (theorem) {
    case BinomialTheorem::T43:
      if (abs(x) > one) throw DomainError("T4.3 requires |x| <= 1");
      break;
    case BinomialTheorem::T44:
      if (x.sign() <= 0 || x > one) throw DomainError("T4.4 requires 0 < x <= 1");
      break;
    case BinomialTheorem::General:
      if (abs(w) > half) throw DomainError("general series restricted to |w| <= 1/2");
      if (x.sign() <= 0 || x > one) throw DomainError("general series requires 0 < x <= 1");
      if (p < 1) throw DomainError("general series requires p >= 1");
      break;
    case BinomialTheorem::T45:
      if (x.sign() <= 0) throw DomainError("T4.5 requires x > 0");
      break;
    case BinomialTheorem::T46:
      if (x.sign() <= 0 || x > one) throw DomainError("T4.6 requires 0 < y <= 1");
      if (s < 2) throw DomainError("T4.6 requires integer s >= 2");
      break;
    case BinomialTheorem::T46a:
      if (abs(w) > half) throw DomainError("T4.6a restricted to |w| <= 1/2");
      if (abs(x) > one) throw DomainError("T4.6a requires -1 <= x <= 1");
      if (s < 2) throw DomainError("T4.6a requires integer s >= 2");
      break;
  }
}

namespace {

// Inner sums P_sigma(n) = sum_{k=1..n} C(n,k) x^k / k^sigma through
// P_sigma(n) = P_sigma(n-1) + P_{sigma-1}(n)/n, P_0(n) = (1+x)^n - 1.
// Every level accumulates one sign family, so the 2^n binomial cancellation
// never materializes.
class InnerPowerSums {
 public:
  InnerPowerSums(long sigma, const Real& x, mpfr_prec_t prec)
      : sigma_(sigma),
        pow_(Real(1L, prec)),
        base_(Real(1L, prec) + real_at(x, prec)),
        levels_(static_cast<size_t>(sigma + 1), Real(0L, prec)) {}

  // call with n = 1, 2, 3, ... in order; returns P_sigma(n)
  const Real& advance(long n) {
    pow_ *= base_;
    levels_[0] = pow_ - 1L;
    for (long j = 1; j <= sigma_; ++j)
      levels_[static_cast<size_t>(j)] += levels_[static_cast<size_t>(j - 1)] / n;
    return levels_[static_cast<size_t>(sigma_)];
  }

 private:
  long sigma_;
  Real pow_, base_;
  std::vector<Real> levels_;
};

// Tail bound sum_{n>N} (1 + log n)^s / n^2 <= I_s(N), I_s = (1+log N)^s/N + s I_{s-1}.
Real log_power_tail_bound(long s, long N) {
  Real lg(std::log(static_cast<double>(N)) + 1.0, kBoundPrec);
  Real invN = Real(1L, kBoundPrec) / N;
  Real acc = invN;
  for (long j = 1; j <= s; ++j) acc = fn::pow_si(lg, j) * invN + acc * j;
  return acc;
}

// Tail bound for x = 1 positive inner sums: P_sigma(n) <= 2^n (e^{-n/8} + (4/n)^sigma)
// by a Chernoff split of the binomial mass, so with an extra n^-outer weight
// sum_{n>N} <= 9 e^{-N/8}/N^outer + 2 * 4^sigma N^{1-sigma-outer}/(sigma+outer-1).
Real chernoff_tail_bound(long sigma, long outer, long N) {
  double dN = static_cast<double>(N);
  double e_part = 9.0 * std::exp(-dN / 8.0) / std::pow(dN, static_cast<double>(outer));
  double p = static_cast<double>(sigma + outer - 1);
  double poly_part = 2.0 * std::pow(4.0, static_cast<double>(sigma)) / (p * std::pow(dN, p));
  return Real(e_part + poly_part, kBoundPrec);
}

SeriesSideResult run_series(const std::function<Real(long)>& term, const TailPolicy& policy,
                            const PrecisionContext& ctx) {
  SeriesResult r = sum_with_tail(term, policy, ctx);
  return {r.approx, r.terms_used, r.heuristic_bound};
}

}  // namespace

SeriesSideResult binomial_series_eval(const BinomialSeriesSpec& spec, const PrecisionContext& ctx) {
  spec.validate(ctx);
  const mpfr_prec_t wp = ctx.working_bits();
  Real one(1L, wp);

  switch (spec.theorem) {
    case BinomialTheorem::T43: {
      bool at_one = (real_at(spec.x, wp) == one);
      bool at_minus_one = (real_at(spec.x, wp) == -one);
      auto inner = std::make_shared<InnerPowerSums>(spec.s, spec.x, wp);
      auto term = [inner](long idx) {
        long n = idx + 1;
        Real t = inner->advance(n);
        t /= n;
        mpfr_div_2si(t.raw(), t.raw(), n, MPFR_RNDN);
        return t;
      };
      if (at_one) {
        long cap = std::min<long>(ctx.max_terms, 200000);
        TailPolicy policy = TailPolicy::positive_decreasing(
            [s = spec.s](long n, const Real&) { return chernoff_tail_bound(s, 1, n + 1); }, cap);
        policy.min_terms = 32;
        return run_series(term, policy, ctx);
      }
      double q = at_minus_one
                     ? 0.55
                     : std::min(0.98, 0.5 * (1.0 + std::fabs(spec.x.to_double())) + 0.02);
      TailPolicy policy = TailPolicy::geometric(q);
      policy.min_terms = 12;
      return run_series(term, policy, ctx);
    }

    case BinomialTheorem::T44: {
      auto inner = std::make_shared<InnerPowerSums>(spec.s, -spec.x, wp);
      auto term = [inner](long idx) {
        long n = idx + 1;
        Real t = inner->advance(n);
        return t / n / n;
      };
      long cap = std::min<long>(ctx.max_terms, 1000000);
      TailPolicy policy = TailPolicy::positive_decreasing(
          [s = spec.s](long n, const Real&) { return log_power_tail_bound(s, n + 1); }, cap);
      policy.min_terms = 32;
      return run_series(term, policy, ctx);
    }

    case BinomialTheorem::General: {
      auto inner = std::make_shared<InnerPowerSums>(spec.s, -spec.x, wp);
      Real we = real_at(spec.w, wp);
      auto wn = std::make_shared<Real>(Real(1L, wp));
      auto term = [inner, wn, we, p = spec.p](long idx) {
        long n = idx + 1;
        *wn *= we;
        Real t = inner->advance(n);
        return t * (*wn) / fn::pow_si(Real(n, we.prec()), p);
      };
      double q = std::min(0.98, std::fabs(spec.w.to_double()) *
                                        (1.0 + std::fabs(spec.x.to_double())) +
                                    0.02);
      TailPolicy policy = TailPolicy::geometric(q);
      policy.min_terms = 12;
      return run_series(term, policy, ctx);
    }

    case BinomialTheorem::T45: {
      Approx a = lerch_phi_alt(Real(spec.s, wp), spec.x, ctx);
      return {a, 0, false};
    }

    case BinomialTheorem::T46: {
      // Inner sum D(n) = sum_k C(n,k)(-1)^k y^k/(k+1)^{s-1}; through
      // C(n,k)/(k+1) = C(n+1,k+1)/(n+1) it becomes -P_{s-2}(n+1, -y)/(y(n+1)),
      // all computable by the cancellation-free P recurrence. D(n) decays only
      // like (1+log n)^{s-2}/n for every y in (0,1] (the y^k factor does not
      // buy geometric decay), so the outer 1/(n+1)-weighted series is capped
      // with the explicit log-power tail bound.
      long sigma = spec.s - 1;
      Real ye = real_at(spec.x, wp);
      double y = ye.to_double();
      auto state = std::make_shared<InnerPowerSums>(sigma - 1, -spec.x, wp);
      auto term = [state, ye](long n) {
        const Real& p = state->advance(n + 1);
        return -p / ye / (n + 1) / (n + 1);
      };
      long cap = std::min<long>(ctx.max_terms, 160000);
      TailPolicy policy = TailPolicy::positive_decreasing(
          [sigma, y](long n, const Real&) {
            return log_power_tail_bound(sigma - 1, n + 1) * 2L / Real(y, kBoundPrec);
          },
          cap);
      policy.min_terms = 32;
      return run_series(term, policy, ctx);
    }

    case BinomialTheorem::T46a: {
      // C(n,k)/(k+1) = C(n+1,k+1)/(n+1) turns the inner sum into
      // P_{s-2}(n+1, x) / (x (n+1)); the P recurrence covers x of both signs.
      long sigma = spec.s - 2;
      Real xe = real_at(spec.x, wp);
      Real we = real_at(spec.w, wp);
      if (xe.is_zero()) throw DomainError("T4.6a inner reduction needs x != 0");
      auto state = std::make_shared<InnerPowerSums>(sigma, spec.x, wp);
      auto wpow = std::make_shared<Real>(Real(1L, wp));
      auto term = [state, wpow, we, xe](long n) {
        const Real& p = state->advance(n + 1);
        Real t = p / xe / (n + 1) / (n + 1) * (*wpow);
        *wpow *= we;
        return t;
      };
      bool x_at_one = (xe == one);
      bool w_at_half = (we == Real(0.5, wp));
      if (x_at_one && w_at_half) {
        long cap = std::min<long>(ctx.max_terms, 400000);
        TailPolicy policy = TailPolicy::positive_decreasing(
            [sigma](long n, const Real&) { return chernoff_tail_bound(sigma, 2, n + 1); }, cap);
        policy.min_terms = 32;
        return run_series(term, policy, ctx);
      }
      double q = std::min(0.98, std::fabs(we.to_double()) *
                                        (1.0 + std::fabs(xe.to_double())) +
                                    0.02);
      TailPolicy policy = TailPolicy::geometric(q);
      policy.min_terms = 12;
      return run_series(term, policy, ctx);
    }
  }
  throw UsageError("unknown binomial series theorem");
}

Approx binomial_series_closed_form(const BinomialSeriesSpec& spec, const PrecisionContext& ctx,
                                   long* nodes) {
  spec.validate(ctx);
  const mpfr_prec_t wp = ctx.working_bits();

  switch (spec.theorem) {
    case BinomialTheorem::T43:
      return li(spec.s + 1, spec.x, ctx);

    case BinomialTheorem::T44: {
      Approx a = li(spec.s + 2, spec.x, ctx);
      // log x * Li_{s+1}(x) vanishes at x = 1 (as a limit when s = 0).
      if (real_at(spec.x, wp) == Real(1L, wp)) return -scale(a, spec.s + 1);
      Approx b = li(spec.s + 1, spec.x, ctx);
      Real logx = fn::log(real_at(spec.x, wp));
      return Approx(logx, Approx::ulp_slop(logx) * 2L) * b - scale(a, spec.s + 1);
    }

    case BinomialTheorem::General: {
      // ((-1)^{s+1} x / Gamma(s+1)) Int_0^1 log^s t Li_{p-1}[w(1-xt)]/(1-xt) dt
      Real we = real_at(spec.w, wp);
      Real xe = real_at(spec.x, wp);
      bool x_at_one = (xe == Real(1L, wp));
      PrecisionContext inner_ctx = ctx;
      inner_ctx.target_digits += 10;
      IntegrandSpec ispec;
      ispec.domain = QuadDomain::UnitInterval;
      ispec.left = EndpointHint::LogPowerSingular;
      ispec.log_power = static_cast<int>(spec.s);
      long pm1 = spec.p - 1;
      long s = spec.s;
      ispec.evaluate = [we, xe, x_at_one, pm1, s, &inner_ctx](const Real& t, const Real& d0,
                                                              const Real& d1) -> Real {
        const mpfr_prec_t p = t.prec();
        Real logt = (d1 < Real(0.5, p)) ? fn::log1p(-d1) : fn::log(d0);
        Real u = x_at_one ? d1 : Real(1L, p) - xe * t;
        Real arg = we * u;
        Real argc = Real(1L, p) - arg;
        Approx liv = li_c(pm1, arg, argc, inner_ctx);
        return fn::pow_si(logt, s) * liv.value / u;
      };
      QuadResult q = integrate(ispec, ctx);
      if (nodes) *nodes += q.nodes;
      Rational fact(1);  // Gamma(s+1) = s!
      for (long i = 2; i <= spec.s; ++i) fact *= Rational(i);
      Real pref = xe / fact.to_real(wp);
      if (spec.s % 2 == 0) pref = -pref;  // (-1)^{s+1}
      return q.approx * Approx(pref, Approx::ulp_slop(pref) * 2L);
    }

    case BinomialTheorem::T45: {
      // the defining alternating series sum (-1)^n/(n+x)^s, truncated honestly
      Real xe = real_at(spec.x, wp);
      long s = spec.s;
      auto term = [xe, s, wp](long n) {
        Real t = fn::pow_si(xe + Real(n, wp), -s);
        if (n % 2 == 1) t = -t;
        return t;
      };
      TailPolicy policy = TailPolicy::alternating();
      policy.term_cap = std::min<long>(ctx.max_terms, 200000);
      SeriesResult r = sum_with_tail(term, policy, ctx);
      return r.approx;
    }

    case BinomialTheorem::T46: {
      // bare sum = [-log y Li_{s-1}(y) + (s-1) Li_s(y)] / y.
      // The minus sign follows from the t-integral producing (log y - u), not
      // (log y + u): at y = 1/2, s = 2 the n = 0 term of the double sum alone
      // exceeds the plus-sign value, while this form matches to full
      // precision. At y = 1 both forms coincide.
      Real ye = real_at(spec.x, wp);
      Approx b = li(spec.s, spec.x, ctx);
      if (ye == Real(1L, wp)) return scale(b, spec.s - 1);
      Approx a = li(spec.s - 1, spec.x, ctx);
      Real logy = fn::log(ye);
      Approx num = scale(b, spec.s - 1) - Approx(logy, Approx::ulp_slop(logy) * 2L) * a;
      return num / Approx(ye, Approx::ulp_slop(ye));
    }

    case BinomialTheorem::T46a: {
      // ((-1)^{s-1}/(w Gamma(s-1))) Int_0^1 log^{s-2}v log[1-w(1+xv)]/(1+xv) dv.
      // The source prints this once with and once without an x factor in the
      // numerator; carrying the k-sum through the v-integral gives none, and
      // only the x-free form matches the double sum at x = -1.
      Real we = real_at(spec.w, wp);
      Real xe = real_at(spec.x, wp);
      bool x_at_minus_one = (xe == Real(-1L, wp));
      bool corner = (xe == Real(1L, wp)) && (we == Real(0.5, wp));
      IntegrandSpec ispec;
      ispec.domain = QuadDomain::UnitInterval;
      ispec.left = (spec.s > 2) ? EndpointHint::LogPowerSingular : EndpointHint::Smooth;
      ispec.right = EndpointHint::LogSingular;
      ispec.log_power = static_cast<int>(spec.s - 2);
      long s = spec.s;
      ispec.evaluate = [we, xe, x_at_minus_one, corner, s](const Real& v, const Real& d0,
                                                           const Real& d1) -> Real {
        const mpfr_prec_t p = v.prec();
        Real den = x_at_minus_one ? d1 : Real(1L, p) + xe * v;
        // 1 - w(1+xv) hits zero only at the (w,x) = (1/2,1), v -> 1 corner,
        // where it equals d1/2 exactly.
        Real lg = corner ? fn::log(d1 / 2L) : fn::log(Real(1L, p) - we * den);
        Real num = lg;
        if (s > 2) {
          Real logv = (d1 < Real(0.5, p)) ? fn::log1p(-d1) : fn::log(d0);
          num *= fn::pow_si(logv, s - 2);
        }
        return num / den;
      };
      QuadResult q = integrate(ispec, ctx);
      if (nodes) *nodes += q.nodes;
      Rational fact(1);  // Gamma(s-1) = (s-2)!
      for (long i = 2; i <= spec.s - 2; ++i) fact *= Rational(i);
      Real pref = Real(1L, wp) / (we * fact.to_real(wp));
      if (spec.s % 2 == 0) pref = -pref;  // (-1)^{s-1}
      return q.approx * Approx(pref, Approx::ulp_slop(pref) * 2L);
    }
  }
  throw UsageError("unknown binomial series theorem");
}

Approx nielsen_S(long n, long p, const Real& z, const PrecisionContext& ctx, long* nodes) {
  if (n < 1 || p < 1 || n + p > 8) throw DomainError("nielsen_S requires n,p >= 1 and n+p <= 8");
  const mpfr_prec_t wp = ctx.working_bits();
  Real ze = real_at(z, wp);
  if (ze.sign() <= 0 || ze > Real(1L, wp)) throw DomainError("nielsen_S requires z in (0,1]");
  bool z_at_one = (ze == Real(1L, wp));

  IntegrandSpec spec;
  spec.domain = QuadDomain::UnitInterval;
  spec.left = EndpointHint::LogPowerSingular;
  spec.right = z_at_one ? EndpointHint::LogPowerSingular : EndpointHint::Smooth;
  spec.log_power = static_cast<int>(std::max(n - 1, p));
  spec.evaluate = [ze, n, p, z_at_one](const Real& t, const Real& d0, const Real& d1) -> Real {
    const mpfr_prec_t pr = t.prec();
    Real omzt = z_at_one ? d1 : (Real(1L, pr) - ze) + ze * d1;  // 1 - z t
    Real num = fn::pow_si(fn::log(omzt), p);
    if (n > 1) {
      Real logt = (d1 < Real(0.5, pr)) ? fn::log1p(-d1) : fn::log(d0);
      num *= fn::pow_si(logt, n - 1);
    }
    return num / d0;
  };
  QuadResult q = integrate(spec, ctx);
  if (nodes) *nodes += q.nodes;

  Rational fact(1);
  for (long i = 2; i <= n - 1; ++i) fact *= Rational(i);
  for (long i = 2; i <= p; ++i) fact *= Rational(i);
  Real pref = Real(1L, wp) / fact.to_real(wp);
  if ((n + p) % 2 == 0) pref = -pref;  // (-1)^{n+p-1}
  return q.approx * Approx::exact(pref);
}

namespace {

// Partial Fourier sum sum_{n=1..N} (-1)^n trig(nt)/n^s via incremental angle
// rotation, with the alternating-pair remainder bound 2/N^2 (cos) or 2/N^3 (sin).
Approx fourier_partial(bool cosine, const Real& t, long N, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working_bits();
  Real te = real_at(t, wp);
  Real c = fn::cos(te), s = fn::sin(te);
  Real cn = c, sn = s;
  Real acc(wp);
  for (long n = 1; n <= N; ++n) {
    if (n > 1) {
      Real c2 = cn * c - sn * s;
      Real s2 = sn * c + cn * s;
      cn = c2;
      sn = s2;
    }
    Real term = (cosine ? cn : sn) / fn::pow_si(Real(n, wp), cosine ? 2 : 3);
    if (n % 2 == 1) term = -term;
    acc += term;
  }
  double bexp = std::log10(2.0) - (cosine ? 2.0 : 3.0) * std::log10(static_cast<double>(N));
  Real bound = bound_from_exp10(bexp);
  bound += Approx::ulp_slop(acc) * (N / 16 + 16);
  return Approx(acc, bound);
}

}  // namespace

Approx li_identity_residual(LiIdentity id, const LiIdentityPoint& pt, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working_bits();
  Real one(1L, wp);
  switch (id) {
    case LiIdentity::Duplication: {
      Approx lhs = li(pt.s, pt.x, ctx) + li(pt.s, -pt.x, ctx);
      Approx rhs = li(pt.s, pt.x * pt.x, ctx);
      Real sc(1L, wp);
      mpfr_mul_2si(sc.raw(), sc.raw(), 1 - pt.s, MPFR_RNDN);
      return lhs - rhs * Approx::exact(sc);
    }
    case LiIdentity::Inversion2: {
      if (pt.x.sign() <= 0) throw DomainError("inversion requires x > 0");
      Real xe = real_at(pt.x, wp);
      Approx a = li_extended(2, -xe, ctx);
      Approx b = li_extended(2, -(one / xe), ctx);
      Real logx = fn::log(xe);
      return a + b + zeta_int(2, ctx) + Approx::exact(logx * logx / 2L);
    }
    case LiIdentity::Inversion3: {
      if (pt.x.sign() <= 0) throw DomainError("inversion requires x > 0");
      Real xe = real_at(pt.x, wp);
      Approx a = li_extended(3, -xe, ctx);
      Approx b = li_extended(3, -(one / xe), ctx);
      Real logx = fn::log(xe);
      Approx li2m1 = -zeta_alternating_int(2, ctx);  // Li_2(-1)
      Approx rhs =
          Approx::exact(-(logx * logx * logx) / 6L) + Approx::exact(logx * 2L) * li2m1;
      return a - b - rhs;
    }
    case LiIdentity::InversionN: {
      long n = pt.s;
      if (n < 2) throw DomainError("inversion-n requires n >= 2");
      if (pt.x.sign() <= 0) throw DomainError("inversion requires x > 0");
      Real xe = real_at(pt.x, wp);
      Approx a = li_extended(n, -xe, ctx);
      Approx b = li_extended(n, -(one / xe), ctx);
      if (n % 2 == 1) b = -b;
      Real logx = fn::log(xe);
      Rational nfact(1);
      for (long i = 2; i <= n; ++i) nfact *= Rational(i);
      Approx rhs = Approx::exact(-fn::pow_si(logx, n) / nfact.to_real(wp));
      for (long k = 1; 2 * k <= n; ++k) {
        Approx li2k = -zeta_alternating_int(2 * k, ctx);
        Rational mf(1);
        for (long i = 2; i <= n - 2 * k; ++i) mf *= Rational(i);
        rhs = rhs + Approx::exact(fn::pow_si(logx, n - 2 * k) / mf.to_real(wp) * 2L) * li2k;
      }
      return a + b - rhs;
    }
    case LiIdentity::FourierCos: {
      Approx lhs = fourier_partial(true, pt.x, pt.fourier_terms, ctx);
      Real te = real_at(pt.x, wp);
      Approx rhs =
          Approx::exact(te * te / 4L) - zeta_int(2, ctx) / Approx::exact(Real(2L, wp));
      return lhs - rhs;
    }
    case LiIdentity::FourierSin: {
      Approx lhs = fourier_partial(false, pt.x, pt.fourier_terms, ctx);
      Real te = real_at(pt.x, wp);
      Approx rhs = Approx::exact(te * te * te / 12L) - zeta_int(2, ctx) * Approx::exact(te / 2L);
      return lhs - rhs;
    }
  }
  throw UsageError("unknown identity");
}

WittenResult witten_W(long r, long s, long t, const PrecisionContext& ctx) {
  if (r < 1 || s < 1 || t < 1 || r + s + t < 4)
    throw DomainError("witten_W requires r,s,t >= 1 and r+s+t >= 4");
  const mpfr_prec_t wp = ctx.working_bits();
  WittenResult out;

  // ((-1)^{t-1}/Gamma(t)) Int_0^1 Li_r(x) Li_s(x) log^{t-1}x / x dx.
  // Li inside an integrand must out-resolve the quadrature's own threshold.
  PrecisionContext inner_ctx = ctx;
  inner_ctx.target_digits += 10;
  IntegrandSpec spec;
  spec.domain = QuadDomain::UnitInterval;
  spec.evaluate = [r, s, t, &inner_ctx](const Real& x, const Real& d0, const Real& d1) -> Real {
    const mpfr_prec_t p = x.prec();
    Approx lr = li_c(r, x, d1, inner_ctx);
    Approx ls = (s == r) ? lr : li_c(s, x, d1, inner_ctx);
    Real v = lr.value * ls.value / d0;
    if (t > 1) {
      Real logx = (d1 < Real(0.5, p)) ? fn::log1p(-d1) : fn::log(d0);
      v *= fn::pow_si(logx, t - 1);
    }
    return v;
  };
  QuadResult q = integrate(spec, ctx);
  out.nodes = q.nodes;
  Rational tfact(1);
  for (long i = 2; i <= t - 1; ++i) tfact *= Rational(i);
  Real pref = Real(1L, wp) / tfact.to_real(wp);
  if (t % 2 == 0) pref = -pref;  // (-1)^{t-1}
  out.integral_route = q.approx * Approx::exact(pref);

  // Truncated double sum with a coarse rigorous bound.
  const long M = 1400;
  Real acc(wp);
  for (long n = 1; n <= M; ++n) {
    Real inner(wp);
    for (long m = 1; m <= M; ++m)
      inner += fn::pow_si(Real(m, wp), -s) * fn::pow_si(Real(n + m, wp), -t);
    acc += inner * fn::pow_si(Real(n, wp), -r);
  }
  double dM = static_cast<double>(M);
  double zs_d = (s >= 2) ? 1.7 : std::log(dM) + 1.0;
  double zr_d = (r >= 2) ? 1.7 : std::log(dM) + 1.0;
  double b1 = zs_d * std::pow(dM, 1.0 - static_cast<double>(r + t)) / (r + t - 1);
  double b2 = zr_d * std::pow(dM, 1.0 - static_cast<double>(s + t)) / (s + t - 1);
  Real bound((b1 + b2) * 2.0, kBoundPrec);
  out.double_sum_route = Approx(acc, bound + Approx::ulp_slop(acc) * M);
  return out;
}

Approx li_moment(long p, long n, long q, const PrecisionContext& ctx) {
  if (p < 2 || n < 1 || q < 0 || q > 2) throw DomainError("li_moment: bad parameters");
  const mpfr_prec_t wp = ctx.working_bits();
  Real np(n, wp);

  if (q == 0) {
    Approx acc = Approx::exact(Real(0L, wp));
    for (long k = 0; k <= p - 2; ++k) {
      Approx term = zeta_int(p - k, ctx) * Approx::exact(fn::pow_si(np, -(k + 1)));
      acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    Approx h = Approx::exact(harmonic(static_cast<unsigned long>(n), 1).to_real(wp) *
                             fn::pow_si(np, -p));
    return (p % 2 == 0) ? acc - h : acc + h;
  }

  if (p != 2) throw DomainError("li_moment log weights are tabulated for p = 2 only");
  Real h1 = harmonic(static_cast<unsigned long>(n), 1).to_real(wp);
  Real h2 = harmonic(static_cast<unsigned long>(n), 2).to_real(wp);
  Approx z2 = zeta_int(2, ctx);
  if (q == 1) {
    Approx acc = z2 * Approx::exact(-(fn::pow_si(np, -2) * 2L));
    acc = acc + Approx::exact(h2 * fn::pow_si(np, -2));
    acc = acc + Approx::exact(h1 * fn::pow_si(np, -3) * 2L);
    return acc;
  }
  Real h3 = harmonic(static_cast<unsigned long>(n), 3).to_real(wp);
  Approx acc = zeta_int(3, ctx) * Approx::exact(fn::pow_si(np, -2) * 2L);
  acc = acc - Approx::exact(h3 * fn::pow_si(np, -2) * 2L);
  acc = acc + z2 * Approx::exact(fn::pow_si(np, -3) * 6L);
  acc = acc - Approx::exact(h2 * fn::pow_si(np, -3) * 4L);
  acc = acc - Approx::exact(h1 * fn::pow_si(np, -4) * 6L);
  return acc;
}

Approx li_moment_quadrature(long p, long n, long q, const PrecisionContext& ctx, long* nodes) {
  if (p < 2 || n < 1 || q < 0 || q > 2) throw DomainError("li_moment_quadrature: bad parameters");
  PrecisionContext inner_ctx = ctx;
  inner_ctx.target_digits += 10;
  IntegrandSpec spec;
  spec.domain = QuadDomain::UnitInterval;
  spec.left = (q > 0) ? EndpointHint::LogPowerSingular : EndpointHint::Smooth;
  spec.log_power = static_cast<int>(q);
  spec.evaluate = [p, n, q, &inner_ctx](const Real& x, const Real& d0, const Real& d1) -> Real {
    const mpfr_prec_t pr = x.prec();
    Approx lp = li_c(p, x, d1, inner_ctx);
    Real v = lp.value;
    if (n > 1) v *= fn::pow_si(x, n - 1);
    if (q > 0) {
      Real logx = (d1 < Real(0.5, pr)) ? fn::log1p(-d1) : fn::log(d0);
      v *= fn::pow_si(logx, q);
    }
    return v;
  };
  QuadResult qq = integrate(spec, ctx);
  if (nodes) *nodes += qq.nodes;
  return qq.approx;
}

}  // namespace zk
