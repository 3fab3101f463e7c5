#include "zetakit/zeta_suite.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "zetakit/elementary.hpp"
#include "zetakit/quadrature.hpp"
#include "zetakit/special_functions.hpp"

namespace zk {
namespace {

std::mutex g_cache_mutex;
std::map<std::pair<long, long>, Approx> g_zeta_cache;    // (s, working_digits)
std::map<long, Approx> g_gamma_cache;                    // working_digits

mpfr_prec_t guarded_table_bits(const PrecisionContext& ctx, long depth) {
  long extra = static_cast<long>(std::ceil(0.302 * static_cast<double>(depth))) + 6;
  return PrecisionContext::bits_for_digits(ctx.working_digits() + extra);
}

long default_depth(const PrecisionContext& ctx) {
  return static_cast<long>(3.5 * static_cast<double>(ctx.target_digits + 6)) + 64;
}

// Sums sum_n 2^-(n+1) * delta(n) where delta comes from a fresh difference
// table built by make_table(depth). Retries with a deeper, higher-precision
// table if the first depth was not enough.
Approx sondow_weighted_sum(
    const std::function<std::unique_ptr<DifferenceTable>(long depth)>& make_table,
    const PrecisionContext& ctx, long* terms_out = nullptr) {
  long depth = default_depth(ctx);
  for (int attempt = 0; attempt < 4; ++attempt) {
    auto table = make_table(depth);
    bool overflow = false;
    auto term = [&](long n) -> Real {
      if (n >= depth) {
        overflow = true;
        return Real(0L, table->prec());
      }
      Real t(table->prec());
      mpfr_div_2si(t.raw(), table->delta(n).raw(), n + 1, MPFR_RNDN);
      return t;
    };
    TailPolicy policy = TailPolicy::geometric(0.55);
    policy.min_terms = 8;
    policy.term_cap = depth;
    SeriesResult res = sum_with_tail(term, policy, ctx);
    if (!overflow && res.terms_used < depth) {
      if (terms_out) *terms_out = res.terms_used;
      Approx a = res.approx;
      a.error_bound += table->cancellation_bound(res.terms_used);
      return a;
    }
    depth *= 2;
  }
  throw ConvergenceError("binomial series did not converge at maximum table depth",
                         Approx(), 0);
}

Real real_at(const Real& x, mpfr_prec_t p) {
  Real r(p);
  mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

bool is_integer_valued(const Real& x) { return mpfr_integer_p(x.raw()) != 0; }

}  // namespace

static Approx zeta_alternating_table(const Real& s, const PrecisionContext& ctx) {
  auto make_table = [&](long depth) {
    mpfr_prec_t tp = guarded_table_bits(ctx, depth);
    Real se = real_at(s, tp);
    return std::make_unique<DifferenceTable>(
        [se](long k, mpfr_prec_t p) {
          Real base(static_cast<long>(k + 1), p);
          Real e(p);
          mpfr_neg(e.raw(), se.raw(), MPFR_RNDN);
          return fn::pow(base, e);
        },
        tp);
  };
  return sondow_weighted_sum(make_table, ctx);
}

Approx zeta_alternating_int(long s, const PrecisionContext& ctx) {
  // Exact inner rationals up to ~120 digits; past that the lcm denominators
  // dominate the runtime and the guarded difference table wins.
  if (ctx.target_digits > 120) return zeta_alternating_table(Real(s, ctx.working_bits()), ctx);
  const mpfr_prec_t wp = ctx.working_bits();
  auto term = [&](long n) -> Real {
    ForwardDifference fd =
        forward_difference(n, DifferenceKernel::power(s, Rational(1)), ctx);
    Real t = fd.rational.to_real(wp);
    mpfr_div_2si(t.raw(), t.raw(), n + 1, MPFR_RNDN);
    return t;
  };
  TailPolicy policy = TailPolicy::geometric(0.55);
  policy.min_terms = 8;
  SeriesResult res = sum_with_tail(term, policy, ctx);
  return res.approx;
}

Approx zeta_alternating(const Real& s, const PrecisionContext& ctx) {
  if (is_integer_valued(s)) return zeta_alternating_int(s.to_long(), ctx);
  return zeta_alternating_table(s, ctx);
}

Approx zeta(const Real& s, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working_bits();
  if (is_integer_valued(s)) return zeta_int(s.to_long(), ctx);
  Approx za = zeta_alternating(s, ctx);
  // 1 - 2^{1-s} = -expm1((1-s) log 2), stable through s -> 1.
  Real den = -fn::expm1((Real(1L, wp) - real_at(s, wp)) * fn::log2c(wp));
  if (den.is_zero()) throw DomainError("zeta has a pole at s = 1");
  return za / Approx(den, Approx::ulp_slop(den) * 2L);
}

Approx zeta_int(long s, const PrecisionContext& ctx) {
  if (s == 1) throw DomainError("zeta has a pole at s = 1");
  const long wd = ctx.working_digits();
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_zeta_cache.find({s, wd});
    if (it != g_zeta_cache.end()) return it->second;
  }

  const mpfr_prec_t wp = ctx.working_bits();
  Approx out;
  if (s >= 48) {
    // Direct summation: k^-s drops below threshold within a handful of terms.
    Real sum(wp);
    long k = 1;
    Real tail(kBoundPrec);
    for (;; ++k) {
      Real t = fn::pow_si(Real(k, wp), -s);
      sum += t;
      // tail <= integral_k^inf x^-s dx = k^(1-s)/(s-1)
      mpfr_set(tail.raw(), t.raw(), MPFR_RNDU);
      Real kb(static_cast<double>(k) / static_cast<double>(s - 1), kBoundPrec);
      tail *= kb;
      if (tail <= bound_from_exp10(ctx.series_threshold_exponent())) break;
      if (k > 4096) break;
    }
    out = Approx(sum, tail + Approx::ulp_slop(sum) * k);
  } else {
    Approx za = zeta_alternating_int(s, ctx);
    Rational den = Rational(1) - rational_pow(Rational(2), 1 - s);
    out = za / den.to_approx(wp);
  }

  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_zeta_cache.insert({{s, wd}, out});
  return out;
}

Approx hurwitz_zeta(const Real& p, const Real& u, const PrecisionContext& ctx, bool* heuristic,
                    long* terms) {
  if (u.sign() <= 0) throw DomainError("hurwitz_zeta requires u > 0");
  const mpfr_prec_t wp = ctx.working_bits();
  Real pm1 = real_at(p, wp) - 1L;
  if (pm1.is_zero()) throw DomainError("hurwitz_zeta has a pole at p = 1");

  const long cap = std::min<long>(1200, ctx.max_terms);
  mpfr_prec_t tp = guarded_table_bits(ctx, cap);
  Real ue = real_at(u, tp);
  Real se = real_at(pm1, tp);
  DifferenceTable table(
      [ue, se](long k, mpfr_prec_t prec) {
        Real base(prec);
        mpfr_add_si(base.raw(), ue.raw(), k, MPFR_RNDN);
        Real e(prec);
        mpfr_neg(e.raw(), se.raw(), MPFR_RNDN);
        return fn::pow(base, e);
      },
      tp);

  auto term = [&](long n) -> Real { return table.delta(n) / (n + 1); };
  TailPolicy policy = TailPolicy::positive_decreasing(nullptr, cap);
  policy.min_terms = 32;
  SeriesResult res = sum_with_tail(term, policy, ctx);

  Approx total = res.approx;
  total.error_bound += table.cancellation_bound(res.terms_used);
  Approx scale(real_at(pm1, wp), Approx::ulp_slop(pm1));
  Approx out = total / scale;
  if (heuristic) *heuristic = res.heuristic_bound;
  if (terms) *terms = res.terms_used;
  return out;
}

Approx lerch_phi_alt_exact(long s, const Rational& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0) throw DomainError("lerch_phi_alt requires x > 0");
  const mpfr_prec_t wp = ctx.working_bits();
  auto term = [&](long n) -> Real {
    ForwardDifference fd = forward_difference(n, DifferenceKernel::power(s, x), ctx);
    Real t = fd.rational.to_real(wp);
    mpfr_div_2si(t.raw(), t.raw(), n + 1, MPFR_RNDN);
    return t;
  };
  TailPolicy policy = TailPolicy::geometric(0.55);
  policy.min_terms = 8;
  return sum_with_tail(term, policy, ctx).approx;
}

Approx lerch_phi_alt(const Real& s, const Real& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0) throw DomainError("lerch_phi_alt requires x > 0");
  auto make_table = [&](long depth) {
    mpfr_prec_t tp = guarded_table_bits(ctx, depth);
    Real xe = real_at(x, tp);
    Real se = real_at(s, tp);
    return std::make_unique<DifferenceTable>(
        [xe, se](long k, mpfr_prec_t p) {
          Real base(p);
          mpfr_add_si(base.raw(), xe.raw(), k, MPFR_RNDN);
          if (base.sign() <= 0) throw DomainError("lerch kernel needs k + x > 0");
          Real e(p);
          mpfr_neg(e.raw(), se.raw(), MPFR_RNDN);
          return fn::pow(base, e);
        },
        tp);
  };
  return sondow_weighted_sum(make_table, ctx);
}

Approx lerch_phi_alt_integral(const Real& s, const Real& x, const PrecisionContext& ctx,
                              long* nodes) {
  if (s.sign() <= 0) throw DomainError("lerch integral route requires s > 0");
  if (x.sign() <= 0) throw DomainError("lerch integral route requires x > 0");
  const mpfr_prec_t wp = ctx.working_bits() + 24;
  Real se = real_at(s, wp);
  Real xm1 = real_at(x, wp) - 1L;
  Real sm1 = se - 1L;

  IntegrandSpec spec;
  spec.domain = QuadDomain::HalfLine;
  spec.left = (sm1.sign() < 0) ? EndpointHint::LogPowerSingular : EndpointHint::Smooth;
  spec.evaluate = [sm1, xm1](const Real& y, const Real& d0, const Real&) -> Real {
    Real num = sm1.is_zero() ? Real(1L, y.prec()) : fn::pow(d0, sm1);
    if (!xm1.is_zero()) num *= fn::exp(-(xm1 * y));
    Real den = fn::exp(y) + 1L;
    return num / den;
  };
  QuadResult q = integrate(spec, ctx);
  if (nodes) *nodes += q.nodes;

  // Divide by Gamma(s).
  Approx lg = log_gamma(se, ctx);
  Real g = fn::exp(lg.value);
  Approx gamma_s(g, abs(g) * lg.error_bound * 2L + Approx::ulp_slop(g));
  return q.approx / gamma_s;
}

Approx zeta_a_prime(const Real& s, const PrecisionContext& ctx) {
  auto make_table = [&](long depth) {
    mpfr_prec_t tp = guarded_table_bits(ctx, depth);
    Real se = real_at(s, tp);
    return std::make_unique<DifferenceTable>(
        [se](long k, mpfr_prec_t p) {
          if (k == 0) return Real(0L, p);  // log 1 = 0
          Real base(k + 1, p);
          Real e(p);
          mpfr_neg(e.raw(), se.raw(), MPFR_RNDN);
          return fn::pow(base, e) * fn::log(base);
        },
        tp);
  };
  return -sondow_weighted_sum(make_table, ctx);
}

Approx zeta_a_prime_int(long s, const PrecisionContext& ctx) {
  return zeta_a_prime(Real(s, ctx.working_bits()), ctx);
}

GlaisherConstants glaisher_constants(const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working_bits();
  GlaisherConstants g;

  Approx za1 = zeta_a_prime_int(-1, ctx);
  Approx log2a = elementary_log2(ctx);
  // zeta_a'(-1) = -3 zeta'(-1) - (1/3) log 2
  g.zeta_prime_m1 = -(za1 + Approx(log2a.value / 3L, log2a.error_bound)) / Approx::exact(Real(3L, wp));

  Approx za2 = zeta_a_prime_int(-2, ctx);
  // zeta_a'(-2) = -7 zeta'(-2), since zeta(-2) = 0
  g.zeta_prime_m2 = -za2 / Approx::exact(Real(7L, wp));

  g.log_A = Approx(Rational(1, 12).to_real(wp), Real(0L, kBoundPrec)) - g.zeta_prime_m1;
  g.log_B = -g.zeta_prime_m2;

  // Claimed closed form: log B = zeta(3) / (4 pi^2).
  Approx z3 = zeta_int(3, ctx);
  Approx pi = elementary_pi(ctx);
  Approx ref = z3 / (pi * pi * Approx::exact(Real(4L, wp)));
  Real diff = abs(g.log_B.value - ref.value);
  if (diff > (g.log_B.error_bound + ref.error_bound) * 8L)
    throw DomainError("glaisher_constants: log B failed its zeta(3)/(4 pi^2) cross-check");
  return g;
}

Approx euler_gamma_cached(const PrecisionContext& ctx) {
  const long wd = ctx.working_digits();
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_gamma_cache.find(wd);
    if (it != g_gamma_cache.end()) return it->second;
  }
  Approx g = euler_gamma(GammaRoute::Integral, ctx).approx;
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_gamma_cache.insert({wd, g});
  return g;
}

static GammaResult euler_gamma_integral(const PrecisionContext& ctx) {
  IntegrandSpec spec;
  spec.domain = QuadDomain::UnitInterval;
  spec.left = EndpointHint::LogSingular;
  spec.right = EndpointHint::Smooth;
  spec.evaluate = [](const Real& y, const Real& d0, const Real& d1) -> Real {
    Real logy = (d1 < Real(0.5, y.prec())) ? fn::log1p(-d1) : fn::log(d0);
    return Real(1L, y.prec()) / logy + Real(1L, y.prec()) / d1;
  };
  QuadResult q = integrate(spec, ctx);
  return {q.approx, false, 0, q.nodes};
}

static Real sondow_partial_sum(long N, const PrecisionContext& reduced, long* nodes) {
  // S_N = sum_{n=1..N} 1/(n+1) sum_k C(n,k)(-1)^{k+1} log(k+1)
  //     = -Int_0^1 K_N(1-t)/log t dt,  K_N(z) = sum_{n=1..N} z^n/(n+1).
  const mpfr_prec_t wp = reduced.working_bits() + 16;
  auto coeffs = std::make_shared<std::vector<Real>>();
  coeffs->reserve(static_cast<size_t>(N));
  for (long n = 1; n <= N; ++n) coeffs->push_back(Real(1L, wp) / (n + 1));

  IntegrandSpec spec;
  spec.domain = QuadDomain::UnitInterval;
  spec.left = EndpointHint::LogSingular;
  spec.right = EndpointHint::Smooth;
  spec.evaluate = [coeffs, N](const Real& t, const Real& d0, const Real& d1) -> Real {
    const mpfr_prec_t p = t.prec();
    Real z = d1;
    Real logt = (d1 < Real(0.5, p)) ? fn::log1p(-d1) : fn::log(d0);
    // Horner over K_N(z) = z*(c_1 + z*(c_2 + ...))
    Real k(0L, p);
    for (long n = N; n >= 1; --n) {
      k *= z;
      k += (*coeffs)[static_cast<size_t>(n - 1)];
    }
    k *= z;
    return -k / logt;
  };
  QuadResult q = integrate(spec, reduced);
  if (nodes) *nodes += q.nodes;
  return q.approx.value;
}

static GammaResult euler_gamma_sondow(const PrecisionContext& ctx, long N) {
  if (N < 8) throw UsageError("sondow series needs at least 8 terms");
  // The partial sums close in on gamma like 1/(N log N); evaluating them at
  // full precision would be wasted work, so this route runs at a reduced
  // budget and reports a widened, explicitly heuristic bound.
  PrecisionContext reduced = ctx;
  reduced.target_digits = std::min<long>(ctx.target_digits, 24);
  reduced.guard_digits = std::min<long>(ctx.guard_digits, 12);
  GammaResult out;
  Real s_full = sondow_partial_sum(N, reduced, &out.nodes);
  Real s_half = sondow_partial_sum(N / 2, reduced, &out.nodes);
  Real b(kBoundPrec);
  mpfr_sub(b.raw(), s_full.raw(), s_half.raw(), MPFR_RNDA);
  mpfr_abs(b.raw(), b.raw(), MPFR_RNDU);
  out.approx = Approx(s_full, b * 4L + bound_from_exp10(-(double)reduced.target_digits));
  out.heuristic = true;
  out.terms = N;
  return out;
}

static GammaResult euler_gamma_zeta_limit(const PrecisionContext& ctx) {
  PrecisionContext lifted = ctx;
  lifted.target_digits += 14;
  const mpfr_prec_t wp = lifted.working_bits();

  const int J = 4;
  std::vector<Real> eps, f;
  Real bound_in(0L, kBoundPrec);
  for (int j = 3; j < 3 + J; ++j) {
    Real e = bound_from_exp10(-(double)j);
    Real ee(wp);
    mpfr_set(ee.raw(), e.raw(), MPFR_RNDN);
    Approx z = zeta(Real(1L, wp) + ee, lifted);
    f.push_back(z.value - Real(1L, wp) / ee);
    eps.push_back(ee);
    bound_in += z.error_bound;
  }

  // Lagrange extrapolation to eps = 0, degrees 2 and 3; their gap is the
  // heuristic error estimate.
  auto extrapolate = [&](int pts) -> Real {
    Real acc(wp);
    for (int j = 0; j < pts; ++j) {
      Real w(1L, wp);
      for (int i = 0; i < pts; ++i) {
        if (i == j) continue;
        w *= (-eps[static_cast<size_t>(i)]) / (eps[static_cast<size_t>(j)] - eps[static_cast<size_t>(i)]);
      }
      acc += w * f[static_cast<size_t>(j)];
    }
    return acc;
  };
  Real v3 = extrapolate(4);
  Real v2 = extrapolate(3);
  Real gap(kBoundPrec);
  mpfr_sub(gap.raw(), v3.raw(), v2.raw(), MPFR_RNDA);
  mpfr_abs(gap.raw(), gap.raw(), MPFR_RNDU);

  GammaResult out;
  out.approx = Approx(v3, gap * 8L + bound_in * 4L);
  out.heuristic = true;
  return out;
}

GammaResult euler_gamma(GammaRoute route, const PrecisionContext& ctx, long sondow_terms) {
  switch (route) {
    case GammaRoute::Integral:
      return euler_gamma_integral(ctx);
    case GammaRoute::SondowSeries:
      return euler_gamma_sondow(ctx, sondow_terms);
    case GammaRoute::ZetaLimit:
      return euler_gamma_zeta_limit(ctx);
  }
  throw UsageError("unknown gamma route");
}

Approx euler_sum_linear(long q, const PrecisionContext& ctx) {
  if (q < 2) throw DomainError("euler_sum_linear requires q >= 2");
  const mpfr_prec_t wp = ctx.working_bits();
  Approx acc = zeta_int(q + 1, ctx) * Approx::exact(Rational(q + 2, 2).to_real(wp));
  for (long k = 1; k <= q - 2; ++k) {
    acc = acc - zeta_int(k + 1, ctx) * zeta_int(q - k, ctx) / Approx::exact(Real(2L, wp));
  }
  return acc;
}

Approx zeta_power_tail(const Real& p, long N, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working_bits() + 16;
  Real pe = real_at(p, wp);
  if (!(pe > Real(1L, wp))) throw DomainError("zeta_power_tail requires p > 1");
  Real M(N + 1, wp);
  Real logM = fn::log(M);
  Real Minv = Real(1L, wp) / M;
  Real Minv2 = Minv * Minv;

  Real pm1 = pe - 1L;
  Real acc = fn::exp(-pm1 * logM) / pm1;       // M^{1-p}/(p-1)
  Real Mp = fn::exp(-pe * logM);               // M^-p
  acc += Mp / 2L;

  Real poch = pe;                              // (p)_1
  Real fact(2L, wp);                           // 2!
  Real power = Mp * Minv;                      // M^-(p+1)
  Real prev(wp);
  mpfr_set_inf(prev.raw(), 1);
  Real rem(0L, kBoundPrec);
  const Real stop = bound_from_exp10(-(double)ctx.working_digits() - 6.0) * (abs(acc) + Real(1L, kBoundPrec));

  for (unsigned long k = 1; k <= 64; ++k) {
    Real term = bernoulli_b2n(k).to_real(wp) / fact * poch * power;
    Real at = abs(term);
    if (at > prev) {
      rem = prev * 4L;
      break;
    }
    acc += term;
    if (at <= stop) {
      rem = at * 4L;
      break;
    }
    prev = at;
    poch *= (pe + (2 * k - 1)) * (pe + (2 * k));
    fact *= (2 * k + 1) * (2 * k + 2);
    power *= Minv2;
  }
  return Approx(acc, rem + Approx::ulp_slop(acc) * 16);
}

Approx log_moment_tail(long j, const Real& p, long N, const PrecisionContext& ctx) {
  if (j == 0) return zeta_power_tail(p, N, ctx);
  if (j < 0 || j > 2) throw DomainError("log_moment_tail supports j in 0..2");
  const mpfr_prec_t wp = ctx.working_bits() + 16;
  Real pe = real_at(p, wp);
  if (!(pe > Real(1L, wp))) throw DomainError("log_moment_tail requires p > 1");
  Real M(N + 1, wp);
  Real logM = fn::log(M);
  Real log2M = logM * logM;
  Real Minv = Real(1L, wp) / M;
  Real pm1 = pe - 1L;
  Real inv_pm1 = Real(1L, wp) / pm1;

  // Integral part.
  Real M1mp = fn::exp(-pm1 * logM);
  Real acc(wp);
  if (j == 1) {
    acc = M1mp * (logM * inv_pm1 + inv_pm1 * inv_pm1);
  } else {
    acc = M1mp * (log2M * inv_pm1 + logM * inv_pm1 * inv_pm1 * 2L +
                  inv_pm1 * inv_pm1 * inv_pm1 * 2L);
  }

  // f(M)/2 with f = log^j x * x^-p.
  Real Mp = fn::exp(-pe * logM);
  Real fM = Mp * (j == 1 ? logM : log2M);
  acc += fM / 2L;

  // Derivatives f^(m)(x) = x^-(p+m) (a log^2 x + b log x + c), advanced one
  // order at a time; EM consumes the odd orders.
  Real a(j == 2 ? 1L : 0L, wp), b(j == 1 ? 1L : 0L, wp), c(0L, wp);
  Real q = pe;  // current p+m with m = 0
  Real xpow = Mp * Minv;
  Real prev(wp);
  mpfr_set_inf(prev.raw(), 1);
  Real rem(0L, kBoundPrec);
  Real fact(2L, wp);
  const Real stop = bound_from_exp10(-(double)ctx.working_digits() - 6.0) * (abs(acc) + Real(1L, kBoundPrec));

  unsigned long k = 0;
  for (long m = 1; m <= 129; ++m) {
    // derivative step: (a,b,c) -> (-q a, 2a - q b, b - q c), then q += 1
    Real na = -(q * a);
    Real nb = a * 2L - q * b;
    Real nc = b - q * c;
    a = na;
    b = nb;
    c = nc;
    q += 1L;
    if (m % 2 == 1) {
      ++k;
      Real fm = xpow * (a * log2M + b * logM + c);
      Real term = -(bernoulli_b2n(k).to_real(wp) / fact * fm);
      Real at = abs(term);
      if (at > prev) {
        rem = prev * 8L;
        break;
      }
      acc += term;
      if (at <= stop) {
        rem = at * 8L;
        break;
      }
      prev = at;
      fact *= (2 * k + 1) * (2 * k + 2);
    }
    xpow *= Minv;
  }
  return Approx(acc, rem + Approx::ulp_slop(acc) * 16);
}

namespace {

constexpr long kEulerSumHead = 360;
constexpr unsigned long kEulerSumBernTerms = 14;

// sum_{n>N} H^{(r)}_n / n^q assembled from the H asymptotics.
Approx euler_sum_tail(long r, long q, long N, const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working_bits() + 16;
  Real qr(q, wp);
  if (r == 1) {
    Approx gamma = euler_gamma_cached(ctx);
    Approx acc = log_moment_tail(1, qr, N, ctx);
    Approx zq = zeta_power_tail(qr, N, ctx);
    acc = acc + Approx(gamma.value, gamma.error_bound) * zq;
    acc = acc + zeta_power_tail(Real(q + 1, wp), N, ctx) / Approx::exact(Real(2L, wp));
    for (unsigned long k = 1; k <= kEulerSumBernTerms; ++k) {
      Rational coef = bernoulli_b2n(k) / Rational(2 * static_cast<long>(k));
      acc = acc - Approx::exact(coef.to_real(wp)) *
                      zeta_power_tail(Real(q + 2 * static_cast<long>(k), wp), N, ctx);
    }
    Rational rc = bernoulli_b2n(kEulerSumBernTerms + 1) /
                  Rational(2 * static_cast<long>(kEulerSumBernTerms) + 2);
    Approx slack = Approx::exact(abs(rc.to_real(wp)) * 4L) *
                   zeta_power_tail(Real(q + 2 * (long)kEulerSumBernTerms + 2, wp), N, ctx);
    acc.error_bound += abs(slack.value) + slack.error_bound;
    return acc;
  }

  // r >= 2: H^{(r)}_n = zeta(r) - n^{1-r}/(r-1) + n^-r/2 - sum_k c_k n^-(r+2k-1) - R
  Approx zr = zeta_int(r, ctx);
  Approx acc = zr * zeta_power_tail(qr, N, ctx);
  acc = acc - zeta_power_tail(Real(q + r - 1, wp), N, ctx) / Approx::exact(Real(r - 1, wp));
  acc = acc + zeta_power_tail(Real(q + r, wp), N, ctx) / Approx::exact(Real(2L, wp));
  for (unsigned long k = 1; k <= kEulerSumBernTerms; ++k) {
    // c_k = B_2k (r)_{2k-1} / (2k)!
    Rational pr(1);
    for (long i = 0; i < 2 * static_cast<long>(k) - 1; ++i) pr *= Rational(r + i);
    Rational fact(1);
    for (long i = 2; i <= 2 * static_cast<long>(k); ++i) fact *= Rational(i);
    Rational ck = bernoulli_b2n(k) * pr / fact;
    acc = acc - Approx::exact(ck.to_real(wp)) *
                    zeta_power_tail(Real(q + r + 2 * static_cast<long>(k) - 1, wp), N, ctx);
  }
  {
    unsigned long k = kEulerSumBernTerms + 1;
    Rational pr(1);
    for (long i = 0; i < 2 * static_cast<long>(k) - 1; ++i) pr *= Rational(r + i);
    Rational fact(1);
    for (long i = 2; i <= 2 * static_cast<long>(k); ++i) fact *= Rational(i);
    Rational ck = bernoulli_b2n(k) * pr / fact;
    Approx slack = Approx::exact(abs(ck.to_real(wp)) * 4L) *
                   zeta_power_tail(Real(q + r + 2 * (long)k - 1, wp), N, ctx);
    acc.error_bound += abs(slack.value) + slack.error_bound;
  }
  return acc;
}

}  // namespace

Approx euler_sum_direct(long r, long q, const PrecisionContext& ctx) {
  if (r < 1 || q < 2) throw DomainError("euler_sum_direct requires r >= 1, q >= 2");
  const mpfr_prec_t wp = ctx.working_bits();
  const long N = kEulerSumHead;

  Real head(wp);
  Rational h(0);
  for (long n = 1; n <= N; ++n) {
    BigInt nr;
    mpz_ui_pow_ui(nr.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    h += Rational(BigInt(1), nr);
    BigInt nq;
    mpz_ui_pow_ui(nq.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(q));
    head += (h / Rational(nq, BigInt(1))).to_real(wp);
  }
  Approx head_a(head, Approx::ulp_slop(head) * (N + 4));
  return head_a + euler_sum_tail(r, q, N, ctx);
}

Approx euler_sum_power_weighted(long r, long q, const PrecisionContext& ctx) {
  if (r < 1 || q < 0) throw DomainError("euler_sum_power_weighted: bad parameters");
  const mpfr_prec_t wp = ctx.working_bits();
  auto h = std::make_shared<Real>(0L, wp);
  auto term = [h, r, q, wp](long idx) -> Real {
    long n = idx + 1;
    *h += fn::pow_si(Real(n, wp), -r);
    return *h * fn::pow_si(Real(n, wp), -q) / fn::pow_si(Real(2L, wp), n);
  };
  TailPolicy policy = TailPolicy::geometric(0.6);
  policy.min_terms = 12;
  return sum_with_tail(term, policy, ctx).approx;
}

Approx euler_sum_squares_direct(const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working_bits() + 16;
  const long N = kEulerSumHead;
  const long q = 2;

  Real head(wp);
  Rational h1(0), h2(0);
  for (long n = 1; n <= N; ++n) {
    h1 += Rational(1, n);
    h2 += Rational(BigInt(1), BigInt(n) * BigInt(n));
    Rational t = (h1 * h1 + h2) / Rational(BigInt(n) * BigInt(n), BigInt(1));
    head += t.to_real(wp);
  }
  Approx acc(head, Approx::ulp_slop(head) * (N + 4));

  // H^{(2)} part of the tail.
  acc = acc + euler_sum_tail(2, q, N, ctx);

  // H^2 part: square the H_n asymptotic lambda(n) symbolically over the basis
  // log^j n * n^-m and push through the log-moment tails.
  const unsigned long K = 10;
  Approx gamma = euler_gamma_cached(ctx);
  struct Term {
    int j;
    long m;
    Real coeff;
  };
  std::vector<Term> lambda;
  lambda.push_back({1, 0, Real(1L, wp)});
  lambda.push_back({0, 0, gamma.value});
  lambda.push_back({0, 1, Real(0.5, wp)});
  for (unsigned long k = 1; k <= K; ++k)
    lambda.push_back({0, 2 * static_cast<long>(k),
                      (-(bernoulli_b2n(k) / Rational(2 * static_cast<long>(k)))).to_real(wp)});

  std::map<std::pair<int, long>, Real> sq;
  for (const Term& u : lambda)
    for (const Term& v : lambda) {
      auto key = std::make_pair(u.j + v.j, u.m + v.m);
      auto it = sq.find(key);
      if (it == sq.end())
        sq.emplace(key, u.coeff * v.coeff);
      else
        it->second += u.coeff * v.coeff;
    }
  for (const auto& [key, coeff] : sq) {
    Approx tail = log_moment_tail(key.first, Real(q + key.second, wp), N, ctx);
    acc = acc + Approx(coeff, Real(0L, kBoundPrec)) * tail;
  }

  // Remainder rho of the lambda truncation: |rho| <= rc * n^-(2K+2).
  Real rc = abs(bernoulli_b2n(K + 1).to_real(wp)) / (2 * static_cast<long>(K) + 2) * 4L;
  Approx cross =
      Approx::exact(rc * 2L) *
      (log_moment_tail(1, Real(q + 2 * (long)K + 2, wp), N, ctx) +
       Approx::exact(gamma.value + 2L) *
           zeta_power_tail(Real(q + 2 * (long)K + 2, wp), N, ctx));
  Approx rho2 = Approx::exact(rc * rc) * zeta_power_tail(Real(q + 4 * (long)K + 4, wp), N, ctx);
  acc.error_bound += abs(cross.value) + cross.error_bound + abs(rho2.value) + rho2.error_bound;

  // gamma's own uncertainty enters lambda^2 linearly: d/dgamma ~ 2 lambda.
  Approx dgamma = (log_moment_tail(1, Real(q, wp), N, ctx) +
                   Approx::exact(gamma.value + 2L) * zeta_power_tail(Real(q, wp), N, ctx));
  acc.error_bound += (abs(dgamma.value) + dgamma.error_bound) * gamma.error_bound * 2L;
  return acc;
}

Approx euler_sum_alternating_direct(const PrecisionContext& ctx) {
  struct State {
    long k = 0;
    Real h;
  };
  auto st = std::make_shared<State>();
  auto source = [st](long k, mpfr_prec_t prec) -> Real {
    if (st->k == 0) st->h = Real(0L, prec);
    if (k != st->k + 1) throw DomainError("alternating euler sum: out-of-order source access");
    st->h += Real(1L, prec) / k;
    st->k = k;
    return st->h / Real(k, prec) / Real(k, prec);
  };
  return euler_transform_sum(source, ctx).approx;
}

}  // namespace zk
