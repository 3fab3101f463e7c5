#include "zetakit/binomial_transforms.hpp"

#include <cmath>
#include <memory>

#include "zetakit/elementary.hpp"
#include "zetakit/quadrature.hpp"

namespace zk {
namespace {

mpfr_prec_t guarded_bits(const PrecisionContext& ctx, long n) {
  long extra_digits = static_cast<long>(std::ceil(0.302 * static_cast<double>(n))) + 4;
  return PrecisionContext::bits_for_digits(ctx.working_digits() + extra_digits);
}

Real kernel_value(const DifferenceKernel& k, long kk, mpfr_prec_t prec) {
  Real base(prec);
  if (k.shift_is_rational) {
    mpfr_set_q(base.raw(), k.shift_rat.raw().get_mpq_t(), MPFR_RNDN);
  } else {
    mpfr_set(base.raw(), k.shift_real.raw(), MPFR_RNDN);
  }
  mpfr_add_si(base.raw(), base.raw(), kk, MPFR_RNDN);
  if (base.sign() <= 0) throw DomainError("difference kernel needs k + shift > 0");

  Real v(1L, prec);
  if (k.s_is_integer) {
    if (k.s_int != 0) v = fn::pow_si(base, -k.s_int);
  } else {
    Real se(prec);
    mpfr_set(se.raw(), k.s_real.raw(), MPFR_RNDN);
    mpfr_neg(se.raw(), se.raw(), MPFR_RNDN);
    v = fn::pow(base, se);
  }
  if (k.log_power == 1) v *= fn::log(base);
  return v;
}

}  // namespace

ForwardDifference forward_difference(long n, const DifferenceKernel& kernel,
                                     const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("forward_difference: n must be nonnegative");
  if (n > ctx.max_terms) throw ResourceError("forward_difference: n exceeds max_terms");

  ForwardDifference out;
  if (kernel.exact_rational()) {
    // Exact path: C(n,k) incrementally, 1/(k+x)^s exactly.
    Rational sum(0);
    BigInt c(1);
    for (long k = 0; k <= n; ++k) {
      Rational base = kernel.shift_rat + Rational(k);
      Rational f = rational_pow(base, -kernel.s_int);
      Rational term(c * f.numerator(), f.denominator());
      if (k % 2 == 0)
        sum += term;
      else
        sum -= term;
      c *= (n - k);
      c /= (k + 1);
    }
    out.exact = true;
    out.rational = sum;
    return out;
  }

  const mpfr_prec_t wp = guarded_bits(ctx, n);
  Real sum(wp);
  Real abs_sum(wp);
  BigInt c(1);
  for (long k = 0; k <= n; ++k) {
    Real f = kernel_value(kernel, k, wp);
    Real term(wp);
    mpfr_mul_z(term.raw(), f.raw(), c.get_mpz_t(), MPFR_RNDN);
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    abs_sum += abs(term);
    c *= (n - k);
    c /= (k + 1);
  }
  // All intermediate magnitude is bounded by abs_sum; the elevated precision
  // leaves 2^-wp relative slack on it.
  Real b(kBoundPrec);
  mpfr_set(b.raw(), abs_sum.raw(), MPFR_RNDU);
  mpfr_mul_2si(b.raw(), b.raw(), -(long)wp + 4, MPFR_RNDU);
  out.approx = Approx(sum, b);
  return out;
}

Approx log_difference_via_integral(long n, const Real& a, const PrecisionContext& ctx,
                                   long* nodes) {
  if (n < 1) throw DomainError("log_difference_via_integral: n must be >= 1");
  if (a.sign() <= 0) throw DomainError("log_difference_via_integral: a must be positive");

  const mpfr_prec_t wp = ctx.working_bits() + 24;
  Real am1(wp);
  mpfr_set(am1.raw(), a.raw(), MPFR_RNDN);
  mpfr_sub_ui(am1.raw(), am1.raw(), 1, MPFR_RNDN);
  bool a_is_one = am1.is_zero();

  IntegrandSpec spec;
  spec.domain = QuadDomain::UnitInterval;
  spec.left = EndpointHint::LogSingular;
  spec.right = EndpointHint::Smooth;
  spec.evaluate = [&, n, a_is_one](const Real& t, const Real& d0, const Real& d1) -> Real {
    // t^{a-1} (1-t)^n / log t, with log t from the complement near t = 1.
    Real logt = (d1 < Real(0.5, wp)) ? fn::log1p(-d1) : fn::log(d0);
    Real num = fn::pow_si(d1, n);
    if (!a_is_one) num *= fn::pow(d0, am1);
    return num / logt;
  };

  QuadResult q = integrate(spec, ctx);
  if (nodes) *nodes += q.nodes;
  return -q.approx;
}

const Real& DifferenceTable::delta(long n) {
  if (n < 0) throw DomainError("DifferenceTable::delta: n must be nonnegative");
  while (fed_ <= n) {
    Real fresh = f_(fed_, prec_);
    if (!fresh.is_finite()) throw DomainError("difference table: kernel value not finite");
    Real af = abs(fresh);
    if (af > max_abs_) {
      mpfr_set(max_abs_.raw(), af.raw(), MPFR_RNDU);
    }
    // new[j] = old[j-1] - new[j-1]
    Real prev_old(prec_);
    for (size_t j = 0; j < diag_.size(); ++j) {
      Real cur_old = diag_[j];
      if (j == 0) {
        diag_[0] = fresh;
      } else {
        diag_[j] = prev_old - diag_[j - 1];
      }
      prev_old = cur_old;
    }
    if (diag_.empty()) {
      diag_.push_back(fresh);
    } else {
      diag_.push_back(prev_old - diag_.back());
    }
    ++fed_;
  }
  return diag_[static_cast<size_t>(n)];
}

EulerTransform::EulerTransform(std::function<Real(long, mpfr_prec_t)> source,
                               const PrecisionContext& ctx, long nmax_hint)
    : source_(std::move(source)) {
  // Geometric 2^-n decay reaches the termination threshold near
  // 3.33*(target+2) terms; the difference table is sized for that depth.
  long depth = nmax_hint > 0 ? nmax_hint
                             : static_cast<long>(3.5 * static_cast<double>(ctx.target_digits + 4)) + 32;
  long extra_digits = static_cast<long>(std::ceil(0.302 * static_cast<double>(depth))) + 4;
  prec_ = PrecisionContext::bits_for_digits(ctx.working_digits() + extra_digits);
}

Real EulerTransform::term(long n) {
  if (n < 0) throw DomainError("EulerTransform::term: n must be nonnegative");
  while (consumed_ <= n) {
    long m = consumed_ + 1;  // consuming a_m
    Real fresh = source_(m, prec_);
    if (!fresh.is_finite()) throw DomainError("euler transform: source term not finite");
    // diag update: new[j] = old[j-1] - new[j-1]
    Real prev_old(prec_);
    for (long j = 0; j < static_cast<long>(diag_.size()); ++j) {
      Real cur_old = diag_[static_cast<size_t>(j)];
      if (j == 0) {
        diag_[0] = fresh;
      } else {
        diag_[static_cast<size_t>(j)] = prev_old - diag_[static_cast<size_t>(j - 1)];
      }
      prev_old = cur_old;
    }
    if (diag_.empty()) {
      diag_.push_back(fresh);
    } else {
      diag_.push_back(prev_old - diag_.back());
    }
    ++consumed_;
  }
  // After consuming m terms, diag_[j] = Delta^j a_{m-j}; so diag_[n] holds
  // Delta^n a_1 once m = n+1. t_n = 2^{-(n+1)} Delta^n a_1.
  Real t(prec_);
  mpfr_div_2si(t.raw(), diag_[static_cast<size_t>(n)].raw(), n + 1, MPFR_RNDN);
  return t;
}

SeriesResult euler_transform_sum(std::function<Real(long, mpfr_prec_t)> source,
                                 const PrecisionContext& ctx) {
  auto transform = std::make_shared<EulerTransform>(std::move(source), ctx);
  TailPolicy policy = TailPolicy::geometric(0.55);
  policy.min_terms = 8;
  return sum_with_tail([transform](long n) { return transform->term(n); }, policy, ctx);
}

}  // namespace zk
