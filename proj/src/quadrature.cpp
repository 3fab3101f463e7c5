#include "zetakit/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "zetakit/elementary.hpp"

namespace zk {
namespace {

struct NodeEval {
  // x and weight for the node pair at +-u on (0,1); xp is the point near 1,
  // xm = 1 - xp the mirror point near 0; w is the common weight.
  Real xp, xm, w;
};

// x(u) = (1 + tanh((pi/2) sinh u)) / 2, evaluated through E = exp(-2 theta)
// so both x and 1-x carry full relative precision.
NodeEval make_node(const Real& u, const Real& half_pi, mpfr_prec_t wp) {
  Real theta = half_pi * fn::sinh(u);
  Real e(wp);
  mpfr_mul_si(e.raw(), theta.raw(), -2, MPFR_RNDN);
  e = fn::exp(e);
  Real onep = e + 1L;
  NodeEval n{Real(wp), Real(wp), Real(wp)};
  n.xp = Real(1L, wp) / onep;
  n.xm = e / onep;
  n.w = fn::pi(wp) * fn::cosh(u) * e / (onep * onep);
  return n;
}

struct LevelSums {
  Real integral;   // running h * sum(w f)
  Real l1;         // running h * sum(|w f|)
  long nodes = 0;
  bool any_nonzero = false;
};

class TanhSinh {
 public:
  TanhSinh(const IntegrandSpec& spec, const PrecisionContext& ctx)
      : spec_(spec), ctx_(ctx), wp_(ctx.working_bits() + 24), half_pi_(wp_) {
    mpfr_const_pi(half_pi_.raw(), MPFR_RNDN);
    mpfr_div_2ui(half_pi_.raw(), half_pi_.raw(), 1, MPFR_RNDN);
    // Past u_max the complement underflows below every digit we could use.
    double digits = static_cast<double>(ctx.working_digits());
    u_max_ = std::asinh((digits * 2.302585 + 60.0) / 3.14159265358979 * 2.0) + 0.25;
    cut_exp10_ = -(double)ctx.working_digits() - 8.0;
  }

  QuadResult run() {
    const Real threshold = bound_from_exp10(ctx_.series_threshold_exponent());
    Real prev(wp_), cur(wp_);
    Real diff_prev(kBoundPrec);
    long total_nodes = 0;
    Real h(1L, wp_);

    LevelSums l0 = level_zero(h);
    cur = l0.integral;
    l1_ = l0.l1;
    total_nodes += l0.nodes;
    bool all_zero = !l0.any_nonzero;

    for (long m = 1; m <= ctx_.max_quad_level; ++m) {
      mpfr_div_2ui(h.raw(), h.raw(), 1, MPFR_RNDN);
      LevelSums lm = level_refine(h);
      total_nodes += lm.nodes;
      all_zero = all_zero && !lm.any_nonzero;
      prev = cur;
      cur = cur / 2L + lm.integral;
      l1_ = l1_ / 2L + lm.l1;

      Real diff(kBoundPrec);
      mpfr_sub(diff.raw(), cur.raw(), prev.raw(), MPFR_RNDA);
      mpfr_abs(diff.raw(), diff.raw(), MPFR_RNDU);

      if (m >= 3) {
        Real bound = diff * 10L + Approx::ulp_slop(cur) * total_nodes;
        if (bound <= threshold) {
          if (all_zero)
            return {Approx(Real(0L, wp_), bound_from_exp10(-(double)ctx_.target_digits)),
                    total_nodes, m};
          return {Approx(cur, bound), total_nodes, m};
        }
        // A zero difference with a nonzero previous difference means the
        // refinement has bottomed out at rounding level.
        if (diff.is_zero() && !diff_prev.is_zero()) {
          Real bound2 = diff_prev * 10L + Approx::ulp_slop(cur) * total_nodes;
          return {Approx(cur, bound2), total_nodes, m};
        }
      }
      diff_prev = diff;
    }

    if (all_zero)
      return {Approx(Real(0L, wp_), bound_from_exp10(-(double)ctx_.target_digits)), total_nodes,
              ctx_.max_quad_level};

    Approx best(cur, diff_prev * 10L + Approx::ulp_slop(cur) * total_nodes);
    throw ConvergenceError("quadrature did not converge within max_quad_level", best,
                           total_nodes);
  }

 private:
  Real eval(const Real& x, const Real& d0, const Real& d1) {
    Real f = spec_.evaluate(x, d0, d1);
    if (!f.is_finite()) throw IntegrandError("integrand evaluated to a non-finite value");
    return f;
  }

  // Contribution of the node pair at +-u (u > 0), or the single node at u = 0.
  Real pair_term(const Real& u, bool& nonzero, long& count) {
    NodeEval n = make_node(u, half_pi_, wp_);
    Real fp = eval(n.xp, n.xp, n.xm);
    ++count;
    Real t = fp;
    if (u.sign() != 0) {
      Real fm = eval(n.xm, n.xm, n.xp);
      ++count;
      t += fm;
    }
    t *= n.w;
    if (!t.is_zero()) nonzero = true;
    return t;
  }

  LevelSums level_zero(const Real& h) {
    LevelSums s{Real(wp_), Real(wp_)};
    Real u(0L, wp_);
    Real t = pair_term(u, s.any_nonzero, s.nodes);
    s.integral = t;
    s.l1 = abs(t);
    for (long k = 1;; ++k) {
      mpfr_mul_si(u.raw(), h.raw(), k, MPFR_RNDN);
      if (u.to_double() > u_max_) break;
      t = pair_term(u, s.any_nonzero, s.nodes);
      s.integral += t;
      s.l1 += abs(t);
      if (k > 3 && small_vs_l1(t, s.l1)) break;
    }
    s.integral *= h;
    s.l1 *= h;
    return s;
  }

  // Odd multiples of the new h only.
  LevelSums level_refine(const Real& h) {
    LevelSums s{Real(wp_), Real(wp_)};
    Real u(wp_);
    long consecutive_small = 0;
    for (long k = 1;; k += 2) {
      mpfr_mul_si(u.raw(), h.raw(), k, MPFR_RNDN);
      if (u.to_double() > u_max_) break;
      Real t = pair_term(u, s.any_nonzero, s.nodes);
      s.integral += t;
      s.l1 += abs(t);
      Real ref = l1_ + s.l1;
      if (k > 7 && small_vs_l1(t, ref)) {
        if (++consecutive_small >= 2) break;
      } else {
        consecutive_small = 0;
      }
    }
    s.integral *= h;
    s.l1 *= h;
    return s;
  }

  bool small_vs_l1(const Real& t, const Real& l1) {
    if (t.is_zero()) return true;
    Real cut = l1 * bound_from_exp10(cut_exp10_);
    Real floor_cut = bound_from_exp10(cut_exp10_ * 2.0);
    if (cut < floor_cut) cut = floor_cut;
    return abs(t) <= cut;
  }

  const IntegrandSpec& spec_;
  const PrecisionContext& ctx_;
  mpfr_prec_t wp_;
  Real half_pi_;
  Real l1_ = Real(64);
  double u_max_ = 6.0;
  double cut_exp10_ = -60.0;
};

}  // namespace

QuadResult integrate(const IntegrandSpec& spec, const PrecisionContext& ctx) {
  if (!spec.evaluate) throw UsageError("integrand has no evaluate function");

  if (spec.domain == QuadDomain::HalfLine) {
    // Head on (0,1), tail mapped by u = 1 - log v so that e^{-cu} decay turns
    // into an integrable v^{c-1} factor at v = 0.
    const mpfr_prec_t wp = ctx.working_bits() + 24;
    IntegrandSpec head{QuadDomain::UnitInterval, spec.left, EndpointHint::Smooth, spec.log_power,
                       spec.evaluate};
    QuadResult qh = integrate(head, ctx);

    IntegrandSpec tail;
    tail.domain = QuadDomain::UnitInterval;
    tail.left = EndpointHint::LogPowerSingular;
    tail.right = EndpointHint::Smooth;
    tail.evaluate = [&spec, wp](const Real&, const Real& d0, const Real&) -> Real {
      Real u = Real(1L, wp) - fn::log(d0);
      Real big(1L, wp);  // distances are meaningless on the half line's right
      return spec.evaluate(u, u, big) / d0;
    };
    QuadResult qt = integrate(tail, ctx);

    return {qh.approx + qt.approx, qh.nodes + qt.nodes, std::max(qh.levels, qt.levels)};
  }

  TanhSinh engine(spec, ctx);
  return engine.run();
}

QuadResult integrate_loglog(const IntegrandSpec& spec, const PrecisionContext& ctx) {
  if (spec.left != EndpointHint::LogLogSingular && spec.right != EndpointHint::LogLogSingular)
    throw UsageError("integrate_loglog requires a log-log-singular endpoint declaration");
  return integrate(spec, ctx);
}

}  // namespace zk
