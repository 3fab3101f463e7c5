#include "zetakit/series.hpp"

#include <deque>

namespace zk {

SeriesResult sum_with_tail(const std::function<Real(long)>& term, const TailPolicy& policy,
                           const PrecisionContext& ctx) {
  const mpfr_prec_t wp = ctx.working_bits();
  const Real threshold = bound_from_exp10(ctx.series_threshold_exponent());

  // A policy-declared cap marks an intentionally truncated (subgeometric)
  // series: stopping there is an honest report, not a convergence failure.
  long cap = ctx.max_terms;
  const bool capped_by_policy = policy.term_cap > 0;
  if (capped_by_policy && policy.term_cap < cap) cap = policy.term_cap;

  if (policy.kind == TailKind::GeometricRatio &&
      (policy.ratio_bound < 0.0 || policy.ratio_bound >= 1.0))
    throw UsageError("geometric ratio bound must lie in [0,1)");

  Real sum(wp);
  Real rounding(0L, kBoundPrec);
  std::deque<double> recent_log10;  // |a_n| history for the empirical ratio
  SeriesResult out;

  const Real qfac = [&] {
    Real q(policy.ratio_bound, kBoundPrec);
    Real one(1L, kBoundPrec);
    return q / (one - q);
  }();

  for (long n = 0; n < cap; ++n) {
    Real t = term(n);
    if (!t.is_finite()) throw DomainError("series term is not finite");

    Real at = abs(t);
    Real bound(kBoundPrec);

    switch (policy.kind) {
      case TailKind::AlternatingMonotone:
        // |remainder after n-1 terms| <= |a_n|; stop before adding a_n.
        if (n >= policy.min_terms && at <= threshold) {
          out.approx = Approx(sum, at + rounding);
          out.terms_used = n;
          return out;
        }
        sum += t;
        rounding += Approx::ulp_slop(sum);
        break;

      case TailKind::GeometricRatio: {
        sum += t;
        rounding += Approx::ulp_slop(sum);
        bound = Real(kBoundPrec);
        mpfr_mul(bound.raw(), at.raw(), qfac.raw(), MPFR_RNDU);
        if (n >= policy.min_terms && bound <= threshold) {
          out.approx = Approx(sum, bound + rounding);
          out.terms_used = n + 1;
          return out;
        }
        break;
      }

      case TailKind::PositiveDecreasingBounded: {
        sum += t;
        rounding += Approx::ulp_slop(sum);
        if (policy.explicit_bound) {
          if (n >= policy.min_terms && (n % 16 == 15 || n == cap - 1)) {
            bound = policy.explicit_bound(n, t);
            if (bound <= threshold) {
              out.approx = Approx(sum, bound + rounding);
              out.terms_used = n + 1;
              return out;
            }
          }
        } else {
          // Empirical ratio from the last ten magnitudes; the resulting bound
          // is flagged heuristic. Widened 4x so that ~1/n^p tails, whose local
          // ratio drifts toward 1, stay covered.
          double l10 = -1e9;
          if (!at.is_zero()) {
            mpfr_exp_t e2 = 0;
            double m = mpfr_get_d_2exp(&e2, at.raw(), MPFR_RNDN);
            l10 = std::log10(std::fabs(m)) + static_cast<double>(e2) * 0.30102999566398120;
          }
          recent_log10.push_back(l10);
          if (recent_log10.size() > 11) recent_log10.pop_front();
          if (n >= policy.min_terms && recent_log10.size() == 11) {
            double dec = (recent_log10.front() - recent_log10.back()) / 10.0;  // digits per term
            double q = std::pow(10.0, -std::max(dec, 1e-12));
            if (q >= 1.0) q = 1.0 - 1e-12;
            Real qf(q, kBoundPrec);
            Real one(1L, kBoundPrec);
            bound = at * qf / (one - qf);
            bound = bound * 4L;
            if (bound <= threshold) {
              out.approx = Approx(sum, bound + rounding);
              out.terms_used = n + 1;
              out.heuristic_bound = true;
              return out;
            }
          }
        }
        break;
      }
    }
  }

  // Ran to the cap. Report with the tail bound evaluated at the cap.
  Real final_bound(kBoundPrec);
  long n_last = cap - 1;
  Real last = term(n_last);
  Real alast = abs(last);
  bool heuristic = false;
  switch (policy.kind) {
    case TailKind::AlternatingMonotone:
      final_bound = abs(term(cap));
      break;
    case TailKind::GeometricRatio:
      mpfr_mul(final_bound.raw(), alast.raw(), qfac.raw(), MPFR_RNDU);
      break;
    case TailKind::PositiveDecreasingBounded:
      if (policy.explicit_bound) {
        final_bound = policy.explicit_bound(n_last, last);
      } else if (recent_log10.size() >= 2) {
        double dec = (recent_log10.front() - recent_log10.back()) /
                     static_cast<double>(recent_log10.size() - 1);
        double q = std::pow(10.0, -std::max(dec, 1e-12));
        if (q >= 1.0) q = 1.0 - 1e-12;
        Real qf(q, kBoundPrec);
        Real one(1L, kBoundPrec);
        final_bound = alast * qf / (one - qf) * 4L;
        heuristic = true;
      } else {
        final_bound = alast * cap;
        heuristic = true;
      }
      break;
  }

  Approx best(sum, final_bound + rounding);
  if (!capped_by_policy)
    throw ConvergenceError("series did not meet its tail bound within max_terms", best, cap);

  out.approx = best;
  out.terms_used = cap;
  out.heuristic_bound = heuristic || !policy.explicit_bound;
  if (policy.kind != TailKind::PositiveDecreasingBounded) out.heuristic_bound = false;
  return out;
}

}  // namespace zk
