// Integer-order polylogarithms on real arguments, the binomial-transform
// representations (power series in one hand, integral in the other), Nielsen
// generalized polylogarithms, the polylog identity algebra, Witten zeta
// values, and the moment integrals of Li_p.

#ifndef ZETAKIT_POLYLOG_SUITE_HPP
#define ZETAKIT_POLYLOG_SUITE_HPP

#include "zetakit/precision.hpp"
#include "zetakit/rational.hpp"
#include "zetakit/series.hpp"

namespace zk {

// Li_s(x) for integer s >= 0, x in [-1, 1] (x = 1 needs s >= 2; rejections
// are errors, not clamps). Power series up to |x| = 3/4; above that the
// zeta-coefficient expansion in u = -log x; negative x splits through the
// duplication identity.
Approx li(long s, const Real& x, const PrecisionContext& ctx);

// Same, with 1-x supplied exactly for arguments within rounding of 1.
Approx li_c(long s, const Real& x, const Real& one_minus_x, const PrecisionContext& ctx);

// Real-analytic continuation to x < -1 through the half-line integral
// representation; used by the inversion identities.
Approx li_extended(long s, const Real& x, const PrecisionContext& ctx);

enum class BinomialTheorem {
  T43,      // sum 1/(n 2^n) sum C(n,k) x^k / k^s            = Li_{s+1}(x)
  T44,      // sum 1/n^2    sum C(n,k) (-1)^k x^k / k^s      = -(s+1)Li_{s+2} + log x Li_{s+1}
  General,  // sum w^n/n^p  sum C(n,k) (-1)^k x^k / k^s      = kernel integral
  T45,      // sum 2^-(n+1) sum C(n,k) (-1)^k (k+x)^-s       = Phi(-1,s,x)
  T46,      // sum 1/(n+1)  sum C(n,k) (-1)^k y^k (k+1)^{1-s}  (bare double sum)
  T46a      // sum w^n/(n+1) sum C(n,k) x^k (k+1)^{1-s}        (bare double sum)
};

struct BinomialSeriesSpec {
  BinomialTheorem theorem = BinomialTheorem::T43;
  long s = 1;
  Real x;      // x (T43/T44/General/T45/T46a) or y (T46)
  long p = 2;  // outer power for General
  Real w;      // weight for General / T46a

  static BinomialSeriesSpec t43(long s, const Real& x);
  static BinomialSeriesSpec t44(long s, const Real& x);
  static BinomialSeriesSpec general(long p, const Real& w, const Real& x, long s);
  static BinomialSeriesSpec t45(long s, const Real& x);
  static BinomialSeriesSpec t46(long s, const Real& y);
  static BinomialSeriesSpec t46a(long s, const Real& w, const Real& x);

  void validate(const PrecisionContext& ctx) const;
};

struct SeriesSideResult {
  Approx approx;
  long terms = 0;
  bool heuristic = false;
};

// The left-hand double sum, evaluated literally with cancellation-free inner
// recurrences; subgeometric cases carry explicit honest tail bounds.
SeriesSideResult binomial_series_eval(const BinomialSeriesSpec& spec, const PrecisionContext& ctx);

// The corresponding closed form / integral representation.
Approx binomial_series_closed_form(const BinomialSeriesSpec& spec, const PrecisionContext& ctx,
                                   long* nodes = nullptr);

// Nielsen S_{n,p}(z) through its defining log-power integral; n + p <= 8.
Approx nielsen_S(long n, long p, const Real& z, const PrecisionContext& ctx, long* nodes = nullptr);

enum class LiIdentity { Duplication, Inversion2, Inversion3, InversionN, FourierCos, FourierSin };

struct LiIdentityPoint {
  long s = 2;   // order for Duplication / InversionN
  Real x;       // argument (Duplication |x|<=1; inversions x > 0; Fourier: t in (0,pi))
  long fourier_terms = 100000;
};

// LHS - RHS with combined error bound.
Approx li_identity_residual(LiIdentity id, const LiIdentityPoint& pt, const PrecisionContext& ctx);

struct WittenResult {
  Approx integral_route;
  Approx double_sum_route;
  long nodes = 0;
};

// W(r,s,t) = sum 1/(n^r m^s (n+m)^t), dual-evaluated.
WittenResult witten_W(long r, long s, long t, const PrecisionContext& ctx);

// int_0^1 x^{n-1} log^q x Li_p(x) dx by the printed closed forms
// (q = 0 for p >= 2; q in {1,2} for p = 2), plus a quadrature cross-path.
Approx li_moment(long p, long n, long q, const PrecisionContext& ctx);
Approx li_moment_quadrature(long p, long n, long q, const PrecisionContext& ctx,
                            long* nodes = nullptr);

}  // namespace zk

#endif  // ZETAKIT_POLYLOG_SUITE_HPP
