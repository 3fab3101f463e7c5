// Elementary functions and constants at working precision. Thin MPFR wrappers:
// results are correctly rounded, so the reported bounds are ulp-scale, far
// inside the contract of 10^-(target+guard-2) relative error.

#ifndef ZETAKIT_ELEMENTARY_HPP
#define ZETAKIT_ELEMENTARY_HPP

#include "zetakit/precision.hpp"

namespace zk {

// Real-level helpers, precision given explicitly. Used pervasively inside
// series terms and integrands where Approx bookkeeping would just add noise.
namespace fn {

inline Real pi(mpfr_prec_t p) { Real r(p); mpfr_const_pi(r.raw(), MPFR_RNDN); return r; }
inline Real log2c(mpfr_prec_t p) { Real r(p); mpfr_const_log2(r.raw(), MPFR_RNDN); return r; }

inline Real exp(const Real& x) { Real r(x.prec()); mpfr_exp(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real expm1(const Real& x) { Real r(x.prec()); mpfr_expm1(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real log(const Real& x) {
  if (x.sign() <= 0) throw DomainError("log of nonpositive value");
  Real r(x.prec()); mpfr_log(r.raw(), x.raw(), MPFR_RNDN); return r;
}
inline Real log1p(const Real& x) { Real r(x.prec()); mpfr_log1p(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("sqrt of negative value");
  Real r(x.prec()); mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN); return r;
}
inline Real pow(const Real& x, const Real& y) {
  Real r(std::max(x.prec(), y.prec())); mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN); return r;
}
inline Real pow_si(const Real& x, long e) { Real r(x.prec()); mpfr_pow_si(r.raw(), x.raw(), e, MPFR_RNDN); return r; }
inline Real sin(const Real& x) { Real r(x.prec()); mpfr_sin(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real cos(const Real& x) { Real r(x.prec()); mpfr_cos(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real sinh(const Real& x) { Real r(x.prec()); mpfr_sinh(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real cosh(const Real& x) { Real r(x.prec()); mpfr_cosh(r.raw(), x.raw(), MPFR_RNDN); return r; }
inline Real tanh(const Real& x) { Real r(x.prec()); mpfr_tanh(r.raw(), x.raw(), MPFR_RNDN); return r; }

}  // namespace fn

// Approx-level family used at module boundaries.
Approx elementary_pi(const PrecisionContext& ctx);
Approx elementary_log2(const PrecisionContext& ctx);
Approx elementary_exp(const Real& x, const PrecisionContext& ctx);
Approx elementary_log(const Real& x, const PrecisionContext& ctx);
Approx elementary_pow(const Real& x, const Real& y, const PrecisionContext& ctx);

}  // namespace zk

#endif  // ZETAKIT_ELEMENTARY_HPP
