#include "zetakit/elementary.hpp"

namespace zk {

static Approx rounded(Real v) {
  Real b = Approx::ulp_slop(v);
  return Approx(std::move(v), std::move(b));
}

Approx elementary_pi(const PrecisionContext& ctx) { return rounded(fn::pi(ctx.working_bits())); }

Approx elementary_log2(const PrecisionContext& ctx) { return rounded(fn::log2c(ctx.working_bits())); }

Approx elementary_exp(const Real& x, const PrecisionContext& ctx) {
  Real xe(ctx.working_bits());
  mpfr_set(xe.raw(), x.raw(), MPFR_RNDN);
  return rounded(fn::exp(xe));
}

Approx elementary_log(const Real& x, const PrecisionContext& ctx) {
  if (x.sign() <= 0) throw DomainError("log requires a positive argument");
  Real xe(ctx.working_bits());
  mpfr_set(xe.raw(), x.raw(), MPFR_RNDN);
  return rounded(fn::log(xe));
}

Approx elementary_pow(const Real& x, const Real& y, const PrecisionContext& ctx) {
  if (x.sign() < 0) throw DomainError("pow requires a nonnegative base");
  Real xe(ctx.working_bits()), ye(ctx.working_bits());
  mpfr_set(xe.raw(), x.raw(), MPFR_RNDN);
  mpfr_set(ye.raw(), y.raw(), MPFR_RNDN);
  return rounded(fn::pow(xe, ye));
}

}  // namespace zk
