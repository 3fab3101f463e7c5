// Shared helpers for the test suites: context factories, closeness asserts,
// and MPFR-native reference constants used as independent oracles.

#ifndef ZETAKIT_TEST_UTIL_HPP
#define ZETAKIT_TEST_UTIL_HPP

#include <string>

#include "zetakit/elementary.hpp"
#include "zetakit/precision.hpp"

namespace zt {

inline zk::PrecisionContext ctx50() { return zk::PrecisionContext(50, 15); }
inline zk::PrecisionContext ctx30() { return zk::PrecisionContext(30, 10); }

inline zk::Real R(const std::string& dec, long digits = 70) {
  return zk::Real(dec, zk::PrecisionContext::bits_for_digits(digits));
}

// Reference values straight from MPFR; independent of every series and
// quadrature route in the library.
inline zk::Real ref_zeta(long s, mpfr_prec_t prec) {
  zk::Real r(prec);
  if (s >= 0) {
    mpfr_zeta_ui(r.raw(), static_cast<unsigned long>(s), MPFR_RNDN);
  } else {
    zk::Real x(s, prec);
    mpfr_zeta(r.raw(), x.raw(), MPFR_RNDN);
  }
  return r;
}
inline zk::Real ref_zeta(const zk::Real& s, mpfr_prec_t prec) {
  zk::Real r(prec);
  mpfr_zeta(r.raw(), s.raw(), MPFR_RNDN);
  return r;
}
inline zk::Real ref_euler_gamma(mpfr_prec_t prec) {
  zk::Real r(prec);
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}

inline zk::Real abs_diff(const zk::Real& a, const zk::Real& b) { return abs(a - b); }

inline bool close_to(const zk::Real& value, const zk::Real& want, double tol_exp10) {
  return abs_diff(value, want) <= zk::bound_from_exp10(tol_exp10);
}

inline bool within_bound(const zk::Approx& got, const zk::Real& want, double slack = 4.0) {
  // The reference carries its own rounding at its precision; allow for it.
  return abs_diff(got.value, want) <=
         got.error_bound * (long)slack + zk::Approx::ulp_slop(want) * 64L;
}

inline std::string show(const zk::Real& v) { return v.to_string(25); }

}  // namespace zt

#endif
