// Finite forward-difference sums sum_k C(n,k) (-1)^k f(k) for the kernel
// shapes used by the binomial-transform series, plus Euler's transformation
// of alternating series.
//
// Exact-rational kernels evaluate in exact arithmetic. Everything else runs
// at target+guard+ceil(0.302 n) digits: the largest binomial term grows like
// 2^n against an O(1) result, i.e. 0.302 decimal digits of cancellation per
// unit n, so the elevated precision makes direct summation safe.

#ifndef ZETAKIT_BINOMIAL_TRANSFORMS_HPP
#define ZETAKIT_BINOMIAL_TRANSFORMS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "zetakit/precision.hpp"
#include "zetakit/rational.hpp"
#include "zetakit/series.hpp"

namespace zk {

// f(k) = (k + shift)^(-s) * log(k + shift)^log_power with log_power in {0,1}.
// The four spec shapes map onto it:
//   power(s, x)           -> s, log_power 0
//   log(a)                -> s = 0, log_power 1
//   log-over-power(s, x)  -> s, log_power 1
//   power-times-log(j, a) -> s = -j, log_power 1
struct DifferenceKernel {
  int log_power = 0;
  bool s_is_integer = true;
  long s_int = 1;
  Real s_real;
  bool shift_is_rational = true;
  Rational shift_rat = Rational(1);
  Real shift_real;

  bool exact_rational() const { return log_power == 0 && s_is_integer && shift_is_rational; }

  static DifferenceKernel power(long s, const Rational& x) {
    DifferenceKernel k;
    k.s_int = s;
    k.shift_rat = x;
    return k;
  }
  static DifferenceKernel power_real(const Real& s, const Real& x) {
    DifferenceKernel k;
    k.s_is_integer = false;
    k.s_real = s;
    k.shift_is_rational = false;
    k.shift_real = x;
    return k;
  }
  static DifferenceKernel log_kernel(const Rational& a) {
    DifferenceKernel k;
    k.log_power = 1;
    k.s_int = 0;
    k.shift_rat = a;
    return k;
  }
  static DifferenceKernel log_kernel_real(const Real& a) {
    DifferenceKernel k;
    k.log_power = 1;
    k.s_int = 0;
    k.shift_is_rational = false;
    k.shift_real = a;
    return k;
  }
  static DifferenceKernel log_over_power(long s, const Rational& x) {
    DifferenceKernel k;
    k.log_power = 1;
    k.s_int = s;
    k.shift_rat = x;
    return k;
  }
  static DifferenceKernel power_times_log(long j, const Rational& a) {
    DifferenceKernel k;
    k.log_power = 1;
    k.s_int = -j;
    k.shift_rat = a;
    return k;
  }
};

// Either an exact rational or a bounded approximation, depending on kernel.
struct ForwardDifference {
  bool exact = false;
  Rational rational;
  Approx approx;

  Approx to_approx(mpfr_prec_t prec) const { return exact ? rational.to_approx(prec) : approx; }
};

// sum_{k=0..n} C(n,k) (-1)^k f(k).
ForwardDifference forward_difference(long n, const DifferenceKernel& kernel,
                                     const PrecisionContext& ctx);

// sum_{k=0..n} C(n,k) (-1)^{k+1} log(a+k), through the quadrature module:
// equals minus the integral of t^{a-1} (1-t)^n / log t over (0,1), which
// sidesteps the 2^n cancellation entirely. Intended for large n.
Approx log_difference_via_integral(long n, const Real& a, const PrecisionContext& ctx,
                                   long* nodes = nullptr);

// Crossover: exact kernels stay direct, log kernels go direct up to n = 60
// and through the integral beyond.
inline constexpr long kLogKernelDirectLimit = 60;

// Rolling difference table: feeds kernel values f(0), f(1), ... once each and
// serves Delta^n f = sum_k (-1)^k C(n,k) f(k) for increasing n in O(n) per
// step. Rounding amplifies by at most 2^n through the subtractions, which the
// caller's elevated precision absorbs; cancellation_bound reports it.
class DifferenceTable {
 public:
  DifferenceTable(std::function<Real(long, mpfr_prec_t)> f, mpfr_prec_t prec)
      : f_(std::move(f)), prec_(prec), max_abs_(Real(0L, kBoundPrec)) {}

  const Real& delta(long n);
  mpfr_prec_t prec() const { return prec_; }

  // Upper bound on the accumulated rounding in delta(0..n).
  Real cancellation_bound(long n) const {
    Real b(kBoundPrec);
    mpfr_set(b.raw(), max_abs_.raw(), MPFR_RNDU);
    mpfr_mul_2si(b.raw(), b.raw(), n - static_cast<long>(prec_) + 3, MPFR_RNDU);
    return b;
  }

 private:
  std::function<Real(long, mpfr_prec_t)> f_;
  mpfr_prec_t prec_;
  std::vector<Real> diag_;  // diag_[j] = Delta^j f_{m-1-j} after m feeds
  long fed_ = 0;
  Real max_abs_;
};

// Lazily produces t_n = 2^{-(n+1)} * Delta^n a_1 for a source a_1, a_2, ...
// The whole difference table is held at elevated precision chosen from
// nmax_hint.
class EulerTransform {
 public:
  // source(k, prec) returns a_k (1-based) at the requested precision.
  EulerTransform(std::function<Real(long, mpfr_prec_t)> source, const PrecisionContext& ctx,
                 long nmax_hint = 0);

  Real term(long n);  // n >= 0
  mpfr_prec_t table_prec() const { return prec_; }

 private:
  std::function<Real(long, mpfr_prec_t)> source_;
  mpfr_prec_t prec_;
  std::vector<Real> diag_;  // diag_[j] = Delta^j a_{m-j} after m source terms
  long consumed_ = 0;
};

// Sums the Euler-transformed series with the geometric q = 0.55 policy
// (a small cushion over the structural 1/2).
SeriesResult euler_transform_sum(std::function<Real(long, mpfr_prec_t)> source,
                                 const PrecisionContext& ctx);

}  // namespace zk

#endif  // ZETAKIT_BINOMIAL_TRANSFORMS_HPP
