// Tail-bounded series summation. Every infinite sum in the library runs
// through sum_with_tail, so the termination rule and the remainder bounds
// live in exactly one place.

#ifndef ZETAKIT_SERIES_HPP
#define ZETAKIT_SERIES_HPP

#include <functional>
#include <optional>

#include "zetakit/precision.hpp"

namespace zk {

enum class TailKind {
  AlternatingMonotone,       // remainder <= |first omitted term|
  GeometricRatio,            // remainder <= |a_N| * q / (1 - q)
  PositiveDecreasingBounded  // caller-supplied bound, or empirical ratio estimate
};

struct TailPolicy {
  TailKind kind = TailKind::GeometricRatio;
  double ratio_bound = 0.5;  // q for GeometricRatio, in [0,1)
  // Optional rigorous tail bound after summing terms 0..n (last = a_n).
  // Only consulted for PositiveDecreasingBounded.
  std::function<Real(long n, const Real& last)> explicit_bound;
  // Hard cap for this particular series (0 = use ctx.max_terms). Subgeometric
  // series set this; reaching it is then an honest stop, not a failure.
  long term_cap = 0;
  long min_terms = 4;

  static TailPolicy alternating() { return {TailKind::AlternatingMonotone, 0.0, nullptr, 0, 4}; }
  static TailPolicy geometric(double q) { return {TailKind::GeometricRatio, q, nullptr, 0, 4}; }
  static TailPolicy positive_decreasing(std::function<Real(long, const Real&)> bound = nullptr,
                                        long cap = 0) {
    return {TailKind::PositiveDecreasingBounded, 0.0, std::move(bound), cap, 16};
  }
};

struct SeriesResult {
  Approx approx;
  long terms_used = 0;
  bool heuristic_bound = false;  // true when the bound came from an empirical ratio
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, Approx best, long terms)
      : std::runtime_error(what), best_(std::move(best)), terms_(terms) {}
  const Approx& best() const { return best_; }
  long terms() const { return terms_; }

 private:
  Approx best_;
  long terms_;
};

// Sums term(0) + term(1) + ... under the given tail policy. Terminates when
// the remainder bound drops to 10^-(target_digits+2), at the policy cap, or
// at ctx.max_terms. Running past ctx.max_terms without meeting the bound is a
// ConvergenceError carrying the best value; a policy-declared cap is not.
SeriesResult sum_with_tail(const std::function<Real(long)>& term, const TailPolicy& policy,
                           const PrecisionContext& ctx);

}  // namespace zk

#endif  // ZETAKIT_SERIES_HPP
