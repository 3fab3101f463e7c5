// Gamma-family scalars on positive real arguments, plus exact Bernoulli
// numbers (integer tangent-number recurrence) which also feed the
// Euler-Maclaurin tail machinery elsewhere.

#ifndef ZETAKIT_SPECIAL_FUNCTIONS_HPP
#define ZETAKIT_SPECIAL_FUNCTIONS_HPP

#include "zetakit/precision.hpp"
#include "zetakit/rational.hpp"

namespace zk {

// Exact B_{2n} (B_2 = 1/6, B_4 = -1/30, ...), cached process-wide.
Rational bernoulli_b2n(unsigned long n);

Approx log_gamma(const Real& x, const PrecisionContext& ctx);
Approx digamma(const Real& x, const PrecisionContext& ctx);

// psi^{(m)}(x), 1 <= m <= 8: upward recurrence shift, then the Bernoulli
// asymptotic series at the shifted point.
Approx polygamma(long m, const Real& x, const PrecisionContext& ctx);

Approx beta_function(const Real& x, const Real& y, const PrecisionContext& ctx);

}  // namespace zk

#endif  // ZETAKIT_SPECIAL_FUNCTIONS_HPP
