// Adaptive tanh-sinh quadrature on (0,1) and (0,infinity).
//
// A single double-exponential transform absorbs the endpoint behaviours that
// occur here (log, log-power, log-log); the endpoint hints only steer node
// truncation. Half-line integrands are split at u = 1, the tail mapped back
// onto (0,1) by u = 1 - log v.
//
// References:
//   Mori, "Quadrature formulas obtained by variable transformation and the
//   DE-rule", J. Comput. Appl. Math. 12 (1985).
//   Bailey, Jeyabalan, Li, "A comparison of three high-precision quadrature
//   schemes", Exp. Math. 14.3 (2005).

#ifndef ZETAKIT_QUADRATURE_HPP
#define ZETAKIT_QUADRATURE_HPP

#include <functional>

#include "zetakit/precision.hpp"
#include "zetakit/series.hpp"

namespace zk {

enum class QuadDomain { UnitInterval, HalfLine };

enum class EndpointHint {
  Smooth,
  LogSingular,
  LogPowerSingular,
  LogLogSingular,
  ExponentialDecay
};

// evaluate(x, d0, d1) is called at strict interior points; d0 and d1 are the
// distances to the left and right endpoint, computed in transform space so
// they stay accurate when x is within 10^-hundreds of an endpoint. Integrands
// with endpoint-sensitive factors (log x near 0, log(1-x) near 1, ...) should
// be written in terms of d0/d1.
struct IntegrandSpec {
  QuadDomain domain = QuadDomain::UnitInterval;
  EndpointHint left = EndpointHint::Smooth;
  EndpointHint right = EndpointHint::Smooth;
  int log_power = 1;  // s for LogPowerSingular
  std::function<Real(const Real& x, const Real& d0, const Real& d1)> evaluate;
};

struct QuadResult {
  Approx approx;
  long nodes = 0;
  long levels = 0;
};

// Error bound: 10x the difference between the two finest refinement levels.
// Refinement stops when that bound reaches 10^-(target_digits+2) or at
// ctx.max_quad_level (then: ConvergenceError carrying the best estimate).
QuadResult integrate(const IntegrandSpec& spec, const PrecisionContext& ctx);

// Same contract; requires a log-log-singular endpoint declaration, which is
// how the log log(1/t) kernels announce themselves.
QuadResult integrate_loglog(const IntegrandSpec& spec, const PrecisionContext& ctx);

}  // namespace zk

#endif  // ZETAKIT_QUADRATURE_HPP
