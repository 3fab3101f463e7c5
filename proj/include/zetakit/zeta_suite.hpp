// Zeta-family evaluations built on the globally convergent binomial series:
// zeta_a by Hasse/Sondow, zeta through the functional factor, the alternating
// Hurwitz-Lerch transcendent, s-derivatives of zeta_a at the negative
// integers (Glaisher constants), Euler's constant by three routes, and Euler
// sums with Euler-Maclaurin tail completion.

#ifndef ZETAKIT_ZETA_SUITE_HPP
#define ZETAKIT_ZETA_SUITE_HPP

#include "zetakit/binomial_transforms.hpp"
#include "zetakit/precision.hpp"
#include "zetakit/series.hpp"

namespace zk {

// zeta_a(s) = sum (-1)^{n+1}/n^s, entire in s; geometric 2^-(n+1) series.
Approx zeta_alternating(const Real& s, const PrecisionContext& ctx);
Approx zeta_alternating_int(long s, const PrecisionContext& ctx);

// zeta(s) = zeta_a(s) / (1 - 2^{1-s}), s != 1. The 1/(n+1)-weighted Hasse
// series converges too slowly to produce digits; it is exercised by the
// verification corpus, not used as the production route.
Approx zeta(const Real& s, const PrecisionContext& ctx);
Approx zeta_int(long s, const PrecisionContext& ctx);  // cached per precision

// Hurwitz zeta by the literal 1/(n+1)-weighted series; subgeometric, so the
// bound is an empirical-ratio estimate and *heuristic is set.
Approx hurwitz_zeta(const Real& p, const Real& u, const PrecisionContext& ctx,
                    bool* heuristic = nullptr, long* terms = nullptr);

// Phi(-1, s, x), alternating Hurwitz-Lerch, by the 2^-(n+1) binomial series.
Approx lerch_phi_alt(const Real& s, const Real& x, const PrecisionContext& ctx);

// Same series with exact-rational inner sums (integer s, rational x).
Approx lerch_phi_alt_exact(long s, const Rational& x, const PrecisionContext& ctx);

// Dual route for s > 0: (1/Gamma(s)) Int_0^inf y^{s-1} e^{-y(x-1)}/(e^y+1) dy.
Approx lerch_phi_alt_integral(const Real& s, const Real& x, const PrecisionContext& ctx,
                              long* nodes = nullptr);

// zeta_a'(s) = -sum 2^-(n+1) Delta^n [log(k+1) (k+1)^-s].
Approx zeta_a_prime(const Real& s, const PrecisionContext& ctx);
Approx zeta_a_prime_int(long s, const PrecisionContext& ctx);

struct GlaisherConstants {
  Approx zeta_prime_m1;  // zeta'(-1)
  Approx zeta_prime_m2;  // zeta'(-2)
  Approx log_A;          // 1/12 - zeta'(-1)
  Approx log_B;          // -zeta'(-2), cross-checked against zeta(3)/(4 pi^2)
};
GlaisherConstants glaisher_constants(const PrecisionContext& ctx);

enum class GammaRoute { Integral, SondowSeries, ZetaLimit };

struct GammaResult {
  Approx approx;
  bool heuristic = false;
  long terms = 0;
  long nodes = 0;
};

// Integral: quadrature of Int_0^1 [1/log y + 1/(1-y)] dy (rigorous bound).
// SondowSeries: the N-term partial sum of the binomial log series, evaluated
//   through its kernel integral; widened empirical bound (recorded class).
// ZetaLimit: degree-3 extrapolation of zeta(s) - 1/(s-1) at s = 1 + 10^-j.
GammaResult euler_gamma(GammaRoute route, const PrecisionContext& ctx, long sondow_terms = 20000);

// Cached gamma via the integral route; the reference value used internally.
Approx euler_gamma_cached(const PrecisionContext& ctx);

// Flajolet-Salvy / Georghiou-Philippou closed form:
// sum H_n/n^q = (1 + q/2) zeta(q+1) - (1/2) sum_{k=1}^{q-2} zeta(k+1) zeta(q-k).
Approx euler_sum_linear(long q, const PrecisionContext& ctx);

// Independent oracles: exact-rational partial sums plus Euler-Maclaurin tail
// completion built from the H_n^{(r)} asymptotics.
Approx euler_sum_direct(long r, long q, const PrecisionContext& ctx);          // sum H^{(r)}_n/n^q
Approx euler_sum_power_weighted(long r, long q, const PrecisionContext& ctx);  // sum H^{(r)}_n/(n^q 2^n)
Approx euler_sum_squares_direct(const PrecisionContext& ctx);       // sum (H_n^2 + H^{(2)}_n)/n^2
Approx euler_sum_alternating_direct(const PrecisionContext& ctx);   // sum (-1)^{n+1} H_n/n^2

// Euler-Maclaurin tails, exposed so tests can pin them against brute force.
Approx zeta_power_tail(const Real& p, long N, const PrecisionContext& ctx);  // sum_{n>N} n^-p
Approx log_moment_tail(long j, const Real& p, long N,
                       const PrecisionContext& ctx);  // sum_{n>N} log^j n * n^-p

}  // namespace zk

#endif  // ZETAKIT_ZETA_SUITE_HPP
