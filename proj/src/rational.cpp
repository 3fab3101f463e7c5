#include "zetakit/rational.hpp"

namespace zk {

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) throw DomainError("binomial: k > n");
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational harmonic(unsigned long n, unsigned long r) {
  if (r < 1) throw DomainError("harmonic: order must be positive");
  Rational h(0);
  for (unsigned long k = 1; k <= n; ++k) {
    BigInt kr;
    mpz_ui_pow_ui(kr.get_mpz_t(), k, r);
    h += Rational(BigInt(1), kr);
  }
  return h;
}

std::vector<Rational> harmonic_row(unsigned long nmax, unsigned long r) {
  std::vector<Rational> row;
  row.reserve(nmax + 1);
  Rational h(0);
  row.push_back(h);
  for (unsigned long k = 1; k <= nmax; ++k) {
    BigInt kr;
    mpz_ui_pow_ui(kr.get_mpz_t(), k, r);
    h += Rational(BigInt(1), kr);
    row.push_back(h);
  }
  return row;
}

Rational rational_pow(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  if (q.sign() == 0 && e < 0) throw DomainError("rational_pow: 0 to negative power");
  BigInt num, den;
  unsigned long a = static_cast<unsigned long>(e > 0 ? e : -e);
  mpz_pow_ui(num.get_mpz_t(), q.numerator().get_mpz_t(), a);
  mpz_pow_ui(den.get_mpz_t(), q.denominator().get_mpz_t(), a);
  return e > 0 ? Rational(num, den) : Rational(den, num);
}

}  // namespace zk
