#include "definetti/arith.hpp"

namespace definetti {

Int factorial(unsigned n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Int binomial(const Int& n, unsigned k) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

Int falling_factorial(const Int& n, unsigned k) {
  Int r = 1;
  for (unsigned i = 0; i < k; ++i) r *= n - static_cast<long>(i);
  return r;
}

Rational frac(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational frac(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() <= 0)
    throw std::invalid_argument("bad rational denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace definetti
