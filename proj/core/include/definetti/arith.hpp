#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace definetti {

// Exact arbitrary-precision arithmetic. Everything except the float dense
// path and df_phi stays in these types.
using Int = mpz_class;
using Rational = mpq_class;

Int factorial(unsigned n);
Int binomial(const Int& n, unsigned k);

// n (n-1) ... (n-k+1); k == 0 gives 1. A zero factor makes the product 0.
Int falling_factorial(const Int& n, unsigned k);

// Canonicalized num/den. The raw two-argument mpq constructor skips gcd
// reduction, which breaks comparisons; route all fraction literals here.
Rational frac(long num, long den);
Rational frac(const Int& num, const Int& den);

// Accepts "3", "-3", "3/4". The denominator must be positive and nonzero.
Rational parse_rational(const std::string& s);

// Canonical "num/den" (plain "num" when den == 1), matching mpq get_str.
std::string rational_str(const Rational& q);

double to_double(const Rational& q);

// Raised when a dense tensor request exceeds the per-axis cap of 1024.
struct size_cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by the verification suite when a cross-check fails.
struct verification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace definetti
