#pragma once

#include <vector>

#include "definetti/arith.hpp"
#include "definetti/partition.hpp"

namespace definetti {

using Spectrum = std::vector<Rational>;

Spectrum parse_spectrum(const std::string& csv);  // "1/2,1/3,1/6"
std::string spectrum_str(const Spectrum& r);
bool is_state_spectrum(const Spectrum& r);   // entries >= 0, sum == 1
Spectrum canonical_spectrum(Spectrum r);     // sorted nonincreasing
Spectrum simplex_vertex(int q, int d);       // x^q: first q entries 1/q

// Tableau sum over semistandard fillings with entries <= len(x).
// Symmetric in x; returns 0 when mu has more than len(x) rows.
Rational schur_eval(const Partition& mu, const Spectrum& x);

// Tableau sum over *reverse* fillings of (lambda_{T(cell)} - content(cell)).
// Not symmetric: lambda is consumed in the given order, never reordered.
// Integer-valued on integer vectors, hence the exact integer return.
Int shifted_schur_eval(const Partition& mu, const std::vector<long>& lambda);

// Sum of x^a over distinct permutations a of lambda padded to len(x).
Rational monomial_eval(const Partition& la, const Spectrum& x);

// Kostka numbers on Par(k,d) x Par(k,d) plus the exact inverse transition:
// m_mu = sum_la inverse[mu][la] * s_la.
struct KostkaMatrix {
  int k = 0, d = 0;
  std::vector<Partition> index;  // Par(k,d), reverse-lexicographic
  std::vector<std::vector<Int>> kostka;
  std::vector<std::vector<Rational>> inverse;
  const Rational& kappa(const Partition& la, const Partition& mu) const;
};
KostkaMatrix kostka_matrix(int k, int d);

// (1/(2 sqrt(2 pi))) Integral over R of |1 - sqrt(1-a) e^{a u^2/2}| e^{-u^2/2} du,
// evaluated with Gauss-Legendre panels doubled until the change is < 1e-9.
// Domain: 0 < alpha < 1/2.
double df_phi(const Rational& alpha);

}  // namespace definetti
