#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "definetti/arith.hpp"
#include "definetti/partition.hpp"
#include "definetti/werner.hpp"

namespace definetti {

// Square exact-rational matrix with one shared denominator, so bulk products
// run on raw integers.
struct RationalMatrix {
  long n = 0;
  Int den = 1;
  std::vector<Int> num;  // row-major

  static RationalMatrix zero(long n);
  static RationalMatrix identity(long n);
  Int& at(long i, long j) { return num[static_cast<size_t>(i * n + j)]; }
  const Int& at(long i, long j) const { return num[static_cast<size_t>(i * n + j)]; }
  Rational value(long i, long j) const { return frac(at(i, j), den); }
  RationalMatrix multiply(const RationalMatrix& other) const;
  void add_inplace(const RationalMatrix& other);
  void scale(const Rational& q);
  bool equals(const RationalMatrix& other) const;  // cross-multiplied
  Rational trace() const;
  void reduce();  // strip the common factor of all entries and the denominator
};

// Operator on (C^d)^{tensor n}.
struct DenseOperator {
  int n = 0, d = 0;
  RationalMatrix mat;
};

// Per-axis dense size d^n, capped at 1024; throws size_cap_error beyond.
long dense_dim(int d, int n);

// Irreducible S_n character at a cycle type, by border-strip (beta-set)
// recursion.
Int sn_character(const Partition& la, const Partition& cycle_type);

// Full table over Par(n,n) x Par(n,n): table[la][rho].
std::vector<std::vector<Int>> sn_character_table(int n);

// Isotypic projector P_la = (dim_sn(la)/n!) sum_pi chi_la(pi) M_pi, exact.
// Symmetry and the trace identity tr P = dim_sn * dim_ud are always checked.
DenseOperator young_projector(const Partition& la, int n, int d);

// Normalized block state P_la / (dim_ud * dim_sn).
DenseOperator dense_block_state(const Partition& la, int n, int d);

// sum_la w_la P_la / (dim_ud * dim_sn) on k systems.
DenseOperator dense_werner(const WernerState& w);

// Trace over the last n-keep tensor factors; exact and trace-preserving.
DenseOperator dense_partial_trace(const DenseOperator& op, int keep);

Eigen::MatrixXcd to_complex(const DenseOperator& op);

// Half trace norm of a - b; both inputs must be Hermitian within 1e-9.
double dense_trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// Block weights read off a dense operator: w_mu = tr(P_mu rho). rho must act
// on (C^d)^{tensor k}.
WernerState dense_block_weights(const DenseOperator& rho);

// tr(P_la sigma^{tensor k}) for sigma = diag(r); exact.
WernerState oracle_twirl_coeffs(const Spectrum& r, int k, int d);

// Reduction of the normalized la-block projected back onto block weights.
WernerState oracle_partial_trace_coeffs(const Partition& la, int n, int k, int d);

// Unit vector in Sym^n(C^d): complex Gaussian coefficients in the occupation
// number basis, deterministic per seed.
Eigen::VectorXcd random_symmetric_state(int n, int d, unsigned seed);

Eigen::MatrixXcd random_unitary(int d, unsigned seed);
Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& g, int n);

struct MixtureGap {
  double gap = 0;            // trace distance between reduction and mixture
  Rational bound;            // 2 d k / n
  double min_eigenvalue = 0; // of the mixture (should be >= -1e-9)
  double trace_error = 0;    // |tr M - 1|
  double perm_deviation = 0; // max entrywise |M - pi M pi^+| over pi in S_k
};

// Mixture of coherent product blocks approximating the k-system reduction of
// |psi><psi|, built from the symmetric-subspace Haar moment:
// M = (dim Sym^n / dim Sym^{n+k}) tr_{first n}[(|psi><psi| ox 1_k) Pi_sym^{n+k}].
MixtureGap symmetric_mixture_gap(const Eigen::VectorXcd& psi, int n, int d, int k);

}  // namespace definetti
