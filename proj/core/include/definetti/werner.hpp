#pragma once

#include <optional>
#include <string>
#include <vector>

#include "definetti/arith.hpp"
#include "definetti/partition.hpp"
#include "definetti/symfunc.hpp"

namespace definetti {

// Mixture weights over the Schur-Weyl blocks of k d-level systems, indexed by
// Par(k,d) in reverse-lexicographic order. Weights are validated: nonnegative
// exact rationals summing to 1.
struct WernerState {
  int k = 0, d = 0;
  std::vector<Partition> index;
  std::vector<Rational> weights;

  WernerState(int k_, int d_, std::vector<Rational> w);
  static WernerState point_mass(const Partition& la, int k, int d);
  const Rational& weight(const Partition& la) const;
};

std::string werner_to_json(const WernerState& w);
WernerState werner_from_json(const std::string& text);

struct BoundReport {
  std::string bound_name;
  Rational exact_distance;
  Rational bound_value;
  bool satisfied = false;  // exact_distance <= bound_value
};

// Block weights of the twirl of (diag r)^{tensor k}: w_la = dim_sn(la) s_la(r).
// r must be a state spectrum (nonnegative, sum 1); normalization of the
// output is asserted, not assumed.
WernerState twirled_product(const Spectrum& r, int k, int d);

// Weights of the k-system reduction of the normalized block state for la,
// via the shifted route alpha_mu = dim_sn(mu) s*_mu(la)/(n)_k.
WernerState partial_trace_coeffs_shifted(const Partition& la, int n, int k, int d);

// Same map via branching: alpha_mu = dim_sn(mu) sum_nu c^la_{mu,nu} dim_sn(nu) / dim_sn(la).
WernerState partial_trace_coeffs_lr(const Partition& la, int n, int k, int d);

// Half the l1 distance between weight vectors; equals the trace-norm distance
// of the corresponding operators.
Rational trace_distance(const WernerState& a, const WernerState& b);

// Exact distance between the reduced block state and the twirled product at r:
// (1/2) sum_mu dim_sn(mu) |s*_mu(la)/(n)_k - s_mu(r)|.
Rational distance_to_twirled(const Partition& la, int n, int k, const Spectrum& r);

// k = 2 closed form: distance to the set of twirled products is
// max(0, b - (1/2)(1 - 1/d)) where b is the antisymmetric weight.
Rational distance_to_products_k2(const WernerState& w);

struct GridMinimum {
  Spectrum argmin;
  Rational value;
};

// Minimum of trace_distance(target, twirled_product(r)) over the canonical
// simplex grid; deterministic first-in-order tie break.
GridMinimum min_distance_grid(const WernerState& target, int resolution);
GridMinimum min_distance_grid(const Partition& la, int n, int k, int d, int resolution);

// Exact distance at r = la/n against the (3/4) k(k-1)/la_min bound; the bound
// carries an unquantified higher-order term, so satisfaction is reported, not
// asserted.
BoundReport definetti_bound_werner(const Partition& la, int n, int k);

// (1/2) sum_mu dim_sn(mu) |s*_mu(n lb)/(n)_k - s*_mu(m lb)/(m)_k| for a fixed
// shape lb; both n*lb and m*lb must be integer partitions, m >= n >= k.
Rational exchange_distance(const Spectrum& lambda_bar, int n, int m, int k);

// Rectangular la = (m^d), n = m d, k = 2: lower bound d/(2(n-1)) (1 - 1/d^2)
// on the distance to twirled products, equal to the exact mu = (1,1) gap
// dim_ud((1,1),d) (d+1)/((n-1) d^2). Both are computed and checked equal.
BoundReport lower_bound_antisym(int d, int m, int k = 2);

Rational eps_coherent(const Partition& mu, const Partition& nu, int d);
Rational eps_symmetric(long n, long k, long d);
Rational eps_mixed(long n, long k, long d);
Rational eps_classical(long n, long k, long d);

}  // namespace definetti
