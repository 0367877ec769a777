#include "definetti/werner.hpp"

#include <algorithm>

#include "definetti/lr_rule.hpp"
#include "definetti/util.hpp"
#include "json.hpp"

namespace definetti {

WernerState::WernerState(int k_, int d_, std::vector<Rational> w)
    : k(k_), d(d_), index(enumerate_partitions(k_, d_)), weights(std::move(w)) {
  if (k < 0 || d < 1) throw std::invalid_argument("WernerState: need k >= 0, d >= 1");
  if (weights.size() != index.size())
    throw std::invalid_argument("WernerState: weight count does not match Par(k,d)");
  Rational sum = 0;
  for (const Rational& x : weights) {
    if (x < 0) throw std::invalid_argument("WernerState: negative weight");
    sum += x;
  }
  if (sum != 1) throw std::invalid_argument("WernerState: weights must sum to 1");
}

WernerState WernerState::point_mass(const Partition& la, int k, int d) {
  auto idx = enumerate_partitions(k, d);
  std::vector<Rational> w(idx.size(), Rational(0));
  auto it = std::find(idx.begin(), idx.end(), la);
  if (it == idx.end()) throw std::invalid_argument("point_mass: partition not in Par(k,d)");
  w[static_cast<size_t>(it - idx.begin())] = 1;
  return WernerState(k, d, std::move(w));
}

const Rational& WernerState::weight(const Partition& la) const {
  auto it = std::find(index.begin(), index.end(), la);
  if (it == index.end()) throw std::invalid_argument("weight: partition not in Par(k,d)");
  return weights[static_cast<size_t>(it - index.begin())];
}

std::string werner_to_json(const WernerState& w) {
  nlohmann::json j;
  j["k"] = w.k;
  j["d"] = w.d;
  j["weights"] = nlohmann::json::array();
  for (size_t i = 0; i < w.index.size(); ++i) {
    nlohmann::json entry;
    entry["partition"] = w.index[i].rows();
    entry["num"] = w.weights[i].get_num().get_str();
    entry["den"] = w.weights[i].get_den().get_str();
    j["weights"].push_back(std::move(entry));
  }
  return j.dump();
}

WernerState werner_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int k = j.at("k").get<int>();
  int d = j.at("d").get<int>();
  auto idx = enumerate_partitions(k, d);
  std::vector<Rational> w(idx.size(), Rational(0));
  for (const auto& entry : j.at("weights")) {
    Partition la(entry.at("partition").get<std::vector<int>>());
    Rational q(Int(entry.at("num").get<std::string>()), Int(entry.at("den").get<std::string>()));
    q.canonicalize();
    auto it = std::find(idx.begin(), idx.end(), la);
    if (it == idx.end()) throw std::invalid_argument("weights entry not in Par(k,d)");
    w[static_cast<size_t>(it - idx.begin())] = q;
  }
  return WernerState(k, d, std::move(w));
}

WernerState twirled_product(const Spectrum& r, int k, int d) {
  if (static_cast<int>(r.size()) != d)
    throw std::invalid_argument("twirled_product: spectrum length must equal d");
  if (!is_state_spectrum(r))
    throw std::invalid_argument("twirled_product: spectrum must be nonnegative and sum to 1");
  auto idx = enumerate_partitions(k, d);
  std::vector<Rational> w;
  w.reserve(idx.size());
  Rational sum = 0;
  for (const Partition& la : idx) {
    Rational wl = Rational(dim_sn(la)) * schur_eval(la, r);
    sum += wl;
    w.push_back(std::move(wl));
  }
  if (sum != 1) throw std::logic_error("twirled_product: weights failed to normalize");
  return WernerState(k, d, std::move(w));
}

namespace {

void check_block_args(const Partition& la, int n, int k, int d) {
  if (la.total() != n) throw std::invalid_argument("partial trace: |la| must equal n");
  if (la.num_rows() > d) throw std::invalid_argument("partial trace: la has more than d rows");
  if (k < 0 || k > n) throw std::invalid_argument("partial trace: need 0 <= k <= n");
}

}  // namespace

WernerState partial_trace_coeffs_shifted(const Partition& la, int n, int k, int d) {
  check_block_args(la, n, k, d);
  std::vector<long> lam = la.padded(d);
  Rational ff(falling_factorial(Int(n), static_cast<unsigned>(k)));
  auto idx = enumerate_partitions(k, d);
  std::vector<Rational> w;
  w.reserve(idx.size());
  for (const Partition& mu : idx)
    w.push_back(Rational(dim_sn(mu) * shifted_schur_eval(mu, lam)) / ff);
  return WernerState(k, d, std::move(w));
}

WernerState partial_trace_coeffs_lr(const Partition& la, int n, int k, int d) {
  check_block_args(la, n, k, d);
  Rational dim_la(dim_sn(la));
  auto idx = enumerate_partitions(k, d);
  auto rest = enumerate_partitions(n - k, d);
  std::vector<Rational> w;
  w.reserve(idx.size());
  for (const Partition& mu : idx) {
    Int acc = 0;
    for (const Partition& nu : rest) acc += lr_coefficient(la, mu, nu) * dim_sn(nu);
    w.push_back(Rational(dim_sn(mu) * acc) / dim_la);
  }
  return WernerState(k, d, std::move(w));
}

Rational trace_distance(const WernerState& a, const WernerState& b) {
  if (a.k != b.k || a.d != b.d)
    throw std::invalid_argument("trace_distance: mismatched (k,d)");
  Rational sum = 0;
  for (size_t i = 0; i < a.weights.size(); ++i) sum += abs(a.weights[i] - b.weights[i]);
  return sum / 2;
}

Rational distance_to_twirled(const Partition& la, int n, int k, const Spectrum& r) {
  int d = static_cast<int>(r.size());
  check_block_args(la, n, k, d);
  if (!is_state_spectrum(r))
    throw std::invalid_argument("distance_to_twirled: r must be a state spectrum");
  std::vector<long> lam = la.padded(d);
  Rational ff(falling_factorial(Int(n), static_cast<unsigned>(k)));
  Rational sum = 0;
  for (const Partition& mu : enumerate_partitions(k, d))
    sum += Rational(dim_sn(mu)) * abs(Rational(shifted_schur_eval(mu, lam)) / ff - schur_eval(mu, r));
  sum /= 2;
#ifndef NDEBUG
  // The two expressions are the same sum term by term; keep them tied.
  Rational direct = trace_distance(partial_trace_coeffs_shifted(la, n, k, d), twirled_product(r, k, d));
  if (sum != direct) throw std::logic_error("distance_to_twirled: formula/route mismatch");
#endif
  return sum;
}

Rational distance_to_products_k2(const WernerState& w) {
  if (w.k != 2) throw std::invalid_argument("distance_to_products_k2: need k == 2");
  Partition antisym(std::vector<int>{1, 1});
  Rational b = w.d >= 2 ? w.weight(antisym) : Rational(0);
  Rational gap = b - frac(w.d - 1, 2L * w.d);
  return gap > 0 ? gap : Rational(0);
}

GridMinimum min_distance_grid(const WernerState& target, int resolution) {
  if (resolution < 1) throw std::invalid_argument("min_distance_grid: resolution must be >= 1");
  auto grid = enumerate_partitions(resolution, target.d);
  if (grid.empty()) throw std::logic_error("min_distance_grid: empty grid");
  struct Best {
    size_t pos;
    Rational value;
  };
  std::vector<std::optional<Best>> chunk_best(grid.size());
  parallel_for(grid.size(), [&](size_t i) {
    Spectrum r(static_cast<size_t>(target.d), Rational(0));
    for (int row = 0; row < grid[i].num_rows(); ++row)
      r[static_cast<size_t>(row)] = frac(grid[i].row(row), resolution);
    chunk_best[i] = Best{i, trace_distance(target, twirled_product(r, target.k, target.d))};
  });
  size_t arg = 0;
  for (size_t i = 1; i < grid.size(); ++i)
    if (chunk_best[i]->value < chunk_best[arg]->value) arg = i;
  Spectrum best(static_cast<size_t>(target.d), Rational(0));
  for (int row = 0; row < grid[arg].num_rows(); ++row)
    best[static_cast<size_t>(row)] = frac(grid[arg].row(row), resolution);
  return GridMinimum{std::move(best), chunk_best[arg]->value};
}

GridMinimum min_distance_grid(const Partition& la, int n, int k, int d, int resolution) {
  return min_distance_grid(partial_trace_coeffs_shifted(la, n, k, d), resolution);
}

BoundReport definetti_bound_werner(const Partition& la, int n, int k) {
  if (la.total() != n) throw std::invalid_argument("definetti_bound_werner: |la| must equal n");
  if (la.empty()) throw std::invalid_argument("definetti_bound_werner: empty la");
  int d = la.num_rows();
  Spectrum r;
  r.reserve(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) r.push_back(frac(la.row(i), n));
  int la_min = la.row(d - 1);  // smallest nonzero row
  BoundReport rep;
  rep.bound_name = "werner-expansion";
  rep.exact_distance = distance_to_twirled(la, n, k, r);
  rep.bound_value = frac(3L * k * (k - 1), 4L * la_min);
  rep.satisfied = rep.exact_distance <= rep.bound_value;
  return rep;
}

Rational exchange_distance(const Spectrum& lambda_bar, int n, int m, int k) {
  int d = static_cast<int>(lambda_bar.size());
  if (d == 0) throw std::invalid_argument("exchange_distance: empty shape");
  if (!(m >= n && n >= k && k >= 0))
    throw std::invalid_argument("exchange_distance: need m >= n >= k >= 0");
  if (!is_state_spectrum(lambda_bar))
    throw std::invalid_argument("exchange_distance: lambda_bar must be a state spectrum");
  auto scaled = [&](int scale) {
    std::vector<long> v;
    v.reserve(lambda_bar.size());
    for (const Rational& x : lambda_bar) {
      Rational entry = x * scale;
      if (entry.get_den() != 1)
        throw std::invalid_argument("exchange_distance: scaled shape is not integral");
      v.push_back(entry.get_num().get_si());
    }
    return v;
  };
  std::vector<long> big = scaled(m), small = scaled(n);
  Rational ffn(falling_factorial(Int(n), static_cast<unsigned>(k)));
  Rational ffm(falling_factorial(Int(m), static_cast<unsigned>(k)));
  Rational sum = 0;
  for (const Partition& mu : enumerate_partitions(k, d))
    sum += Rational(dim_sn(mu)) * abs(Rational(shifted_schur_eval(mu, small)) / ffn -
                                      Rational(shifted_schur_eval(mu, big)) / ffm);
  return sum / 2;
}

BoundReport lower_bound_antisym(int d, int m, int k) {
  if (!(k >= 2 && k < d)) throw std::invalid_argument("lower_bound_antisym: need 2 <= k < d");
  if (m < 1) throw std::invalid_argument("lower_bound_antisym: need m >= 1");
  long n = static_cast<long>(m) * d;
  Partition mu(std::vector<int>{1, 1});
  Partition la = Partition::rectangle(d, m);
  // Direct evaluation of the mu = (1,1) coefficient gap at la = (m^d).
  Rational shifted = frac(shifted_schur_eval(mu, la.padded(d)),
                          falling_factorial(Int(n), 2));
  Spectrum flat(static_cast<size_t>(d), Rational(1, d));
  Rational gap = shifted - schur_eval(mu, flat);
  Rational closed = Rational(dim_ud(mu, d)) * (d + 1) / (Rational(n - 1) * d * d);
  if (gap != closed) throw std::logic_error("lower_bound_antisym: gap identity failed");
  BoundReport rep;
  rep.bound_name = "antisymmetric-lower";
  rep.exact_distance = gap;
  rep.bound_value = frac(d, 2 * (n - 1)) * (1 - frac(1, static_cast<long>(d) * d));
  rep.satisfied = rep.exact_distance <= rep.bound_value;
  return rep;
}

Rational eps_coherent(const Partition& mu, const Partition& nu, int d) {
  if (mu.num_rows() > d || nu.num_rows() > d)
    throw std::invalid_argument("eps_coherent: weights need at most d rows");
  return 2 * (1 - frac(dim_ud(nu, d), dim_ud(mu.row_sum(nu), d)));
}

Rational eps_symmetric(long n, long k, long d) {
  if (n < 1 || k < 0 || d < 1) throw std::invalid_argument("eps_symmetric: bad arguments");
  return frac(2 * d * k, n);
}

Rational eps_mixed(long n, long k, long d) {
  if (n < 1 || k < 0 || d < 1) throw std::invalid_argument("eps_mixed: bad arguments");
  return frac(2 * d * d * k, n);
}

Rational eps_classical(long n, long k, long d) {
  if (n < 1 || k < 0 || d < 1) throw std::invalid_argument("eps_classical: bad arguments");
  return std::min(frac(d * k, n), frac(k * (k - 1), 2 * n));
}

}  // namespace definetti
