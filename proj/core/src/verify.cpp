#include "definetti/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "definetti/geometry.hpp"
#include "definetti/lr_rule.hpp"
#include "definetti/tensor_oracle.hpp"
#include "definetti/util.hpp"
#include "definetti/werner.hpp"

namespace definetti {
namespace {

using Clock = std::chrono::steady_clock;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void fail(const std::string& msg) { throw Failure(msg); }

std::string count_note(long n) {
  std::ostringstream os;
  os << n << " cases";
  return os.str();
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 6), den(1, 6);
  return frac(num(rng), den(rng));
}

Spectrum random_point(std::mt19937& rng, int d) {
  Spectrum x(static_cast<size_t>(d));
  for (auto& v : x) v = random_rational(rng);
  return x;
}

Spectrum random_state(std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> num(0, 8);
  Spectrum x(static_cast<size_t>(d));
  Rational sum = 0;
  while (sum == 0) {
    sum = 0;
    for (auto& v : x) {
      v = Rational(num(rng));
      sum += v;
    }
  }
  for (auto& v : x) v /= sum;
  return x;
}

// Complete homogeneous h_0..h_max in the given variables, by the one-variable
// extension recurrence.
std::vector<Rational> homogeneous_table(const Spectrum& x, int max_deg) {
  std::vector<Rational> h(static_cast<size_t>(max_deg) + 1, Rational(0));
  h[0] = 1;
  for (const Rational& xi : x) {
    for (int m = 1; m <= max_deg; ++m)
      h[static_cast<size_t>(m)] += xi * h[static_cast<size_t>(m - 1)];
  }
  return h;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  size_t n = m.size();
  Rational det = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// --- partitions ------------------------------------------------------------

CheckResult check_tableau_counts() {
  long cases = 0;
  for (int n = 0; n <= 8; ++n)
    for (const Partition& la : enumerate_partitions(n, std::max(n, 1))) {
      SkewShape shape(la);
      long ssyt = 0, rev = 0;
      Int standard = 0;
      for_each_ssyt(shape, n, [&](const Tableau& t) {
        ++ssyt;
        if (t.is_standard()) ++standard;
      });
      for_each_reverse(shape, n, [&](const Tableau&) { ++rev; });
      if (standard != dim_sn(la)) fail("standard count mismatch at " + la.to_string());
      if (ssyt != rev) fail("reverse/ssyt cardinality mismatch at " + la.to_string());
      if (dim_skew(shape) != dim_sn(la)) fail("skew recursion mismatch at " + la.to_string());
      ++cases;
    }
  return {"partitions: tableau counts vs hook lengths", true, count_note(cases), 0};
}

CheckResult check_unitary_dims() {
  long cases = 0;
  for (int n = 0; n <= 6; ++n)
    for (int d = 1; d <= 4; ++d)
      for (const Partition& la : enumerate_partitions(n, d)) {
        long ssyt = 0;
        for_each_ssyt(SkewShape(la), d, [&](const Tableau&) { ++ssyt; });
        if (Int(ssyt) != dim_ud(la, d))
          fail("dim_ud mismatch at " + la.to_string() + " d=" + std::to_string(d));
        ++cases;
      }
  return {"partitions: dim_ud vs tableau enumeration", true, count_note(cases), 0};
}

CheckResult check_dimension_sum() {
  long cases = 0;
  for (int n = 0; n <= 6; ++n)
    for (int d = 1; d <= 3; ++d) {
      Int total = 0;
      for (const Partition& la : enumerate_partitions(n, d)) total += dim_sn(la) * dim_ud(la, d);
      Int expect;
      mpz_ui_pow_ui(expect.get_mpz_t(), static_cast<unsigned>(d), static_cast<unsigned>(n));
      if (total != expect) fail("dimension sum != d^n at n=" + std::to_string(n) + " d=" + std::to_string(d));
      ++cases;
    }
  return {"partitions: block dimension sum is d^n", true, count_note(cases), 0};
}

// --- symfunc ----------------------------------------------------------------

CheckResult check_schur_symmetry() {
  std::mt19937 rng(11);
  long cases = 0;
  for (int k = 1; k <= 4; ++k)
    for (int d = 2; d <= 4; ++d)
      for (const Partition& mu : enumerate_partitions(k, d))
        for (int rep = 0; rep < 3; ++rep) {
          Spectrum x = random_point(rng, d);
          Rational base = schur_eval(mu, x), mono = monomial_eval(mu, x);
          Spectrum y = x;
          std::shuffle(y.begin(), y.end(), rng);
          if (schur_eval(mu, y) != base) fail("schur not symmetric at " + mu.to_string());
          if (monomial_eval(mu, y) != mono) fail("monomial not symmetric at " + mu.to_string());
          Rational c = random_rational(rng);
          Spectrum cx = x;
          for (auto& v : cx) v *= c;
          Rational scale = 1;
          for (int i = 0; i < k; ++i) scale *= c;
          if (schur_eval(mu, cx) != scale * base) fail("schur not homogeneous at " + mu.to_string());
          ++cases;
        }
  return {"symfunc: schur symmetry and homogeneity", true, count_note(cases), 0};
}

CheckResult check_stability() {
  std::mt19937 rng(12);
  std::uniform_int_distribution<long> entry(0, 7);
  long cases = 0;
  for (int k = 1; k <= 4; ++k)
    for (const Partition& mu : enumerate_partitions(k, k))
      for (int rep = 0; rep < 4; ++rep) {
        Spectrum x = random_point(rng, 3);
        Spectrum padded = x;
        padded.push_back(Rational(0));
        padded.push_back(Rational(0));
        if (schur_eval(mu, padded) != schur_eval(mu, x)) fail("schur stability broken at " + mu.to_string());

        std::vector<long> la(4);
        for (auto& v : la) v = entry(rng);
        std::sort(la.begin(), la.end(), std::greater<>());
        std::vector<long> la_padded = la;
        la_padded.push_back(0);
        la_padded.push_back(0);
        if (shifted_schur_eval(mu, la_padded) != shifted_schur_eval(mu, la))
          fail("shifted schur stability broken at " + mu.to_string());
        ++cases;
      }
  return {"symfunc: stability under appended zeros", true, count_note(cases), 0};
}

CheckResult check_kostka() {
  std::mt19937 rng(13);
  long cases = 0;
  for (int k = 1; k <= 5; ++k)
    for (int d = 1; d <= 4; ++d) {
      KostkaMatrix km = kostka_matrix(k, d);
      size_t m = km.index.size();
      for (size_t i = 0; i < m; ++i) {
        if (km.kostka[i][i] != 1) fail("kostka diagonal != 1");
        for (size_t j = 0; j < m; ++j)
          if (km.kostka[i][j] != 0 && !km.index[i].dominates(km.index[j]))
            fail("kostka nonzero without dominance");
      }
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
          Rational acc = 0;
          for (size_t t = 0; t < m; ++t) acc += km.inverse[i][t] * Rational(km.kostka[t][j]);
          if (acc != Rational(i == j ? 1 : 0)) fail("kostka inverse product is not identity");
        }
      if (k <= 4 && d <= 3)
        for (int rep = 0; rep < 20; ++rep) {
          Spectrum x = random_point(rng, d);
          for (size_t i = 0; i < m; ++i) {
            Rational viaschur = 0;
            for (size_t t = 0; t < m; ++t) viaschur += km.inverse[i][t] * schur_eval(km.index[t], x);
            if (viaschur != monomial_eval(km.index[i], x)) fail("monomial expansion mismatch");
          }
        }
      ++cases;
    }
  return {"symfunc: kostka triangularity and inverse", true, count_note(cases), 0};
}

CheckResult check_jacobi_trudi() {
  std::mt19937 rng(14);
  long cases = 0;
  for (int k = 0; k <= 5; ++k)
    for (int d = 1; d <= 4; ++d)
      for (const Partition& mu : enumerate_partitions(k, k == 0 ? 1 : k))
        for (int rep = 0; rep < 2; ++rep) {
          Spectrum x = random_point(rng, d);
          auto h = homogeneous_table(x, k);
          int rows = std::max(mu.num_rows(), 1);
          std::vector<std::vector<Rational>> m(static_cast<size_t>(rows),
                                               std::vector<Rational>(static_cast<size_t>(rows)));
          for (int i = 0; i < rows; ++i)
            for (int j = 0; j < rows; ++j) {
              int deg = mu.row(i) - i + j;
              m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                  deg < 0 ? Rational(0) : h[static_cast<size_t>(deg)];
            }
          if (determinant(m) != schur_eval(mu, x))
            fail("jacobi-trudi mismatch at " + mu.to_string() + " d=" + std::to_string(d));
          ++cases;
        }
  return {"symfunc: jacobi-trudi determinant", true, count_note(cases), 0};
}

CheckResult check_twirl_normalization() {
  std::mt19937 rng(15);
  long cases = 0;
  for (int k = 0; k <= 5; ++k)
    for (int d = 1; d <= 4; ++d)
      for (int rep = 0; rep < 4; ++rep) {
        Spectrum r = random_state(rng, d);
        WernerState w = twirled_product(r, k, d);  // constructor enforces sum 1
        Rational sum = 0;
        for (const auto& v : w.weights) sum += v;
        if (sum != 1) fail("twirl weights do not sum to 1");
        ++cases;
      }
  return {"symfunc: twirl weights sum to 1", true, count_note(cases), 0};
}

CheckResult check_df_phi() {
  double tiny = df_phi(frac(1, 1000));
  double low = df_phi(frac(1, 10));
  double quarter = df_phi(frac(1, 4));
  double high = df_phi(frac(2, 5));
  if (!(quarter > 0)) fail("df_phi(1/4) not positive");
  if (!(tiny < low && low < quarter && quarter < high)) fail("df_phi not increasing on samples");
  if (!(tiny < 1e-2)) fail("df_phi does not vanish toward 0");
  return {"symfunc: df_phi positivity and growth", true, "4 samples", 0};
}

// --- lr ---------------------------------------------------------------------

CheckResult check_lr_symmetry() {
  long cases = 0;
  for (int n = 0; n <= 8; ++n)
    for (const Partition& la : enumerate_partitions(n, std::max(n, 1)))
      for (int k = 0; k <= n; ++k)
        for (const Partition& mu : enumerate_partitions(k, std::max(k, 1)))
          for (const Partition& nu : enumerate_partitions(n - k, std::max(n - k, 1))) {
            if (lr_coefficient(la, mu, nu) != lr_coefficient(la, nu, mu))
              fail("lr coefficient not symmetric at " + la.to_string());
            ++cases;
          }
  return {"lr: coefficient symmetry in (mu, nu)", true, count_note(cases), 0};
}

CheckResult check_lr_dimension_consistency() {
  long cases = 0;
  for (int d = 1; d <= 3; ++d)
    for (int a = 0; a <= 6; ++a)
      for (int b = 0; a + b <= 6; ++b)
        for (const Partition& mu : enumerate_partitions(a, std::max(a, 1)))
          for (const Partition& nu : enumerate_partitions(b, std::max(b, 1))) {
            Int lhs = dim_ud(mu, d) * dim_ud(nu, d);
            Int rhs = 0;
            int n = a + b;
            for (const Partition& la : enumerate_partitions(n, std::max(n, 1)))
              rhs += lr_coefficient(la, mu, nu) * dim_ud(la, d);
            if (lhs != rhs)
              fail("product dimension mismatch at " + mu.to_string() + "*" + nu.to_string() +
                   " d=" + std::to_string(d));
            ++cases;
          }
  return {"lr: tensor product dimension count", true, count_note(cases), 0};
}

CheckResult check_skew_identity() {
  long cases = 0;
  for (int n = 0; n <= 8; ++n)
    for (const Partition& la : enumerate_partitions(n, 4))
      for (int k = 0; k <= n; ++k)
        for (const Partition& mu : enumerate_partitions(k, 4)) {
          if (!la.contains(mu)) continue;
          if (!skew_dim_identity_check(la, mu)) fail("skew identity failed at " + la.to_string() + "/" + mu.to_string());
          ++cases;
        }
  return {"lr: skew dimension branching identity", true, count_note(cases), 0};
}

// --- werner ----------------------------------------------------------------

CheckResult check_ptrace_routes() {
  long cases = 0;
  for (int d = 1; d <= 4; ++d)
    for (int n = 0; n <= 8; ++n)
      for (const Partition& la : enumerate_partitions(n, d))
        for (int k = 0; k <= n; ++k) {
          WernerState a = partial_trace_coeffs_shifted(la, n, k, d);
          WernerState b = partial_trace_coeffs_lr(la, n, k, d);
          if (a.weights != b.weights)
            fail("route mismatch at " + la.to_string() + " k=" + std::to_string(k) +
                 " d=" + std::to_string(d));
          ++cases;
        }
  return {"werner: shifted and branching routes agree", true, count_note(cases), 0};
}

CheckResult check_ptrace_semigroup() {
  long cases = 0;
  for (int d = 1; d <= 4; ++d)
    for (int n = 0; n <= 8; ++n)
      for (const Partition& la : enumerate_partitions(n, d)) {
        std::map<std::pair<Partition, int>, WernerState> cache;
        for (int k = 0; k <= n; ++k) {
          WernerState mid = partial_trace_coeffs_shifted(la, n, k, d);
          for (int j = 0; j <= k; ++j) {
            WernerState direct = partial_trace_coeffs_shifted(la, n, j, d);
            std::vector<Rational> composed(direct.weights.size(), Rational(0));
            for (size_t i = 0; i < mid.index.size(); ++i) {
              if (mid.weights[i] == 0) continue;
              auto key = std::make_pair(mid.index[i], j);
              auto it = cache.find(key);
              if (it == cache.end())
                it = cache.emplace(key, partial_trace_coeffs_shifted(mid.index[i], k, j, d)).first;
              for (size_t t = 0; t < composed.size(); ++t)
                composed[t] += mid.weights[i] * it->second.weights[t];
            }
            if (composed != direct.weights)
              fail("semigroup mismatch at " + la.to_string() + " k=" + std::to_string(k) +
                   " j=" + std::to_string(j));
            ++cases;
          }
        }
      }
  return {"werner: reduction semigroup composition", true, count_note(cases), 0};
}

CheckResult check_grid_min_consistency() {
  long cases = 0;
  for (auto [rows, n, d] : {std::tuple<std::vector<int>, int, int>{{4, 2}, 6, 2},
                            {{3, 2, 1}, 6, 3},
                            {{2, 2, 2}, 6, 3}}) {
    Partition la{rows};
    WernerState target = partial_trace_coeffs_shifted(la, n, 2, d);
    Rational closed = distance_to_products_k2(target);
    int res = 120;
    GridMinimum g = min_distance_grid(target, res);
    if (g.value < closed) fail("grid minimum below the closed form at " + la.to_string());
    if (g.value > closed + frac(2, res)) fail("grid minimum misses the closed form at " + la.to_string());
    ++cases;
  }
  return {"werner: k=2 grid minimum matches closed form", true, count_note(cases), 0};
}

CheckResult check_antisym_vertex_max() {
  Partition anti{{1, 1}};
  long cases = 0;
  for (int d = 2; d <= 3; ++d) {
    Rational cap = frac(1, 2) * (1 - frac(1, d));
    for (const Spectrum& r : simplex_grid(d, 40)) {
      if (schur_eval(anti, r) > cap) fail("antisymmetric weight exceeds the vertex value, d=" + std::to_string(d));
      ++cases;
    }
    if (schur_eval(anti, simplex_vertex(d, d)) != cap)
      fail("vertex does not attain the antisymmetric maximum, d=" + std::to_string(d));
  }
  return {"werner: antisymmetric weight peaks at the balanced vertex", true, count_note(cases), 0};
}

CheckResult check_lower_bound_identity() {
  long cases = 0;
  for (int d = 3; d <= 5; ++d)
    for (int m = 1; m <= 3; ++m) {
      BoundReport r = lower_bound_antisym(d, m);  // throws when the two forms differ
      if (r.exact_distance < r.bound_value) fail("reduction gap below its closed form");
      ++cases;
    }
  return {"werner: rectangular lower bound identity", true, count_note(cases), 0};
}

// --- tensor_oracle -----------------------------------------------------------

CheckResult check_projector_algebra() {
  long cases = 0;
  for (int d = 2; d <= 3; ++d)
    for (int n = 1; n <= 5; ++n) {
      long N = dense_dim(d, n);
      std::vector<Partition> index = enumerate_partitions(n, d);
      std::vector<DenseOperator> proj;
      proj.reserve(index.size());
      for (const Partition& la : index) proj.push_back(young_projector(la, n, d));
      RationalMatrix sum = RationalMatrix::zero(N);
      for (size_t i = 0; i < proj.size(); ++i) {
        const RationalMatrix& p = proj[i].mat;
        if (!p.multiply(p).equals(p)) fail("projector is not idempotent at " + index[i].to_string());
        for (size_t j = i + 1; j < proj.size(); ++j) {
          RationalMatrix prod = p.multiply(proj[j].mat);
          if (!prod.equals(RationalMatrix::zero(N)))
            fail("projectors not orthogonal: " + index[i].to_string() + ", " + index[j].to_string());
        }
        sum.add_inplace(p);
        ++cases;
      }
      if (!sum.equals(RationalMatrix::identity(N)))
        fail("projectors do not resolve the identity at n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  return {"oracle: projector idempotence, orthogonality, completeness", true, count_note(cases), 0};
}

CheckResult check_projector_invariance() {
  long cases = 0;
  for (int d = 2; d <= 3; ++d)
    for (int n = 2; n <= 4; ++n) {
      long N = dense_dim(d, n);
      // digit strings, most significant = first factor
      auto permuted_index = [&](const std::vector<int>& perm, long x) {
        std::vector<int> digits(static_cast<size_t>(n));
        long t = x;
        for (int i = n - 1; i >= 0; --i) {
          digits[static_cast<size_t>(i)] = static_cast<int>(t % d);
          t /= d;
        }
        long out = 0;
        for (int i = 0; i < n; ++i) out = out * d + digits[static_cast<size_t>(perm[static_cast<size_t>(i)])];
        return out;
      };
      for (const Partition& la : enumerate_partitions(n, d)) {
        DenseOperator p = young_projector(la, n, d);
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
          for (long x = 0; x < N; ++x)
            for (long y = 0; y < N; ++y)
              if (p.mat.at(permuted_index(perm, x), permuted_index(perm, y)) != p.mat.at(x, y))
                fail("projector not permutation invariant at " + la.to_string());
        } while (std::next_permutation(perm.begin(), perm.end()));

        Eigen::MatrixXcd pc = to_complex(p);
        for (unsigned seed = 0; seed < 5; ++seed) {
          Eigen::MatrixXcd g = kron_power(random_unitary(d, seed), n);
          double dev = (g * pc * g.adjoint() - pc).norm();
          if (dev > 1e-9) fail("projector not unitary invariant at " + la.to_string());
        }
        ++cases;
      }
    }
  return {"oracle: projector invariance under S_n and U(d)", true, count_note(cases), 0};
}

CheckResult check_dense_reductions() {
  long cases = 0;
  for (int d = 2; d <= 3; ++d)
    for (int n = 1; n <= (d == 2 ? 5 : 4); ++n)
      for (const Partition& la : enumerate_partitions(n, d))
        for (int k = 0; k <= n; ++k) {
          DenseOperator rho = dense_block_state(la, n, d);
          DenseOperator red = dense_partial_trace(rho, k);  // asserts exact trace preservation
          WernerState viadense = dense_block_weights(red);
          WernerState direct = partial_trace_coeffs_shifted(la, n, k, d);
          if (viadense.weights != direct.weights)
            fail("dense reduction disagrees at " + la.to_string() + " k=" + std::to_string(k));
          ++cases;
        }
  return {"oracle: dense partial trace matches coefficient routes", true, count_note(cases), 0};
}

CheckResult check_mixture_moments() {
  long cases = 0;
  for (int k : {1, 2}) {
    for (unsigned seed = 0; seed < 3; ++seed) {
      Eigen::VectorXcd psi = random_symmetric_state(6, 2, seed);
      MixtureGap g = symmetric_mixture_gap(psi, 6, 2, k);
      if (g.min_eigenvalue < -1e-9) fail("mixture has a negative eigenvalue");
      if (g.trace_error > 1e-9) fail("mixture trace is off");
      if (g.perm_deviation > 1e-9) fail("mixture is not symmetric on the k systems");
      if (!(Rational(g.gap) <= g.bound)) fail("mixture gap exceeds 2dk/n");
      ++cases;
    }
  }
  return {"oracle: constructed mixture is a valid close state", true, count_note(cases), 0};
}

// --- geometry ----------------------------------------------------------------

CheckResult check_twirl_permutation() {
  std::mt19937 rng(17);
  long cases = 0;
  for (int k = 2; k <= 4; ++k)
    for (int d = 2; d <= 4; ++d)
      for (int rep = 0; rep < 5; ++rep) {
        Spectrum r = random_state(rng, d);
        WernerState base = twirled_product(r, k, d);
        Spectrum perm = r;
        std::shuffle(perm.begin(), perm.end(), rng);
        if (twirled_product(perm, k, d).weights != base.weights)
          fail("twirl changed under spectrum permutation");
        ++cases;
      }
  return {"geometry: twirl invariant under spectrum permutation", true, count_note(cases), 0};
}

Partition scale_shape(const Spectrum& lb, int n) {
  std::vector<int> rows;
  for (const Rational& v : lb) {
    Rational scaled = v * n;
    if (scaled.get_den() != 1) throw std::invalid_argument("scaled shape is not integral");
    rows.push_back(static_cast<int>(scaled.get_num().get_si()));
  }
  return Partition(std::move(rows));
}

CheckResult check_striation_convergence() {
  long cases = 0;
  const int k = 2;
  for (const auto& [shape, start] : {std::pair<std::vector<Rational>, int>{{frac(3, 4), frac(1, 4)}, 8},
                                     {{frac(1, 2), frac(1, 4), frac(1, 4)}, 8},
                                     {{frac(2, 3), frac(1, 3)}, 6}}) {
    Spectrum lb = shape;
    Rational last = 2;
    for (int n = start, step = 0; step < 4; n *= 2, ++step) {
      Partition la = scale_shape(lb, n);
      Rational dist = distance_to_twirled(la, n, k, lb);
      Rational lmin = lb.back() * n;
      Rational bound = frac(3 * k * (k - 1), 4) / lmin;
      if (!(dist <= 2 * bound)) fail("striation point too far from its limit at n=" + std::to_string(n));
      if (!(dist < last)) fail("striation distance not decreasing at n=" + std::to_string(n));
      last = dist;
      ++cases;
    }
  }
  return {"geometry: striations converge to the twirl image", true, count_note(cases), 0};
}

CheckResult check_hull_shapes() {
  ProjectedCloud tri = fk_image(3, 3, 60, Partition{{3}}, Partition{{2, 1}});
  std::vector<std::pair<Rational, Rational>> pts;
  for (const auto& p : tri.points) pts.emplace_back(p.x, p.y);
  if (convex_hull_2d(pts).size() != 3) fail("k=3 d=3 image hull is not a triangle");

  ProjectedCloud quad = fk_image(4, 3, 60, Partition{{4}}, Partition{{2, 2}});
  pts.clear();
  for (const auto& p : quad.points) pts.emplace_back(p.x, p.y);
  if (convex_hull_2d(pts).size() <= 4) fail("k=4 d=3 image hull has too few vertices");
  return {"geometry: hull vertex counts separate k=3 from k=4", true, "2 cases", 0};
}

CheckResult check_span_escape() {
  struct Case {
    int k, d;
    bool escapes;
  };
  for (Case c : {Case{2, 2, false}, Case{2, 3, false}, Case{3, 3, false}, Case{4, 3, true}}) {
    SpanTestResult r = polytope_span_test(c.k, c.d, 24);
    if (r.escapes != c.escapes)
      fail("span escape wrong at k=" + std::to_string(c.k) + " d=" + std::to_string(c.d));
  }
  return {"geometry: vertex span containment flips at k=4", true, "4 cases", 0};
}

CheckResult check_tangent_positive() {
  long cases = 0;
  for (int d : {3, 5})
    for (int q1 = 1; q1 < d; ++q1)
      for (int q2 = q1 + 1; q2 <= d; ++q2)
        for (int tnum = 1; tnum <= 3; ++tnum) {
          Rational t = frac(tnum, 4);
          Spectrum a(static_cast<size_t>(d), Rational(0));
          for (int i = 0; i < q2; ++i) a[static_cast<size_t>(i)] = (1 - t) / q2;
          for (int i = 0; i < q1; ++i) a[static_cast<size_t>(i)] += t / q1;
          if (!(tangent_test(3, d, a) > 0)) fail("tangent value not positive");
          ++cases;
        }
  return {"geometry: face tangent stays positive off vertices", true, count_note(cases), 0};
}

CheckResult timed(CheckResult (*fn)()) {
  auto t0 = Clock::now();
  CheckResult r;
  try {
    r = fn();
  } catch (const std::exception& e) {
    r = {"(unnamed)", false, e.what(), 0};
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

}  // namespace

std::vector<CheckResult> run_verification() {
  struct Entry {
    const char* name;
    CheckResult (*fn)();
  };
  const Entry entries[] = {
      {"partitions: tableau counts vs hook lengths", check_tableau_counts},
      {"partitions: dim_ud vs tableau enumeration", check_unitary_dims},
      {"partitions: block dimension sum is d^n", check_dimension_sum},
      {"symfunc: schur symmetry and homogeneity", check_schur_symmetry},
      {"symfunc: stability under appended zeros", check_stability},
      {"symfunc: kostka triangularity and inverse", check_kostka},
      {"symfunc: jacobi-trudi determinant", check_jacobi_trudi},
      {"symfunc: twirl weights sum to 1", check_twirl_normalization},
      {"symfunc: df_phi positivity and growth", check_df_phi},
      {"lr: coefficient symmetry in (mu, nu)", check_lr_symmetry},
      {"lr: tensor product dimension count", check_lr_dimension_consistency},
      {"lr: skew dimension branching identity", check_skew_identity},
      {"werner: shifted and branching routes agree", check_ptrace_routes},
      {"werner: reduction semigroup composition", check_ptrace_semigroup},
      {"werner: k=2 grid minimum matches closed form", check_grid_min_consistency},
      {"werner: antisymmetric weight peaks at the balanced vertex", check_antisym_vertex_max},
      {"werner: rectangular lower bound identity", check_lower_bound_identity},
      {"oracle: projector idempotence, orthogonality, completeness", check_projector_algebra},
      {"oracle: projector invariance under S_n and U(d)", check_projector_invariance},
      {"oracle: dense partial trace matches coefficient routes", check_dense_reductions},
      {"oracle: constructed mixture is a valid close state", check_mixture_moments},
      {"geometry: twirl invariant under spectrum permutation", check_twirl_permutation},
      {"geometry: striations converge to the twirl image", check_striation_convergence},
      {"geometry: hull vertex counts separate k=3 from k=4", check_hull_shapes},
      {"geometry: vertex span containment flips at k=4", check_span_escape},
      {"geometry: face tangent stays positive off vertices", check_tangent_positive},
  };
  std::vector<CheckResult> out;
  out.reserve(std::size(entries));
  for (const Entry& e : entries) {
    CheckResult r = timed(e.fn);
    r.name = e.name;  // stable even when the check throws early
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace definetti
