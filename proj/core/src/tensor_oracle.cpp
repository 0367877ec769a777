#include "definetti/tensor_oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

#include "definetti/util.hpp"

namespace definetti {

RationalMatrix RationalMatrix::zero(long n) {
  RationalMatrix m;
  m.n = n;
  m.num.assign(static_cast<size_t>(n * n), Int(0));
  return m;
}

RationalMatrix RationalMatrix::identity(long n) {
  RationalMatrix m = zero(n);
  for (long i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& other) const {
  if (n != other.n) throw std::invalid_argument("matrix size mismatch");
  RationalMatrix out = zero(n);
  out.den = den * other.den;
  parallel_for(static_cast<size_t>(n), [&](size_t row) {
    long i = static_cast<long>(row);
    for (long k = 0; k < n; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      const mpz_srcptr ap = a.get_mpz_t();
      for (long j = 0; j < n; ++j) {
        const Int& b = other.at(k, j);
        if (b == 0) continue;
        mpz_addmul(out.at(i, j).get_mpz_t(), ap, b.get_mpz_t());
      }
    }
  });
  return out;
}

void RationalMatrix::add_inplace(const RationalMatrix& other) {
  if (n != other.n) throw std::invalid_argument("matrix size mismatch");
  if (den == other.den) {
    for (size_t i = 0; i < num.size(); ++i) num[i] += other.num[i];
    return;
  }
  Int g;
  mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), other.den.get_mpz_t());
  Int mine = other.den / g, theirs = den / g;
  for (size_t i = 0; i < num.size(); ++i) num[i] = num[i] * mine + other.num[i] * theirs;
  den *= mine;
}

void RationalMatrix::scale(const Rational& q) {
  for (Int& x : num) x *= q.get_num();
  den *= q.get_den();
}

bool RationalMatrix::equals(const RationalMatrix& other) const {
  if (n != other.n) return false;
  for (size_t i = 0; i < num.size(); ++i)
    if (num[i] * other.den != other.num[i] * den) return false;
  return true;
}

Rational RationalMatrix::trace() const {
  Int t = 0;
  for (long i = 0; i < n; ++i) t += at(i, i);
  return frac(t, den);
}

void RationalMatrix::reduce() {
  Int g = den;
  for (const Int& x : num) {
    if (g == 1) return;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g == 0 || g == 1) return;
  for (Int& x : num) x /= g;
  den /= g;
}

long dense_dim(int d, int n) {
  if (d < 1 || n < 0) throw std::invalid_argument("dense_dim: bad arguments");
  long dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= d;
    if (dim > 1024) throw size_cap_error("dense size d^n exceeds 1024");
  }
  return dim;
}

namespace {

// The joint space of the mixture construction is only ever touched as a
// vector, so it gets a looser cap than the matrix axes.
long dense_vector_dim(int d, int n) {
  long dim = 1;
  for (int i = 0; i < n; ++i) {
    dim *= d;
    if (dim > 4096) throw size_cap_error("dense vector size d^n exceeds 4096");
  }
  return dim;
}

}  // namespace

namespace {

Partition strip_first(const Partition& p) {
  std::vector<int> rows(p.rows().begin() + 1, p.rows().end());
  return Partition(std::move(rows));
}

Int character_rec(const Partition& la, const Partition& type,
                  std::map<std::pair<Partition, Partition>, Int>& memo) {
  if (la.total() == 0) return 1;
  auto key = std::make_pair(la, type);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int strip = type.row(0);
  Partition rest = strip_first(type);
  int ell = la.num_rows();
  std::vector<long> beta(static_cast<size_t>(ell));
  for (int i = 0; i < ell; ++i) beta[static_cast<size_t>(i)] = la.row(i) + (ell - 1 - i);
  Int total = 0;
  for (int i = 0; i < ell; ++i) {
    long b = beta[static_cast<size_t>(i)];
    long target = b - strip;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    std::vector<long> nb = beta;
    nb[static_cast<size_t>(i)] = target;
    for (long x : beta)
      if (x > target && x < b) height++;
    std::sort(nb.begin(), nb.end(), std::greater<long>());
    std::vector<int> rows(static_cast<size_t>(ell));
    for (int r = 0; r < ell; ++r)
      rows[static_cast<size_t>(r)] = static_cast<int>(nb[static_cast<size_t>(r)] - (ell - 1 - r));
    Int sub = character_rec(Partition(std::move(rows)), rest, memo);
    if (height % 2)
      total -= sub;
    else
      total += sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Int sn_character(const Partition& la, const Partition& cycle_type) {
  if (la.total() != cycle_type.total())
    throw std::invalid_argument("sn_character: |la| must equal |cycle type|");
  static std::map<std::pair<Partition, Partition>, Int> memo;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lk(mtx);
  return character_rec(la, cycle_type, memo);
}

std::vector<std::vector<Int>> sn_character_table(int n) {
  auto pars = enumerate_partitions(n, n);
  std::vector<std::vector<Int>> table(pars.size(), std::vector<Int>(pars.size()));
  for (size_t i = 0; i < pars.size(); ++i)
    for (size_t j = 0; j < pars.size(); ++j) table[i][j] = sn_character(pars[i], pars[j]);
  return table;
}

namespace {

Partition cycle_type_of(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> cycles;
  for (size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    size_t cur = s;
    while (!seen[cur]) {
      seen[cur] = true;
      cur = static_cast<size_t>(perm[cur]);
      len++;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.begin(), cycles.end(), std::greater<int>());
  return Partition(std::move(cycles));
}

std::vector<int> digits_of(long x, int d, int n) {
  std::vector<int> dig(static_cast<size_t>(n));
  for (int j = n - 1; j >= 0; --j) {
    dig[static_cast<size_t>(j)] = static_cast<int>(x % d);
    x /= d;
  }
  return dig;
}

long index_of(const std::vector<int>& dig, int d) {
  long x = 0;
  for (int v : dig) x = x * d + v;
  return x;
}

}  // namespace

DenseOperator young_projector(const Partition& la, int n, int d) {
  if (la.total() != n) throw std::invalid_argument("young_projector: |la| must equal n");
  long N = dense_dim(d, n);
  // Character per cycle type, once.
  std::map<Partition, Int> chi;
  for (const Partition& rho : enumerate_partitions(n, n)) chi[rho] = sn_character(la, rho);
  Int dim_v = dim_sn(la);

  RationalMatrix P = RationalMatrix::zero(N);
  P.den = factorial(static_cast<unsigned>(n)) / dim_v;
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> all_digits(static_cast<size_t>(N));
  for (long x = 0; x < N; ++x) all_digits[static_cast<size_t>(x)] = digits_of(x, d, n);
  do {
    const Int& c = chi.at(cycle_type_of(perm));
    if (c == 0) continue;
    std::vector<int> ydig(static_cast<size_t>(n));
    for (long x = 0; x < N; ++x) {
      const auto& dig = all_digits[static_cast<size_t>(x)];
      for (int j = 0; j < n; ++j) ydig[static_cast<size_t>(perm[static_cast<size_t>(j)])] = dig[static_cast<size_t>(j)];
      P.at(index_of(ydig, d), x) += c;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  P.reduce();

  for (long i = 0; i < N; ++i)
    for (long j = i + 1; j < N; ++j)
      if (P.at(i, j) != P.at(j, i)) throw std::logic_error("young_projector: not symmetric");
  if (P.trace() != Rational(dim_v * dim_ud(la, d)))
    throw std::logic_error("young_projector: trace != dim_sn * dim_ud");
  return DenseOperator{n, d, std::move(P)};
}

DenseOperator dense_block_state(const Partition& la, int n, int d) {
  DenseOperator op = young_projector(la, n, d);
  Int dim = dim_sn(la) * dim_ud(la, d);
  if (dim == 0) throw std::invalid_argument("dense_block_state: empty block (more than d rows)");
  op.mat.scale(frac(Int(1), dim));
  return op;
}

DenseOperator dense_werner(const WernerState& w) {
  long N = dense_dim(w.d, w.k);
  RationalMatrix acc = RationalMatrix::zero(N);
  for (size_t i = 0; i < w.index.size(); ++i) {
    if (w.weights[i] == 0) continue;
    DenseOperator blk = dense_block_state(w.index[i], w.k, w.d);
    blk.mat.scale(w.weights[i]);
    acc.add_inplace(blk.mat);
  }
  acc.reduce();
  return DenseOperator{w.k, w.d, std::move(acc)};
}

DenseOperator dense_partial_trace(const DenseOperator& op, int keep) {
  if (keep < 0 || keep > op.n) throw std::invalid_argument("dense_partial_trace: bad keep");
  long M = dense_dim(op.d, keep);
  long D = dense_dim(op.d, op.n - keep);
  RationalMatrix out = RationalMatrix::zero(M);
  out.den = op.mat.den;
  for (long y = 0; y < M; ++y)
    for (long y2 = 0; y2 < M; ++y2) {
      Int& acc = out.at(y, y2);
      for (long z = 0; z < D; ++z) acc += op.mat.at(y * D + z, y2 * D + z);
    }
  if (out.trace() != op.mat.trace())
    throw std::logic_error("dense_partial_trace: trace not preserved");
  out.reduce();
  return DenseOperator{keep, op.d, std::move(out)};
}

Eigen::MatrixXcd to_complex(const DenseOperator& op) {
  long N = op.mat.n;
  Eigen::MatrixXcd m(N, N);
  double den = op.mat.den.get_d();
  for (long i = 0; i < N; ++i)
    for (long j = 0; j < N; ++j) m(i, j) = op.mat.at(i, j).get_d() / den;
  return m;
}

namespace {

void require_hermitian(const Eigen::MatrixXcd& a, const char* who) {
  double dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (dev > 1e-9) throw std::invalid_argument(std::string(who) + ": operator is not Hermitian");
}

}  // namespace

double dense_trace_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("dense_trace_distance: size mismatch");
  require_hermitian(a, "dense_trace_distance");
  require_hermitian(b, "dense_trace_distance");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a - b, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

WernerState dense_block_weights(const DenseOperator& rho) {
  auto idx = enumerate_partitions(rho.n, rho.d);
  std::vector<Rational> w;
  w.reserve(idx.size());
  for (const Partition& mu : idx) {
    DenseOperator proj = young_projector(mu, rho.n, rho.d);
    Int acc = 0;
    for (long i = 0; i < proj.mat.n; ++i)
      for (long j = 0; j < proj.mat.n; ++j) {
        const Int& p = proj.mat.at(i, j);
        if (p != 0) acc += p * rho.mat.at(j, i);
      }
    w.push_back(frac(acc, proj.mat.den * rho.mat.den));
  }
  return WernerState(rho.n, rho.d, std::move(w));
}

WernerState oracle_twirl_coeffs(const Spectrum& r, int k, int d) {
  if (static_cast<int>(r.size()) != d)
    throw std::invalid_argument("oracle_twirl_coeffs: spectrum length must equal d");
  if (!is_state_spectrum(r))
    throw std::invalid_argument("oracle_twirl_coeffs: r must be a state spectrum");
  long N = dense_dim(d, k);
  std::vector<Rational> point(static_cast<size_t>(N));
  for (long x = 0; x < N; ++x) {
    Rational p = 1;
    for (int v : digits_of(x, d, k)) p *= r[static_cast<size_t>(v)];
    point[static_cast<size_t>(x)] = std::move(p);
  }
  auto idx = enumerate_partitions(k, d);
  std::vector<Rational> w;
  w.reserve(idx.size());
  for (const Partition& la : idx) {
    DenseOperator proj = young_projector(la, k, d);
    Rational acc = 0;
    for (long x = 0; x < N; ++x)
      if (proj.mat.at(x, x) != 0) acc += Rational(proj.mat.at(x, x)) * point[static_cast<size_t>(x)];
    w.push_back(acc / Rational(proj.mat.den));
  }
  return WernerState(k, d, std::move(w));
}

WernerState oracle_partial_trace_coeffs(const Partition& la, int n, int k, int d) {
  if (k < 0 || k > n) throw std::invalid_argument("oracle_partial_trace_coeffs: bad k");
  DenseOperator rho = dense_block_state(la, n, d);
  DenseOperator red = dense_partial_trace(rho, k);
  return dense_block_weights(red);
}

namespace {

// Occupation classes of basis strings: class id per index plus class sizes.
struct TypeClasses {
  std::vector<int> class_of;
  std::vector<long> size;
};

TypeClasses type_classes(int d, int n) {
  long N = dense_vector_dim(d, n);
  TypeClasses tc;
  tc.class_of.resize(static_cast<size_t>(N));
  std::map<std::vector<int>, int> ids;
  for (long x = 0; x < N; ++x) {
    std::vector<int> count(static_cast<size_t>(d), 0);
    for (int v : digits_of(x, d, n)) count[static_cast<size_t>(v)]++;
    auto it = ids.find(count);
    int id;
    if (it == ids.end()) {
      id = static_cast<int>(ids.size());
      ids.emplace(std::move(count), id);
      tc.size.push_back(0);
    } else {
      id = it->second;
    }
    tc.class_of[static_cast<size_t>(x)] = id;
    tc.size[static_cast<size_t>(id)]++;
  }
  return tc;
}

// Projects v onto the symmetric subspace by averaging within each class.
void symmetrize(const TypeClasses& tc, Eigen::VectorXcd& v) {
  std::vector<std::complex<double>> sums(tc.size.size(), 0.0);
  for (long x = 0; x < v.size(); ++x) sums[static_cast<size_t>(tc.class_of[static_cast<size_t>(x)])] += v(x);
  for (long x = 0; x < v.size(); ++x) {
    int c = tc.class_of[static_cast<size_t>(x)];
    v(x) = sums[static_cast<size_t>(c)] / static_cast<double>(tc.size[static_cast<size_t>(c)]);
  }
}

Int sym_dim(int d, int n) { return binomial(Int(n + d - 1), static_cast<unsigned>(n)); }

}  // namespace

Eigen::VectorXcd random_symmetric_state(int n, int d, unsigned seed) {
  long N = dense_dim(d, n);
  TypeClasses tc = type_classes(d, n);
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::complex<double>> amp(tc.size.size());
  for (size_t c = 0; c < amp.size(); ++c) {
    double re = gauss(rng), im = gauss(rng);
    // Normalized occupation basis vector spreads 1/sqrt(class size) per string.
    amp[c] = std::complex<double>(re, im) / std::sqrt(static_cast<double>(tc.size[c]));
  }
  Eigen::VectorXcd psi(N);
  for (long x = 0; x < N; ++x) psi(x) = amp[static_cast<size_t>(tc.class_of[static_cast<size_t>(x)])];
  psi.normalize();
  return psi;
}

Eigen::MatrixXcd random_unitary(int d, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = std::complex<double>(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ();
  return q;
}

Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& g, int n) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXcd next(out.rows() * g.rows(), out.cols() * g.cols());
    for (long i1 = 0; i1 < out.rows(); ++i1)
      for (long j1 = 0; j1 < out.cols(); ++j1) next.block(i1 * g.rows(), j1 * g.cols(), g.rows(), g.cols()) = out(i1, j1) * g;
    out = std::move(next);
  }
  return out;
}

MixtureGap symmetric_mixture_gap(const Eigen::VectorXcd& psi, int n, int d, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("symmetric_mixture_gap: need 0 <= k <= n");
  long N = dense_dim(d, n);
  long big = dense_vector_dim(d, n + k);
  long K = dense_dim(d, k);
  if (psi.size() != N) throw std::invalid_argument("symmetric_mixture_gap: psi has wrong length");
  if (std::abs(psi.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("symmetric_mixture_gap: psi is not normalized");
  TypeClasses tc_n = type_classes(d, n);
  Eigen::VectorXcd proj = psi;
  symmetrize(tc_n, proj);
  if ((proj - psi).cwiseAbs().maxCoeff() > 1e-9)
    throw std::invalid_argument("symmetric_mixture_gap: psi is not symmetric");

  // Reduction of |psi><psi| to the first k systems.
  long D = dense_dim(d, n - k);
  Eigen::MatrixXcd reduced = Eigen::MatrixXcd::Zero(K, K);
  for (long y = 0; y < K; ++y)
    for (long y2 = 0; y2 < K; ++y2) {
      std::complex<double> acc = 0;
      for (long z = 0; z < D; ++z) acc += psi(y * D + z) * std::conj(psi(y2 * D + z));
      reduced(y, y2) = acc;
    }

  // M(y,y') = c <psi ox e_y| Pi_sym | psi ox e_y'>, c = dim Sym^n / dim Sym^{n+k}.
  TypeClasses tc_big = type_classes(d, n + k);
  Eigen::MatrixXcd M(K, K);
  Eigen::VectorXcd v(big);
  for (long y2 = 0; y2 < K; ++y2) {
    v.setZero();
    for (long x = 0; x < N; ++x) v(x * K + y2) = psi(x);
    symmetrize(tc_big, v);
    for (long y = 0; y < K; ++y) {
      std::complex<double> acc = 0;
      for (long x = 0; x < N; ++x) acc += std::conj(psi(x)) * v(x * K + y);
      M(y, y2) = acc;
    }
  }
  double scale = sym_dim(d, n).get_d() / sym_dim(d, n + k).get_d();
  M *= scale;

  MixtureGap out;
  out.bound = eps_symmetric(n, k, d);
  out.trace_error = std::abs(M.trace().real() - 1.0) + std::abs(M.trace().imag());
  require_hermitian(M, "symmetric_mixture_gap");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M, Eigen::EigenvaluesOnly);
  out.min_eigenvalue = es.eigenvalues().minCoeff();

  // M must live on the symmetric part of the k systems: pi M pi^+ = M.
  std::vector<int> pos(static_cast<size_t>(k));
  std::iota(pos.begin(), pos.end(), 0);
  auto permute_index = [&](long y) {
    std::vector<int> digits(static_cast<size_t>(k));
    long t = y;
    for (int i = k - 1; i >= 0; --i) { digits[static_cast<size_t>(i)] = static_cast<int>(t % d); t /= d; }
    long out_idx = 0;
    for (int i = 0; i < k; ++i) out_idx = out_idx * d + digits[static_cast<size_t>(pos[static_cast<size_t>(i)])];
    return out_idx;
  };
  do {
    for (long y = 0; y < K; ++y)
      for (long y2 = 0; y2 < K; ++y2) {
        double dev = std::abs(M(y, y2) - M(permute_index(y), permute_index(y2)));
        out.perm_deviation = std::max(out.perm_deviation, dev);
      }
  } while (std::next_permutation(pos.begin(), pos.end()));

  out.gap = dense_trace_distance(reduced, M);
  return out;
}

}  // namespace definetti
