#include "definetti/symfunc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace definetti {

Spectrum parse_spectrum(const std::string& csv) {
  Spectrum r;
  std::istringstream is(csv);
  std::string item;
  while (std::getline(is, item, ',')) r.push_back(parse_rational(item));
  if (r.empty()) throw std::invalid_argument("empty spectrum");
  return r;
}

std::string spectrum_str(const Spectrum& r) {
  std::ostringstream os;
  for (size_t i = 0; i < r.size(); ++i) {
    if (i) os << ',';
    os << rational_str(r[i]);
  }
  return os.str();
}

bool is_state_spectrum(const Spectrum& r) {
  Rational sum = 0;
  for (const Rational& x : r) {
    if (x < 0) return false;
    sum += x;
  }
  return sum == 1;
}

Spectrum canonical_spectrum(Spectrum r) {
  std::sort(r.begin(), r.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return r;
}

Spectrum simplex_vertex(int q, int d) {
  if (q < 1 || q > d) throw std::invalid_argument("simplex_vertex: need 1 <= q <= d");
  Spectrum r(static_cast<size_t>(d), Rational(0));
  for (int i = 0; i < q; ++i) r[static_cast<size_t>(i)] = Rational(1, q);
  return r;
}

namespace {

// Flattened fillings of a straight shape, cached per (shape, max_entry,
// discipline). Cell order is row-major; contents[c] = col - row of cell c.
struct FillingSet {
  std::vector<int> contents;
  std::vector<std::vector<signed char>> fillings;
};

const FillingSet& cached_fillings(const Partition& mu, int max_entry, bool reverse) {
  static std::map<std::tuple<Partition, int, bool>, FillingSet> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lk(mtx);
  auto key = std::make_tuple(mu, max_entry, reverse);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  FillingSet set;
  for (int i = 0; i < mu.num_rows(); ++i)
    for (int j = 0; j < mu.row(i); ++j) set.contents.push_back(j - i);
  SkewShape shape(mu);
  auto collect = [&](const Tableau& t) {
    std::vector<signed char> flat;
    flat.reserve(set.contents.size());
    for (int i = 0; i < mu.num_rows(); ++i)
      for (int j = 0; j < mu.row(i); ++j) flat.push_back(static_cast<signed char>(t.entry(i, j)));
    set.fillings.push_back(std::move(flat));
  };
  if (reverse)
    for_each_reverse(shape, max_entry, collect);
  else
    for_each_ssyt(shape, max_entry, collect);
  return cache.emplace(std::move(key), std::move(set)).first->second;
}

}  // namespace

Rational schur_eval(const Partition& mu, const Spectrum& x) {
  int d = static_cast<int>(x.size());
  if (d == 0) throw std::invalid_argument("schur_eval: empty point");
  if (mu.num_rows() > d) return 0;
  const FillingSet& set = cached_fillings(mu, d, false);
  Rational sum = 0, term;
  for (const auto& f : set.fillings) {
    term = 1;
    for (signed char e : f) term *= x[static_cast<size_t>(e - 1)];
    sum += term;
  }
  return sum;
}

Int shifted_schur_eval(const Partition& mu, const std::vector<long>& lambda) {
  int d = static_cast<int>(lambda.size());
  if (d == 0) throw std::invalid_argument("shifted_schur_eval: empty point");
  if (mu.num_rows() > d) return 0;
  const FillingSet& set = cached_fillings(mu, d, true);
  Int sum = 0, term;
  for (const auto& f : set.fillings) {
    term = 1;
    for (size_t c = 0; c < f.size(); ++c)
      term *= lambda[static_cast<size_t>(f[c] - 1)] - set.contents[c];
    sum += term;
  }
  return sum;
}

Rational monomial_eval(const Partition& la, const Spectrum& x) {
  int d = static_cast<int>(x.size());
  if (d == 0) throw std::invalid_argument("monomial_eval: empty point");
  if (la.num_rows() > d) return 0;
  std::vector<long> expo = la.padded(d);
  std::sort(expo.begin(), expo.end());
  Rational sum = 0, term;
  do {
    term = 1;
    for (int i = 0; i < d; ++i)
      for (long e = 0; e < expo[static_cast<size_t>(i)]; ++e) term *= x[static_cast<size_t>(i)];
    sum += term;
  } while (std::next_permutation(expo.begin(), expo.end()));
  return sum;
}

const Rational& KostkaMatrix::kappa(const Partition& la, const Partition& mu) const {
  auto pos = [&](const Partition& p) {
    auto it = std::find(index.begin(), index.end(), p);
    if (it == index.end()) throw std::invalid_argument("partition not in Par(k,d)");
    return static_cast<size_t>(it - index.begin());
  };
  return inverse[pos(mu)][pos(la)];
}

KostkaMatrix kostka_matrix(int k, int d) {
  KostkaMatrix km;
  km.k = k;
  km.d = d;
  km.index = enumerate_partitions(k, d);
  size_t p = km.index.size();
  std::map<std::vector<int>, size_t> by_content;
  for (size_t i = 0; i < p; ++i) {
    std::vector<int> c(static_cast<size_t>(d), 0);
    for (int i2 = 0; i2 < km.index[i].num_rows(); ++i2)
      c[static_cast<size_t>(i2)] = km.index[i].row(i2);
    by_content[c] = i;
  }
  km.kostka.assign(p, std::vector<Int>(p, 0));
  for (size_t i = 0; i < p; ++i) {
    for_each_ssyt(SkewShape(km.index[i]), d, [&](const Tableau& t) {
      std::vector<int> content(static_cast<size_t>(d), 0);
      for (int r = 0; r < km.index[i].num_rows(); ++r)
        for (int j = 0; j < km.index[i].row(r); ++j)
          content[static_cast<size_t>(t.entry(r, j) - 1)]++;
      auto it = by_content.find(content);
      if (it != by_content.end()) km.kostka[i][it->second] += 1;
    });
  }
  // Exact Gauss-Jordan inverse. K is unitriangular in dominance order, which
  // the reverse-lexicographic index refines, so the pivot is always nonzero.
  std::vector<std::vector<Rational>> a(p, std::vector<Rational>(2 * p, Rational(0)));
  for (size_t i = 0; i < p; ++i) {
    for (size_t j = 0; j < p; ++j) a[i][j] = Rational(km.kostka[i][j]);
    a[i][p + i] = 1;
  }
  for (size_t col = 0; col < p; ++col) {
    size_t piv = col;
    while (piv < p && a[piv][col] == 0) ++piv;
    if (piv == p) throw std::logic_error("kostka matrix is singular");
    std::swap(a[piv], a[col]);
    Rational inv = 1 / a[col][col];
    for (size_t j = 0; j < 2 * p; ++j) a[col][j] *= inv;
    for (size_t r = 0; r < p; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (size_t j = 0; j < 2 * p; ++j) a[r][j] -= f * a[col][j];
    }
  }
  km.inverse.assign(p, std::vector<Rational>(p, Rational(0)));
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < p; ++j) km.inverse[i][j] = a[i][p + j];
  return km;
}

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration.
void legendre_rule(int m, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(static_cast<size_t>(m));
  weights.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int n = 2; n <= m; ++n) {
        double p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[static_cast<size_t>(i)] = x;
    weights[static_cast<size_t>(i)] = 2.0 / ((1 - x * x) * dp * dp);
  }
}

double gl_panels(double a, double b, int panels, const std::vector<double>& nodes,
                 const std::vector<double>& weights, const std::function<double(double)>& f) {
  double total = 0;
  double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    double lo = a + p * h, mid = lo + h / 2, half = h / 2;
    for (size_t i = 0; i < nodes.size(); ++i)
      total += weights[i] * half * f(mid + half * nodes[i]);
  }
  return total;
}

double integrate_adaptive(double a, double b, const std::function<double(double)>& f) {
  static std::vector<double> nodes, weights;
  static std::once_flag once;
  std::call_once(once, [] { legendre_rule(16, nodes, weights); });
  double prev = gl_panels(a, b, 1, nodes, weights, f);
  for (int panels = 2; panels <= 1 << 16; panels *= 2) {
    double cur = gl_panels(a, b, panels, nodes, weights, f);
    if (std::abs(cur - prev) < 1e-9) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace

double df_phi(const Rational& alpha) {
  if (!(alpha > 0 && alpha < Rational(1, 2)))
    throw std::domain_error("df_phi: alpha must lie in (0, 1/2)");
  double a = to_double(alpha);
  auto f = [a](double u) {
    return std::abs(1.0 - std::sqrt(1.0 - a) * std::exp(a * u * u / 2)) * std::exp(-u * u / 2);
  };
  // Kink where sqrt(1-a) e^{a u^2/2} = 1; the factors are smooth on each side.
  double kink = std::sqrt(std::log(1.0 / (1.0 - a)) / a);
  double upper = std::max(kink + 1.0, std::sqrt(90.0 / (1.0 - a)));
  double integral = integrate_adaptive(0.0, std::min(kink, upper), f) +
                    integrate_adaptive(std::min(kink, upper), upper, f);
  return integral / std::sqrt(2.0 * M_PI);
}

}  // namespace definetti
