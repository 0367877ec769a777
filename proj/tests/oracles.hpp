#pragma once

// Deliberately naive reference implementations used only by the tests. None
// of these share internals with the library: counting is by exhaustive
// filtering, schur values come from a Laplace-expanded determinant, and the
// small character tables are frozen literals.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "definetti/arith.hpp"
#include "definetti/partition.hpp"

namespace oracle {

using definetti::Int;
using definetti::Partition;
using definetti::Rational;

inline std::vector<std::pair<int, int>> cells_of(const Partition& la) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < la.num_rows(); ++i)
    for (int j = 0; j < la.row(i); ++j) cells.emplace_back(i, j);
  return cells;
}

// Standard fillings counted by trying every permutation of 1..n row-major.
inline long count_syt_brute(const Partition& la) {
  auto cells = cells_of(la);
  int n = static_cast<int>(cells.size());
  if (n == 0) return 1;
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  long count = 0;
  do {
    std::vector<std::vector<int>> grid(static_cast<size_t>(la.num_rows()));
    for (int i = 0; i < la.num_rows(); ++i) grid[static_cast<size_t>(i)].assign(static_cast<size_t>(la.row(i)), 0);
    for (int c = 0; c < n; ++c) grid[static_cast<size_t>(cells[static_cast<size_t>(c)].first)]
                                    [static_cast<size_t>(cells[static_cast<size_t>(c)].second)] = perm[static_cast<size_t>(c)];
    bool ok = true;
    for (int i = 0; ok && i < la.num_rows(); ++i)
      for (int j = 0; ok && j < la.row(i); ++j) {
        int v = grid[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (j + 1 < la.row(i) && grid[static_cast<size_t>(i)][static_cast<size_t>(j + 1)] <= v) ok = false;
        if (i + 1 < la.num_rows() && j < la.row(i + 1) && grid[static_cast<size_t>(i + 1)][static_cast<size_t>(j)] <= v)
          ok = false;
      }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Semistandard fillings counted by trying every function cells -> {1..max}.
inline long count_ssyt_brute(const Partition& la, int max_entry) {
  auto cells = cells_of(la);
  int n = static_cast<int>(cells.size());
  if (n == 0) return 1;
  std::vector<int> f(static_cast<size_t>(n), 1);
  long count = 0;
  while (true) {
    bool ok = true;
    auto at = [&](int i, int j) {
      for (int c = 0; c < n; ++c)
        if (cells[static_cast<size_t>(c)] == std::pair<int, int>{i, j}) return f[static_cast<size_t>(c)];
      return 0;
    };
    for (int i = 0; ok && i < la.num_rows(); ++i)
      for (int j = 0; ok && j < la.row(i); ++j) {
        if (j + 1 < la.row(i) && at(i, j + 1) < at(i, j)) ok = false;
        if (i + 1 < la.num_rows() && j < la.row(i + 1) && at(i + 1, j) <= at(i, j)) ok = false;
      }
    if (ok) ++count;
    int pos = n - 1;
    while (pos >= 0 && f[static_cast<size_t>(pos)] == max_entry) f[static_cast<size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++f[static_cast<size_t>(pos)];
  }
  return count;
}

// Complete homogeneous polynomial by recursion on the variable list.
inline Rational h_eval(int m, const std::vector<Rational>& x, size_t from = 0) {
  if (m == 0) return Rational(1);
  if (from == x.size()) return Rational(0);
  Rational sum = 0;
  Rational power = 1;
  for (int t = 0; t <= m; ++t) {
    sum += power * h_eval(m - t, x, from + 1);
    power *= x[from];
  }
  return sum;
}

inline Rational det_laplace(const std::vector<std::vector<Rational>>& m) {
  size_t n = m.size();
  if (n == 0) return Rational(1);
  if (n == 1) return m[0][0];
  Rational det = 0;
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    Rational term = m[0][c] * det_laplace(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

// Schur value from the Jacobi-Trudi determinant det(h_{mu_i - i + j}). The
// determinant vanishes on its own when mu has more rows than variables.
inline Rational schur_jt(const Partition& mu, const std::vector<Rational>& x) {
  size_t rows = static_cast<size_t>(std::max(mu.num_rows(), 1));
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(rows));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < rows; ++j) {
      int deg = mu.row(static_cast<int>(i)) - static_cast<int>(i) + static_cast<int>(j);
      m[i][j] = deg < 0 ? Rational(0) : h_eval(deg, x);
    }
  return det_laplace(m);
}

// Conjugacy class size of cycle type rho in S_n: n! / prod_i i^{m_i} m_i!.
inline Int class_size(const Partition& rho) {
  int n = rho.total();
  Int z = 1;
  int run = 0;
  for (int i = 0; i < rho.num_rows(); ++i) {
    z *= rho.row(i);
    ++run;
    if (i + 1 == rho.num_rows() || rho.row(i + 1) != rho.row(i)) {
      z *= definetti::factorial(run);
      run = 0;
    }
  }
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), definetti::factorial(n).get_mpz_t(), z.get_mpz_t());
  if (r != 0) throw std::logic_error("class size is not integral");
  return q;
}

// S_3 character table frozen by hand: rows (3), (2,1), (1,1,1); columns are
// cycle types (1,1,1), (2,1), (3).
inline Int s3_char(const Partition& la, const Partition& rho) {
  auto idx = [](const Partition& p) {
    if (p == Partition({3})) return 2;
    if (p == Partition({2, 1})) return 1;
    return 0;
  };
  static const int table[3][3] = {
      {1, 1, 1},    // trivial
      {2, 0, -1},   // standard
      {1, -1, 1},   // sign
  };
  int row = la == Partition({3}) ? 0 : la == Partition({2, 1}) ? 1 : 2;
  return table[row][idx(rho)];
}

}  // namespace oracle
