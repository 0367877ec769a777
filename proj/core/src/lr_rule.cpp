#include "definetti/lr_rule.hpp"

namespace definetti {

namespace {

struct LRCtx {
  const Partition& la;
  const Partition& mu;
  const Partition& nu;
  std::vector<std::vector<int>> grid;  // 0 = unset
  std::vector<int> count;              // occurrences of each value so far
  long found = 0;
};

// Cells are filled in reverse-reading-word order (each row right to left,
// rows top to bottom), so the lattice condition can be enforced per step.
void lr_rec(LRCtx& c, int i, int j) {
  if (i == c.la.num_rows()) {
    c.found++;
    return;
  }
  if (j < c.mu.row(i)) {
    lr_rec(c, i + 1, c.la.row(i + 1) - 1);
    return;
  }
  int lo = 1, hi = c.nu.num_rows();
  // Right neighbor was filled earlier in this order.
  if (j + 1 < c.la.row(i)) hi = std::min(hi, c.grid[static_cast<size_t>(i)][static_cast<size_t>(j + 1)]);
  if (i > 0 && j < c.la.row(i - 1) && j >= c.mu.row(i - 1))
    lo = std::max(lo, c.grid[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] + 1);
  for (int v = lo; v <= hi; ++v) {
    if (c.count[static_cast<size_t>(v)] >= c.nu.row(v - 1)) continue;      // content bound
    if (v > 1 && c.count[static_cast<size_t>(v)] >= c.count[static_cast<size_t>(v - 1)]) continue;  // lattice
    c.grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    c.count[static_cast<size_t>(v)]++;
    lr_rec(c, i, j - 1);
    c.count[static_cast<size_t>(v)]--;
    c.grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
  }
}

}  // namespace

Int lr_coefficient(const Partition& la, const Partition& mu, const Partition& nu) {
  if (la.total() != mu.total() + nu.total()) return 0;
  if (!la.contains(mu)) return 0;
  if (la.total() == mu.total()) return 1;  // nu empty, la == mu
  LRCtx c{la, mu, nu, {}, std::vector<int>(static_cast<size_t>(nu.num_rows()) + 1, 0), 0};
  c.grid.resize(static_cast<size_t>(la.num_rows()));
  for (int i = 0; i < la.num_rows(); ++i)
    c.grid[static_cast<size_t>(i)].assign(static_cast<size_t>(la.row(i)), 0);
  lr_rec(c, 0, la.row(0) - 1);
  return c.found;
}

bool skew_dim_identity_check(const Partition& la, const Partition& mu) {
  if (!la.contains(mu)) throw std::invalid_argument("not a skew shape");
  Int lhs = dim_skew(SkewShape(la, mu));
  Int rhs = 0;
  int rest = la.total() - mu.total();
  for (const Partition& nu : enumerate_partitions(rest, la.num_rows() == 0 ? 1 : la.num_rows()))
    rhs += lr_coefficient(la, mu, nu) * dim_sn(nu);
  return lhs == rhs;
}

}  // namespace definetti
