#include "definetti/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace definetti {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 0) throw std::invalid_argument("negative partition row");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw std::invalid_argument("partition rows must be weakly decreasing");
  }
}

Partition Partition::rectangle(int rows, int width) {
  if (rows < 0 || width < 0) throw std::invalid_argument("bad rectangle");
  if (width == 0) rows = 0;
  return Partition(std::vector<int>(static_cast<size_t>(rows), width));
}

int Partition::total() const {
  int t = 0;
  for (int r : rows_) t += r;
  return t;
}

std::vector<long> Partition::padded(int d) const {
  if (num_rows() > d) throw std::invalid_argument("partition has more than d rows");
  std::vector<long> v(static_cast<size_t>(d), 0);
  for (int i = 0; i < num_rows(); ++i) v[static_cast<size_t>(i)] = rows_[static_cast<size_t>(i)];
  return v;
}

bool Partition::contains(const Partition& inner) const {
  for (int i = 0; i < inner.num_rows(); ++i)
    if (inner.row(i) > row(i)) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> cols(static_cast<size_t>(empty() ? 0 : rows_[0]), 0);
  for (int r : rows_)
    for (int j = 0; j < r; ++j) cols[static_cast<size_t>(j)]++;
  return Partition(std::move(cols));
}

bool Partition::dominates(const Partition& other) const {
  if (total() != other.total()) return false;
  long a = 0, b = 0;
  int m = std::max(num_rows(), other.num_rows());
  for (int i = 0; i < m; ++i) {
    a += row(i);
    b += other.row(i);
    if (a < b) return false;
  }
  return true;
}

Partition Partition::row_sum(const Partition& other) const {
  int m = std::max(num_rows(), other.num_rows());
  std::vector<int> v(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) v[static_cast<size_t>(i)] = row(i) + other.row(i);
  return Partition(std::move(v));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (i) os << ',';
    os << rows_[i];
  }
  os << ']';
  return os.str();
}

Partition Partition::parse(const std::string& s) {
  std::vector<int> rows;
  std::string t = s;
  if (!t.empty() && t.front() == '[') t = t.substr(1);
  if (!t.empty() && t.back() == ']') t.pop_back();
  if (t.empty()) return Partition();
  std::istringstream is(t);
  std::string item;
  while (std::getline(is, item, ',')) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad partition: " + s);
    rows.push_back(v);
  }
  return Partition(std::move(rows));
}

namespace {

void enum_rec(int remaining, int max_part, int rows_left, std::vector<int>& acc,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  if (rows_left == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    enum_rec(remaining - p, p, rows_left - 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int k, int d) {
  if (k < 0 || d < 0) throw std::invalid_argument("enumerate_partitions: negative argument");
  std::vector<Partition> out;
  std::vector<int> acc;
  enum_rec(k, k, d, acc, out);
  return out;
}

namespace {

// Hook length of the 0-based cell (i, j) in a straight shape.
int hook_length(const Partition& la, const Partition& conj, int i, int j) {
  return (la.row(i) - j) + (conj.row(j) - i) - 1;
}

}  // namespace

Int dim_sn(const Partition& la) {
  Partition conj = la.conjugate();
  Int num = factorial(static_cast<unsigned>(la.total()));
  Int den = 1;
  for (int i = 0; i < la.num_rows(); ++i)
    for (int j = 0; j < la.row(i); ++j) den *= hook_length(la, conj, i, j);
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("hook length formula produced a non-integer");
  return q;
}

Int dim_ud(const Partition& la, int d) {
  if (d < 0) throw std::invalid_argument("dim_ud: negative d");
  if (la.num_rows() > d) return 0;
  Partition conj = la.conjugate();
  Int num = 1, den = 1;
  for (int i = 0; i < la.num_rows(); ++i)
    for (int j = 0; j < la.row(i); ++j) {
      num *= d + j - i;  // d + content
      den *= hook_length(la, conj, i, j);
    }
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("hook content formula produced a non-integer");
  return q;
}

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
  if (!outer.contains(inner)) throw std::invalid_argument("not a skew shape");
}

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  entries_.resize(static_cast<size_t>(shape_.outer.num_rows()));
  for (int i = 0; i < shape_.outer.num_rows(); ++i) {
    auto& row = entries_[static_cast<size_t>(i)];
    row.resize(static_cast<size_t>(shape_.outer.row(i)), 0);
    for (int j = 0; j < shape_.outer.row(i); ++j)
      if (shape_.cell_present(i, j) && row[static_cast<size_t>(j)] <= 0)
        throw std::invalid_argument("tableau cell missing an entry");
  }
}

bool Tableau::is_semistandard() const {
  for (int i = 0; i < shape_.outer.num_rows(); ++i)
    for (int j = shape_.inner.row(i); j < shape_.outer.row(i); ++j) {
      if (shape_.cell_present(i, j - 1) && entry(i, j - 1) > entry(i, j)) return false;
      if (i > 0 && shape_.cell_present(i - 1, j) && entry(i - 1, j) >= entry(i, j)) return false;
    }
  return true;
}

bool Tableau::is_reverse() const {
  for (int i = 0; i < shape_.outer.num_rows(); ++i)
    for (int j = shape_.inner.row(i); j < shape_.outer.row(i); ++j) {
      if (shape_.cell_present(i, j - 1) && entry(i, j - 1) < entry(i, j)) return false;
      if (i > 0 && shape_.cell_present(i - 1, j) && entry(i - 1, j) <= entry(i, j)) return false;
    }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_semistandard()) return false;
  std::vector<bool> seen(static_cast<size_t>(shape_.num_cells()) + 1, false);
  for (int i = 0; i < shape_.outer.num_rows(); ++i)
    for (int j = shape_.inner.row(i); j < shape_.outer.row(i); ++j) {
      int e = entry(i, j);
      if (e < 1 || e > shape_.num_cells() || seen[static_cast<size_t>(e)]) return false;
      seen[static_cast<size_t>(e)] = true;
    }
  return true;
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < shape_.outer.num_rows(); ++i) {
    if (i) os << '|';
    for (int j = 0; j < shape_.outer.row(i); ++j) {
      if (j) os << ' ';
      if (shape_.cell_present(i, j))
        os << entry(i, j);
      else
        os << '.';
    }
  }
  return os.str();
}

namespace {

struct FillCtx {
  const SkewShape& shape;
  int max_entry;
  bool reverse;  // false: semistandard discipline
  std::vector<std::vector<int>> grid;
  const std::function<void(const Tableau&)>& fn;
};

void fill_rec(FillCtx& ctx, int i, int j) {
  const SkewShape& sh = ctx.shape;
  if (i == sh.outer.num_rows()) {
    ctx.fn(Tableau(sh, ctx.grid));
    return;
  }
  if (j >= sh.outer.row(i)) {
    fill_rec(ctx, i + 1, sh.inner.row(i + 1));
    return;
  }
  int lo = 1, hi = ctx.max_entry;
  bool left = sh.cell_present(i, j - 1);
  bool up = i > 0 && sh.cell_present(i - 1, j);
  if (!ctx.reverse) {
    if (left) lo = std::max(lo, ctx.grid[static_cast<size_t>(i)][static_cast<size_t>(j - 1)]);
    if (up) lo = std::max(lo, ctx.grid[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] + 1);
  } else {
    if (left) hi = std::min(hi, ctx.grid[static_cast<size_t>(i)][static_cast<size_t>(j - 1)]);
    if (up) hi = std::min(hi, ctx.grid[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] - 1);
  }
  for (int v = lo; v <= hi; ++v) {
    ctx.grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    fill_rec(ctx, i, j + 1);
  }
  ctx.grid[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
}

void run_fill(const SkewShape& shape, int max_entry, bool reverse,
              const std::function<void(const Tableau&)>& fn) {
  if (max_entry < 0) throw std::invalid_argument("max_entry must be nonnegative");
  FillCtx ctx{shape, max_entry, reverse, {}, fn};
  ctx.grid.resize(static_cast<size_t>(shape.outer.num_rows()));
  for (int i = 0; i < shape.outer.num_rows(); ++i)
    ctx.grid[static_cast<size_t>(i)].assign(static_cast<size_t>(shape.outer.row(i)), 0);
  if (shape.outer.num_rows() == 0) {
    fn(Tableau(shape, {}));
    return;
  }
  fill_rec(ctx, 0, shape.inner.row(0));
}

}  // namespace

void for_each_ssyt(const SkewShape& shape, int max_entry,
                   const std::function<void(const Tableau&)>& fn) {
  run_fill(shape, max_entry, false, fn);
}

void for_each_reverse(const SkewShape& shape, int max_entry,
                      const std::function<void(const Tableau&)>& fn) {
  run_fill(shape, max_entry, true, fn);
}

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry) {
  std::vector<Tableau> out;
  for_each_ssyt(shape, max_entry, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

std::vector<Tableau> enumerate_reverse(const SkewShape& shape, int max_entry) {
  std::vector<Tableau> out;
  for_each_reverse(shape, max_entry, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

namespace {

Int dim_skew_rec(const Partition& outer, const Partition& inner,
                 std::map<std::pair<Partition, Partition>, Int>& memo) {
  if (outer.total() == inner.total()) return 1;  // containment forces equality
  auto key = std::make_pair(outer, inner);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Int total = 0;
  // Remove the cell holding the largest entry: any removable corner of outer
  // that stays outside inner.
  for (int i = 0; i < outer.num_rows(); ++i) {
    if (outer.row(i) == 0 || outer.row(i) == outer.row(i + 1)) continue;
    if (outer.row(i) - 1 < inner.row(i)) continue;
    std::vector<int> rows = outer.rows();
    rows[static_cast<size_t>(i)]--;
    total += dim_skew_rec(Partition(std::move(rows)), inner, memo);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Int dim_skew(const SkewShape& shape) {
  std::map<std::pair<Partition, Partition>, Int> memo;
  return dim_skew_rec(shape.outer, shape.inner, memo);
}

}  // namespace definetti
