#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "definetti/arith.hpp"

namespace definetti {

// Dominant weight / Young diagram: weakly decreasing positive rows.
// Trailing zeros are stripped on construction, so (2,1,0) == (2,1).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> rows);
  static Partition rectangle(int rows, int width);  // (width^rows)

  int num_rows() const { return static_cast<int>(rows_.size()); }
  int row(int i) const {  // 0-based; rows past the end are 0
    return i < num_rows() ? rows_[static_cast<size_t>(i)] : 0;
  }
  int total() const;
  bool empty() const { return rows_.empty(); }
  const std::vector<int>& rows() const { return rows_; }
  std::vector<long> padded(int d) const;

  bool contains(const Partition& inner) const;
  Partition conjugate() const;
  // Dominance order: partial sums of *this >= those of other. Requires equal
  // totals to be an order; returns false when totals differ.
  bool dominates(const Partition& other) const;
  Partition row_sum(const Partition& other) const;  // (mu + nu)_i = mu_i + nu_i

  std::string to_string() const;                 // "[2,1]", "[]" when empty
  static Partition parse(const std::string& s);  // "2,1"; "" or "0" -> empty

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> rows_;
};

// Par(k, d) in reverse-lexicographic order: (k) first, then (k-1,1), ...
std::vector<Partition> enumerate_partitions(int k, int d);

// Dimension of the S_n irrep V_lambda (hook length formula), n = |lambda|.
Int dim_sn(const Partition& la);

// Dimension of the U(d) irrep U^d_lambda (hook content formula); 0 when
// lambda has more than d rows.
Int dim_ud(const Partition& la, int d);

// outer/inner pair with containment enforced at construction.
struct SkewShape {
  Partition outer, inner;
  SkewShape(Partition outer_, Partition inner_);
  explicit SkewShape(Partition straight) : SkewShape(std::move(straight), Partition()) {}
  int num_cells() const { return outer.total() - inner.total(); }
  bool cell_present(int i, int j) const {  // 0-based row/col
    return j >= inner.row(i) && j < outer.row(i);
  }
};

// Filling of a skew shape. Entries are stored in a row-aligned grid with 0
// marking absent cells. Validators are total; they never throw.
class Tableau {
 public:
  Tableau(SkewShape shape, std::vector<std::vector<int>> entries);
  const SkewShape& shape() const { return shape_; }
  int entry(int i, int j) const { return entries_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  bool is_semistandard() const;  // rows weakly increase, columns strictly increase
  bool is_reverse() const;       // rows weakly decrease, columns strictly decrease
  bool is_standard() const;      // semistandard and entries are exactly 1..cells
  std::string to_string() const;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> entries_;
};

// Row-major lexicographic backtracking; deterministic emission order.
void for_each_ssyt(const SkewShape& shape, int max_entry,
                   const std::function<void(const Tableau&)>& fn);
void for_each_reverse(const SkewShape& shape, int max_entry,
                      const std::function<void(const Tableau&)>& fn);
std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry);
std::vector<Tableau> enumerate_reverse(const SkewShape& shape, int max_entry);

// Number of standard fillings of the skew shape (corner-peeling recursion).
Int dim_skew(const SkewShape& shape);

}  // namespace definetti
