#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "definetti/arith.hpp"

namespace definetti {

// Worker count: THREADS environment variable when set, else hardware
// concurrency. Always at least 1.
unsigned thread_count();

// Runs fn(i) for i in [0, total) across thread_count() workers on disjoint
// contiguous index ranges. Callers own determinism by writing to slot i only.
void parallel_for(size_t total, const std::function<void(size_t)>& fn);

// Incremental exact row space in echelon form, for rank and membership tests.
class RationalSpan {
 public:
  // Reduces v against the basis; extends the span when a residual remains.
  // Returns true when the vector enlarged the span.
  bool insert(std::vector<Rational> v);
  bool contains(std::vector<Rational> v) const;
  int rank() const { return static_cast<int>(basis_.size()); }

 private:
  void reduce(std::vector<Rational>& v) const;
  std::vector<std::vector<Rational>> basis_;  // each with leading 1 at pivot_
  std::vector<size_t> pivots_;
};

// RFC 4180: quote when the field holds a comma, quote, or newline.
std::string csv_quote(const std::string& field);

}  // namespace definetti
