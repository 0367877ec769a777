#include "definetti/util.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace definetti {

unsigned thread_count() {
  if (const char* env = std::getenv("THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void parallel_for(size_t total, const std::function<void(size_t)>& fn) {
  unsigned workers = std::min<size_t>(thread_count(), total ? total : 1);
  if (workers <= 1) {
    for (size_t i = 0; i < total; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mtx;
  size_t chunk = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    size_t lo = w * chunk, hi = std::min(total, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      try {
        for (size_t i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(error_mtx);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

void RationalSpan::reduce(std::vector<Rational>& v) const {
  // Basis rows are fully reduced (zeros at every other pivot), so one pass
  // suffices.
  for (size_t b = 0; b < basis_.size(); ++b) {
    Rational f = v[pivots_[b]];
    if (f == 0) continue;
    for (size_t j = 0; j < v.size(); ++j) v[j] -= f * basis_[b][j];
  }
}

bool RationalSpan::insert(std::vector<Rational> v) {
  reduce(v);
  auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
  if (lead == v.end()) return false;
  size_t pivot = static_cast<size_t>(lead - v.begin());
  Rational inv = 1 / *lead;
  for (Rational& x : v) x *= inv;
  for (size_t b = 0; b < basis_.size(); ++b) {
    Rational f = basis_[b][pivot];
    if (f == 0) continue;
    for (size_t j = 0; j < v.size(); ++j) basis_[b][j] -= f * v[j];
  }
  basis_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool RationalSpan::contains(std::vector<Rational> v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace definetti
