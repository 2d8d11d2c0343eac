#pragma once

#include <string>
#include <vector>

#include "fibercone/limits.hpp"
#include "fibercone/numbers.hpp"

namespace fibercone {

// A rational Hilbert series N(t)/(1-t)^a in reduced form: trailing numerator
// coefficient nonzero and, as long as a > 0, N(1) != 0.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  // Normalizes: strips trailing zeros and cancels (1-t) factors against the
  // denominator while possible.
  HilbertSeries(std::vector<Int> numerator, int denom_power);

  const std::vector<Int>& numerator() const { return num_; }
  int denom_power() const { return a_; }
  bool is_zero() const { return num_.empty(); }

  // N(1); the multiplicity when the series is a Hilbert series.
  Int multiplicity() const;
  // deg N; 0 for the zero series.
  int numerator_degree() const;

  // Coefficient of t^n in the power-series expansion.
  Int coefficient(long long n) const;

  std::string str() const;

  friend bool operator==(const HilbertSeries& x, const HilbertSeries& y) = default;

 private:
  std::vector<Int> num_;
  int a_ = 0;
};

// Recovers N(t)/(1-t)^a from the sample h(0), h(1), ... : the smallest a such
// that (1-t)^a * sum h(n) t^n has at least guard_window trailing zeros within
// the sample. Throws NotStabilized if no a works.
HilbertSeries rationalize(const std::vector<Int>& h, int guard_window = 4);

inline Int evaluate(const HilbertSeries& s, long long n) { return s.coefficient(n); }
inline Int series_multiplicity(const HilbertSeries& s) { return s.multiplicity(); }
inline int numerator_degree(const HilbertSeries& s) { return s.numerator_degree(); }

// Rectangular table of values L(r,s), r = 0..rows-1, s = 0..cols-1.
class Table2D {
 public:
  Table2D(int rows, int cols) : rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int r, int s) { return v_[static_cast<size_t>(r) * cols_ + s]; }
  const Int& at(int r, int s) const { return v_[static_cast<size_t>(r) * cols_ + s]; }

 private:
  int rows_, cols_;
  std::vector<Int> v_;
};

// Forward differences D1^p D2^q applied entrywise; the result has
// (rows-p) x (cols-q) entries. Throws InvalidInput when the grid is too small.
Table2D mixed_differences(const Table2D& t, int p, int q);

}  // namespace fibercone
