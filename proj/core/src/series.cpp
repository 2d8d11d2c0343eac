#include "fibercone/series.hpp"

#include <sstream>

#include "fibercone/errors.hpp"

namespace fibercone {

namespace {

void trim(std::vector<Int>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Int eval_at_one(const std::vector<Int>& p) {
  Int s = 0;
  for (const auto& c : p) s += c;
  return s;
}

// Exact division by (1 - t); caller checks p(1) == 0.
std::vector<Int> divide_by_one_minus_t(const std::vector<Int>& p) {
  // p = (1 - t) q  =>  q_k = p_0 + p_1 + ... + p_k
  std::vector<Int> q(p.size() ? p.size() - 1 : 0);
  Int run = 0;
  for (size_t k = 0; k < q.size(); ++k) {
    run += p[k];
    q[k] = run;
  }
  return q;
}

}  // namespace

HilbertSeries::HilbertSeries(std::vector<Int> numerator, int denom_power)
    : num_(std::move(numerator)), a_(denom_power) {
  if (a_ < 0) throw InvalidInput("negative denominator power");
  trim(num_);
  while (a_ > 0 && !num_.empty() && eval_at_one(num_) == 0) {
    num_ = divide_by_one_minus_t(num_);
    trim(num_);
    --a_;
  }
  if (num_.empty()) a_ = 0;
}

Int HilbertSeries::multiplicity() const { return eval_at_one(num_); }

int HilbertSeries::numerator_degree() const {
  return num_.empty() ? 0 : static_cast<int>(num_.size()) - 1;
}

Int HilbertSeries::coefficient(long long n) const {
  if (n < 0) return 0;
  Int s = 0;
  for (size_t k = 0; k < num_.size(); ++k) {
    long long shift = n - static_cast<long long>(k);
    if (shift < 0) break;
    if (a_ == 0) {
      if (shift == 0) s += num_[k];
    } else {
      s += num_[k] * binomial(shift + a_ - 1, a_ - 1);
    }
  }
  return s;
}

std::string HilbertSeries::str() const {
  if (num_.empty()) return "0";
  std::ostringstream num;
  bool first = true;
  int printed = 0;
  for (size_t k = 0; k < num_.size(); ++k) {
    const Int& c = num_[k];
    if (c == 0) continue;
    Int abs_c = abs(c);
    if (first) {
      if (c < 0) num << "-";
      first = false;
    } else {
      num << (c < 0 ? " - " : " + ");
    }
    bool unit_coeff = (abs_c == 1) && k > 0;
    if (!unit_coeff) num << abs_c.get_str();
    if (k == 1) num << "t";
    if (k > 1) num << "t^" << k;
    ++printed;
  }
  std::string n = num.str();
  if (a_ == 0) return n;
  std::string denom = a_ == 1 ? "(1-t)" : "(1-t)^" + std::to_string(a_);
  if (printed > 1) n = "(" + n + ")";
  return n + "/" + denom;
}

HilbertSeries rationalize(const std::vector<Int>& h, int guard_window) {
  if (guard_window < 1) throw InvalidInput("guard window must be positive");
  const int len = static_cast<int>(h.size());
  if (len == 0) throw NotStabilized("empty sample");
  std::vector<Int> g(h);
  for (int a = 0; a <= len; ++a) {
    // g = (1-t)^a * h, truncated to the sample length (exact there).
    int last_nonzero = -1;
    for (int k = 0; k < len; ++k) {
      if (g[k] != 0) last_nonzero = k;
    }
    if (last_nonzero < len - guard_window) {
      std::vector<Int> num(g.begin(), g.begin() + (last_nonzero + 1));
      return HilbertSeries(std::move(num), a);
    }
    // multiply by (1 - t) once more
    for (int k = len - 1; k >= 1; --k) g[k] -= g[k - 1];
  }
  throw NotStabilized("sample of length " + std::to_string(len) +
                      " is not eventually polynomial within the guard window");
}

Table2D mixed_differences(const Table2D& t, int p, int q) {
  if (p < 0 || q < 0) throw InvalidInput("negative difference order");
  if (t.rows() <= p || t.cols() <= q) {
    throw InvalidInput("grid too small for requested differences");
  }
  Table2D d(t.rows() - p, t.cols() - q);
  for (int r = 0; r < d.rows(); ++r) {
    for (int s = 0; s < d.cols(); ++s) {
      // Delta_1^p Delta_2^q via inclusion-exclusion over the (p, q) box.
      Int v = 0;
      for (int i = 0; i <= p; ++i) {
        for (int j = 0; j <= q; ++j) {
          Int term = binomial(p, i) * binomial(q, j) * t.at(r + i, s + j);
          if ((p - i + q - j) % 2 == 1) term = -term;
          v += term;
        }
      }
      d.at(r, s) = v;
    }
  }
  return d;
}

}  // namespace fibercone
