#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fibercone/graded.hpp"
#include "fibercone/monomial.hpp"
#include "fibercone/series.hpp"

namespace fibercone {

// Finite poset on elements 0..n-1, stored transitively closed.
class Poset {
 public:
  // Covers are (a, b) meaning a < b; closure is computed here. Cycles raise
  // InvalidInput.
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers);
  static Poset chain(int n);
  static Poset antichain(int n);
  // 2x2 minors [a,b] (a < b <= n) of a generic 2 x n matrix, ordered
  // componentwise.
  static Poset minors_2xn(int n);
  // "element NAME" lines followed by "cover A < B" lines.
  static Poset parse(const std::string& text);

  int size() const { return n_; }
  bool less(int a, int b) const { return lt_[a][b]; }
  const std::vector<std::string>& names() const { return names_; }

  bool is_ideal(const std::vector<bool>& subset) const;
  // All pairs (Lambda, omega): Lambda a poset ideal, omega outside it with
  // every strictly smaller element inside. Enumerates all ideals; throws
  // BudgetExceeded past max_ideals.
  std::vector<std::pair<std::vector<bool>, int>> pairs(long long max_ideals = 1 << 20) const;

  // rank[element] in 0..n-1; order preserving bijection?
  bool is_linearization(const std::vector<int>& rank) const;

  // c_k = number of k-element chains, c_0 = 1.
  std::vector<Int> chain_counts() const;

 private:
  int n_ = 0;
  std::vector<std::vector<bool>> lt_;
  std::vector<std::string> names_;
};

// Pairs (j,k), 1-indexed, j <= k, with x_j x_k in (x_1, ..., x_{j-1}).
struct DeltaSet {
  int n = 0;
  std::set<std::pair<int, int>> pairs;

  friend bool operator==(const DeltaSet& a, const DeltaSet& b) = default;
};

DeltaSet compute_delta(const Ring& ring, const std::vector<Monomial>& gens);
DeltaSet compute_delta(const Ring& ring, const std::vector<Poly>& gens);

// Hilbert series of k[Delta] = k[T_1..T_n]/(T_j T_k | (j,k) in Delta),
// in reduced form.
HilbertSeries k_delta_series(const DeltaSet& d);

// Outcome of checking one pair (Lambda, omega) of the indexing poset.
struct PairCheck {
  std::vector<bool> lambda;
  int omega = 0;
  std::vector<int> theta;    // indices theta with x_theta in (X_Lambda : x_omega) cap I
  bool theta_is_ideal = false;
  bool axiom1 = false;       // X_Theta == (X_Lambda : x_omega) cap I
  bool axiom2 = false;       // x_omega X_Theta <= X_Lambda I
};

struct QuadSeqCertificate {
  std::vector<PairCheck> pair_checks;
  bool is_quadratic_sequence = false;
  // Filled by is_stable_linearization:
  std::vector<MonomialIdeal> colon_ideals;   // I_k = ((x_1..x_{k-1}) : x_k)
  std::vector<std::vector<int>> psi;         // Psi_k as sorted index lists
  std::vector<bool> stable_at;               // I_k == (A_k : x_k)
  bool stable = false;
};

// Checks both axioms for every pair of the poset. Monomial generators only.
QuadSeqCertificate verify_quadratic_sequence(const Poset& poset, const Ring& ring,
                                             const std::vector<Monomial>& gens);

// rank must be a linearization of the poset; gens are indexed by poset
// elements and get reordered by rank internally.
std::pair<bool, QuadSeqCertificate> is_stable_linearization(
    const Poset& poset, const Ring& ring, const std::vector<Monomial>& gens,
    const std::vector<int>& rank);

// Hilbert series of the face ring of the order complex: sum c_i t^i/(1-t)^i.
HilbertSeries face_ring_series(const Poset& poset);

struct DeterminantalSeries {
  std::vector<Int> h;       // h_0 .. h_{n-3}
  int denom_power = 0;      // 2n - 3
  int reduction_number = 0; // n - 3
};

// Closed-form h-vector h_i = C(n-2,i)^2 - C(n-3,i-1) C(n-1,i+1) for the ideal
// of 2x2 minors of a generic 2 x n matrix; n >= 3.
DeterminantalSeries determinantal_h_vector(int n);

// Moralès–Simis family: quadratic relations on T_3..T_{b-c+1} inside
// b-c+2 variables.
DeltaSet ms_delta(long long b_minus_c);
HilbertSeries family_series_ms(long long b_minus_c);

// Huckaba–Huneke family: quadratic relations on T_{m+1}..T_n.
DeltaSet hh_delta(int n, int m);
HilbertSeries family_series_hh(int n, int m);

}  // namespace fibercone
