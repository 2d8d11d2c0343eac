#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "fibercone/limits.hpp"
#include "fibercone/numbers.hpp"
#include "fibercone/ring.hpp"

namespace fibercone {

// A power product x1^e1 ... xd^ed. Exponents are 64-bit; anything that could
// overflow them blows every enumeration budget long before.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<long long> exps);
  static Monomial one(int dim);
  static Monomial var(int dim, int index, long long exp = 1);

  int dim() const { return static_cast<int>(e_.size()); }
  long long deg() const;
  long long operator[](int i) const { return e_[i]; }
  const std::vector<long long>& exps() const { return e_; }

  bool is_one() const;
  bool divides(const Monomial& u) const;
  Monomial operator*(const Monomial& u) const;
  // this / u; requires u | this.
  Monomial quotient_by(const Monomial& u) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<long long> e_;
};

// Generator order used everywhere output must be deterministic: total degree
// ascending, within a degree the earlier-variable-heavy monomial first.
bool canonical_less(const Monomial& a, const Monomial& b);

struct CanonicalLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return canonical_less(a, b);
  }
};

// A monomial ideal held by its unique minimal generating set, canonically
// sorted. Empty generator set = zero ideal; {1} = unit ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(Ring ring) : ring_(std::move(ring)) {}

  // Minimalizes: drops every generator divisible by another.
  static MonomialIdeal make(Ring ring, std::vector<Monomial> gens);
  static MonomialIdeal zero(Ring ring) { return MonomialIdeal(std::move(ring)); }
  static MonomialIdeal unit(Ring ring);
  // The irrelevant maximal ideal m = (x1, ..., xd).
  static MonomialIdeal variables(Ring ring);

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  // mu(I) = dim I/mI = number of minimal generators.
  int mu() const { return static_cast<int>(gens_.size()); }

  bool contains(const Monomial& f) const;
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ring_ == b.ring_ && a.gens_ == b.gens_;
  }

 private:
  Ring ring_;
  std::vector<Monomial> gens_;
};

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
// power(I, 0) is the unit ideal, also for I = 0.
MonomialIdeal power(const MonomialIdeal& a, long long n);
// (I : J) = intersection over generators g of J of (I : g); J must be nonzero.
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& a, const Monomial& g);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

// o(I): minimum total degree of a minimal generator; throws on the zero ideal.
long long order_of(const MonomialIdeal& a);

// True iff some pure power of every variable lies in the ideal.
bool is_artinian(const MonomialIdeal& a);

// Number of standard monomials of R/I, by bounded staircase enumeration.
// Throws NotArtinian, or BudgetExceeded when the bounding box is over budget.
Int artinian_length(const MonomialIdeal& a, const Limits& limits = {});

// Smallest M with m^M contained in I (so 1 + the largest degree of a standard
// monomial). Same preconditions as artinian_length.
long long artinian_socle_bound(const MonomialIdeal& a, const Limits& limits = {});

// Numerator N(t) with H_{R/I}(t) = N(t)/(1-t)^d, not reduced. Computed by the
// pivot recursion N(I) = N(I + (x)) + t N(I : x) on a degree-1 pivot, with
// pairwise-coprime pure-power ideals as base cases.
std::vector<Int> hilbert_numerator(const MonomialIdeal& a);

// Height = codimension: minimum size of a variable subset meeting the support
// of every generator. Exponential scan; fine at desk scale.
int height(const MonomialIdeal& a);

}  // namespace fibercone
