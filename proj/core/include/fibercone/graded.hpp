#pragma once

#include <map>
#include <vector>

#include "fibercone/monomial.hpp"
#include "fibercone/numbers.hpp"
#include "fibercone/ring.hpp"

namespace fibercone {

// Sparse polynomial with exact rational coefficients. Zero is the empty term
// map; homogeneity is a property, not an invariant, so the same class also
// carries the inhomogeneous reduction ideals handled by the truncation path.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int dim) : dim_(dim) {}
  static Poly from_monomial(const Monomial& m, const Rat& c = Rat(1));
  static Poly constant(int dim, const Rat& c);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_homogeneous() const;
  // Max/min total degree of a term; both throw InvalidInput on zero.
  long long degree() const;
  long long order() const;

  const std::map<Monomial, Rat, CanonicalLess>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rat& c);

  Poly operator+(const Poly& q) const;
  Poly operator-(const Poly& q) const;
  Poly operator*(const Poly& q) const;
  Poly scaled(const Rat& c) const;

  friend bool operator==(const Poly& p, const Poly& q);

 private:
  int dim_ = 0;
  std::map<Monomial, Rat, CanonicalLess> terms_;
};

// All monomials of total degree e in d variables, canonically ordered.
std::vector<Monomial> monomials_of_degree(int d, long long e);
// dim R_e = C(e+d-1, d-1).
Int dim_graded_piece(int d, long long e);

// Homogeneous ideal given by a generator list; zero generators are dropped,
// inhomogeneous ones rejected.
class GradedIdeal {
 public:
  explicit GradedIdeal(Ring ring) : ring_(std::move(ring)) {}
  GradedIdeal(Ring ring, std::vector<Poly> gens);
  static GradedIdeal from_monomial(const MonomialIdeal& a);

  const Ring& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  // Max generator degree; 0 for the zero ideal.
  long long max_gen_degree() const;

 private:
  Ring ring_;
  std::vector<Poly> gens_;
};

// Reduced row echelon basis of the degree-e piece of an ideal: the span of
// { u*g : g generator, u monomial of degree e - deg g }. Canonical given the
// fixed column order, so suitable for equality-of-span tests.
class PieceBasis {
 public:
  PieceBasis(const GradedIdeal& k, long long e);

  long long degree() const { return e_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  // Membership of a homogeneous f of degree e in the span.
  bool reduces_to_zero(const Poly& f) const;
  // Extend the span by one degree-e polynomial.
  void add(const Poly& f);

 private:
  friend PieceBasis piece_sum_basis(const GradedIdeal& a, const GradedIdeal& b, long long e);
  PieceBasis() = default;
  void absorb(std::map<int, Rat> row);
  void add_ideal(const GradedIdeal& k);

  long long e_ = 0;
  std::vector<Monomial> cols_;
  std::map<Monomial, int, CanonicalLess> colidx_;
  std::map<int, std::map<int, Rat>> rows_;  // pivot column -> reduced row
};

// Basis of the degree-e piece of a + b without forming the sum ideal.
PieceBasis piece_sum_basis(const GradedIdeal& a, const GradedIdeal& b, long long e);

int piece_dim(const GradedIdeal& k, long long e);
// Homogeneous membership; the zero polynomial is in everything.
bool member(const Poly& f, const GradedIdeal& k);
bool ideal_equals(const GradedIdeal& a, const GradedIdeal& b);

GradedIdeal sum(const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal product(const GradedIdeal& a, const GradedIdeal& b);
GradedIdeal power(const GradedIdeal& a, long long n);
// Drops generators lying in the ideal of the kept ones; spans are preserved.
GradedIdeal prune(const GradedIdeal& a);

// mu(K) = sum over e <= D(K) of [piece_dim(K,e) - piece_dim(mK,e)].
Int mu_graded(const GradedIdeal& k);

// Colength by summing codimensions of pieces until one fills up; searches
// degrees up to sum of generator degrees + dim by default. Throws NotArtinian.
Int artinian_length_graded(const GradedIdeal& k, long long degree_bound = -1);

// d homogeneous elements form a homogeneous system of parameters iff their
// ideal is Artinian; in the polynomial ring that is equivalent to being a
// regular sequence. Throws InvalidInput on wrong count.
bool is_parameter_system(const Ring& ring, const std::vector<Poly>& elems);

// ---------------------------------------------------------------------------
// Truncation machinery: the image of an arbitrary (possibly inhomogeneous)
// ideal in R/m^N as a subspace of the span of all monomials of degree < N.
// Exact for membership and colength questions about ideals already known to
// contain m^N. This is what makes the paper-style inhomogeneous minimal
// reductions computable without Groebner bases.
// ---------------------------------------------------------------------------
class TruncatedImage {
 public:
  TruncatedImage(const Ring& ring, const std::vector<Poly>& gens, long long n);

  long long level() const { return n_; }
  Int ambient_dim() const;  // number of monomials of degree < N
  int rank() const { return static_cast<int>(rows_.size()); }
  // f mod m^N in the image? Exact ideal membership when m^N <= ideal.
  bool contains(const Poly& f) const;
  // dim R/(ideal + m^N) = ambient_dim - rank; equals l(R/ideal) when
  // m^N <= ideal.
  Int colength() const;

 private:
  void absorb(std::map<long long, Rat> row);
  std::map<long long, Rat> truncate(const Poly& f) const;

  long long n_;
  int dim_;
  std::vector<Monomial> cols_;
  std::map<Monomial, long long, CanonicalLess> colidx_;
  std::map<long long, std::map<long long, Rat>> rows_;
};

}  // namespace fibercone
