#include "fibercone/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "fibercone/errors.hpp"

namespace fibercone {

Monomial::Monomial(std::vector<long long> exps) : e_(std::move(exps)) {
  for (long long v : e_) {
    if (v < 0) throw InvalidInput("negative exponent in monomial");
  }
}

Monomial Monomial::one(int dim) { return Monomial(std::vector<long long>(dim, 0)); }

Monomial Monomial::var(int dim, int index, long long exp) {
  std::vector<long long> e(dim, 0);
  e[index] = exp;
  return Monomial(std::move(e));
}

long long Monomial::deg() const {
  return std::accumulate(e_.begin(), e_.end(), 0LL);
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](long long v) { return v == 0; });
}

bool Monomial::divides(const Monomial& u) const {
  for (int i = 0; i < dim(); ++i) {
    if (e_[i] > u.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& u) const {
  std::vector<long long> e(e_);
  for (int i = 0; i < dim(); ++i) e[i] += u.e_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::quotient_by(const Monomial& u) const {
  std::vector<long long> e(e_);
  for (int i = 0; i < dim(); ++i) {
    e[i] -= u.e_[i];
    if (e[i] < 0) throw InvalidInput("monomial quotient is not exact");
  }
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<long long> e(a.e_);
  for (int i = 0; i < a.dim(); ++i) e[i] = std::max(e[i], b.e_[i]);
  return Monomial(std::move(e));
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  long long da = a.deg(), db = b.deg();
  if (da != db) return da < db;
  // within a degree: more weight on earlier variables comes first
  return a.exps() > b.exps();
}

// --- MonomialIdeal ---------------------------------------------------------

MonomialIdeal MonomialIdeal::make(Ring ring, std::vector<Monomial> gens) {
  const int d = ring.dim();
  for (const auto& g : gens) {
    if (g.dim() != d) throw InvalidInput("monomial dimension does not match ring");
  }
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // sorted by degree, so a divisor always precedes its multiples
  std::vector<Monomial> minimal;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : minimal) {
      if (h.deg() >= g.deg()) break;  // equal-degree monomials never divide
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g);
  }
  MonomialIdeal out(std::move(ring));
  out.gens_ = std::move(minimal);
  return out;
}

MonomialIdeal MonomialIdeal::unit(Ring ring) {
  const int d = ring.dim();
  return make(std::move(ring), {Monomial::one(d)});
}

MonomialIdeal MonomialIdeal::variables(Ring ring) {
  const int d = ring.dim();
  std::vector<Monomial> gens;
  gens.reserve(d);
  for (int i = 0; i < d; ++i) gens.push_back(Monomial::var(d, i));
  return make(std::move(ring), std::move(gens));
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0].is_one();
}

bool MonomialIdeal::contains(const Monomial& f) const {
  for (const auto& g : gens_) {
    if (g.deg() > f.deg()) return false;
    if (g.divides(f)) return true;
  }
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  for (const auto& g : other.gens_) {
    if (!contains(g)) return false;
  }
  return true;
}

// --- arithmetic -------------------------------------------------------------

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ring() == b.ring())) throw InvalidInput("ideals live in different rings");
}

}  // namespace

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens(a.gens());
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal::make(a.ring(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.ring());
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& f : a.gens()) {
    for (const auto& g : b.gens()) gens.push_back(f * g);
  }
  return MonomialIdeal::make(a.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, long long n) {
  if (n < 0) throw InvalidInput("negative ideal power");
  MonomialIdeal acc = MonomialIdeal::unit(a.ring());
  for (long long i = 0; i < n; ++i) acc = product(acc, a);
  return acc;
}

MonomialIdeal colon(const MonomialIdeal& a, const Monomial& g) {
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size());
  for (const auto& f : a.gens()) gens.push_back(lcm(f, g).quotient_by(g));
  return MonomialIdeal::make(a.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw InvalidInput("colon by the zero ideal");
  bool first = true;
  MonomialIdeal acc(a.ring());
  for (const auto& g : b.gens()) {
    MonomialIdeal part = colon(a, g);
    acc = first ? part : intersect(acc, part);
    first = false;
  }
  return acc;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.ring());
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& f : a.gens()) {
    for (const auto& g : b.gens()) gens.push_back(lcm(f, g));
  }
  return MonomialIdeal::make(a.ring(), std::move(gens));
}

long long order_of(const MonomialIdeal& a) {
  if (a.is_zero()) throw InvalidInput("order of the zero ideal");
  long long best = a.gens().front().deg();
  for (const auto& g : a.gens()) best = std::min(best, g.deg());
  return best;
}

// --- staircase counting -----------------------------------------------------

namespace {

// Per-variable bounds given by the minimal pure-power generators.
std::vector<long long> pure_power_bounds(const MonomialIdeal& a) {
  const int d = a.ring().dim();
  std::vector<long long> bounds(d, -1);
  for (const auto& g : a.gens()) {
    int support = -1;
    for (int i = 0; i < d; ++i) {
      if (g[i] > 0) {
        if (support >= 0) {
          support = -2;
          break;
        }
        support = i;
      }
    }
    if (support >= 0) {
      bounds[support] = bounds[support] < 0 ? g[support] : std::min(bounds[support], g[support]);
    }
  }
  return bounds;
}

struct StaircaseScan {
  Int count = 0;
  long long max_degree = -1;  // largest total degree of a standard monomial
};

StaircaseScan staircase_scan(const MonomialIdeal& a, const Limits& limits) {
  if (a.is_unit()) return {};  // R/R has length 0
  auto bounds = pure_power_bounds(a);
  const int d = a.ring().dim();
  for (int i = 0; i < d; ++i) {
    if (bounds[i] < 0) {
      throw NotArtinian("no pure power of " + a.ring().var_name(i) + " in the ideal");
    }
  }
  Int cells = 1;
  for (long long b : bounds) cells *= Int(static_cast<long>(b));
  if (cells > Int(static_cast<long>(limits.cell_budget))) {
    throw BudgetExceeded("staircase box has " + cells.get_str() + " cells, budget " +
                         std::to_string(limits.cell_budget));
  }
  StaircaseScan out;
  std::vector<long long> pt(d, 0);
  while (true) {
    Monomial u{std::vector<long long>(pt)};
    if (!a.contains(u)) {
      out.count += 1;
      out.max_degree = std::max(out.max_degree, u.deg());
    }
    int i = d - 1;
    while (i >= 0 && pt[i] + 1 >= bounds[i]) {
      pt[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++pt[i];
  }
  return out;
}

}  // namespace

bool is_artinian(const MonomialIdeal& a) {
  if (a.is_unit()) return true;
  auto bounds = pure_power_bounds(a);
  for (long long b : bounds) {
    if (b < 0) return false;
  }
  return true;
}

Int artinian_length(const MonomialIdeal& a, const Limits& limits) {
  return staircase_scan(a, limits).count;
}

long long artinian_socle_bound(const MonomialIdeal& a, const Limits& limits) {
  return staircase_scan(a, limits).max_degree + 1;
}

// --- Hilbert numerator ------------------------------------------------------

namespace {

std::vector<Int> poly_mul(const std::vector<Int>& p, const std::vector<Int>& q) {
  if (p.empty() || q.empty()) return {};
  std::vector<Int> r(p.size() + q.size() - 1);
  for (size_t i = 0; i < p.size(); ++i) {
    for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  }
  return r;
}

void poly_add_shifted(std::vector<Int>& acc, const std::vector<Int>& p, size_t shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift);
  for (size_t i = 0; i < p.size(); ++i) acc[i + shift] += p[i];
}

void poly_trim(std::vector<Int>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Variable in the most generators of support >= 2, or -1 if all generators
// are pure powers.
int pick_pivot(const MonomialIdeal& a) {
  const int d = a.ring().dim();
  std::vector<int> freq(d, 0);
  bool found = false;
  for (const auto& g : a.gens()) {
    int support = 0;
    for (int i = 0; i < d; ++i) {
      if (g[i] > 0) ++support;
    }
    if (support >= 2) {
      found = true;
      for (int i = 0; i < d; ++i) {
        if (g[i] > 0) ++freq[i];
      }
    }
  }
  if (!found) return -1;
  int best = 0;
  for (int i = 1; i < d; ++i) {
    if (freq[i] > freq[best]) best = i;
  }
  return best;
}

std::vector<Int> hilbert_numerator_rec(const MonomialIdeal& a) {
  if (a.is_zero()) return {Int(1)};
  if (a.is_unit()) return {};
  int pivot = pick_pivot(a);
  if (pivot < 0) {
    // pairwise coprime pure powers: N = prod (1 - t^deg)
    std::vector<Int> n{Int(1)};
    for (const auto& g : a.gens()) {
      std::vector<Int> f(static_cast<size_t>(g.deg()) + 1);
      f.front() = 1;
      f.back() = -1;
      n = poly_mul(n, f);
    }
    return n;
  }
  const int d = a.ring().dim();
  Monomial x = Monomial::var(d, pivot);
  auto with_x = hilbert_numerator_rec(sum(a, MonomialIdeal::make(a.ring(), {x})));
  auto quot = hilbert_numerator_rec(colon(a, x));
  poly_add_shifted(with_x, quot, 1);
  poly_trim(with_x);
  return with_x;
}

}  // namespace

std::vector<Int> hilbert_numerator(const MonomialIdeal& a) {
  return hilbert_numerator_rec(a);
}

int height(const MonomialIdeal& a) {
  if (a.is_zero()) return 0;
  if (a.is_unit()) return a.ring().dim();  // degenerate; V(R) is empty
  const int d = a.ring().dim();
  if (d > 24) throw BudgetExceeded("height scan limited to 24 variables");
  for (int size = 1; size <= d; ++size) {
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      bool covers = true;
      for (const auto& g : a.gens()) {
        bool hit = false;
        for (int i = 0; i < d && !hit; ++i) {
          if ((mask >> i & 1u) && g[i] > 0) hit = true;
        }
        if (!hit) {
          covers = false;
          break;
        }
      }
      if (covers) return size;
    }
  }
  return d;
}

}  // namespace fibercone
