#include "fibercone/graded.hpp"

#include <algorithm>

#include "fibercone/errors.hpp"

namespace fibercone {

// --- Poly -------------------------------------------------------------------

Poly Poly::from_monomial(const Monomial& m, const Rat& c) {
  Poly p(m.dim());
  p.add_term(m, c);
  return p;
}

Poly Poly::constant(int dim, const Rat& c) {
  return from_monomial(Monomial::one(dim), c);
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  long long d = terms_.begin()->first.deg();
  for (const auto& [m, c] : terms_) {
    if (m.deg() != d) return false;
  }
  return true;
}

long long Poly::degree() const {
  if (terms_.empty()) throw InvalidInput("degree of the zero polynomial");
  long long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg());
  return d;
}

long long Poly::order() const {
  if (terms_.empty()) throw InvalidInput("order of the zero polynomial");
  long long d = terms_.begin()->first.deg();
  for (const auto& [m, c] : terms_) d = std::min(d, m.deg());
  return d;
}

Poly Poly::operator+(const Poly& q) const {
  Poly r(*this);
  for (const auto& [m, c] : q.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& q) const {
  Poly r(*this);
  for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& q) const {
  Poly r(dim_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : q.terms_) r.add_term(m1 * m2, c1 * c2);
  }
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r(dim_);
  if (c == 0) return r;
  for (const auto& [m, co] : terms_) r.add_term(m, co * c);
  return r;
}

bool operator==(const Poly& p, const Poly& q) {
  return p.dim_ == q.dim_ && p.terms_ == q.terms_;
}

// --- degree pieces ----------------------------------------------------------

std::vector<Monomial> monomials_of_degree(int d, long long e) {
  std::vector<Monomial> out;
  std::vector<long long> cur(d, 0);
  // lexicographic, earlier-variable-heavy first
  auto rec = [&](auto&& self, int pos, long long rem) -> void {
    if (pos == d - 1) {
      cur[pos] = rem;
      out.emplace_back(std::vector<long long>(cur));
      return;
    }
    for (long long k = rem; k >= 0; --k) {
      cur[pos] = k;
      self(self, pos + 1, rem - k);
    }
  };
  if (d == 0) return out;
  rec(rec, 0, e);
  return out;
}

Int dim_graded_piece(int d, long long e) { return binomial(e + d - 1, d - 1); }

// --- GradedIdeal ------------------------------------------------------------

GradedIdeal::GradedIdeal(Ring ring, std::vector<Poly> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.dim() != ring_.dim()) throw InvalidInput("generator dimension does not match ring");
    if (!g.is_homogeneous()) {
      throw InvalidInput("inhomogeneous generator in graded ideal");
    }
    gens_.push_back(std::move(g));
  }
}

GradedIdeal GradedIdeal::from_monomial(const MonomialIdeal& a) {
  std::vector<Poly> gens;
  gens.reserve(a.gens().size());
  for (const auto& g : a.gens()) gens.push_back(Poly::from_monomial(g));
  return GradedIdeal(a.ring(), std::move(gens));
}

long long GradedIdeal::max_gen_degree() const {
  long long d = 0;
  for (const auto& g : gens_) d = std::max(d, g.degree());
  return d;
}

// --- PieceBasis -------------------------------------------------------------

void PieceBasis::absorb(std::map<int, Rat> row) {
  while (!row.empty()) {
    int p = row.begin()->first;
    auto it = rows_.find(p);
    if (it == rows_.end()) {
      // normalize leading coefficient to 1, then eliminate above
      Rat lead = row.begin()->second;
      for (auto& [c, v] : row) v /= lead;
      for (auto& [piv, other] : rows_) {
        auto hit = other.find(p);
        if (hit == other.end()) continue;
        Rat f = hit->second;
        for (const auto& [c, v] : row) {
          auto oit = other.emplace(c, 0).first;
          oit->second -= f * v;
          if (oit->second == 0) other.erase(oit);
        }
      }
      rows_.emplace(p, std::move(row));
      return;
    }
    const auto& b = it->second;
    Rat f = row.begin()->second;  // b is normalized
    for (const auto& [c, v] : b) {
      auto rit = row.emplace(c, 0).first;
      rit->second -= f * v;
      if (rit->second == 0) row.erase(rit);
    }
  }
}

void PieceBasis::add_ideal(const GradedIdeal& k) {
  const int d = k.ring().dim();
  const size_t full = cols_.size();
  for (const auto& g : k.gens()) {
    if (rows_.size() == full) return;
    long long dg = g.degree();
    if (dg > e_) continue;
    for (const auto& u : monomials_of_degree(d, e_ - dg)) {
      if (rows_.size() == full) return;
      std::map<int, Rat> row;
      for (const auto& [m, c] : g.terms()) row.emplace(colidx_.at(m * u), c);
      absorb(std::move(row));
    }
  }
}

PieceBasis::PieceBasis(const GradedIdeal& k, long long e) : e_(e) {
  cols_ = monomials_of_degree(k.ring().dim(), e);
  for (size_t i = 0; i < cols_.size(); ++i) colidx_.emplace(cols_[i], static_cast<int>(i));
  add_ideal(k);
}

PieceBasis piece_sum_basis(const GradedIdeal& a, const GradedIdeal& b, long long e) {
  PieceBasis basis(a, e);
  basis.add_ideal(b);
  return basis;
}

void PieceBasis::add(const Poly& f) {
  if (f.is_zero()) return;
  std::map<int, Rat> row;
  for (const auto& [m, c] : f.terms()) {
    auto it = colidx_.find(m);
    if (it == colidx_.end()) throw InvalidInput("polynomial degree does not match piece");
    row.emplace(it->second, c);
  }
  absorb(std::move(row));
}

bool PieceBasis::reduces_to_zero(const Poly& f) const {
  if (f.is_zero()) return true;
  std::map<int, Rat> row;
  for (const auto& [m, c] : f.terms()) {
    auto it = colidx_.find(m);
    if (it == colidx_.end()) throw InvalidInput("polynomial degree does not match piece");
    row.emplace(it->second, c);
  }
  while (!row.empty()) {
    int p = row.begin()->first;
    auto it = rows_.find(p);
    if (it == rows_.end()) return false;
    Rat f0 = row.begin()->second;
    for (const auto& [c, v] : it->second) {
      auto rit = row.emplace(c, 0).first;
      rit->second -= f0 * v;
      if (rit->second == 0) row.erase(rit);
    }
  }
  return true;
}

int piece_dim(const GradedIdeal& k, long long e) { return PieceBasis(k, e).rank(); }

bool member(const Poly& f, const GradedIdeal& k) {
  if (f.is_zero()) return true;
  if (!f.is_homogeneous()) throw InvalidInput("membership needs a homogeneous polynomial");
  return PieceBasis(k, f.degree()).reduces_to_zero(f);
}

namespace {

// One piece basis of `big` per distinct generator degree of `small`.
bool contained_in(const GradedIdeal& small, const GradedIdeal& big) {
  std::map<long long, std::vector<const Poly*>> by_degree;
  for (const auto& g : small.gens()) by_degree[g.degree()].push_back(&g);
  for (const auto& [e, gens] : by_degree) {
    PieceBasis basis(big, e);
    for (const Poly* g : gens) {
      if (!basis.reduces_to_zero(*g)) return false;
    }
  }
  return true;
}

}  // namespace

bool ideal_equals(const GradedIdeal& a, const GradedIdeal& b) {
  if (!(a.ring() == b.ring())) throw InvalidInput("ideals live in different rings");
  return contained_in(a, b) && contained_in(b, a);
}

GradedIdeal sum(const GradedIdeal& a, const GradedIdeal& b) {
  std::vector<Poly> gens(a.gens());
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return GradedIdeal(a.ring(), std::move(gens));
}

GradedIdeal prune(const GradedIdeal& a) {
  if (a.gens().size() <= 1) return a;
  std::vector<Poly> sorted(a.gens());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Poly& p, const Poly& q) { return p.degree() < q.degree(); });
  std::vector<Poly> kept;
  size_t i = 0;
  while (i < sorted.size()) {
    const long long e = sorted[i].degree();
    // one basis per degree; same-degree keepers are absorbed as they come
    PieceBasis basis(GradedIdeal(a.ring(), kept), e);
    for (; i < sorted.size() && sorted[i].degree() == e; ++i) {
      if (basis.reduces_to_zero(sorted[i])) continue;
      basis.add(sorted[i]);
      kept.push_back(sorted[i]);
    }
  }
  return GradedIdeal(a.ring(), std::move(kept));
}

GradedIdeal product(const GradedIdeal& a, const GradedIdeal& b) {
  if (!(a.ring() == b.ring())) throw InvalidInput("ideals live in different rings");
  std::vector<Poly> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& f : a.gens()) {
    for (const auto& g : b.gens()) gens.push_back(f * g);
  }
  return prune(GradedIdeal(a.ring(), std::move(gens)));
}

GradedIdeal power(const GradedIdeal& a, long long n) {
  if (n < 0) throw InvalidInput("negative ideal power");
  GradedIdeal acc(a.ring(), {Poly::constant(a.ring().dim(), 1)});
  for (long long i = 0; i < n; ++i) acc = product(acc, a);
  return acc;
}

Int mu_graded(const GradedIdeal& k) {
  if (k.is_zero()) return 0;
  const Ring& ring = k.ring();
  std::vector<Poly> m_gens;
  for (const auto& g : k.gens()) {
    for (int i = 0; i < ring.dim(); ++i) {
      m_gens.push_back(g * Poly::from_monomial(Monomial::var(ring.dim(), i)));
    }
  }
  GradedIdeal mk(ring, std::move(m_gens));
  Int total = 0;
  for (long long e = 0; e <= k.max_gen_degree(); ++e) {
    total += piece_dim(k, e) - piece_dim(mk, e);
  }
  return total;
}

Int artinian_length_graded(const GradedIdeal& k, long long degree_bound) {
  if (degree_bound < 0) {
    degree_bound = k.ring().dim();
    for (const auto& g : k.gens()) degree_bound += g.degree();
  }
  Int total = 0;
  for (long long e = 0; e <= degree_bound; ++e) {
    Int full = dim_graded_piece(k.ring().dim(), e);
    Int rank = piece_dim(k, e);
    total += full - rank;
    if (rank == full) return total;  // stays full in all higher degrees
  }
  throw NotArtinian("graded pieces not full through degree " + std::to_string(degree_bound));
}

bool is_parameter_system(const Ring& ring, const std::vector<Poly>& elems) {
  if (static_cast<int>(elems.size()) != ring.dim()) {
    throw InvalidInput("a system of parameters needs exactly dim-many elements");
  }
  for (const auto& p : elems) {
    if (p.is_zero()) return false;
  }
  try {
    artinian_length_graded(GradedIdeal(ring, elems));
    return true;
  } catch (const NotArtinian&) {
    return false;
  }
}

// --- TruncatedImage ---------------------------------------------------------

TruncatedImage::TruncatedImage(const Ring& ring, const std::vector<Poly>& gens, long long n)
    : n_(n), dim_(ring.dim()) {
  if (n < 1) throw InvalidInput("truncation level must be >= 1");
  long long idx = 0;
  for (long long e = 0; e < n; ++e) {
    for (const auto& m : monomials_of_degree(dim_, e)) {
      cols_.push_back(m);
      colidx_.emplace(m, idx++);
    }
  }
  const size_t full = cols_.size();
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (rows_.size() == full) return;
    long long og = g.order();
    for (long long eu = 0; eu + og < n; ++eu) {
      for (const auto& u : monomials_of_degree(dim_, eu)) {
        if (rows_.size() == full) return;
        absorb(truncate(g * Poly::from_monomial(u)));
      }
    }
  }
}

std::map<long long, Rat> TruncatedImage::truncate(const Poly& f) const {
  std::map<long long, Rat> row;
  for (const auto& [m, c] : f.terms()) {
    if (m.deg() < n_) row.emplace(colidx_.at(m), c);
  }
  return row;
}

void TruncatedImage::absorb(std::map<long long, Rat> row) {
  while (!row.empty()) {
    long long p = row.begin()->first;
    auto it = rows_.find(p);
    if (it == rows_.end()) {
      Rat lead = row.begin()->second;
      for (auto& [c, v] : row) v /= lead;
      rows_.emplace(p, std::move(row));
      return;
    }
    Rat f = row.begin()->second;
    for (const auto& [c, v] : it->second) {
      auto rit = row.emplace(c, 0).first;
      rit->second -= f * v;
      if (rit->second == 0) row.erase(rit);
    }
  }
}

Int TruncatedImage::ambient_dim() const { return Int(static_cast<unsigned long>(cols_.size())); }

bool TruncatedImage::contains(const Poly& f) const {
  auto row = truncate(f);
  while (!row.empty()) {
    long long p = row.begin()->first;
    auto it = rows_.find(p);
    if (it == rows_.end()) return false;
    Rat f0 = row.begin()->second;
    for (const auto& [c, v] : it->second) {
      auto rit = row.emplace(c, 0).first;
      rit->second -= f0 * v;
      if (rit->second == 0) row.erase(rit);
    }
  }
  return true;
}

Int TruncatedImage::colength() const { return ambient_dim() - rank(); }

}  // namespace fibercone
