#include "fibercone/delta.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fibercone/errors.hpp"

namespace fibercone {

// --- Poset -------------------------------------------------------------------

Poset Poset::from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  if (n < 0) throw InvalidInput("negative poset size");
  Poset p;
  p.n_ = n;
  p.lt_.assign(n, std::vector<bool>(n, false));
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw InvalidInput("cover index out of range");
    p.lt_[a][b] = true;
  }
  // transitive closure
  for (int k = 0; k < n; ++k) {
    for (int a = 0; a < n; ++a) {
      if (!p.lt_[a][k]) continue;
      for (int b = 0; b < n; ++b) {
        if (p.lt_[k][b]) p.lt_[a][b] = true;
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (p.lt_[a][a]) throw InvalidInput("cover relations contain a cycle");
  }
  for (int i = 0; i < n; ++i) p.names_.push_back(std::to_string(i + 1));
  return p;
}

Poset Poset::chain(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return from_covers(n, covers);
}

Poset Poset::antichain(int n) { return from_covers(n, {}); }

Poset Poset::minors_2xn(int n) {
  if (n < 2) throw InvalidInput("minors poset needs n >= 2");
  std::vector<std::pair<int, int>> elems;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) elems.emplace_back(a, b);
  }
  const int size = static_cast<int>(elems.size());
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      if (i == j) continue;
      if (elems[i].first <= elems[j].first && elems[i].second <= elems[j].second) {
        covers.emplace_back(i, j);
      }
    }
  }
  Poset p = from_covers(size, covers);
  for (int i = 0; i < size; ++i) {
    p.names_[i] = "[" + std::to_string(elems[i].first) + "," + std::to_string(elems[i].second) + "]";
  }
  return p;
}

Poset Poset::parse(const std::string& text) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> covers;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head[0] == '#') continue;
    if (head == "element") {
      std::string name;
      if (!(ls >> name)) throw ParseError("element line without a name");
      names.push_back(name);
    } else if (head == "cover") {
      std::string a, lt, b;
      if (!(ls >> a >> lt >> b) || lt != "<") throw ParseError("cover line must be 'cover A < B'");
      covers.emplace_back(a, b);
    } else {
      throw ParseError("unknown poset line '" + head + "'");
    }
  }
  auto index = [&names](const std::string& s) {
    for (size_t i = 0; i < names.size(); ++i) {
      if (names[i] == s) return static_cast<int>(i);
    }
    throw ParseError("unknown poset element '" + s + "'");
  };
  std::vector<std::pair<int, int>> idx_covers;
  for (const auto& [a, b] : covers) idx_covers.emplace_back(index(a), index(b));
  Poset p = from_covers(static_cast<int>(names.size()), idx_covers);
  p.names_ = names;
  return p;
}

bool Poset::is_ideal(const std::vector<bool>& subset) const {
  for (int a = 0; a < n_; ++a) {
    if (!subset[a]) continue;
    for (int b = 0; b < n_; ++b) {
      if (lt_[b][a] && !subset[b]) return false;
    }
  }
  return true;
}

std::vector<std::pair<std::vector<bool>, int>> Poset::pairs(long long max_ideals) const {
  // enumerate all ideals by breadth-first growth with minimal elements
  std::set<std::vector<bool>> ideals;
  std::vector<std::vector<bool>> queue{std::vector<bool>(n_, false)};
  ideals.insert(queue.front());
  while (!queue.empty()) {
    std::vector<bool> cur = queue.back();
    queue.pop_back();
    for (int w = 0; w < n_; ++w) {
      if (cur[w]) continue;
      bool minimal = true;
      for (int b = 0; b < n_ && minimal; ++b) {
        if (lt_[b][w] && !cur[b]) minimal = false;
      }
      if (!minimal) continue;
      std::vector<bool> next(cur);
      next[w] = true;
      if (ideals.insert(next).second) {
        if (static_cast<long long>(ideals.size()) > max_ideals) {
          throw BudgetExceeded("too many poset ideals to enumerate");
        }
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<std::pair<std::vector<bool>, int>> out;
  for (const auto& lambda : ideals) {
    for (int w = 0; w < n_; ++w) {
      if (lambda[w]) continue;
      bool lower_inside = true;
      for (int b = 0; b < n_ && lower_inside; ++b) {
        if (lt_[b][w] && !lambda[b]) lower_inside = false;
      }
      if (lower_inside) out.emplace_back(lambda, w);
    }
  }
  return out;
}

bool Poset::is_linearization(const std::vector<int>& rank) const {
  if (static_cast<int>(rank.size()) != n_) return false;
  std::vector<bool> seen(n_, false);
  for (int r : rank) {
    if (r < 0 || r >= n_ || seen[r]) return false;
    seen[r] = true;
  }
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (lt_[a][b] && rank[a] > rank[b]) return false;
    }
  }
  return true;
}

std::vector<Int> Poset::chain_counts() const {
  // f[v][k] = chains of size k with maximum v, filled in topological order
  std::vector<int> topo(n_);
  for (int i = 0; i < n_; ++i) topo[i] = i;
  std::stable_sort(topo.begin(), topo.end(), [this](int a, int b) {
    int below_a = 0, below_b = 0;
    for (int i = 0; i < n_; ++i) {
      below_a += lt_[i][a];
      below_b += lt_[i][b];
    }
    return below_a < below_b;
  });
  std::vector<std::vector<Int>> f(n_, std::vector<Int>(n_ + 1));
  for (int v : topo) {
    f[v][1] = 1;
    for (int u = 0; u < n_; ++u) {
      if (!lt_[u][v]) continue;
      for (int k = 2; k <= n_; ++k) f[v][k] += f[u][k - 1];
    }
  }
  std::vector<Int> c(n_ + 1);
  c[0] = 1;
  for (int k = 1; k <= n_; ++k) {
    for (int v = 0; v < n_; ++v) c[k] += f[v][k];
  }
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

// --- Delta sets ----------------------------------------------------------------

DeltaSet compute_delta(const Ring& ring, const std::vector<Monomial>& gens) {
  DeltaSet d;
  d.n = static_cast<int>(gens.size());
  std::vector<Monomial> earlier;
  for (int j = 1; j <= d.n; ++j) {
    MonomialIdeal prior = MonomialIdeal::make(ring, earlier);
    for (int k = j; k <= d.n; ++k) {
      if (prior.contains(gens[j - 1] * gens[k - 1])) d.pairs.emplace(j, k);
    }
    earlier.push_back(gens[j - 1]);
  }
  return d;
}

DeltaSet compute_delta(const Ring& ring, const std::vector<Poly>& gens) {
  DeltaSet d;
  d.n = static_cast<int>(gens.size());
  std::vector<Poly> earlier;
  for (int j = 1; j <= d.n; ++j) {
    GradedIdeal prior(ring, earlier);
    for (int k = j; k <= d.n; ++k) {
      Poly prod = gens[j - 1] * gens[k - 1];
      if (!prior.is_zero() && member(prod, prior)) d.pairs.emplace(j, k);
    }
    earlier.push_back(gens[j - 1]);
  }
  return d;
}

HilbertSeries k_delta_series(const DeltaSet& d) {
  std::vector<std::string> names;
  for (int i = 1; i <= d.n; ++i) names.push_back("T" + std::to_string(i));
  Ring ring(d.n > 0 ? names : std::vector<std::string>{"T1"});
  if (d.n == 0) return HilbertSeries({Int(1)}, 0);
  std::vector<Monomial> gens;
  for (auto [j, k] : d.pairs) {
    if (j < 1 || k < j || k > d.n) throw InvalidInput("delta pair out of range");
    std::vector<long long> e(d.n, 0);
    e[j - 1] += 1;
    e[k - 1] += 1;
    gens.emplace_back(std::move(e));
  }
  MonomialIdeal q = MonomialIdeal::make(ring, std::move(gens));
  return HilbertSeries(hilbert_numerator(q), d.n);
}

// --- quadratic sequences ---------------------------------------------------------

namespace {

MonomialIdeal ideal_of_subset(const Ring& ring, const std::vector<Monomial>& gens,
                              const std::vector<bool>& subset) {
  std::vector<Monomial> sel;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (subset[i]) sel.push_back(gens[i]);
  }
  return MonomialIdeal::make(ring, std::move(sel));
}

}  // namespace

QuadSeqCertificate verify_quadratic_sequence(const Poset& poset, const Ring& ring,
                                             const std::vector<Monomial>& gens) {
  if (static_cast<int>(gens.size()) != poset.size()) {
    throw InvalidInput("generator count must match the poset size");
  }
  QuadSeqCertificate cert;
  MonomialIdeal whole = MonomialIdeal::make(ring, gens);
  cert.is_quadratic_sequence = true;
  for (const auto& [lambda, omega] : poset.pairs()) {
    PairCheck check;
    check.lambda = lambda;
    check.omega = omega;
    MonomialIdeal x_lambda = ideal_of_subset(ring, gens, lambda);
    MonomialIdeal c = x_lambda.is_zero()
                          ? MonomialIdeal::zero(ring)
                          : intersect(colon(x_lambda, gens[omega]), whole);
    std::vector<bool> theta_mask(gens.size(), false);
    for (size_t i = 0; i < gens.size(); ++i) {
      if (c.contains(gens[i])) {
        theta_mask[i] = true;
        check.theta.push_back(static_cast<int>(i));
      }
    }
    check.theta_is_ideal = poset.is_ideal(theta_mask);
    MonomialIdeal x_theta = ideal_of_subset(ring, gens, theta_mask);
    check.axiom1 = check.theta_is_ideal && x_theta == c;
    MonomialIdeal rhs = product(x_lambda, whole);
    check.axiom2 = true;
    for (size_t i = 0; i < gens.size(); ++i) {
      if (theta_mask[i] && !rhs.contains(gens[omega] * gens[i])) {
        check.axiom2 = false;
        break;
      }
    }
    cert.is_quadratic_sequence =
        cert.is_quadratic_sequence && check.axiom1 && check.axiom2;
    cert.pair_checks.push_back(std::move(check));
  }
  return cert;
}

std::pair<bool, QuadSeqCertificate> is_stable_linearization(const Poset& poset, const Ring& ring,
                                                            const std::vector<Monomial>& gens,
                                                            const std::vector<int>& rank) {
  if (!poset.is_linearization(rank)) {
    throw InvalidInput("the map is not a linearization of the poset");
  }
  const int n = poset.size();
  // reindex: position k holds the generator of the element with rank k
  std::vector<Monomial> ordered(n, Monomial::one(ring.dim()));
  for (int e = 0; e < n; ++e) ordered[rank[e]] = gens[e];
  std::vector<std::pair<int, int>> covers;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (poset.less(a, b)) covers.emplace_back(rank[a], rank[b]);
    }
  }
  Poset relabeled = Poset::from_covers(n, covers);

  QuadSeqCertificate cert = verify_quadratic_sequence(relabeled, ring, ordered);
  MonomialIdeal whole = MonomialIdeal::make(ring, ordered);
  DeltaSet delta = compute_delta(ring, ordered);

  // Theta_j for the initial-segment pairs ([1, j-1], j)
  std::vector<std::vector<bool>> theta(n, std::vector<bool>(n, false));
  std::vector<Monomial> prefix;
  for (int j = 0; j < n; ++j) {
    MonomialIdeal x_prefix = MonomialIdeal::make(ring, prefix);
    MonomialIdeal c = x_prefix.is_zero()
                          ? MonomialIdeal::zero(ring)
                          : intersect(colon(x_prefix, ordered[j]), whole);
    for (int i = 0; i < n; ++i) theta[j][i] = c.contains(ordered[i]);
    cert.colon_ideals.push_back(colon(x_prefix.is_zero() ? MonomialIdeal::zero(ring) : x_prefix,
                                      MonomialIdeal::make(ring, {ordered[j]})));
    prefix.push_back(ordered[j]);
  }

  cert.stable = true;
  for (int k = 0; k < n; ++k) {
    std::vector<bool> psi(n, false);
    for (int i = 0; i < k; ++i) psi[i] = true;
    for (int j = 0; j <= k; ++j) {
      if (delta.pairs.count({j + 1, k + 1})) continue;
      for (int i = 0; i < n; ++i) psi[i] = psi[i] || theta[j][i];
    }
    std::vector<int> psi_list;
    for (int i = 0; i < n; ++i) {
      if (psi[i]) psi_list.push_back(i);
    }
    cert.psi.push_back(psi_list);
    MonomialIdeal a_k = ideal_of_subset(ring, ordered, psi);
    MonomialIdeal colon_a = a_k.is_zero() ? MonomialIdeal::zero(ring)
                                          : colon(a_k, ordered[k]);
    bool ok = cert.colon_ideals[k] == colon_a;
    cert.stable_at.push_back(ok);
    cert.stable = cert.stable && ok;
  }
  return {cert.stable, cert};
}

// --- face rings and closed-form families ------------------------------------------

HilbertSeries face_ring_series(const Poset& poset) {
  std::vector<Int> c = poset.chain_counts();
  const int max_chain = static_cast<int>(c.size()) - 1;
  std::vector<Int> num(max_chain + 1);
  // N(t) = sum_i c_i t^i (1-t)^(L-i) over the common denominator (1-t)^L
  for (int i = 0; i <= max_chain; ++i) {
    for (int k = 0; k + i <= max_chain; ++k) {
      Int term = c[i] * binomial(max_chain - i, k);
      if (k % 2 == 1) term = -term;
      num[i + k] += term;
    }
  }
  return HilbertSeries(std::move(num), max_chain);
}

DeterminantalSeries determinantal_h_vector(int n) {
  if (n < 3) throw InvalidInput("determinantal family needs n >= 3");
  DeterminantalSeries out;
  for (int i = 0; i <= n - 3; ++i) {
    out.h.push_back(binomial(n - 2, i) * binomial(n - 2, i) -
                    binomial(n - 3, i - 1) * binomial(n - 1, i + 1));
  }
  out.denom_power = 2 * n - 3;
  out.reduction_number = n - 3;
  return out;
}

DeltaSet ms_delta(long long b_minus_c) {
  if (b_minus_c < 1) throw InvalidInput("Moralès–Simis family needs b - c >= 1");
  DeltaSet d;
  d.n = static_cast<int>(b_minus_c) + 2;
  for (int j = 3; j <= d.n - 1; ++j) {
    for (int k = j; k <= d.n - 1; ++k) d.pairs.emplace(j, k);
  }
  return d;
}

HilbertSeries family_series_ms(long long b_minus_c) {
  if (b_minus_c < 1) throw InvalidInput("Moralès–Simis family needs b - c >= 1");
  std::vector<Int> num{Int(1)};
  if (b_minus_c > 1) num.push_back(Int(static_cast<long>(b_minus_c - 1)));
  return HilbertSeries(std::move(num), 3);
}

DeltaSet hh_delta(int n, int m) {
  if (m < 1 || n < m) throw InvalidInput("Huckaba–Huneke family needs 1 <= m <= n");
  DeltaSet d;
  d.n = n;
  for (int j = m + 1; j <= n; ++j) {
    for (int k = j; k <= n; ++k) d.pairs.emplace(j, k);
  }
  return d;
}

HilbertSeries family_series_hh(int n, int m) {
  if (m < 1 || n < m) throw InvalidInput("Huckaba–Huneke family needs 1 <= m <= n");
  std::vector<Int> num{Int(1)};
  if (n > m) num.push_back(Int(n - m));
  return HilbertSeries(std::move(num), m);
}

}  // namespace fibercone
