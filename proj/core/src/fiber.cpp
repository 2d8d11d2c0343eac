#include "fibercone/fiber.hpp"

#include <algorithm>

#include "fibercone/errors.hpp"

namespace fibercone {

namespace {

std::vector<Poly> homogeneous_components(const Poly& p) {
  std::map<long long, Poly> parts;
  for (const auto& [m, c] : p.terms()) {
    auto [it, fresh] = parts.try_emplace(m.deg(), Poly(p.dim()));
    it->second.add_term(m, c);
  }
  std::vector<Poly> out;
  out.reserve(parts.size());
  for (auto& [d, q] : parts) out.push_back(std::move(q));
  return out;
}

// Lazily extended I^0, I^1, ... for either engine.
class Ladder {
 public:
  explicit Ladder(const IdealHandle& ideal) : ideal_(&ideal) {
    if (ideal.kind() == IdealHandle::Kind::Monomial) {
      mono_.push_back(MonomialIdeal::unit(ideal.ring()));
    } else if (ideal.kind() == IdealHandle::Kind::Graded) {
      graded_.push_back(GradedIdeal(ideal.ring(), {Poly::constant(ideal.ring().dim(), 1)}));
    } else {
      throw InvalidInput("power ladders need monomial or homogeneous generators");
    }
  }

  const MonomialIdeal& mono(int n) {
    while (static_cast<int>(mono_.size()) <= n) {
      mono_.push_back(product(mono_.back(), ideal_->mono()));
    }
    return mono_[n];
  }

  const GradedIdeal& graded(int n) {
    while (static_cast<int>(graded_.size()) <= n) {
      graded_.push_back(product(graded_.back(), ideal_->graded_ideal()));
    }
    return graded_[n];
  }

  // The n-th power promoted to the graded engine (cached).
  const GradedIdeal& graded_view(int n) {
    if (ideal_->kind() == IdealHandle::Kind::Graded) return graded(n);
    while (static_cast<int>(graded_.size()) <= n) {
      graded_.push_back(GradedIdeal::from_monomial(mono(static_cast<int>(graded_.size()))));
    }
    return graded_[n];
  }

  Int mu(int n) {
    if (n == 0) return 1;
    if (ideal_->kind() == IdealHandle::Kind::Monomial) return mono(n).mu();
    return mu_graded(graded(n));
  }

 private:
  const IdealHandle* ideal_;
  std::vector<MonomialIdeal> mono_;
  std::vector<GradedIdeal> graded_;
};

}  // namespace

// --- IdealHandle -------------------------------------------------------------

IdealHandle IdealHandle::monomial(MonomialIdeal a) {
  IdealHandle h;
  h.kind_ = Kind::Monomial;
  h.ring_ = a.ring();
  h.mono_ = std::move(a);
  return h;
}

IdealHandle IdealHandle::graded(GradedIdeal k) {
  IdealHandle h;
  h.kind_ = Kind::Graded;
  h.ring_ = k.ring();
  h.graded_ = std::move(k);
  return h;
}

IdealHandle IdealHandle::local(Ring ring, std::vector<Poly> gens) {
  IdealHandle h;
  h.kind_ = Kind::Local;
  h.ring_ = std::move(ring);
  for (auto& g : gens) {
    if (!g.is_zero()) h.local_.push_back(std::move(g));
  }
  if (h.local_.empty()) throw InvalidInput("local ideal needs at least one nonzero generator");
  return h;
}

IdealHandle IdealHandle::from_expr(const ExprPtr& expr, const Ring& ring) {
  auto polys = evaluate_polynomials(expr, ring);
  bool all_monomial = true;
  bool all_homogeneous = true;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    all_monomial = all_monomial && p.is_monomial();
    all_homogeneous = all_homogeneous && p.is_homogeneous();
  }
  if (all_monomial) {
    std::vector<Monomial> gens;
    for (const auto& p : polys) {
      if (!p.is_zero()) gens.push_back(p.terms().begin()->first);
    }
    return monomial(MonomialIdeal::make(ring, std::move(gens)));
  }
  if (all_homogeneous) return graded(GradedIdeal(ring, std::move(polys)));
  return local(ring, std::move(polys));
}

std::vector<Poly> IdealHandle::gens_as_polys() const {
  switch (kind_) {
    case Kind::Monomial: {
      std::vector<Poly> out;
      for (const auto& g : mono_->gens()) out.push_back(Poly::from_monomial(g));
      return out;
    }
    case Kind::Graded:
      return graded_->gens();
    case Kind::Local:
      return local_;
  }
  return {};
}

int IdealHandle::generator_count() const {
  switch (kind_) {
    case Kind::Monomial:
      return mono_->mu();
    case Kind::Graded:
      return static_cast<int>(graded_->gens().size());
    case Kind::Local:
      return static_cast<int>(local_.size());
  }
  return 0;
}

Int IdealHandle::mu() const {
  switch (kind_) {
    case Kind::Monomial:
      return mono_->mu();
    case Kind::Graded:
      return mu_graded(*graded_);
    case Kind::Local:
      throw InvalidInput("mu of an inhomogeneous ideal is not directly computable");
  }
  return 0;
}

std::string IdealHandle::describe() const {
  switch (kind_) {
    case Kind::Monomial:
      return render(*mono_);
    case Kind::Graded:
      return render(*graded_);
    case Kind::Local: {
      std::string s = "(";
      for (size_t i = 0; i < local_.size(); ++i) {
        if (i) s += ", ";
        s += render(local_[i], ring_);
      }
      return s + ")";
    }
  }
  return "";
}

bool contains_ideal(const IdealHandle& big, const IdealHandle& small) {
  if (!(big.ring() == small.ring())) throw InvalidInput("ideals live in different rings");
  auto gens = small.gens_as_polys();
  switch (big.kind()) {
    case IdealHandle::Kind::Monomial:
      // a polynomial lies in a monomial ideal iff each of its monomials does
      for (const auto& g : gens) {
        for (const auto& [m, c] : g.terms()) {
          if (!big.mono().contains(m)) return false;
        }
      }
      return true;
    case IdealHandle::Kind::Graded:
      for (const auto& g : gens) {
        for (const auto& comp : homogeneous_components(g)) {
          if (!member(comp, big.graded_ideal())) return false;
        }
      }
      return true;
    case IdealHandle::Kind::Local:
      throw InvalidInput("containment in an inhomogeneous ideal is not supported");
  }
  return false;
}

// --- fiber Hilbert function ----------------------------------------------------

std::vector<Int> fiber_hilbert_function(const IdealHandle& ideal, int n, const Limits& limits) {
  if (n < 0) throw InvalidInput("negative sample length");
  if (n > limits.max_power) {
    throw BudgetExceeded("power ladder budget " + std::to_string(limits.max_power) +
                         " below requested " + std::to_string(n));
  }
  Ladder ladder(ideal);
  std::vector<Int> mus;
  mus.reserve(n + 1);
  for (int k = 0; k <= n; ++k) mus.push_back(ladder.mu(k));
  return mus;
}

HilbertSeries fiber_series(const IdealHandle& ideal, const Limits& limits) {
  Ladder ladder(ideal);
  std::vector<Int> mus{Int(1)};
  int target = std::min(8, limits.max_power);
  while (true) {
    for (int k = static_cast<int>(mus.size()); k <= target; ++k) mus.push_back(ladder.mu(k));
    try {
      return rationalize(mus, limits.guard_window);
    } catch (const NotStabilized&) {
      if (target >= limits.max_power) throw;
      target = std::min(limits.max_power, target + std::max(4, target / 2));
    }
  }
}

int analytic_spread(const IdealHandle& ideal, const Limits& limits) {
  return fiber_series(ideal, limits).denom_power();
}

// --- reductions ---------------------------------------------------------------

namespace {

// J I^n = I^{n+1} for monomial J and I.
bool reduction_step_monomial(const MonomialIdeal& j, Ladder& ladder, int n) {
  return product(j, ladder.mono(n)) == ladder.mono(n + 1);
}

// Same through the graded engine (J homogeneous).
bool reduction_step_graded(const GradedIdeal& j, Ladder& ladder, int n) {
  return ideal_equals(product(j, ladder.graded_view(n)), ladder.graded_view(n + 1));
}

// Localized equality for inhomogeneous J: I^{n+1} <= J I^n + m I^{n+1} decided
// at a truncation level certified by the monomial part, then Nakayama.
bool reduction_step_local(const std::vector<Poly>& j_gens, Ladder& ladder, int n,
                          const Limits& limits) {
  const MonomialIdeal& in1 = ladder.mono(n + 1);
  const Ring& ring = in1.ring();
  MonomialIdeal m_in1 = product(MonomialIdeal::variables(ring), in1);
  long long level = artinian_socle_bound(m_in1, limits);
  std::vector<Poly> gens;
  for (const auto& jg : j_gens) {
    for (const auto& ig : ladder.mono(n).gens()) gens.push_back(jg * Poly::from_monomial(ig));
  }
  for (const auto& g : m_in1.gens()) gens.push_back(Poly::from_monomial(g));
  TruncatedImage image(ring, gens, level);
  for (const auto& g : in1.gens()) {
    if (!image.contains(Poly::from_monomial(g))) return false;
  }
  return true;
}

bool reduction_step(const IdealHandle& reduction, const IdealHandle& ideal, Ladder& ladder,
                    int n, const Limits& limits) {
  switch (reduction.kind()) {
    case IdealHandle::Kind::Monomial:
      if (ideal.kind() == IdealHandle::Kind::Monomial) {
        return reduction_step_monomial(reduction.mono(), ladder, n);
      }
      return reduction_step_graded(GradedIdeal::from_monomial(reduction.mono()), ladder, n);
    case IdealHandle::Kind::Graded:
      return reduction_step_graded(reduction.graded_ideal(), ladder, n);
    case IdealHandle::Kind::Local:
      if (ideal.kind() != IdealHandle::Kind::Monomial || !is_artinian(ideal.mono())) {
        throw InvalidInput(
            "inhomogeneous reductions are supported only for m-primary monomial ideals");
      }
      return reduction_step_local(reduction.local_gens(), ladder, n, limits);
  }
  return false;
}

}  // namespace

int reduction_number(const IdealHandle& reduction, const IdealHandle& ideal, int max_n,
                     const Limits& limits) {
  if (ideal.kind() == IdealHandle::Kind::Local) {
    throw InvalidInput("the main ideal must be monomial or homogeneous");
  }
  if (!contains_ideal(ideal, reduction)) {
    throw NotContained("reduction candidate is not contained in the ideal");
  }
  Ladder ladder(ideal);
  for (int n = 0; n <= max_n; ++n) {
    if (reduction_step(reduction, ideal, ladder, n, limits)) {
      for (int extra = 1; extra <= limits.extra_reduction_checks; ++extra) {
        if (!reduction_step(reduction, ideal, ladder, n + extra, limits)) {
          throw Falsification("reduction equality at power " + std::to_string(n) +
                              " did not persist at " + std::to_string(n + extra));
        }
      }
      return n;
    }
  }
  throw NotAReduction("no reduction equality up to power " + std::to_string(max_n));
}

// --- criterion lengths ----------------------------------------------------------

namespace {

Int criterion_length_impl(const IdealHandle& ideal, const IdealHandle& reduction, Ladder& ladder,
                          int n, const Limits& limits) {
  if (n == 0) return 1;  // l(R/m)
  const Ring& ring = ideal.ring();

  if (ideal.kind() == IdealHandle::Kind::Monomial &&
      reduction.kind() == IdealHandle::Kind::Monomial) {
    const MonomialIdeal& in = ladder.mono(n);
    MonomialIdeal denom = sum(product(reduction.mono(), ladder.mono(n - 1)),
                              product(MonomialIdeal::variables(ring), in));
    Int count = 0;
    for (const auto& g : in.gens()) {
      if (!denom.contains(g)) ++count;
    }
    return count;
  }

  if (reduction.kind() == IdealHandle::Kind::Local) {
    if (ideal.kind() != IdealHandle::Kind::Monomial || !is_artinian(ideal.mono())) {
      throw InvalidInput(
          "inhomogeneous reductions are supported only for m-primary monomial ideals");
    }
    const MonomialIdeal& in = ladder.mono(n);
    MonomialIdeal m_in = product(MonomialIdeal::variables(ring), in);
    long long level = artinian_socle_bound(m_in, limits);
    std::vector<Poly> gens;
    for (const auto& jg : reduction.local_gens()) {
      for (const auto& ig : ladder.mono(n - 1).gens()) gens.push_back(jg * Poly::from_monomial(ig));
    }
    for (const auto& g : m_in.gens()) gens.push_back(Poly::from_monomial(g));
    // l(I^n / (J I^{n-1} + m I^n)) = l(R/denominator) - l(R/I^n)
    return TruncatedImage(ring, gens, level).colength() - artinian_length(in, limits);
  }

  // graded route
  GradedIdeal j = reduction.kind() == IdealHandle::Kind::Monomial
                      ? GradedIdeal::from_monomial(reduction.mono())
                      : reduction.graded_ideal();
  const GradedIdeal& a = ladder.graded_view(n);
  GradedIdeal b1 = product(j, ladder.graded_view(n - 1));
  GradedIdeal b2 = product(GradedIdeal::from_monomial(MonomialIdeal::variables(ring)), a);
  Int total = 0;
  for (long long e = 0; e <= a.max_gen_degree(); ++e) {
    total += piece_dim(a, e) - piece_sum_basis(b1, b2, e).rank();
  }
  return total;
}

}  // namespace

Int criterion_length(const IdealHandle& ideal, const IdealHandle& reduction, int n,
                     const Limits& limits) {
  if (n < 0) throw InvalidInput("negative criterion index");
  Ladder ladder(ideal);
  return criterion_length_impl(ideal, reduction, ladder, n, limits);
}

// --- the criterion ---------------------------------------------------------------

namespace {

Int validated_mu_of_reduction(const IdealHandle& reduction) {
  switch (reduction.kind()) {
    case IdealHandle::Kind::Monomial:
      return reduction.mono().mu();
    case IdealHandle::Kind::Graded:
      return mu_graded(reduction.graded_ideal());
    case IdealHandle::Kind::Local:
      // For a verified reduction J: a(I) = a(J) <= mu(J) <= #gens(J), so a
      // generator count equal to a(I) pins mu(J) = a(I) without computing
      // mu of an inhomogeneous ideal.
      return reduction.generator_count();
  }
  return 0;
}

}  // namespace

CmReport cm_check(const IdealHandle& ideal, const IdealHandle& reduction, const Limits& limits) {
  CmReport report;
  report.series = fiber_series(ideal, limits);
  report.analytic_spread = report.series.denom_power();
  report.e_fiber = report.series.multiplicity();
  report.mu_I = ideal.mu();
  report.r_J = reduction_number(reduction, ideal, limits.max_power, limits);
  report.mu_J = validated_mu_of_reduction(reduction);
  if (report.mu_J != report.analytic_spread) {
    throw NotMinimalReduction("mu(J) = " + to_string(report.mu_J) +
                              " but the analytic spread is " +
                              std::to_string(report.analytic_spread));
  }
  Ladder ladder(ideal);
  report.length_sum = 0;
  for (int n = 0; n <= report.r_J; ++n) {
    report.criterion_lengths.push_back(criterion_length_impl(ideal, reduction, ladder, n, limits));
    report.length_sum += report.criterion_lengths.back();
  }
  report.is_cm = report.e_fiber == report.length_sum;
  if (report.is_cm) {
    // A CM verdict forces the series numerator to be the length vector.
    std::vector<Int> num(report.series.numerator());
    num.resize(report.r_J + 1);
    if (num != report.criterion_lengths) {
      throw Falsification("CM verdict but series numerator differs from the length vector");
    }
  }
  report.is_minimal_multiplicity =
      report.e_fiber == report.mu_I - report.analytic_spread + 1;
  return report;
}

std::optional<int> shah_function_check(const IdealHandle& ideal, const IdealHandle& reduction,
                                       int max_check, const Limits& limits) {
  HilbertSeries series = fiber_series(ideal, limits);
  const int a = series.denom_power();
  const int r = reduction_number(reduction, ideal, limits.max_power, limits);
  if (validated_mu_of_reduction(reduction) != a) {
    throw NotMinimalReduction("reduction is not minimal");
  }
  const Ring& ring = ideal.ring();
  Ladder ladder(ideal);

  // term_i = mu(I^i) - l(J I^{i-1} / (J I^{i-1} cap m I^i)), via the
  // intersection, not via the series.
  std::vector<Int> terms{Int(1)};
  for (int i = 1; i <= r; ++i) {
    Int crossing = 0;  // l(J I^{i-1} / (J I^{i-1} cap m I^i))
    if (ideal.kind() == IdealHandle::Kind::Monomial &&
        reduction.kind() == IdealHandle::Kind::Monomial) {
      MonomialIdeal ji = product(reduction.mono(), ladder.mono(i - 1));
      MonomialIdeal mi = product(MonomialIdeal::variables(ring), ladder.mono(i));
      MonomialIdeal meet = intersect(ji, mi);
      for (const auto& g : ladder.mono(i).gens()) {
        if (ji.contains(g) && !meet.contains(g)) ++crossing;
      }
    } else if (reduction.kind() == IdealHandle::Kind::Local) {
      if (ideal.kind() != IdealHandle::Kind::Monomial || !is_artinian(ideal.mono())) {
        throw InvalidInput(
            "inhomogeneous reductions are supported only for m-primary monomial ideals");
      }
      // l(A/(A cap B)) = l((A+B)/B) = l(R/B) - l(R/(A+B))
      const MonomialIdeal& in = ladder.mono(i);
      MonomialIdeal b = product(MonomialIdeal::variables(ring), in);
      long long level = artinian_socle_bound(b, limits);
      std::vector<Poly> gens;
      for (const auto& jg : reduction.local_gens()) {
        for (const auto& ig : ladder.mono(i - 1).gens()) {
          gens.push_back(jg * Poly::from_monomial(ig));
        }
      }
      for (const auto& g : b.gens()) gens.push_back(Poly::from_monomial(g));
      crossing = artinian_length(b, limits) - TruncatedImage(ring, gens, level).colength();
    } else {
      GradedIdeal j = reduction.kind() == IdealHandle::Kind::Monomial
                          ? GradedIdeal::from_monomial(reduction.mono())
                          : reduction.graded_ideal();
      GradedIdeal ji = product(j, ladder.graded_view(i - 1));
      GradedIdeal mi = product(GradedIdeal::from_monomial(MonomialIdeal::variables(ring)),
                               ladder.graded_view(i));
      for (long long e = 0; e <= ladder.graded_view(i).max_gen_degree(); ++e) {
        int rank_ji = piece_dim(ji, e);
        int rank_mi = piece_dim(mi, e);
        int rank_sum = piece_sum_basis(ji, mi, e).rank();
        int rank_meet = rank_ji + rank_mi - rank_sum;  // degreewise span intersection
        crossing += rank_ji - rank_meet;
      }
    }
    terms.push_back(ladder.mu(i) - crossing);
  }

  for (int n = 0; n <= max_check; ++n) {
    Int predicted = 0;
    for (int i = 0; i < static_cast<int>(terms.size()); ++i) {
      predicted += terms[i] * binomial(n - i + a - 1, a - 1);
    }
    if (predicted != ladder.mu(n)) return n;
  }
  return std::nullopt;
}

bool minimal_multiplicity_check(const CmReport& report, const IdealHandle& ideal) {
  return report.e_fiber == ideal.mu() - report.analytic_spread + 1;
}

bool reduction_invariance_probe(const IdealHandle& ideal,
                                const std::vector<IdealHandle>& reductions,
                                const Limits& limits) {
  if (reductions.empty()) throw InvalidInput("need at least one reduction");
  CmReport first = cm_check(ideal, reductions.front(), limits);
  if (!first.is_cm) {
    throw InvalidInput("the invariance probe needs a CM fiber cone");
  }
  for (size_t i = 1; i < reductions.size(); ++i) {
    int r = reduction_number(reductions[i], ideal, limits.max_power, limits);
    if (validated_mu_of_reduction(reductions[i]) != first.analytic_spread) {
      throw NotMinimalReduction("candidate " + std::to_string(i) + " is not minimal");
    }
    if (r != first.r_J) return false;
  }
  return true;
}

}  // namespace fibercone
