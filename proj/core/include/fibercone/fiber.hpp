#pragma once

#include <optional>
#include <vector>

#include "fibercone/dsl.hpp"
#include "fibercone/graded.hpp"
#include "fibercone/limits.hpp"
#include "fibercone/monomial.hpp"
#include "fibercone/series.hpp"

namespace fibercone {

// Dispatch wrapper over the two engines, plus a third kind for ideals with
// inhomogeneous generators (the paper-style minimal reductions in a local
// ring). Such ideals may act as the reduction J but not as the main ideal I.
class IdealHandle {
 public:
  enum class Kind { Monomial, Graded, Local };

  static IdealHandle monomial(MonomialIdeal a);
  static IdealHandle graded(GradedIdeal k);
  static IdealHandle local(Ring ring, std::vector<Poly> gens);

  // Picks the lightest engine that can represent the expression: monomial,
  // else graded, else local.
  static IdealHandle from_expr(const ExprPtr& expr, const Ring& ring);

  Kind kind() const { return kind_; }
  const Ring& ring() const { return ring_; }
  const MonomialIdeal& mono() const { return *mono_; }
  const GradedIdeal& graded_ideal() const { return *graded_; }
  const std::vector<Poly>& local_gens() const { return local_; }

  // Generators as polynomials, whatever the engine.
  std::vector<Poly> gens_as_polys() const;
  int generator_count() const;
  // Minimal number of generators. For the Local kind this is not directly
  // computable; callers use generator_count together with a verified
  // reduction property instead.
  Int mu() const;

  std::string describe() const;

 private:
  Kind kind_ = Kind::Monomial;
  Ring ring_{std::vector<std::string>{"x"}};
  std::optional<MonomialIdeal> mono_;
  std::optional<GradedIdeal> graded_;
  std::vector<Poly> local_;
};

// Is J contained in I? I must be Monomial or Graded.
bool contains_ideal(const IdealHandle& big, const IdealHandle& small);

// The verdict of the length/multiplicity criterion together with everything
// needed to audit it.
struct CmReport {
  int analytic_spread = 0;
  HilbertSeries series;
  Int mu_I;
  Int mu_J;
  int r_J = 0;
  std::vector<Int> criterion_lengths;  // index n = l(I^n/(J I^{n-1} + m I^n))
  Int e_fiber;
  Int length_sum;
  bool is_cm = false;
  bool is_minimal_multiplicity = false;
  // The n = 0 summand is l(R/m) = 1 by convention.
  static constexpr int n0_term = 1;
};

// [mu(I^0), ..., mu(I^N)]; mu(I^0) = 1.
std::vector<Int> fiber_hilbert_function(const IdealHandle& ideal, int n,
                                        const Limits& limits = {});

// H(F(I), t) over an adaptively grown sample; denominator power = analytic
// spread. Throws NotStabilized if the power budget runs out first.
HilbertSeries fiber_series(const IdealHandle& ideal, const Limits& limits = {});

int analytic_spread(const IdealHandle& ideal, const Limits& limits = {});

// Least n with J I^n = I^{n+1}. Throws NotContained when J is not inside I
// and NotAReduction when no n <= max_n works. For an inhomogeneous J the
// equalities are those of the localization at m, decided exactly through
// truncated images.
int reduction_number(const IdealHandle& reduction, const IdealHandle& ideal,
                     int max_n, const Limits& limits = {});

// l(I^n/(J I^{n-1} + m I^n)); n = 0 gives 1 by convention.
Int criterion_length(const IdealHandle& ideal, const IdealHandle& reduction,
                     int n, const Limits& limits = {});

// Requires J to be a minimal reduction (finite reduction number and
// mu(J) = a(I)); throws NotMinimalReduction otherwise. When the verdict is
// CM, the series numerator is checked against the length vector and any
// mismatch raises Falsification.
CmReport cm_check(const IdealHandle& ideal, const IdealHandle& reduction,
                  const Limits& limits = {});

// First n <= max_check violating the Hilbert-function identity for CM fiber
// cones, or nullopt when it holds throughout. The correction term is computed
// through the intersection J I^{i-1} with m I^i, not through the series.
std::optional<int> shah_function_check(const IdealHandle& ideal,
                                       const IdealHandle& reduction,
                                       int max_check, const Limits& limits = {});

// e(F(I)) == mu(I) - a + 1.
bool minimal_multiplicity_check(const CmReport& report, const IdealHandle& ideal);

// True iff all supplied minimal reductions give the same reduction number.
// Requires the fiber cone to be CM with the first one. A false result would
// contradict the independence of r_J; callers treat it as a falsification.
bool reduction_invariance_probe(const IdealHandle& ideal,
                                const std::vector<IdealHandle>& reductions,
                                const Limits& limits = {});

}  // namespace fibercone
