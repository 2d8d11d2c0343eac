#pragma once

#include <vector>

#include "fibercone/fiber.hpp"
#include "fibercone/graded.hpp"
#include "fibercone/limits.hpp"
#include "fibercone/series.hpp"

namespace fibercone {

// Which ideal a joint-reduction element is taken from.
enum class Slot { MaximalIdeal, MainIdeal };

// L(r,s) = l(R/(m^r I^s)) for 0 <= r <= rmax, 0 <= s <= smax. I must be
// m-primary.
Table2D bhattacharya_table(const IdealHandle& ideal, int rmax, int smax,
                           const Limits& limits = {});

// [e_0(m|I), ..., e_d(m|I)] by stabilized mixed differences of the
// Bhattacharya table; e_0 is checked to be 1 and e_d against e(I), with any
// mismatch raised as Falsification.
std::vector<Int> mixed_multiplicities(const IdealHandle& ideal,
                                      const Limits& limits = {});

// e(I): stabilized d-th forward difference of n -> l(R/I^n).
Int multiplicity_ideal(const IdealHandle& ideal, const Limits& limits = {});

struct JointReductionWitness {
  std::vector<Poly> elems;
  std::vector<Slot> assignment;
  int verified_power = 0;        // least n satisfying the defining identity
  bool parameter_system = false;
  Int colength;                  // l(R/(x_1..x_d)) when parameter_system
};

// Verifies x_j in its assigned ideal and the identity
//   [sum_j x_j I_1...(skip j)...I_d] (I_1...I_d)^{n-1} = (I_1...I_d)^n
// for some n <= max_n. Throws MembershipFailure-style InvalidInput or
// NotJointReduction.
JointReductionWitness is_joint_reduction(const std::vector<Poly>& elems,
                                         const std::vector<Slot>& assignment,
                                         const IdealHandle& ideal, int max_n,
                                         const Limits& limits = {});

// Mixed multiplicity as parameter-ideal colength; the witness elements must
// form a system of parameters.
Int e_via_joint_reduction(const JointReductionWitness& witness, const Ring& ring);

// e_{d-1}(m|I) == mu(I) - d + 1. The lower bound e_{d-1} >= mu - d + 1 is
// asserted along the way; a violation raises Falsification.
bool minimal_mixed_check(const IdealHandle& ideal, const Limits& limits = {});

// (1 + (mu(I) - d) t)/(1-t)^d, valid for ideals of minimal mixed
// multiplicity; throws InvalidInput when the precondition fails.
HilbertSeries predicted_series_mmm(const IdealHandle& ideal, const Limits& limits = {});

struct ContractedReport {
  long long order = 0;
  bool is_contracted_shape = false;  // mu(I) == 1 + o(I)
};

// Two-variable m-primary monomial ideals only.
ContractedReport contracted_check(const IdealHandle& ideal);

// For ideals of minimal mixed multiplicity: evaluates r_J <= 1, the length
// identity e(I) = l(R/I^2) - 2 l(R/I), and the full criterion, and returns
// the CM verdict. Disagreement between the length identity and the criterion
// raises Falsification.
bool cm_iff_r_le_1(const IdealHandle& ideal, const IdealHandle& reduction,
                   const Limits& limits = {});

}  // namespace fibercone
