#include "fibercone/mixed.hpp"

#include <algorithm>

#include "fibercone/errors.hpp"

namespace fibercone {

namespace {

void require_supported(const IdealHandle& ideal) {
  if (ideal.kind() == IdealHandle::Kind::Local) {
    throw InvalidInput("mixed-multiplicity computations need monomial or homogeneous generators");
  }
}

bool is_m_primary(const IdealHandle& ideal) {
  if (ideal.kind() == IdealHandle::Kind::Monomial) return is_artinian(ideal.mono());
  try {
    artinian_length_graded(ideal.graded_ideal());
    return true;
  } catch (const NotArtinian&) {
    return false;
  }
}

Int colength(const IdealHandle& ideal, const MonomialIdeal& mono_part,
             const GradedIdeal* graded_part, const Limits& limits) {
  if (graded_part == nullptr) return artinian_length(mono_part, limits);
  return artinian_length_graded(*graded_part);
}

}  // namespace

Table2D bhattacharya_table(const IdealHandle& ideal, int rmax, int smax, const Limits& limits) {
  require_supported(ideal);
  if (!is_m_primary(ideal)) throw InvalidInput("Bhattacharya table needs an m-primary ideal");
  const Ring& ring = ideal.ring();
  Table2D table(rmax + 1, smax + 1);
  if (ideal.kind() == IdealHandle::Kind::Monomial) {
    std::vector<MonomialIdeal> mpow{MonomialIdeal::unit(ring)};
    std::vector<MonomialIdeal> ipow{MonomialIdeal::unit(ring)};
    MonomialIdeal m = MonomialIdeal::variables(ring);
    for (int r = 1; r <= rmax; ++r) mpow.push_back(product(mpow.back(), m));
    for (int s = 1; s <= smax; ++s) ipow.push_back(product(ipow.back(), ideal.mono()));
    for (int r = 0; r <= rmax; ++r) {
      for (int s = 0; s <= smax; ++s) {
        table.at(r, s) = (r == 0 && s == 0) ? Int(0)
                                            : artinian_length(product(mpow[r], ipow[s]), limits);
      }
    }
    return table;
  }
  std::vector<GradedIdeal> mpow{GradedIdeal(ring, {Poly::constant(ring.dim(), 1)})};
  std::vector<GradedIdeal> ipow{GradedIdeal(ring, {Poly::constant(ring.dim(), 1)})};
  GradedIdeal m = GradedIdeal::from_monomial(MonomialIdeal::variables(ring));
  for (int r = 1; r <= rmax; ++r) mpow.push_back(product(mpow.back(), m));
  for (int s = 1; s <= smax; ++s) ipow.push_back(product(ipow.back(), ideal.graded_ideal()));
  for (int r = 0; r <= rmax; ++r) {
    for (int s = 0; s <= smax; ++s) {
      table.at(r, s) = (r == 0 && s == 0)
                           ? Int(0)
                           : artinian_length_graded(product(mpow[r], ipow[s]));
    }
  }
  return table;
}

namespace {

// The far 2x2 corner of the difference table must agree.
std::optional<Int> stabilized_corner(const Table2D& d) {
  if (d.rows() < 2 || d.cols() < 2) return std::nullopt;
  const Int& v = d.at(d.rows() - 1, d.cols() - 1);
  if (d.at(d.rows() - 2, d.cols() - 1) == v && d.at(d.rows() - 1, d.cols() - 2) == v &&
      d.at(d.rows() - 2, d.cols() - 2) == v) {
    return v;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Int> mixed_multiplicities(const IdealHandle& ideal, const Limits& limits) {
  require_supported(ideal);
  const int d = ideal.ring().dim();
  int size = d + 3;
  while (true) {
    Table2D table = bhattacharya_table(ideal, size, size, limits);
    std::vector<Int> e(d + 1);
    bool ok = true;
    for (int i = 0; i <= d && ok; ++i) {
      auto corner = stabilized_corner(mixed_differences(table, d - i, i));
      if (corner) {
        e[i] = *corner;
      } else {
        ok = false;
      }
    }
    if (ok) {
      if (e[0] != 1) {
        throw Falsification("e_0(m|I) = " + to_string(e[0]) + ", expected e(m) = 1");
      }
      Int ed = multiplicity_ideal(ideal, limits);
      if (e[d] != ed) {
        throw Falsification("e_d(m|I) = " + to_string(e[d]) + " but e(I) = " + to_string(ed));
      }
      return e;
    }
    if (size >= limits.grid_cap) {
      throw NotStabilized("mixed differences not stabilized within a " +
                          std::to_string(limits.grid_cap) + "-cap grid");
    }
    size = std::min(limits.grid_cap, 2 * size);
  }
}

Int multiplicity_ideal(const IdealHandle& ideal, const Limits& limits) {
  require_supported(ideal);
  if (!is_m_primary(ideal)) throw InvalidInput("multiplicity needs an m-primary ideal");
  const Ring& ring = ideal.ring();
  const int d = ring.dim();
  std::vector<Int> lens{Int(0)};  // l(R/I^0)
  int target = std::min(d + 3, limits.max_power);
  auto extend = [&](int upto) {
    if (ideal.kind() == IdealHandle::Kind::Monomial) {
      MonomialIdeal p = power(ideal.mono(), static_cast<long long>(lens.size()) - 1);
      for (int n = static_cast<int>(lens.size()); n <= upto; ++n) {
        p = product(p, ideal.mono());
        lens.push_back(artinian_length(p, limits));
      }
    } else {
      GradedIdeal p = power(ideal.graded_ideal(), static_cast<long long>(lens.size()) - 1);
      for (int n = static_cast<int>(lens.size()); n <= upto; ++n) {
        p = product(p, ideal.graded_ideal());
        lens.push_back(artinian_length_graded(p));
      }
    }
  };
  while (true) {
    extend(target);
    std::vector<Int> diff(lens);
    for (int k = 0; k < d; ++k) {
      for (size_t j = 0; j + 1 < diff.size(); ++j) diff[j] = diff[j + 1] - diff[j];
      diff.pop_back();
    }
    if (diff.size() >= 2 && diff[diff.size() - 1] == diff[diff.size() - 2]) {
      return diff.back();
    }
    if (target >= limits.max_power) {
      throw NotStabilized("l(R/I^n) differences not stabilized within the power budget");
    }
    target = std::min(limits.max_power, 2 * target);
  }
}

// --- joint reductions -----------------------------------------------------------

JointReductionWitness is_joint_reduction(const std::vector<Poly>& elems,
                                         const std::vector<Slot>& assignment,
                                         const IdealHandle& ideal, int max_n,
                                         const Limits& limits) {
  require_supported(ideal);
  const Ring& ring = ideal.ring();
  const int d = ring.dim();
  if (static_cast<int>(elems.size()) != d || assignment.size() != elems.size()) {
    throw InvalidInput("a joint reduction needs exactly dim-many assigned elements");
  }
  GradedIdeal m = GradedIdeal::from_monomial(MonomialIdeal::variables(ring));
  GradedIdeal main = ideal.kind() == IdealHandle::Kind::Monomial
                         ? GradedIdeal::from_monomial(ideal.mono())
                         : ideal.graded_ideal();
  std::vector<const GradedIdeal*> slots;
  for (size_t j = 0; j < elems.size(); ++j) {
    if (elems[j].is_zero() || !elems[j].is_homogeneous()) {
      throw InvalidInput("joint-reduction elements must be nonzero homogeneous");
    }
    slots.push_back(assignment[j] == Slot::MainIdeal ? &main : &m);
    if (!member(elems[j], *slots[j])) {
      throw InvalidInput("element " + std::to_string(j + 1) + " is not in its assigned ideal");
    }
  }

  GradedIdeal full_product(ring, {Poly::constant(d, 1)});
  for (const auto* s : slots) full_product = product(full_product, *s);
  std::vector<Poly> lhs_gens;
  for (size_t j = 0; j < elems.size(); ++j) {
    GradedIdeal skip(ring, {Poly::constant(d, 1)});
    for (size_t l = 0; l < slots.size(); ++l) {
      if (l != j) skip = product(skip, *slots[l]);
    }
    for (const auto& g : skip.gens()) lhs_gens.push_back(elems[j] * g);
  }
  GradedIdeal lhs_base = prune(GradedIdeal(ring, std::move(lhs_gens)));

  JointReductionWitness witness;
  witness.elems = elems;
  witness.assignment = assignment;
  GradedIdeal t_power(ring, {Poly::constant(d, 1)});  // (I_1...I_d)^{n-1}
  for (int n = 1; n <= max_n; ++n) {
    GradedIdeal lhs = product(lhs_base, t_power);
    t_power = product(t_power, full_product);
    if (ideal_equals(lhs, t_power)) {
      witness.verified_power = n;
      witness.parameter_system = is_parameter_system(ring, elems);
      if (witness.parameter_system) {
        witness.colength = artinian_length_graded(GradedIdeal(ring, elems));
      }
      return witness;
    }
  }
  throw NotJointReduction("the joint-reduction identity failed through power " +
                          std::to_string(max_n));
}

Int e_via_joint_reduction(const JointReductionWitness& witness, const Ring& ring) {
  if (!witness.parameter_system) {
    throw NotParameterSystem("witness elements do not form a system of parameters");
  }
  return artinian_length_graded(GradedIdeal(ring, witness.elems));
}

// --- minimal mixed multiplicity ---------------------------------------------------

bool minimal_mixed_check(const IdealHandle& ideal, const Limits& limits) {
  const int d = ideal.ring().dim();
  std::vector<Int> e = mixed_multiplicities(ideal, limits);
  Int bound = ideal.mu() - d + 1;
  if (e[d - 1] < bound) {
    throw Falsification("e_{d-1}(m|I) = " + to_string(e[d - 1]) +
                        " below the lower bound mu - d + 1 = " + to_string(bound));
  }
  return e[d - 1] == bound;
}

HilbertSeries predicted_series_mmm(const IdealHandle& ideal, const Limits& limits) {
  const int d = ideal.ring().dim();
  if (!minimal_mixed_check(ideal, limits)) {
    throw InvalidInput("ideal does not have minimal mixed multiplicity");
  }
  Int p = ideal.mu() - d;
  std::vector<Int> num{Int(1)};
  if (p != 0) num.push_back(p);
  return HilbertSeries(std::move(num), d);
}

ContractedReport contracted_check(const IdealHandle& ideal) {
  if (ideal.ring().dim() != 2) throw InvalidInput("contractedness check is for two variables");
  if (ideal.kind() != IdealHandle::Kind::Monomial || !is_artinian(ideal.mono())) {
    throw InvalidInput("contractedness check needs an m-primary monomial ideal");
  }
  ContractedReport out;
  out.order = order_of(ideal.mono());
  out.is_contracted_shape = ideal.mono().mu() == out.order + 1;
  return out;
}

bool cm_iff_r_le_1(const IdealHandle& ideal, const IdealHandle& reduction, const Limits& limits) {
  if (!minimal_mixed_check(ideal, limits)) {
    throw InvalidInput("the reduction-number criterion needs minimal mixed multiplicity");
  }
  CmReport report = cm_check(ideal, reduction, limits);

  Int len1, len2;
  if (ideal.kind() == IdealHandle::Kind::Monomial) {
    len1 = artinian_length(ideal.mono(), limits);
    len2 = artinian_length(power(ideal.mono(), 2), limits);
  } else {
    len1 = artinian_length_graded(ideal.graded_ideal());
    len2 = artinian_length_graded(power(ideal.graded_ideal(), 2));
  }
  bool length_route = multiplicity_ideal(ideal, limits) == len2 - 2 * len1;
  if (length_route != report.is_cm) {
    throw Falsification("length identity e(I) = l(R/I^2) - 2 l(R/I) disagrees with the criterion");
  }
  if ((report.r_J <= 1) != report.is_cm) {
    throw Falsification("r_J <= 1 disagrees with the criterion on a minimal-mixed ideal");
  }
  return report.is_cm;
}

}  // namespace fibercone
