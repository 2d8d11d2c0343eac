#pragma once

#include <random>
#include <string>
#include <vector>

#include "fibercone/dsl.hpp"
#include "fibercone/fiber.hpp"

namespace tf {

inline fibercone::Ring ring(const std::string& vars) {
  return fibercone::parse_ring("ring " + vars);
}

inline fibercone::MonomialIdeal mono(const fibercone::Ring& r, const std::string& text) {
  return fibercone::evaluate_monomial(fibercone::parse_ideal(text, r), r);
}

inline fibercone::GradedIdeal graded(const fibercone::Ring& r, const std::string& text) {
  return fibercone::evaluate_graded(fibercone::parse_ideal(text, r), r);
}

inline fibercone::IdealHandle handle(const fibercone::Ring& r, const std::string& text) {
  return fibercone::IdealHandle::from_expr(fibercone::parse_ideal(text, r), r);
}

inline fibercone::Poly poly(const fibercone::Ring& r, const std::string& text) {
  auto gens = fibercone::evaluate_polynomials(fibercone::parse_ideal(text, r), r);
  return gens.at(0);
}

// Random monomial ideal with `count` generators, exponents < max_exp, plus an
// added pure power of every variable when `artinian`.
inline fibercone::MonomialIdeal random_monomial_ideal(std::mt19937& rng, const fibercone::Ring& r,
                                                      int count, int max_exp, bool artinian) {
  std::uniform_int_distribution<long long> exp_dist(0, max_exp - 1);
  std::uniform_int_distribution<long long> pure_dist(1, max_exp);
  std::vector<fibercone::Monomial> gens;
  for (int i = 0; i < count; ++i) {
    std::vector<long long> e(r.dim());
    for (auto& v : e) v = exp_dist(rng);
    gens.emplace_back(std::move(e));
  }
  if (artinian) {
    for (int i = 0; i < r.dim(); ++i) {
      gens.push_back(fibercone::Monomial::var(r.dim(), i, pure_dist(rng)));
    }
  }
  return fibercone::MonomialIdeal::make(r, std::move(gens));
}

// The noncm family (x^r, x y^{r+1} (x,y)^{r-2}, y^{2r+1}) in k[x,y], r >= 3.
inline fibercone::MonomialIdeal noncm_ideal(const fibercone::Ring& r2, int r) {
  std::string text = "(x^" + std::to_string(r) + ", x*y^" + std::to_string(r + 1) +
                     "*(x,y)^" + std::to_string(r - 2) + ", y^" + std::to_string(2 * r + 1) + ")";
  return mono(r2, text);
}

}  // namespace tf
