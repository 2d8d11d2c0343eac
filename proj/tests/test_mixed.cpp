#include <doctest.h>

#include "fibercone/errors.hpp"
#include "fibercone/mixed.hpp"
#include "helpers.hpp"

using namespace fibercone;

namespace {

const char* kHL = "(x^3, y^3, z^3, x*y, x*z, y*z)";

}

TEST_CASE("bhattacharya table") {
  auto r2 = tf::ring("x, y");
  auto m_table = bhattacharya_table(tf::handle(r2, "(x, y)"), 5, 5);
  for (int r = 0; r <= 5; ++r) {
    for (int s = 0; s <= 5; ++s) CHECK(m_table.at(r, s) == binomial(r + s + 1, 2));
  }

  auto noncm3 = IdealHandle::monomial(tf::noncm_ideal(r2, 3));
  auto t = bhattacharya_table(noncm3, 2, 2);
  CHECK(t.at(0, 1) == 16);
  CHECK(t.at(0, 2) == 52);

  auto r3 = tf::ring("x, y, z");
  CHECK(bhattacharya_table(tf::handle(r3, kHL), 1, 1).at(0, 1) == 7);

  CHECK_THROWS_AS(bhattacharya_table(tf::handle(r2, "(x)"), 2, 2), InvalidInput);
}

TEST_CASE("mixed multiplicities") {
  auto r3 = tf::ring("x, y, z");
  CHECK(mixed_multiplicities(tf::handle(r3, kHL)) == std::vector<Int>{1, 2, 4, 11});

  auto r2 = tf::ring("x, y");
  CHECK(mixed_multiplicities(tf::handle(r2, "(x, y)")) == std::vector<Int>{1, 1, 1});

  auto noncm3 = IdealHandle::monomial(tf::noncm_ideal(r2, 3));
  CHECK(mixed_multiplicities(noncm3) == std::vector<Int>{1, 3, 21});
}

TEST_CASE("multiplicity of an ideal") {
  auto r2 = tf::ring("x, y");
  CHECK(multiplicity_ideal(tf::handle(r2, "(x^2, x*y, y^2)")) == 4);
  CHECK(multiplicity_ideal(IdealHandle::monomial(tf::noncm_ideal(r2, 3))) == 21);
  auto r3 = tf::ring("x, y, z");
  CHECK(multiplicity_ideal(tf::handle(r3, kHL)) == 11);
}

TEST_CASE("joint reductions of (I, m, m) and (I, I, m)") {
  auto r3 = tf::ring("x, y, z");
  auto i = tf::handle(r3, kHL);

  auto elems1 = evaluate_polynomials(parse_ideal("(y*z, y + z, x)", r3), r3);
  auto w1 = is_joint_reduction(elems1, {Slot::MainIdeal, Slot::MaximalIdeal, Slot::MaximalIdeal},
                               i, 5);
  CHECK(w1.parameter_system);
  CHECK(e_via_joint_reduction(w1, r3) == 2);

  auto elems2 = evaluate_polynomials(parse_ideal("(y*z, x*y + x*z, x + y + z)", r3), r3);
  auto w2 = is_joint_reduction(elems2, {Slot::MainIdeal, Slot::MainIdeal, Slot::MaximalIdeal},
                               i, 5);
  CHECK(e_via_joint_reduction(w2, r3) == 4);

  auto r2 = tf::ring("x, y");
  auto elems3 = evaluate_polynomials(parse_ideal("(x, y)", r2), r2);
  auto w3 = is_joint_reduction(elems3, {Slot::MaximalIdeal, Slot::MaximalIdeal},
                               tf::handle(r2, "(x, y)"), 5);
  CHECK(w3.verified_power == 1);
  CHECK(e_via_joint_reduction(w3, r2) == 1);

  // not in the assigned ideal
  auto bad = evaluate_polynomials(parse_ideal("(x, y + z, x)", r3), r3);
  CHECK_THROWS_AS(
      is_joint_reduction(bad, {Slot::MainIdeal, Slot::MaximalIdeal, Slot::MaximalIdeal}, i, 5),
      InvalidInput);
}

TEST_CASE("joint-reduction route agrees with the difference route") {
  auto r3 = tf::ring("x, y, z");
  auto i = tf::handle(r3, kHL);
  auto e = mixed_multiplicities(i);
  auto elems1 = evaluate_polynomials(parse_ideal("(y*z, y + z, x)", r3), r3);
  auto w1 = is_joint_reduction(elems1, {Slot::MainIdeal, Slot::MaximalIdeal, Slot::MaximalIdeal},
                               i, 5);
  CHECK(e[1] == e_via_joint_reduction(w1, r3));
  auto elems2 = evaluate_polynomials(parse_ideal("(y*z, x*y + x*z, x + y + z)", r3), r3);
  auto w2 = is_joint_reduction(elems2, {Slot::MainIdeal, Slot::MainIdeal, Slot::MaximalIdeal},
                               i, 5);
  CHECK(e[2] == e_via_joint_reduction(w2, r3));
}

TEST_CASE("minimal mixed multiplicity") {
  auto r3 = tf::ring("x, y, z");
  CHECK(minimal_mixed_check(tf::handle(r3, kHL)));

  auto r2 = tf::ring("x, y");
  CHECK(minimal_mixed_check(IdealHandle::monomial(tf::noncm_ideal(r2, 3))));
  CHECK(minimal_mixed_check(tf::handle(r2, "(x, y)")));
  // (x^2, y^2): e_1(m|I) = 2 but mu - d + 1 = 1
  CHECK_FALSE(minimal_mixed_check(tf::handle(r2, "(x^2, y^2)")));
}

TEST_CASE("lemma lower bound e_{d-1}(m|I) >= mu(I) - d + 1 on corpus ideals") {
  struct Case {
    std::string vars;
    std::string ideal;
  };
  for (const Case& c : {Case{"x, y", "(x^3, x*y^4*(x,y), y^7)"},
                        Case{"x, y", "(x^3, x^2*y, y^3)"},
                        Case{"x, y", "(x^2, y^2)"},
                        Case{"x, y", "(x^2, x*y, y^2)"},
                        Case{"x, y, z", kHL},
                        Case{"x, y, z", "((x^2, y^2)^3, x*(x^2, y^2)*z^3, z^6)"}}) {
    auto r = tf::ring(c.vars);
    auto h = tf::handle(r, c.ideal);
    auto e = mixed_multiplicities(h);
    const int d = r.dim();
    CHECK(e[d - 1] >= h.mu() - d + 1);
    // Rees identities at the ends
    CHECK(e[0] == 1);
    CHECK(e[d] == multiplicity_ideal(h));
  }
}

TEST_CASE("predicted series for minimal mixed multiplicity") {
  auto r2 = tf::ring("x, y");
  auto noncm3 = IdealHandle::monomial(tf::noncm_ideal(r2, 3));
  CHECK(predicted_series_mmm(noncm3).str() == "(1 + 2t)/(1-t)^2");

  auto r3 = tf::ring("x, y, z");
  CHECK(predicted_series_mmm(tf::handle(r3, kHL)).str() == "(1 + 3t)/(1-t)^3");
  CHECK(predicted_series_mmm(tf::handle(r2, "(x, y)")).str() == "1/(1-t)^2");

  CHECK_THROWS_AS(predicted_series_mmm(tf::handle(r2, "(x^2, y^2)")), InvalidInput);
}

TEST_CASE("predicted series matches the fiber series on minimal-mixed ideals") {
  struct Case {
    std::string vars;
    std::string ideal;
  };
  for (const Case& c : {Case{"x, y", "(x^3, x*y^4*(x,y), y^7)"},
                        Case{"x, y", "(x^4, x*y^5*(x,y)^2, y^9)"},
                        Case{"x, y", "(x, y)"},
                        Case{"x, y, z", kHL}}) {
    auto r = tf::ring(c.vars);
    auto h = tf::handle(r, c.ideal);
    REQUIRE(minimal_mixed_check(h));
    CHECK(predicted_series_mmm(h) == fiber_series(h));
  }
}

TEST_CASE("contracted shape in two variables") {
  auto r2 = tf::ring("x, y");
  auto rep = contracted_check(IdealHandle::monomial(tf::noncm_ideal(r2, 3)));
  CHECK(rep.order == 3);
  CHECK(rep.is_contracted_shape);

  rep = contracted_check(tf::handle(r2, "(x^2, y^2)"));
  CHECK(rep.order == 2);
  CHECK_FALSE(rep.is_contracted_shape);

  rep = contracted_check(tf::handle(r2, "(x, y)"));
  CHECK(rep.order == 1);
  CHECK(rep.is_contracted_shape);

  auto r3 = tf::ring("x, y, z");
  CHECK_THROWS_AS(contracted_check(tf::handle(r3, "(x, y, z)")), InvalidInput);
}

TEST_CASE("CM iff reduction number at most one, on minimal-mixed ideals") {
  auto r2 = tf::ring("x, y");
  // noncm(3): e(I) = 21 but l(R/I^2) - 2 l(R/I) = 52 - 32 = 20
  CHECK_FALSE(
      cm_iff_r_le_1(IdealHandle::monomial(tf::noncm_ideal(r2, 3)), tf::handle(r2, "(x^3, y^7)")));

  auto r3 = tf::ring("x, y, z");
  CHECK(cm_iff_r_le_1(tf::handle(r3, kHL),
                      tf::handle(r3, "(x^3 + y*z, y^3 + z^3 + x*z, x*z + x*y)")));

  CHECK(cm_iff_r_le_1(tf::handle(r2, "(x, y)"), tf::handle(r2, "(x, y)")));
}
