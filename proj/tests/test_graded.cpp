#include <doctest.h>

#include <random>

#include "fibercone/errors.hpp"
#include "fibercone/graded.hpp"
#include "helpers.hpp"

using namespace fibercone;

namespace {

// hoc family: I = (x_i y_j) in k[x1, x2, y1..ys] with the paper's binomial
// reduction J = (x1 y_i + x2 y_{i+1} : i < s; x1 y_s, x2 y_1).
std::string hoc_vars(int s) {
  std::string vars = "x1, x2";
  for (int j = 1; j <= s; ++j) vars += ", y" + std::to_string(j);
  return vars;
}

std::string hoc_ideal(int s) {
  std::string text = "(";
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= s; ++j) {
      if (text.size() > 1) text += ", ";
      text += "x" + std::to_string(i) + "*y" + std::to_string(j);
    }
  }
  return text + ")";
}

std::string hoc_reduction(int s) {
  std::string text = "(";
  for (int i = 1; i < s; ++i) {
    if (text.size() > 1) text += ", ";
    text += "x1*y" + std::to_string(i) + " + x2*y" + std::to_string(i + 1);
  }
  text += ", x1*y" + std::to_string(s) + ", x2*y1";
  return text + ")";
}

}  // namespace

TEST_CASE("piece dimensions") {
  auto r2 = tf::ring("x, y");
  CHECK(piece_dim(tf::graded(r2, "(x, y)"), 1) == 2);
  CHECK(piece_dim(tf::graded(r2, "(x^2)"), 3) == 2);

  // (yz, y+z, x): R/(that) = k[y]/(y^2), so the quotient lives in degrees 0, 1
  // and the degree-2 piece is all of R_2.
  auto r3 = tf::ring("x, y, z");
  auto k = tf::graded(r3, "(y*z, y + z, x)");
  CHECK(piece_dim(k, 2) == 6);
  CHECK(dim_graded_piece(3, 2) == 6);
}

TEST_CASE("membership") {
  auto r2 = tf::ring("x, y");
  CHECK(member(tf::poly(r2, "x^2"), tf::graded(r2, "(x)")));
  CHECK(member(tf::poly(r2, "x^2*y^2"), tf::graded(r2, "(x^2)")));
  CHECK_FALSE(member(tf::poly(r2, "y^2"), tf::graded(r2, "(x, y^3)")));

  // x1y1 * x1y2 lies in J*I for the hoc family at s = 2 (since JI = I^2)
  auto r = tf::ring(hoc_vars(2));
  auto ji = product(tf::graded(r, hoc_reduction(2)), tf::graded(r, hoc_ideal(2)));
  CHECK(member(tf::poly(r, "x1*y1 * x1*y2"), ji));
}

TEST_CASE("ideal equality") {
  auto r2 = tf::ring("x, y");
  CHECK(ideal_equals(tf::graded(r2, "(x, y)"), tf::graded(r2, "(y, x + y)")));

  // JI = I^2 for the hoc family at s = 3
  auto r = tf::ring(hoc_vars(3));
  auto i = tf::graded(r, hoc_ideal(3));
  auto j = tf::graded(r, hoc_reduction(3));
  CHECK(ideal_equals(product(j, i), power(i, 2)));

  // Im^2 = yz m^2 + (y+z) Im + x Im  (Huneke-Lipman joint reduction identity)
  auto r3 = tf::ring("x, y, z");
  auto i_hl = tf::graded(r3, "(x^3, y^3, z^3, x*y, x*z, y*z)");
  auto m = tf::graded(r3, "(x, y, z)");
  auto im = product(i_hl, m);
  auto lhs = product(im, m);  // I m^2
  std::vector<Poly> rhs_gens;
  for (const auto& g : power(m, 2).gens()) rhs_gens.push_back(tf::poly(r3, "y*z") * g);
  for (const auto& g : im.gens()) rhs_gens.push_back(tf::poly(r3, "y + z") * g);
  for (const auto& g : im.gens()) rhs_gens.push_back(tf::poly(r3, "x") * g);
  CHECK(ideal_equals(lhs, GradedIdeal(r3, rhs_gens)));
}

TEST_CASE("graded product and power") {
  auto r = tf::ring("x, y");
  CHECK(ideal_equals(product(tf::graded(r, "(x)"), tf::graded(r, "(y)")), tf::graded(r, "(x*y)")));
  auto unit = power(tf::graded(r, "(x, y)"), 0);
  CHECK(unit.gens().size() == 1);
  CHECK(unit.gens()[0].degree() == 0);
}

TEST_CASE("mu_graded") {
  auto r2 = tf::ring("x, y");
  CHECK(mu_graded(tf::graded(r2, "(x, y)")) == 2);

  // mu(I^2) = (n+1) C(n+s-1, s-1) = 3 * 6 = 18 for hoc at s = 3, n = 2
  auto r = tf::ring(hoc_vars(3));
  CHECK(mu_graded(power(tf::graded(r, hoc_ideal(3)), 2)) == 18);

  auto r3 = tf::ring("x, y, z");
  CHECK(mu_graded(tf::graded(r3, "(x^3, y^3, z^3, x*y, x*z, y*z)")) == 6);
}

TEST_CASE("graded colength") {
  auto r3 = tf::ring("x, y, z");
  CHECK(artinian_length_graded(tf::graded(r3, "(x, y, z)")) == 1);
  CHECK(artinian_length_graded(tf::graded(r3, "(y*z, y + z, x)")) == 2);
  CHECK(artinian_length_graded(tf::graded(r3, "(y*z, x*y + x*z, x + y + z)")) == 4);
  CHECK_THROWS_AS(artinian_length_graded(tf::graded(r3, "(x, y)")), NotArtinian);
}

TEST_CASE("parameter systems") {
  auto r3 = tf::ring("x, y, z");
  auto gens = [&](const std::string& text) {
    return evaluate_polynomials(parse_ideal(text, r3), r3);
  };
  CHECK(is_parameter_system(r3, gens("(x, y, z)")));
  CHECK_FALSE(is_parameter_system(r3, gens("(x, x*y, z)")));
  CHECK(is_parameter_system(r3, gens("(y*z, y + z, x)")));
  CHECK_THROWS_AS(is_parameter_system(r3, gens("(x, y)")), InvalidInput);
}

TEST_CASE("cross-engine agreement on random monomial ideals") {
  std::mt19937 rng(4242);
  int trials = 0;
  for (int d = 1; d <= 3; ++d) {
    std::vector<std::string> vars;
    for (int i = 0; i < d; ++i) vars.emplace_back(1, static_cast<char>('x' + i));
    Ring r(vars);
    for (int t = 0; t < 34; ++t) {
      auto a = tf::random_monomial_ideal(rng, r, 3, 3, true);
      auto b = tf::random_monomial_ideal(rng, r, 3, 3, true);
      auto ga = GradedIdeal::from_monomial(a);
      auto gb = GradedIdeal::from_monomial(b);
      // mu of powers
      CHECK(mu_graded(power(ga, 2)) == power(a, 2).mu());
      // colength
      CHECK(artinian_length_graded(ga) == artinian_length(a));
      // equality both ways
      CHECK(ideal_equals(ga, gb) == (a == b));
      CHECK(ideal_equals(product(ga, gb), GradedIdeal::from_monomial(product(a, b))));
      ++trials;
    }
  }
  CHECK(trials == 102);
}

TEST_CASE("member agrees with monomial containment") {
  std::mt19937 rng(77);
  auto r = tf::ring("x, y, z");
  for (int t = 0; t < 25; ++t) {
    auto a = tf::random_monomial_ideal(rng, r, 4, 4, false);
    if (a.is_zero()) continue;
    auto ga = GradedIdeal::from_monomial(a);
    for (const auto& m : monomials_of_degree(3, t % 6)) {
      CHECK(member(Poly::from_monomial(m), ga) == a.contains(m));
    }
  }
}

TEST_CASE("piece_dim is monotone and bounded") {
  auto r = tf::ring("x, y, z");
  auto small = tf::graded(r, "(x^2, y^2)");
  auto big = tf::graded(r, "(x^2, y^2, x*z)");
  for (long long e = 0; e <= 6; ++e) {
    CHECK(piece_dim(small, e) <= piece_dim(big, e));
    CHECK(Int(piece_dim(big, e)) <= dim_graded_piece(3, e));
  }
}

TEST_CASE("prune preserves the ideal") {
  auto r = tf::ring("x, y");
  auto verbose = tf::graded(r, "(x^2, x^2 + x*y, x*y, x^3, y^5)");
  auto pruned = prune(verbose);
  CHECK(pruned.gens().size() < verbose.gens().size());
  CHECK(ideal_equals(pruned, verbose));
}

TEST_CASE("truncated images decide membership past the certified level") {
  auto r = tf::ring("x, y");
  // ideal (x^2 - y^2, x*y) contains m^3: x^3 = x(x^2-y^2) + y(xy), etc.
  auto gens = evaluate_polynomials(parse_ideal("(x^2 - y^2, x*y)", r), r);
  TruncatedImage image(r, gens, 5);
  CHECK(image.contains(tf::poly(r, "x^3")));
  CHECK(image.contains(tf::poly(r, "y^3")));
  CHECK(image.contains(tf::poly(r, "x^2*y^2")));
  CHECK_FALSE(image.contains(tf::poly(r, "x^2 + y^2")));
  CHECK_FALSE(image.contains(tf::poly(r, "x")));
  // l(R/(x^2 - y^2, x*y)) = 4: basis 1, x, y, x^2 (= y^2 there, x y = 0)
  CHECK(image.colength() == 4);
}
