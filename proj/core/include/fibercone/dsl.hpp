#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fibercone/graded.hpp"
#include "fibercone/monomial.hpp"
#include "fibercone/ring.hpp"
#include "fibercone/series.hpp"

namespace fibercone {

// Ideal expression AST. Grammar (whitespace insignificant):
//   ideal  := gen ("," gen)*
//   gen    := term (("+"|"-") term)*
//   term   := ("-")? factor ("*" factor)*
//   factor := atom ("^" nat)?
//   atom   := name | nat ("/" nat)? | "(" ideal ")"
// A comma builds a generator list; "+"/"-" build polynomial generators and
// are only legal between polynomial-valued operands.
struct Expr {
  enum class Kind { List, Sum, Product, Power, VarPow, Number };
  Kind kind;
  std::vector<std::shared_ptr<const Expr>> children;  // List, Product
  std::vector<int> signs;                             // Sum: +1/-1 per child
  std::shared_ptr<const Expr> base;                   // Power
  long long exponent = 0;                             // Power, VarPow
  int var = -1;                                       // VarPow
  Rat value;                                          // Number
};
using ExprPtr = std::shared_ptr<const Expr>;

// "ring x, y, z" (a trailing ';' is tolerated). Duplicate or malformed names
// raise ParseError.
Ring parse_ring(const std::string& text);

ExprPtr parse_ideal(const std::string& text, const Ring& ring);

// Fully expanded, minimalized monomial ideal; every generator leaf must be a
// scalar multiple of a monomial, otherwise InvalidInput.
MonomialIdeal evaluate_monomial(const ExprPtr& expr, const Ring& ring);

// Top-level generators in written order, each required to be monomial.
// No minimalization: quadratic-sequence machinery needs the user's order.
std::vector<Monomial> monomial_generators(const ExprPtr& expr, const Ring& ring);

// Generator polynomials in written order (ideal products/powers expanded).
std::vector<Poly> evaluate_polynomials(const ExprPtr& expr, const Ring& ring);

// As above, additionally requiring homogeneity of every generator.
GradedIdeal evaluate_graded(const ExprPtr& expr, const Ring& ring);

std::string render(const Ring& ring);
std::string render(const Monomial& m, const Ring& ring);
std::string render(const MonomialIdeal& a);
std::string render(const Poly& p, const Ring& ring);
std::string render(const GradedIdeal& k);
std::string render(const HilbertSeries& s);

// Inverse of render(HilbertSeries) on canonical strings, e.g.
// "(1 + 4t + t^2)/(1-t)^3".
HilbertSeries parse_series(const std::string& text);

}  // namespace fibercone
