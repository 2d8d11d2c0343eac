#include "fibercone/dsl.hpp"

#include <cctype>
#include <sstream>

#include "fibercone/errors.hpp"

namespace fibercone {

namespace {

// --- tokenizer --------------------------------------------------------------

struct Token {
  enum class Type { Name, Number, Symbol, End };
  Type type = Type::End;
  std::string text;
  size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }
  bool at_symbol(char c) const {
    return tok_.type == Token::Type::Symbol && tok_.text[0] == c;
  }
  void expect_symbol(char c) {
    if (!at_symbol(c)) fail(std::string("expected '") + c + "'");
    advance();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(tok_.pos) + " in \"" + s_ + "\"");
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    tok_.pos = i_;
    if (i_ >= s_.size()) {
      tok_ = {Token::Type::End, "", i_};
      return;
    }
    char c = s_[i_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) {
        ++j;
      }
      tok_ = {Token::Type::Name, s_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      tok_ = {Token::Type::Number, s_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    tok_ = {Token::Type::Symbol, std::string(1, c), i_};
    ++i_;
  }

  const std::string& s_;
  size_t i_ = 0;
  Token tok_;
};

// --- recursive descent ------------------------------------------------------

class Parser {
 public:
  Parser(const std::string& text, const Ring& ring) : lex_(text), ring_(ring) {}

  ExprPtr parse() {
    ExprPtr e = ideal();
    if (lex_.peek().type != Token::Type::End && !lex_.at_symbol(';')) {
      lex_.fail("trailing input");
    }
    return e;
  }

 private:
  long long natural() {
    if (lex_.peek().type != Token::Type::Number) lex_.fail("expected a natural number");
    Token t = lex_.take();
    try {
      return std::stoll(t.text);
    } catch (const std::exception&) {
      lex_.fail("exponent out of range");
    }
  }

  ExprPtr ideal() {
    auto node = std::make_shared<Expr>();
    node->kind = Expr::Kind::List;
    node->children.push_back(gen());
    while (lex_.at_symbol(',')) {
      lex_.take();
      node->children.push_back(gen());
    }
    if (node->children.size() == 1) return node->children.front();
    return node;
  }

  ExprPtr gen() {
    auto node = std::make_shared<Expr>();
    node->kind = Expr::Kind::Sum;
    node->children.push_back(term());
    node->signs.push_back(+1);
    while (lex_.at_symbol('+') || lex_.at_symbol('-')) {
      int sign = lex_.take().text[0] == '+' ? +1 : -1;
      node->children.push_back(term());
      node->signs.push_back(sign);
    }
    if (node->children.size() == 1 && node->signs[0] == +1) return node->children.front();
    return node;
  }

  ExprPtr term() {
    int lead = +1;
    while (lex_.at_symbol('-') || lex_.at_symbol('+')) {
      if (lex_.take().text[0] == '-') lead = -lead;
    }
    auto node = std::make_shared<Expr>();
    node->kind = Expr::Kind::Product;
    node->children.push_back(factor());
    while (lex_.at_symbol('*')) {
      lex_.take();
      node->children.push_back(factor());
    }
    ExprPtr result = node->children.size() == 1 ? node->children.front() : ExprPtr(node);
    if (lead < 0) {
      auto neg = std::make_shared<Expr>();
      neg->kind = Expr::Kind::Sum;
      neg->children.push_back(result);
      neg->signs.push_back(-1);
      return neg;
    }
    return result;
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (lex_.at_symbol('^')) {
      lex_.take();
      if (lex_.at_symbol('-')) lex_.fail("negative exponent");
      long long n = natural();
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Power;
      node->base = base;
      node->exponent = n;
      return node;
    }
    return base;
  }

  ExprPtr atom() {
    const Token& t = lex_.peek();
    if (t.type == Token::Type::Name) {
      Token name = lex_.take();
      auto idx = ring_.index_of(name.text);
      if (!idx) throw ParseError("unknown variable '" + name.text + "'");
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::VarPow;
      node->var = *idx;
      node->exponent = 1;
      return node;
    }
    if (t.type == Token::Type::Number) {
      long long num = natural();
      long long den = 1;
      if (lex_.at_symbol('/')) {
        lex_.take();
        den = natural();
        if (den == 0) lex_.fail("zero denominator");
      }
      auto node = std::make_shared<Expr>();
      node->kind = Expr::Kind::Number;
      node->value = Rat(static_cast<long>(num), static_cast<long>(den));
      node->value.canonicalize();
      return node;
    }
    if (lex_.at_symbol('(')) {
      lex_.take();
      ExprPtr inner = ideal();
      lex_.expect_symbol(')');
      return inner;
    }
    lex_.fail("expected a variable, number or '('");
  }

  Lexer lex_;
  const Ring& ring_;
};

// --- evaluation -------------------------------------------------------------

// Either a single polynomial or a generator list.
struct Value {
  bool is_ideal = false;
  Poly poly;
  std::vector<Poly> gens;

  std::vector<Poly> as_gens() const {
    if (is_ideal) return gens;
    return {poly};
  }
};

Value eval(const ExprPtr& e, const Ring& ring);

Value eval_product(const std::vector<Value>& parts, const Ring& ring) {
  bool any_ideal = false;
  for (const auto& p : parts) any_ideal = any_ideal || p.is_ideal;
  if (!any_ideal) {
    Poly acc = Poly::constant(ring.dim(), 1);
    for (const auto& p : parts) acc = acc * p.poly;
    return {false, acc, {}};
  }
  std::vector<Poly> acc{Poly::constant(ring.dim(), 1)};
  for (const auto& p : parts) {
    std::vector<Poly> next;
    for (const auto& f : acc) {
      for (const auto& g : p.as_gens()) {
        Poly prod = f * g;
        if (!prod.is_zero()) next.push_back(prod);
      }
    }
    acc = std::move(next);
  }
  return {true, Poly(ring.dim()), acc};
}

Value eval(const ExprPtr& e, const Ring& ring) {
  switch (e->kind) {
    case Expr::Kind::VarPow:
      return {false, Poly::from_monomial(Monomial::var(ring.dim(), e->var, e->exponent)), {}};
    case Expr::Kind::Number:
      return {false, Poly::constant(ring.dim(), e->value), {}};
    case Expr::Kind::Sum: {
      Poly acc(ring.dim());
      for (size_t i = 0; i < e->children.size(); ++i) {
        Value v = eval(e->children[i], ring);
        if (v.is_ideal) {
          throw InvalidInput("cannot add ideal-valued expressions; '+' needs polynomials");
        }
        acc = e->signs[i] > 0 ? acc + v.poly : acc - v.poly;
      }
      return {false, acc, {}};
    }
    case Expr::Kind::Product: {
      std::vector<Value> parts;
      parts.reserve(e->children.size());
      for (const auto& c : e->children) parts.push_back(eval(c, ring));
      return eval_product(parts, ring);
    }
    case Expr::Kind::Power: {
      Value base = eval(e->base, ring);
      if (!base.is_ideal) {
        Poly acc = Poly::constant(ring.dim(), 1);
        for (long long i = 0; i < e->exponent; ++i) acc = acc * base.poly;
        return {false, acc, {}};
      }
      std::vector<Value> parts(static_cast<size_t>(e->exponent), base);
      if (parts.empty()) return {false, Poly::constant(ring.dim(), 1), {}};
      return eval_product(parts, ring);
    }
    case Expr::Kind::List: {
      std::vector<Poly> gens;
      for (const auto& c : e->children) {
        Value v = eval(c, ring);
        for (auto& g : v.as_gens()) {
          if (!g.is_zero()) gens.push_back(std::move(g));
        }
      }
      return {true, Poly(ring.dim()), gens};
    }
  }
  throw InvalidInput("unreachable expression kind");
}

Monomial require_monomial(const Poly& p) {
  if (!p.is_monomial()) {
    throw InvalidInput("non-monomial generator where a monomial is required");
  }
  return p.terms().begin()->first;
}

}  // namespace

// --- public API --------------------------------------------------------------

Ring parse_ring(const std::string& text) {
  Lexer lex(text);
  if (lex.peek().type != Token::Type::Name || lex.peek().text != "ring") {
    lex.fail("expected 'ring'");
  }
  lex.take();
  std::vector<std::string> names;
  while (true) {
    if (lex.peek().type != Token::Type::Name) lex.fail("expected a variable name");
    names.push_back(lex.take().text);
    if (lex.at_symbol(',')) {
      lex.take();
      continue;
    }
    break;
  }
  if (lex.at_symbol(';')) lex.take();
  if (lex.peek().type != Token::Type::End) lex.fail("trailing input after ring declaration");
  try {
    return Ring(std::move(names));
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

ExprPtr parse_ideal(const std::string& text, const Ring& ring) {
  return Parser(text, ring).parse();
}

std::vector<Poly> evaluate_polynomials(const ExprPtr& expr, const Ring& ring) {
  return eval(expr, ring).as_gens();
}

MonomialIdeal evaluate_monomial(const ExprPtr& expr, const Ring& ring) {
  std::vector<Monomial> gens;
  for (const auto& g : evaluate_polynomials(expr, ring)) gens.push_back(require_monomial(g));
  return MonomialIdeal::make(ring, std::move(gens));
}

std::vector<Monomial> monomial_generators(const ExprPtr& expr, const Ring& ring) {
  std::vector<Monomial> gens;
  for (const auto& g : evaluate_polynomials(expr, ring)) gens.push_back(require_monomial(g));
  return gens;
}

GradedIdeal evaluate_graded(const ExprPtr& expr, const Ring& ring) {
  return GradedIdeal(ring, evaluate_polynomials(expr, ring));
}

// --- rendering ----------------------------------------------------------------

std::string render(const Ring& ring) {
  std::ostringstream os;
  os << "ring ";
  for (int i = 0; i < ring.dim(); ++i) {
    if (i) os << ", ";
    os << ring.var_name(i);
  }
  return os.str();
}

std::string render(const Monomial& m, const Ring& ring) {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < m.dim(); ++i) {
    if (m[i] == 0) continue;
    if (any) os << "*";
    os << ring.var_name(i);
    if (m[i] > 1) os << "^" << m[i];
    any = true;
  }
  if (!any) return "1";
  return os.str();
}

std::string render(const MonomialIdeal& a) {
  if (a.is_zero()) return "(0)";
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& g : a.gens()) {
    if (!first) os << ", ";
    os << render(g, a.ring());
    first = false;
  }
  os << ")";
  return os.str();
}

std::string render(const Poly& p, const Ring& ring) {
  if (p.is_zero()) return "0";
  // degree descending, earlier-variable-heavy first within a degree
  std::vector<std::pair<Monomial, Rat>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() > b.first.deg();
    return a.first.exps() > b.first.exps();
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Rat abs_c = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (abs_c != 1 || m.is_one()) {
      os << abs_c.get_str();
      if (!m.is_one()) os << "*";
    }
    if (!m.is_one()) os << render(m, ring);
  }
  return os.str();
}

std::string render(const GradedIdeal& k) {
  if (k.is_zero()) return "(0)";
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& g : k.gens()) {
    if (!first) os << ", ";
    os << render(g, k.ring());
    first = false;
  }
  os << ")";
  return os.str();
}

std::string render(const HilbertSeries& s) { return s.str(); }

HilbertSeries parse_series(const std::string& text) {
  Lexer lex(text);
  auto parse_poly = [&lex]() {
    std::vector<Int> coeffs;
    int sign = +1;
    if (lex.at_symbol('-')) {
      lex.take();
      sign = -1;
    }
    while (true) {
      Int c = 1;
      bool have_coeff = false;
      if (lex.peek().type == Token::Type::Number) {
        c = Int(lex.take().text);
        have_coeff = true;
      }
      long long k = 0;
      if (lex.peek().type == Token::Type::Name && lex.peek().text == "t") {
        lex.take();
        k = 1;
        if (lex.at_symbol('^')) {
          lex.take();
          if (lex.peek().type != Token::Type::Number) lex.fail("expected exponent");
          k = std::stoll(lex.take().text);
        }
      } else if (!have_coeff) {
        lex.fail("expected a coefficient or t-power");
      }
      if (coeffs.size() <= static_cast<size_t>(k)) coeffs.resize(k + 1);
      coeffs[k] += sign * c;
      if (lex.at_symbol('+')) {
        lex.take();
        sign = +1;
        continue;
      }
      if (lex.at_symbol('-')) {
        lex.take();
        sign = -1;
        continue;
      }
      break;
    }
    return coeffs;
  };

  std::vector<Int> num;
  if (lex.at_symbol('(')) {
    lex.take();
    num = parse_poly();
    lex.expect_symbol(')');
  } else {
    num = parse_poly();
  }
  int a = 0;
  if (lex.at_symbol('/')) {
    lex.take();
    lex.expect_symbol('(');
    auto denom = parse_poly();
    lex.expect_symbol(')');
    if (denom != std::vector<Int>{Int(1), Int(-1)}) lex.fail("denominator must be (1-t)");
    a = 1;
    if (lex.at_symbol('^')) {
      lex.take();
      if (lex.peek().type != Token::Type::Number) lex.fail("expected denominator power");
      a = static_cast<int>(std::stoll(lex.take().text));
    }
  }
  if (lex.peek().type != Token::Type::End) lex.fail("trailing input in series");
  return HilbertSeries(std::move(num), a);
}

}  // namespace fibercone
