#include "fibercone/corpus.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <sstream>
#include <thread>

#include "fibercone/delta.hpp"
#include "fibercone/dsl.hpp"
#include "fibercone/errors.hpp"
#include "fibercone/fiber.hpp"
#include "fibercone/mixed.hpp"

namespace fibercone {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string strip_semicolon(std::string s) {
  s = trim(s);
  if (!s.empty() && s.back() == ';') s = trim(s.substr(0, s.size() - 1));
  return s;
}

// Splits "payload @ \"provenance\"" into value and provenance.
std::pair<std::string, std::string> split_provenance(const std::string& s) {
  size_t at = s.rfind('@');
  if (at == std::string::npos) return {strip_semicolon(s), ""};
  std::string prov = trim(s.substr(at + 1));
  if (!prov.empty() && prov.front() == '"' && prov.back() == '"' && prov.size() >= 2) {
    prov = prov.substr(1, prov.size() - 2);
  }
  return {strip_semicolon(s.substr(0, at)), prov};
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::string s = text;
  for (char& ch : s) {
    if (ch == '(' || ch == ')' || ch == ',') ch = ' ';
  }
  std::istringstream in(s);
  long long v;
  std::vector<long long> flat;
  while (in >> v) flat.push_back(v);
  if (flat.size() % 2 != 0) throw ParseError("pair list with odd entry count: " + text);
  for (size_t i = 0; i < flat.size(); i += 2) {
    out.emplace_back(static_cast<int>(flat[i]), static_cast<int>(flat[i + 1]));
  }
  return out;
}

// Accepts "1<2, 2<3" style cover lists.
std::vector<std::pair<int, int>> parse_covers(const std::string& text) {
  std::string s = text;
  for (char& ch : s) {
    if (ch == '(' || ch == ')' || ch == ',' || ch == '<') ch = ' ';
  }
  std::istringstream in(s);
  std::vector<long long> flat;
  long long v;
  while (in >> v) flat.push_back(v);
  if (flat.size() % 2 != 0) throw ParseError("cover list with odd entry count: " + text);
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < flat.size(); i += 2) {
    out.emplace_back(static_cast<int>(flat[i]), static_cast<int>(flat[i + 1]));
  }
  return out;
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::string s = text;
  for (char& ch : s) {
    if (ch == '[' || ch == ']' || ch == ',') ch = ' ';
  }
  std::istringstream in(s);
  std::vector<Int> out;
  std::string tok;
  while (in >> tok) out.emplace_back(tok);
  return out;
}

std::string render_int_list(const std::vector<Int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + "]";
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ParseError("expected true/false, got '" + s + "'");
}

}  // namespace

std::vector<CorpusCase> parse_corpus(const std::string& text) {
  std::vector<CorpusCase> cases;
  CorpusCase cur;
  bool open = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    std::string rest = trim(line.substr(head.size()));
    auto fail = [&](const std::string& msg) {
      throw ParseError("corpus line " + std::to_string(lineno) + ": " + msg);
    };
    if (head == "case") {
      if (open) fail("nested case");
      cur = CorpusCase{};
      cur.name = strip_semicolon(rest);
      if (cur.name.empty()) fail("case without a name");
      open = true;
    } else if (!open) {
      fail("statement outside a case");
    } else if (head == "end") {
      cases.push_back(cur);
      open = false;
    } else if (head == "ring") {
      cur.ring_text = strip_semicolon(line);
    } else if (head == "ideal") {
      size_t eq = rest.find('=');
      if (eq == std::string::npos) fail("ideal line without '='");
      cur.ideals.emplace_back(trim(rest.substr(0, eq)), strip_semicolon(rest.substr(eq + 1)));
    } else if (head == "expect") {
      size_t eq = rest.find('=');
      if (eq == std::string::npos) fail("expect line without '='");
      auto [value, prov] = split_provenance(rest.substr(eq + 1));
      cur.expects.push_back({trim(rest.substr(0, eq)), value, prov});
    } else if (head == "joint") {
      size_t colon = rest.find(':');
      size_t gives = rest.find("gives");
      if (colon == std::string::npos || gives == std::string::npos || gives < colon) {
        fail("joint line must be 'joint (elems) : (slots) gives N'");
      }
      JointStatement j;
      j.elements = trim(rest.substr(0, colon));
      std::string slot_text = trim(rest.substr(colon + 1, gives - colon - 1));
      for (char& ch : slot_text) {
        if (ch == '(' || ch == ')' || ch == ',') ch = ' ';
      }
      std::istringstream ss(slot_text);
      std::string tok;
      while (ss >> tok) j.slots.push_back(tok);
      auto [value, prov] = split_provenance(rest.substr(gives + 5));
      j.expected = Int(value);
      j.provenance = prov;
      cur.joints.push_back(std::move(j));
    } else if (head == "deformation") {
      std::string payload = rest;
      if (payload.rfind("covers", 0) == 0) payload = payload.substr(6);
      cur.deformation_covers = parse_covers(strip_semicolon(payload));
    } else if (head == "delta") {
      size_t eq = rest.find('=');
      if (eq == std::string::npos) fail("delta line must be 'delta n = N'");
      cur.delta_n = std::stoi(strip_semicolon(rest.substr(eq + 1)));
    } else if (head == "pairs") {
      cur.delta_pairs = parse_pairs(strip_semicolon(rest));
    } else if (head == "minors") {
      size_t eq = rest.find('=');
      if (eq == std::string::npos) fail("minors line must be 'minors n = N'");
      cur.minors_n = std::stoi(strip_semicolon(rest.substr(eq + 1)));
    } else {
      fail("unknown statement '" + head + "'");
    }
  }
  if (open) throw ParseError("unterminated case '" + cur.name + "'");
  return cases;
}

namespace {

// Lazily evaluated per-case state.
struct CaseContext {
  const CorpusCase& c;
  const Limits& limits;
  std::optional<Ring> ring;
  std::map<std::string, ExprPtr> exprs;
  std::map<std::string, IdealHandle> handles;
  std::optional<HilbertSeries> series;
  std::optional<CmReport> report;

  const Ring& get_ring() {
    if (!ring) {
      if (c.ring_text.empty()) throw InvalidInput("case has no ring declaration");
      ring = parse_ring(c.ring_text);
    }
    return *ring;
  }

  const ExprPtr& expr(const std::string& name) {
    auto it = exprs.find(name);
    if (it != exprs.end()) return it->second;
    for (const auto& [n, text] : c.ideals) {
      if (n == name) {
        return exprs.emplace(name, parse_ideal(text, get_ring())).first->second;
      }
    }
    throw InvalidInput("case does not define ideal '" + name + "'");
  }

  const IdealHandle& handle(const std::string& name) {
    auto it = handles.find(name);
    if (it != handles.end()) return it->second;
    IdealHandle h = IdealHandle::from_expr(expr(name), get_ring());
    return handles.emplace(name, std::move(h)).first->second;
  }

  const HilbertSeries& fiber() {
    if (!series) series = fiber_series(handle("I"), limits);
    return *series;
  }

  const CmReport& cm() {
    if (!report) report = cm_check(handle("I"), handle("J"), limits);
    return *report;
  }

  Int colength_of(const IdealHandle& h, int pow) {
    if (h.kind() == IdealHandle::Kind::Monomial) {
      return artinian_length(power(h.mono(), pow), limits);
    }
    return artinian_length_graded(power(h.graded_ideal(), pow));
  }
};

void add_check(CaseReport& report, const std::string& what, const std::string& expected,
               const std::string& computed) {
  report.checks.push_back({what, expected, computed, expected == computed});
}

void run_expect(CaseContext& ctx, CaseReport& out, const Expectation& ex) {
  const std::string& key = ex.key;
  if (key == "series") {
    HilbertSeries expected = parse_series(ex.value);
    HilbertSeries computed;
    if (ctx.c.delta_n) {
      DeltaSet d;
      d.n = *ctx.c.delta_n;
      for (auto p : ctx.c.delta_pairs) d.pairs.insert(p);
      computed = k_delta_series(d);
    } else if (ctx.c.minors_n) {
      computed = face_ring_series(Poset::minors_2xn(*ctx.c.minors_n));
    } else {
      computed = ctx.fiber();
    }
    add_check(out, "series", expected.str(), computed.str());
  } else if (key == "analytic_spread") {
    add_check(out, key, ex.value, std::to_string(ctx.fiber().denom_power()));
  } else if (key == "mu") {
    add_check(out, key, ex.value, to_string(ctx.handle("I").mu()));
  } else if (key == "e_fiber") {
    add_check(out, key, ex.value, to_string(ctx.cm().e_fiber));
  } else if (key == "rj") {
    add_check(out, key, ex.value, std::to_string(ctx.cm().r_J));
  } else if (key == "lengths") {
    add_check(out, key, render_int_list(parse_int_list(ex.value)),
              render_int_list(ctx.cm().criterion_lengths));
  } else if (key == "cm") {
    add_check(out, key, parse_bool(ex.value) ? "true" : "false",
              ctx.cm().is_cm ? "true" : "false");
  } else if (key == "min_mult") {
    add_check(out, key, parse_bool(ex.value) ? "true" : "false",
              ctx.cm().is_minimal_multiplicity ? "true" : "false");
  } else if (key == "length") {
    add_check(out, key, ex.value, to_string(ctx.colength_of(ctx.handle("I"), 1)));
  } else if (key == "length2") {
    add_check(out, key, ex.value, to_string(ctx.colength_of(ctx.handle("I"), 2)));
  } else if (key == "e") {
    add_check(out, key, ex.value, to_string(multiplicity_ideal(ctx.handle("I"), ctx.limits)));
  } else if (key == "mixed") {
    add_check(out, key, render_int_list(parse_int_list(ex.value)),
              render_int_list(mixed_multiplicities(ctx.handle("I"), ctx.limits)));
  } else if (key == "minimal_mixed") {
    add_check(out, key, parse_bool(ex.value) ? "true" : "false",
              minimal_mixed_check(ctx.handle("I"), ctx.limits) ? "true" : "false");
  } else if (key == "order") {
    add_check(out, key, ex.value, std::to_string(order_of(ctx.handle("I").mono())));
  } else if (key == "contracted") {
    add_check(out, key, parse_bool(ex.value) ? "true" : "false",
              contracted_check(ctx.handle("I")).is_contracted_shape ? "true" : "false");
  } else if (key == "cm_route_b") {
    Int e = multiplicity_ideal(ctx.handle("I"), ctx.limits);
    bool route = e == ctx.colength_of(ctx.handle("I"), 2) - 2 * ctx.colength_of(ctx.handle("I"), 1);
    add_check(out, key, parse_bool(ex.value) ? "true" : "false", route ? "true" : "false");
  } else if (key == "shah_ok_upto") {
    auto failure =
        shah_function_check(ctx.handle("I"), ctx.handle("J"), std::stoi(ex.value), ctx.limits);
    add_check(out, "shah_ok_upto " + ex.value, "none",
              failure ? ("fails at n=" + std::to_string(*failure)) : "none");
  } else if (key == "main1_upto") {
    // mu(I^n) = C(a-1+n, a-1) + p C(a-2+n, a-1) with p = mu(I) - a
    int upto = std::stoi(ex.value);
    int a = ctx.fiber().denom_power();
    Int p = ctx.handle("I").mu() - a;
    auto mus = fiber_hilbert_function(ctx.handle("I"), upto, ctx.limits);
    std::string verdict = "holds";
    for (int n = 0; n <= upto; ++n) {
      Int predicted = binomial(a - 1 + n, a - 1) + p * binomial(a - 2 + n, a - 1);
      if (predicted != mus[n]) {
        verdict = "fails at n=" + std::to_string(n);
        break;
      }
    }
    add_check(out, "main1_upto " + ex.value, "holds", verdict);
  } else if (key == "mmm_series") {
    HilbertSeries expected = parse_series(ex.value);
    HilbertSeries predicted = predicted_series_mmm(ctx.handle("I"), ctx.limits);
    add_check(out, "mmm_series", expected.str(), predicted.str());
    if (!(predicted == ctx.fiber())) {
      throw Falsification("minimal-mixed closed form disagrees with the fiber series");
    }
  } else if (key == "invariance") {
    std::string names = ex.value;
    for (char& ch : names) {
      if (ch == '(' || ch == ')' || ch == ',') ch = ' ';
    }
    std::istringstream ss(names);
    std::vector<IdealHandle> js;
    std::string tok;
    while (ss >> tok) js.push_back(ctx.handle(tok));
    bool agree = reduction_invariance_probe(ctx.handle("I"), js, ctx.limits);
    if (!agree) throw Falsification("reduction number depends on the minimal reduction chosen");
    add_check(out, "invariance", "true", "true");
  } else if (key == "delta_pairs") {
    auto gens = monomial_generators(ctx.expr("I"), ctx.get_ring());
    DeltaSet d = compute_delta(ctx.get_ring(), gens);
    std::string computed;
    for (auto [j, k] : d.pairs) {
      if (!computed.empty()) computed += ", ";
      computed += "(" + std::to_string(j) + "," + std::to_string(k) + ")";
    }
    std::string expected;
    for (auto [j, k] : parse_pairs(ex.value)) {
      if (!expected.empty()) expected += ", ";
      expected += "(" + std::to_string(j) + "," + std::to_string(k) + ")";
    }
    add_check(out, "delta_pairs", expected, computed);
  } else {
    throw ParseError("unknown expectation '" + key + "'");
  }
}

void run_joint(CaseContext& ctx, CaseReport& out, const JointStatement& j) {
  const Ring& ring = ctx.get_ring();
  auto elems = evaluate_polynomials(parse_ideal(j.elements, ring), ring);
  std::vector<Slot> slots;
  for (const auto& s : j.slots) {
    if (s == "I") {
      slots.push_back(Slot::MainIdeal);
    } else if (s == "m") {
      slots.push_back(Slot::MaximalIdeal);
    } else {
      throw ParseError("joint slot must be 'I' or 'm', got '" + s + "'");
    }
  }
  auto witness = is_joint_reduction(elems, slots, ctx.handle("I"), ctx.limits.max_power, ctx.limits);
  Int e = e_via_joint_reduction(witness, ring);
  add_check(out, "joint " + j.elements, to_string(j.expected), to_string(e));
}

void run_deformation(CaseContext& ctx, CaseReport& out,
                     const std::vector<std::pair<int, int>>& covers) {
  const Ring& ring = ctx.get_ring();
  auto gens = monomial_generators(ctx.expr("I"), ring);
  const int n = static_cast<int>(gens.size());
  std::vector<std::pair<int, int>> zero_based;
  for (auto [a, b] : covers) zero_based.emplace_back(a - 1, b - 1);
  Poset poset = Poset::from_covers(n, zero_based);
  std::vector<int> identity(n);
  for (int i = 0; i < n; ++i) identity[i] = i;
  auto [stable, cert] = is_stable_linearization(poset, ring, gens, identity);
  add_check(out, "quadratic_sequence", "true", cert.is_quadratic_sequence ? "true" : "false");
  add_check(out, "stable_linearization", "true", stable ? "true" : "false");
  HilbertSeries from_delta = k_delta_series(compute_delta(ring, gens));
  add_check(out, "deformation_series", ctx.fiber().str(), from_delta.str());
}

}  // namespace

CaseReport run_case(const CorpusCase& c, const Limits& limits) {
  CaseReport out;
  out.name = c.name;
  auto start = std::chrono::steady_clock::now();
  try {
    CaseContext ctx{c, limits};
    for (const auto& ex : c.expects) run_expect(ctx, out, ex);
    for (const auto& j : c.joints) run_joint(ctx, out, j);
    if (c.deformation_covers) run_deformation(ctx, out, *c.deformation_covers);
    out.status = CaseStatus::Pass;
    for (const auto& ch : out.checks) {
      if (!ch.ok) out.status = CaseStatus::Fail;
    }
  } catch (const Falsification& f) {
    out.status = CaseStatus::FalsificationEvent;
    out.error = f.what();
  } catch (const std::exception& e) {
    out.status = CaseStatus::ErrorStatus;
    out.error = e.what();
  }
  out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
  return out;
}

RunReport run_corpus(const std::vector<CorpusCase>& cases, const Limits& limits, int jobs) {
  RunReport report;
  report.cases.resize(cases.size());
  if (jobs < 1) jobs = 1;
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= cases.size()) return;
      report.cases[i] = run_case(cases[i], limits);
    }
  };
  if (jobs == 1 || cases.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& c : report.cases) {
    switch (c.status) {
      case CaseStatus::Pass: ++report.passed; break;
      case CaseStatus::Fail: ++report.failed; break;
      case CaseStatus::FalsificationEvent: ++report.falsifications; break;
      case CaseStatus::ErrorStatus: ++report.errors; break;
    }
  }
  return report;
}

int RunReport::exit_code() const {
  if (falsifications > 0) return 4;
  if (failed > 0 || errors > 0) return 1;
  return 0;
}

const std::string& bundled_corpus() {
  static const std::string text = R"corpus(# Worked examples, each expectation annotated with its source.

case noncm_r3
ring x, y
ideal I = (x^3, x*y^4*(x,y), y^7)
ideal J = (x^3, y^7)
expect mu = 4 @ "mu(I) = r+1"
expect order = 3
expect contracted = true @ "mu(I) = 1 + o(I)"
expect length = 16 @ "l(R/I) = C(r-1,2) + r^2 + 2r"
expect length2 = 52 @ "l(R/I^2) = C(r-1,2) + C(r-2,2) + 4r^2 + 5r"
expect e = 21 @ "e(I) = r(2r+1)"
expect mixed = [1, 3, 21] @ "e_1(m|I) = o(I)"
expect minimal_mixed = true
expect series = (1 + 2t)/(1-t)^2 @ "contracted ideal of order r"
expect analytic_spread = 2
expect rj = 2
expect cm = false @ "fiber cone not CM for r >= 3"
expect cm_route_b = false @ "e(I) != l(R/I^2) - 2 l(R/I)"
expect mmm_series = (1 + 2t)/(1-t)^2
end

case noncm_r4
ring x, y
ideal I = (x^4, x*y^5*(x,y)^2, y^9)
ideal J = (x^4, y^9)
expect mu = 5
expect length = 27
expect length2 = 88
expect e = 36
expect series = (1 + 3t)/(1-t)^2
expect cm = false
expect cm_route_b = false
end

case example_5_1
ring x, y, z
ideal I = ((x^2, y^2)^3, x*(x^2, y^2)*z^3, z^6)
ideal J = (x^6, y^6, z^6)
expect mu = 7
expect series = (1 + 4t + t^2)/(1-t)^3
expect analytic_spread = 3
expect rj = 2
expect lengths = [1, 4, 1]
expect e_fiber = 6
expect cm = true
expect min_mult = false
expect shah_ok_upto = 8
end

case equigenerated_r3
ring x, y
ideal I = (x^3, x^2*y, y^3)
ideal J = (x^3, y^3)
expect series = (1 + t + t^2)/(1-t)^2
expect rj = 2 @ "reduction number r - 1"
expect cm = true
expect shah_ok_upto = 8
end

case hoc_s2
ring x1, x2, y1, y2
ideal I = (x1*y1, x1*y2, x2*y1, x2*y2)
ideal J = (x1*y1 + x2*y2, x1*y2, x2*y1)
expect mu = 4
expect series = (1 + t)/(1-t)^3
expect analytic_spread = 3
expect rj = 1 @ "JI = I^2"
expect cm = true
expect min_mult = true
expect main1_upto = 8
deformation covers (1<2, 1<3, 2<4, 3<4)
end

case hoc_s3
ring x1, x2, y1, y2, y3
ideal I = (x1*y1, x1*y2, x1*y3, x2*y1, x2*y2, x2*y3)
ideal J = (x1*y1 + x2*y2, x1*y2 + x2*y3, x1*y3, x2*y1)
expect mu = 6
expect series = (1 + 2t)/(1-t)^4
expect rj = 1 @ "JI = I^2"
expect cm = true
expect min_mult = true
expect main1_upto = 8
deformation covers (1<2, 2<3, 1<4, 2<5, 3<6, 4<5, 5<6)
end

case huneke_lipman
ring x, y, z
ideal I = (x^3, y^3, z^3, x*y, x*z, y*z)
ideal J = (x^3 + y*z, y^3 + z^3 + x*z, x*z + x*y)
expect mu = 6
expect length = 7
expect e = 11 @ "e(I) = e(J) = 11"
expect mixed = [1, 2, 4, 11] @ "e_1 = 2, e_2 = 4"
expect minimal_mixed = true @ "mu(I) = 6 = e_2(m|I) + 2"
expect series = (1 + 3t)/(1-t)^3
expect rj = 1 @ "JI = I^2"
expect cm = true
expect min_mult = true
expect mmm_series = (1 + 3t)/(1-t)^3
joint (y*z, y + z, x) : (I, m, m) gives 2 @ "e(yz, y+z, x) = 2"
joint (y*z, x*y + x*z, x + y + z) : (I, I, m) gives 4 @ "e(yz, xy+xz, x+y+z) = 4"
end

case deformation_m2
ring x, y
ideal I = (x^2, x*y, y^2)
ideal J = (x^2, y^2)
ideal J2 = (x^2 + y^2, x*y)
expect series = (1 + t)/(1-t)^2
expect rj = 1
expect cm = true
expect delta_pairs = (2,2)
expect invariance = (J, J2)
deformation covers (1<2, 2<3)
end

case ms_family_bc3
delta n = 5
pairs (3,3), (3,4), (4,4)
expect series = (1 + 2t)/(1-t)^3
end

case hh_family_n5_m3
delta n = 5
pairs (4,4), (4,5), (5,5)
expect series = (1 + 2t)/(1-t)^3
end

case minors_n4
minors n = 4
expect series = (1 + t)/(1-t)^5
end

case minors_n5
minors n = 5
expect series = (1 + 3t + t^2)/(1-t)^7
end
)corpus";
  return text;
}

}  // namespace fibercone
