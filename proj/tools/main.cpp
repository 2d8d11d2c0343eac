// Command-line surface for the fiber-cone toolkit.
//
// Exit codes: 0 success (or positive verdict), 1 negative verdict or failed
// corpus case, 2 usage/parse error, 3 budget or stabilization failure,
// 4 falsification (two theorem-equal routes disagreed).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fibercone/corpus.hpp"
#include "fibercone/delta.hpp"
#include "fibercone/dsl.hpp"
#include "fibercone/errors.hpp"
#include "fibercone/fiber.hpp"
#include "fibercone/mixed.hpp"

using json = nlohmann::ordered_json;
using namespace fibercone;

namespace {

struct CommonOpts {
  std::string ring_text;
  std::string ideal_text;
  std::string reduction_text;
  bool as_json = false;
  Limits limits;
  int jobs = 1;
};

json series_json(const HilbertSeries& s) {
  json num = json::array();
  for (const auto& c : s.numerator()) num.push_back(to_long(c));
  return json{{"numerator", num}, {"denomPower", s.denom_power()}};
}

json int_list_json(const std::vector<Int>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_long(x));
  return out;
}

Ring make_ring(const CommonOpts& opts) { return parse_ring("ring " + opts.ring_text); }

IdealHandle make_ideal(const CommonOpts& opts, const Ring& ring, const std::string& text) {
  return IdealHandle::from_expr(parse_ideal(text, ring), ring);
}

void emit(const CommonOpts& opts, const json& payload, const std::string& text) {
  if (opts.as_json) {
    std::cout << payload.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int run_fiber_series(const CommonOpts& opts, int table_upto) {
  Ring ring = make_ring(opts);
  IdealHandle ideal = make_ideal(opts, ring, opts.ideal_text);
  HilbertSeries s = fiber_series(ideal, opts.limits);
  int upto = table_upto >= 0 ? table_upto : std::min(8, opts.limits.max_power);
  auto mus = fiber_hilbert_function(ideal, upto, opts.limits);
  json payload{{"input", {{"ring", render(ring)}, {"ideal", ideal.describe()}}},
               {"series", series_json(s)},
               {"analyticSpread", s.denom_power()},
               {"muTable", int_list_json(mus)}};
  std::ostringstream text;
  text << "ideal:            " << ideal.describe() << "\n"
       << "fiber series:     " << s.str() << "\n"
       << "analytic spread:  " << s.denom_power() << "\n"
       << "mu(I^n), n<=" << upto << ":   ";
  for (size_t i = 0; i < mus.size(); ++i) text << (i ? " " : "") << mus[i];
  text << "\n";
  emit(opts, payload, text.str());
  return 0;
}

int run_cm_check(const CommonOpts& opts) {
  Ring ring = make_ring(opts);
  IdealHandle ideal = make_ideal(opts, ring, opts.ideal_text);
  IdealHandle reduction = make_ideal(opts, ring, opts.reduction_text);
  CmReport r = cm_check(ideal, reduction, opts.limits);
  json payload{{"input",
                {{"ring", render(ring)},
                 {"ideal", ideal.describe()},
                 {"reduction", reduction.describe()}}},
               {"series", series_json(r.series)},
               {"analyticSpread", r.analytic_spread},
               {"reductionNumber", r.r_J},
               {"criterionLengths", int_list_json(r.criterion_lengths)},
               {"eFiber", to_long(r.e_fiber)},
               {"isCM", r.is_cm},
               {"isMinimalMultiplicity", r.is_minimal_multiplicity}};
  std::ostringstream text;
  text << "ideal:             " << ideal.describe() << "\n"
       << "reduction:         " << reduction.describe() << "\n"
       << "fiber series:      " << r.series.str() << "\n"
       << "analytic spread:   " << r.analytic_spread << "\n"
       << "reduction number:  " << r.r_J << "\n"
       << "criterion lengths: ";
  for (size_t i = 0; i < r.criterion_lengths.size(); ++i) {
    text << (i ? " " : "") << r.criterion_lengths[i];
  }
  text << "  (sum " << r.length_sum << ")\n"
       << "e(F(I)):           " << r.e_fiber << "\n"
       << "F(I) Cohen-Macaulay: " << (r.is_cm ? "YES" : "NO") << "\n"
       << "minimal multiplicity: " << (r.is_minimal_multiplicity ? "yes" : "no") << "\n";
  emit(opts, payload, text.str());
  return r.is_cm ? 0 : 1;
}

int run_reduction_number(const CommonOpts& opts) {
  Ring ring = make_ring(opts);
  IdealHandle ideal = make_ideal(opts, ring, opts.ideal_text);
  IdealHandle reduction = make_ideal(opts, ring, opts.reduction_text);
  int r = reduction_number(reduction, ideal, opts.limits.max_power, opts.limits);
  json payload{{"input",
                {{"ring", render(ring)},
                 {"ideal", ideal.describe()},
                 {"reduction", reduction.describe()}}},
               {"reductionNumber", r}};
  emit(opts, payload, "reduction number: " + std::to_string(r) + "\n");
  return 0;
}

int run_mixed(const CommonOpts& opts) {
  Ring ring = make_ring(opts);
  IdealHandle ideal = make_ideal(opts, ring, opts.ideal_text);
  auto e = mixed_multiplicities(ideal, opts.limits);
  bool mmm = minimal_mixed_check(ideal, opts.limits);
  json payload{{"input", {{"ring", render(ring)}, {"ideal", ideal.describe()}}},
               {"mixed", int_list_json(e)},
               {"minimalMixed", mmm}};
  std::ostringstream text;
  text << "ideal: " << ideal.describe() << "\nmixed multiplicities e_i(m|I): ";
  for (size_t i = 0; i < e.size(); ++i) text << (i ? " " : "") << e[i];
  text << "\nminimal mixed multiplicity: " << (mmm ? "yes" : "no") << "\n";
  if (mmm) {
    HilbertSeries predicted = predicted_series_mmm(ideal, opts.limits);
    payload["predictedSeries"] = series_json(predicted);
    HilbertSeries actual = fiber_series(ideal, opts.limits);
    if (!(predicted == actual)) {
      throw Falsification("minimal-mixed closed form disagrees with the fiber series");
    }
    text << "fiber series (closed form, cross-checked): " << predicted.str() << "\n";
  }
  emit(opts, payload, text.str());
  return 0;
}

int run_joint(const CommonOpts& opts, const std::string& elems_text,
              const std::string& assign_text) {
  Ring ring = make_ring(opts);
  IdealHandle ideal = make_ideal(opts, ring, opts.ideal_text);
  auto elems = evaluate_polynomials(parse_ideal(elems_text, ring), ring);
  std::vector<Slot> slots;
  std::istringstream as(assign_text);
  std::string tok;
  while (std::getline(as, tok, ',')) {
    if (tok.find('I') != std::string::npos) {
      slots.push_back(Slot::MainIdeal);
    } else if (tok.find('m') != std::string::npos) {
      slots.push_back(Slot::MaximalIdeal);
    } else {
      throw ParseError("assignment entries must be I or m");
    }
  }
  auto witness = is_joint_reduction(elems, slots, ideal, opts.limits.max_power, opts.limits);
  json payload{{"input", {{"ring", render(ring)}, {"ideal", ideal.describe()}}},
               {"verifiedPower", witness.verified_power},
               {"parameterSystem", witness.parameter_system}};
  std::ostringstream text;
  text << "joint reduction verified at power " << witness.verified_power << "\n";
  if (witness.parameter_system) {
    Int e = e_via_joint_reduction(witness, ring);
    payload["mixedMultiplicity"] = to_long(e);
    text << "parameter colength (mixed multiplicity): " << e << "\n";
  }
  emit(opts, payload, text.str());
  return 0;
}

int run_delta_series(const CommonOpts& opts, int n, const std::string& pairs_text) {
  DeltaSet d;
  if (!opts.ideal_text.empty()) {
    Ring ring = make_ring(opts);
    auto gens = monomial_generators(parse_ideal(opts.ideal_text, ring), ring);
    d = compute_delta(ring, gens);
  } else {
    d.n = n;
    std::string s = pairs_text;
    for (char& ch : s) {
      if (ch == '(' || ch == ')' || ch == ',') ch = ' ';
    }
    std::istringstream in(s);
    int a, b;
    while (in >> a >> b) d.pairs.emplace(a, b);
  }
  HilbertSeries series = k_delta_series(d);
  json pairs = json::array();
  for (auto [j, k] : d.pairs) pairs.push_back(json::array({j, k}));
  json payload{{"delta", {{"n", d.n}, {"pairs", pairs}}}, {"series", series_json(series)}};
  std::ostringstream text;
  text << "Delta on " << d.n << " generators, pairs:";
  for (auto [j, k] : d.pairs) text << " (" << j << "," << k << ")";
  text << "\nk[Delta] series: " << series.str() << "\n";
  emit(opts, payload, text.str());
  return 0;
}

int run_face_ring(const CommonOpts& opts, const std::string& poset_path, int minors_n) {
  Poset poset = minors_n >= 3 ? Poset::minors_2xn(minors_n) : [&] {
    std::ifstream in(poset_path);
    if (!in) throw ParseError("cannot open poset file '" + poset_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return Poset::parse(buf.str());
  }();
  HilbertSeries series = face_ring_series(poset);
  auto chains = poset.chain_counts();
  json payload{{"elements", poset.size()},
               {"chainCounts", int_list_json(chains)},
               {"series", series_json(series)}};
  std::ostringstream text;
  text << "poset with " << poset.size() << " elements\nface ring series: " << series.str()
       << "\n";
  emit(opts, payload, text.str());
  return 0;
}

int run_shah(const CommonOpts& opts, int max_check) {
  Ring ring = make_ring(opts);
  IdealHandle ideal = make_ideal(opts, ring, opts.ideal_text);
  IdealHandle reduction = make_ideal(opts, ring, opts.reduction_text);
  auto failure = shah_function_check(ideal, reduction, max_check, opts.limits);
  json payload{{"input",
                {{"ring", render(ring)},
                 {"ideal", ideal.describe()},
                 {"reduction", reduction.describe()}}},
               {"checkedUpTo", max_check},
               {"firstFailure", failure ? json(*failure) : json(nullptr)}};
  std::ostringstream text;
  if (failure) {
    text << "Hilbert-function identity FAILS first at n = " << *failure << "\n";
  } else {
    text << "Hilbert-function identity holds for all n <= " << max_check << "\n";
  }
  emit(opts, payload, text.str());
  return failure ? 1 : 0;
}

int run_corpus_cmd(const CommonOpts& opts, const std::string& path) {
  std::string text;
  if (path.empty()) {
    text = bundled_corpus();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open corpus file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  auto cases = parse_corpus(text);
  RunReport report = run_corpus(cases, opts.limits, opts.jobs);
  json payload = json::array();
  std::ostringstream out;
  for (const auto& c : report.cases) {
    std::string status;
    switch (c.status) {
      case CaseStatus::Pass: status = "pass"; break;
      case CaseStatus::Fail: status = "FAIL"; break;
      case CaseStatus::FalsificationEvent: status = "FALSIFICATION"; break;
      case CaseStatus::ErrorStatus: status = "ERROR"; break;
    }
    json checks = json::array();
    for (const auto& ch : c.checks) {
      checks.push_back({{"what", ch.what},
                        {"expected", ch.expected},
                        {"computed", ch.computed},
                        {"ok", ch.ok}});
    }
    payload.push_back({{"name", c.name},
                       {"status", status},
                       {"millis", c.millis},
                       {"checks", checks},
                       {"error", c.error}});
    out << status << "  " << c.name << "  (" << static_cast<long long>(c.millis) << " ms)\n";
    for (const auto& ch : c.checks) {
      if (!ch.ok) {
        out << "    " << ch.what << ": expected " << ch.expected << ", got " << ch.computed
            << "\n";
      }
    }
    if (!c.error.empty()) out << "    " << c.error << "\n";
  }
  out << report.passed << " passed, " << report.failed << " failed, " << report.errors
      << " errors, " << report.falsifications << " falsifications\n";
  emit(opts, payload, out.str());
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fiber cones, Hilbert series, reduction numbers and mixed multiplicities"};
  app.require_subcommand(1);

  CommonOpts opts;
  if (const char* env = std::getenv("FIBERCONE_BUDGET")) {
    opts.limits.cell_budget = std::atoll(env);
  }
  app.add_flag("--json", opts.as_json, "emit JSON instead of text");
  app.add_option("--max-n", opts.limits.max_power, "power ladder budget");
  app.add_option("--cell-budget", opts.limits.cell_budget, "staircase cell budget");
  app.add_option("--grid-cap", opts.limits.grid_cap, "Bhattacharya grid cap");
  app.add_option("--guard-window", opts.limits.guard_window, "series stabilization window");
  app.add_option("--jobs", opts.jobs, "concurrent corpus cases");

  auto add_ring_ideal = [&opts](CLI::App* cmd, bool with_reduction) {
    cmd->add_option("--ring", opts.ring_text, "comma-separated variables")->required();
    cmd->add_option("--ideal", opts.ideal_text, "ideal expression")->required();
    if (with_reduction) {
      cmd->add_option("--reduction", opts.reduction_text, "reduction ideal expression")
          ->required();
    }
  };

  auto* fiber_cmd = app.add_subcommand("fiber-series", "Hilbert series of the fiber cone");
  fiber_cmd->fallthrough();
  int table_upto = -1;
  add_ring_ideal(fiber_cmd, false);
  fiber_cmd->add_option("--table", table_upto, "also print mu(I^n) for n up to this");

  auto* cm_cmd = app.add_subcommand("cm-check", "Cohen-Macaulay criterion for F(I)");
  cm_cmd->fallthrough();
  add_ring_ideal(cm_cmd, true);

  auto* red_cmd = app.add_subcommand("reduction-number", "least n with J I^n = I^{n+1}");
  red_cmd->fallthrough();
  add_ring_ideal(red_cmd, true);

  auto* mixed_cmd = app.add_subcommand("mixed", "mixed multiplicities e_i(m|I)");
  mixed_cmd->fallthrough();
  add_ring_ideal(mixed_cmd, false);

  auto* joint_cmd = app.add_subcommand("joint", "verify a joint reduction and its colength");
  joint_cmd->fallthrough();
  std::string elems_text, assign_text;
  add_ring_ideal(joint_cmd, false);
  joint_cmd->add_option("--elems", elems_text, "elements, e.g. \"(y*z, y+z, x)\"")->required();
  joint_cmd->add_option("--assign", assign_text, "slots, e.g. \"I,m,m\"")->required();

  auto* delta_cmd = app.add_subcommand("delta-series", "Hilbert series of k[Delta]");
  delta_cmd->fallthrough();
  int delta_n = 0;
  std::string pairs_text;
  delta_cmd->add_option("--n", delta_n, "number of generators");
  delta_cmd->add_option("--pairs", pairs_text, "pairs like \"(3,3),(3,4)\"");
  delta_cmd->add_option("--ring", opts.ring_text, "alternatively: compute Delta from an ideal");
  delta_cmd->add_option("--ideal", opts.ideal_text, "ordered monomial generators");

  auto* face_cmd = app.add_subcommand("face-ring", "Hilbert series of a poset face ring");
  face_cmd->fallthrough();
  std::string poset_path;
  int minors_n = 0;
  face_cmd->add_option("--poset", poset_path, "poset file (element/cover lines)");
  face_cmd->add_option("--minors", minors_n, "use the 2x2 minors poset of a 2xn matrix");

  auto* shah_cmd = app.add_subcommand("shah-check", "Hilbert-function identity for CM fiber cones");
  shah_cmd->fallthrough();
  int max_check = 8;
  add_ring_ideal(shah_cmd, true);
  shah_cmd->add_option("--upto", max_check, "check n up to this bound");

  auto* corpus_cmd = app.add_subcommand("corpus", "golden corpus runner");
  corpus_cmd->fallthrough();
  std::string corpus_path;
  auto* corpus_run = corpus_cmd->add_subcommand("run", "run a corpus (bundled when no path)");
  corpus_run->fallthrough();
  corpus_run->add_option("path", corpus_path, "corpus manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(fiber_cmd)) return run_fiber_series(opts, table_upto);
    if (app.got_subcommand(cm_cmd)) return run_cm_check(opts);
    if (app.got_subcommand(red_cmd)) return run_reduction_number(opts);
    if (app.got_subcommand(mixed_cmd)) return run_mixed(opts);
    if (app.got_subcommand(joint_cmd)) return run_joint(opts, elems_text, assign_text);
    if (app.got_subcommand(delta_cmd)) return run_delta_series(opts, delta_n, pairs_text);
    if (app.got_subcommand(face_cmd)) return run_face_ring(opts, poset_path, minors_n);
    if (app.got_subcommand(shah_cmd)) return run_shah(opts, max_check);
    if (app.got_subcommand(corpus_cmd)) return run_corpus_cmd(opts, corpus_path);
  } catch (const Falsification& e) {
    std::cerr << "FALSIFICATION: " << e.what() << "\n";
    return 4;
  } catch (const NotStabilized& e) {
    std::cerr << "error: " << e.what() << "\n       raise --max-n or the grid cap\n";
    return 3;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
