// turan-matroid: command-line front end for the matroid Turán toolkit.
//
// Exit codes: 0 success, 1 usage or resource error, 2 a theorem or
// certificate check failed.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "turan/bounds.hpp"
#include "turan/error.hpp"
#include "turan/extremal.hpp"
#include "turan/geometry.hpp"
#include "turan/io.hpp"
#include "turan/lagrangian.hpp"
#include "turan/minors.hpp"
#include "turan/rational.hpp"
#include "turan_verify/acceptance.hpp"
#include "turan_verify/reports.hpp"

namespace {

using nlohmann::json;
using namespace turan;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Matroid read_matroid(const std::string& path) { return parse_matroid(read_input(path)); }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string fixed(double x, int digits) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::pair<int, int> parse_pair(const std::string& text, const std::string& flag) {
  int s = 0;
  int t = 0;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> s >> comma >> t) || comma != ',' || !in.eof()) {
    throw UsageError(flag + " expects two integers as s,t");
  }
  return {s, t};
}

template <class T>
T need(const std::optional<T>& value, const std::string& flag, const std::string& context) {
  if (!value) throw UsageError(context + " needs " + flag);
  return *value;
}

// Search budget: TURAN_MATROID_MAX_NODES wins over --max-nodes.
std::optional<std::uint64_t> node_budget(const std::optional<std::uint64_t>& flag) {
  if (const char* env = std::getenv("TURAN_MATROID_MAX_NODES"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw UsageError("TURAN_MATROID_MAX_NODES must be a nonnegative integer");
    return v;
  }
  return flag;
}

SearchBackend parse_backend(const std::string& name) {
  if (name == "generic") return SearchBackend::generic;
  if (name == "rank3") return SearchBackend::rank3;
  throw UsageError("unknown backend " + name);
}

std::string set_text(ElementSet s) { return format_set(s); }

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  std::optional<int> r, q, c, s, t, a, b;
  std::vector<int> lines;
  int parallel = 0;
  bool as_points = false;
  std::vector<int> blowup;
  bool label_map = false;
  bool json = false;
};

int run_construct(const ConstructArgs& a) {
  std::optional<Matroid> m;
  std::vector<std::string> comments;
  if (a.kind == "pg") {
    const LabeledMatroid lm = projective_geometry_labeled(need(a.r, "--r", "pg"), need(a.q, "--q", "pg"));
    m = lm.matroid;
    if (a.label_map) comments = lm.label_comments();
  } else if (a.kind == "bb") {
    const LabeledMatroid lm =
        bose_burton_labeled(need(a.r, "--r", "bb"), need(a.q, "--q", "bb"), need(a.c, "--c", "bb"));
    m = lm.matroid;
    if (a.label_map) comments = lm.label_comments();
  } else if (a.kind == "uniform") {
    m = uniform(need(a.s, "--s", "uniform"), need(a.t, "--t", "uniform"));
  } else if (a.kind == "multiline") {
    if (a.lines.empty()) throw UsageError("multiline needs --lines");
    m = rank3_multiline(a.lines, a.parallel, !a.as_points);
  } else if (a.kind == "two-lines") {
    m = two_disjoint_lines(need(a.a, "--a", "two-lines"), need(a.b, "--b", "two-lines"));
  }
  if (!a.blowup.empty()) {
    if (static_cast<int>(a.blowup.size()) != m->size()) {
      throw UsageError("--blowup needs one multiplicity per element (" + std::to_string(m->size()) + ")");
    }
    m = parallel_blowup(*m, a.blowup);
    comments.clear();
  }
  if (a.json) {
    json j = to_json(*m);
    if (!comments.empty()) j["labels"] = comments;
    print_json(j);
  } else {
    std::cout << to_text(*m, comments);
  }
  return 0;
}

int run_bases(const std::string& input, bool as_json) {
  const Matroid m = read_matroid(input);
  if (as_json) {
    print_json({{"n", m.size()}, {"r", m.rank()}, {"bases", m.basis_count()}});
  } else {
    std::cout << m.basis_count() << "\n";
  }
  return 0;
}

int run_minor(const std::string& input, int s, int t, bool restriction, bool as_json) {
  const Matroid m = read_matroid(input);
  if (restriction) {
    const auto set = find_uniform_restriction(m, s, t);
    if (as_json) {
      print_json(verify::restriction_json(s, t, set));
    } else {
      std::cout << (set ? "present" : "absent") << "\n";
      if (set) std::cout << "restrict " << set_text(*set) << "\n";
    }
    return 0;
  }
  const auto w = find_uniform_minor(m, s, t);
  if (as_json) {
    print_json(verify::minor_json(s, t, w));
  } else {
    std::cout << (w ? "present" : "absent") << "\n";
    if (w) std::cout << "contract " << set_text(w->contracted) << "\nrestrict " << set_text(w->selected) << "\n";
  }
  return 0;
}

struct LagrangianArgs {
  std::string input;
  MaximizeOptions opt;
  std::optional<int> bound_t;
  int precision = 12;
  bool exact_bound = false;
  bool json = false;
};

int run_lagrangian(const LagrangianArgs& a) {
  const Matroid m = read_matroid(a.input);
  MaximizeOptions opt = a.opt;
  opt.bound_t = a.bound_t;
  const LagrangianResult res = maximize(m, opt);
  if (a.json) {
    print_json(verify::lagrangian_json(res, a.precision));
    return 0;
  }
  std::cout << "lambda " << fixed(res.value, a.precision) << "\n";
  if (res.bound) {
    std::cout << "bound " << fixed(*res.bound, a.precision) << " (t = " << *res.bound_t << ")\n";
    if (a.exact_bound) std::cout << "bound_exact " << to_string(*res.exact_bound) << "\n";
  }
  std::cout << "certified " << (res.certified ? "yes" : "no") << "\n";
  std::cout << "converged " << (res.converged ? "yes" : "no") << " after " << res.iterations << " iterations\n";
  std::cout << "argmax";
  for (double x : res.argmax) std::cout << " " << fixed(x, a.precision);
  std::cout << "\n";
  return 0;
}

struct BoundsArgs {
  std::string selector;
  std::optional<int> n, r, t, m, q;
  std::string eps = "1/1000000000000";
  std::string constant = "1";
  int digits = 20;
  bool json = false;
};

Rational parse_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw UsageError(flag + " expects a rational like 3/7");
  }
}

int run_bounds(const BoundsArgs& a) {
  json out = {{"selector", a.selector}};
  auto value = [&](const Rational& x) {
    out["exact"] = to_string(x);
    out["decimal"] = to_decimal(x, a.digits);
  };
  auto interval = [&](const Rational& lo, const Rational& hi) {
    out["lower"] = to_string(lo);
    out["upper"] = to_string(hi);
    out["lower_decimal"] = to_decimal(lo, a.digits);
    out["upper_decimal"] = to_decimal(hi, a.digits);
  };
  const std::string& sel = a.selector;
  if (sel == "b") {
    value(b_formula(need(a.r, "--r", sel), need(a.t, "--t", sel)));
  } else if (sel == "b-recursive") {
    value(b_recursive(need(a.r, "--r", sel), need(a.t, "--t", sel)));
  } else if (sel == "kung") {
    value(Rational(kung_bound(need(a.r, "--r", sel), need(a.t, "--t", sel))));
  } else if (sel == "ex-upper-u2") {
    value(ex_upper_u2(need(a.n, "--n", sel), need(a.r, "--r", sel), need(a.t, "--t", sel)));
  } else if (sel == "density-u2") {
    value(density_u2(need(a.r, "--r", sel), need(a.q, "--q", sel)));
  } else if (sel == "density-u2-normalized") {
    value(density_u2_normalized(need(a.r, "--r", sel), need(a.q, "--q", sel)));
  } else if (sel == "theorem43") {
    value(theorem43_bound(need(a.r, "--r", sel), need(a.t, "--t", sel)));
  } else if (sel == "infinite-product") {
    const RationalInterval p = infinite_product(need(a.q, "--q", sel), parse_rational(a.eps, "--eps"));
    interval(p.lower, p.upper);
    out["terms"] = p.terms;
  } else if (sel == "density-envelope") {
    const int q = need(a.q, "--q", sel);
    const RationalInterval p = density_u2_envelope(need(a.r, "--r", sel), q, infinite_product(q, parse_rational(a.eps, "--eps")));
    interval(p.lower, p.upper);
  } else if (sel == "prime-band") {
    const PrimeBand band = prime_band(need(a.r, "--r", sel), need(a.t, "--t", sel), parse_rational(a.constant, "--constant"));
    interval(band.lower, band.upper);
    out["q"] = band.q;
    out["label"] = band.label;
  } else if (const auto cf = parse_closed_form(sel)) {
    ClosedFormParams p;
    p.n = a.n.value_or(0);
    p.r = a.r.value_or(0);
    p.t = a.t.value_or(0);
    p.m = a.m.value_or(0);
    value(closed_form_small_cases(*cf, p));
  } else {
    throw UsageError("unknown selector " + sel);
  }
  if (a.json) {
    print_json(out);
  } else if (out.contains("exact")) {
    std::cout << out["exact"].get<std::string>() << "\n" << out["decimal"].get<std::string>() << "\n";
  } else {
    std::cout << "[" << out["lower"].get<std::string>() << ", " << out["upper"].get<std::string>() << "]\n"
              << "[" << out["lower_decimal"].get<std::string>() << ", " << out["upper_decimal"].get<std::string>() << "]\n";
  }
  return 0;
}

struct TablesArgs {
  std::string kind = "density";
  int r_max = 8;
  std::vector<int> qs{2, 3, 4, 5};
  int digits = 12;
  std::optional<int> r;
  std::string forbid;
  std::optional<int> n_lo, n_hi;
  std::string backend = "generic";
  std::optional<std::uint64_t> max_nodes;
  int workers = 1;
  bool json = false;
};

int run_tables(const TablesArgs& a) {
  if (a.kind == "density") {
    json rows = json::array();
    std::string csv = "r,q,density,density_decimal\n";
    for (int q : a.qs) {
      for (int r = 1; r <= a.r_max; ++r) {
        const Rational d = density_u2(r, q);
        const std::string exact = to_string(d);
        const std::string dec = to_decimal(d, a.digits);
        rows.push_back({{"r", r}, {"q", q}, {"density", exact}, {"density_decimal", dec}});
        csv += std::to_string(r) + "," + std::to_string(q) + "," + csv_field(exact) + "," + csv_field(dec) + "\n";
      }
    }
    if (a.json) {
      print_json(rows);
    } else {
      std::cout << csv;
    }
    return 0;
  }
  if (a.kind != "search") throw UsageError("unknown table kind " + a.kind);
  const auto [s, t] = parse_pair(a.forbid, "--forbid");
  SearchOptions opt;
  opt.backend = parse_backend(a.backend);
  opt.max_nodes = node_budget(a.max_nodes);
  opt.workers = a.workers;
  const std::string csv = density_table(need(a.r, "--r", "search table"), s, t, need(a.n_lo, "--n-lo", "search table"),
                                        need(a.n_hi, "--n-hi", "search table"), opt);
  if (!a.json) {
    std::cout << csv;
    return 0;
  }
  // The CSV has no quoted fields, so a plain split recovers the cells.
  json rows = json::array();
  std::istringstream in(csv);
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream cl(line);
    std::string cell;
    while (std::getline(cl, cell, ',')) cells.push_back(cell);
    if (header.empty()) {
      header = cells;
      continue;
    }
    json row;
    for (std::size_t i = 0; i < header.size() && i < cells.size(); ++i) row[header[i]] = cells[i];
    rows.push_back(row);
  }
  print_json(rows);
  return 0;
}

struct SearchArgs {
  int n = 0;
  int r = 0;
  std::string forbid;
  std::string backend = "generic";
  std::optional<std::uint64_t> max_nodes;
  int workers = 1;
  std::size_t witness_cap = 16;
  std::string emit;
  bool json = false;
};

void emit_witnesses(const std::vector<Matroid>& witnesses, const std::string& dir) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "witness_%03zu.matroid", i);
    std::ofstream out(std::filesystem::path(dir) / name, std::ios::binary);
    if (!out) throw UsageError("cannot write to " + dir);
    out << to_text(witnesses[i]);
  }
}

void print_search_text(const SearchReport& rep) {
  std::cout << "max_bases " << rep.max_bases << "\n"
            << "exhaustive " << (rep.exhaustive ? "yes" : "no") << "\n"
            << "nodes " << rep.nodes_explored << "\n"
            << "witnesses " << rep.witnesses.size() << "\n";
}

int run_search(const SearchArgs& a) {
  const auto [s, t] = parse_pair(a.forbid, "--forbid");
  SearchOptions opt;
  opt.backend = parse_backend(a.backend);
  opt.max_nodes = node_budget(a.max_nodes);
  opt.workers = a.workers;
  opt.witness_cap = a.witness_cap;
  const SearchReport rep = search_ex(a.n, a.r, s, t, opt);
  emit_witnesses(rep.witnesses, a.emit);
  if (a.json) {
    print_json(verify::search_json(rep));
  } else {
    print_search_text(rep);
    std::cout << "pruned_daisy " << rep.pruned_daisy << "\npruned_bound " << rep.pruned_bound << "\n";
  }
  return 0;
}

int run_binary(int r, int size, int workers, const std::optional<std::uint64_t>& max_nodes, const std::string& emit,
               bool as_json) {
  SearchOptions opt;
  opt.workers = workers;
  opt.max_nodes = node_budget(max_nodes);
  const BinarySearchReport rep = search_binary_max_bases(r, size, opt);
  emit_witnesses(rep.report.witnesses, emit);
  if (as_json) {
    print_json(verify::binary_search_json(rep));
    return 0;
  }
  print_search_text(rep.report);
  if (rep.bose_burton_c) {
    std::cout << "bose_burton c=" << *rep.bose_burton_c << " bases " << rep.bose_burton_bases
              << (rep.bose_burton_attains ? " attains" : " falls short") << "\n";
  } else {
    std::cout << "bose_burton none\n";
  }
  return 0;
}

int run_decompose(const std::string& input, int mm, const std::string& parity, bool as_json) {
  if (parity != "odd" && parity != "even") throw UsageError("--parity must be odd or even");
  const Matroid m = read_matroid(input);
  const Rank3Decomposition d = decompose_rank3(m, mm, parity == "odd" ? Parity::odd : Parity::even);
  if (as_json) {
    print_json(verify::decomposition_json(d));
    return 0;
  }
  std::cout << "k " << d.k << "\n";
  for (std::size_t i = 0; i < d.lines.size(); ++i) {
    std::cout << "line " << i + 1 << " " << set_text(d.lines[i]) << " threshold " << d.thresholds[i] << "\n";
  }
  std::cout << "Y " << set_text(d.y) << "\n";
  for (const CertificateCheck& c : d.certificate) {
    std::cout << (c.passed ? "[ok] " : "[FAILED] ") << c.name << ": " << c.detail << "\n";
  }
  return 0;
}

int run_classify(const std::string& input, bool as_json) {
  const U35Classification c = classify_u35_free(read_matroid(input));
  if (as_json) {
    print_json(verify::classification_json(c));
  } else if (c.kind == U35Classification::Kind::no_u25_minor) {
    std::cout << "no_u25_minor\n";
  } else {
    std::cout << "two_lines " << set_text(c.first) << " " << set_text(c.second) << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, const std::vector<int>& only, bool timing, bool as_json) {
  std::vector<int> ids = only;
  if (ids.empty()) {
    try {
      ids = verify::suite_criteria(suite);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  bool all_passed = true;
  json results = json::array();
  for (int id : ids) {
    if (id < 1 || id > verify::kCriterionCount) throw UsageError("no criterion " + std::to_string(id));
    const verify::CriterionResult r = verify::run_criterion(id);
    all_passed = all_passed && r.passed;
    if (as_json) {
      json row = {{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}};
      if (timing) row["seconds"] = r.seconds;
      results.push_back(row);
    } else {
      std::cout << verify::format_result(r, timing) << std::endl;
    }
  }
  if (as_json) print_json({{"suite", only.empty() ? suite : "custom"}, {"passed", all_passed}, {"criteria", results}});
  return all_passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid Turán toolkit: constructions, minors, Lagrangians, bounds and extremal search"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "turan-matroid 0.1.0");

  std::function<int()> action;
  bool as_json = false;
  std::string input = "-";
  auto add_common = [&](CLI::App* sub, bool reads_matroid) {
    sub->add_flag("--json", as_json, "Emit JSON");
    if (reads_matroid) sub->add_option("input", input, "Matroid file (MATROID v1 or JSON); '-' or absent reads stdin");
  };

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a named matroid and print it");
  construct->add_option("kind", ca.kind, "pg | bb | uniform | multiline | two-lines")
      ->required()
      ->check(CLI::IsMember({"pg", "bb", "uniform", "multiline", "two-lines"}));
  construct->add_option("--r", ca.r, "Rank (pg, bb)");
  construct->add_option("--q", ca.q, "Field order (pg, bb)");
  construct->add_option("--c", ca.c, "Bose-Burton codimension parameter");
  construct->add_option("--s", ca.s, "Rank of U_{s,t}");
  construct->add_option("--t", ca.t, "Size of U_{s,t}");
  construct->add_option("--a", ca.a, "First line size (two-lines)");
  construct->add_option("--b", ca.b, "Second line size (two-lines)");
  construct->add_option("--lines", ca.lines, "Group sizes (multiline)")->delimiter(',');
  construct->add_option("--parallel", ca.parallel, "Extra parallel class off the lines (multiline)");
  construct->add_flag("--as-points", ca.as_points, "Make each multiline group a parallel class");
  construct->add_option("--blowup", ca.blowup, "Replace element i by k_i parallel copies")->delimiter(',');
  construct->add_flag("--label-map", ca.label_map, "Append coordinate comments (pg, bb)");
  construct->add_flag("--json", ca.json, "Emit JSON");
  construct->callback([&] { action = [&] { return run_construct(ca); }; });

  auto* bases = app.add_subcommand("bases", "Count bases");
  add_common(bases, true);
  bases->callback([&] { action = [&] { return run_bases(input, as_json); }; });

  int ms = 0;
  int mt = 0;
  auto* minor = app.add_subcommand("minor", "Look for a U_{s,t}-minor");
  add_common(minor, true);
  minor->add_option("--s", ms, "Rank of the uniform matroid")->required();
  minor->add_option("--t", mt, "Size of the uniform matroid")->required();
  minor->callback([&] { action = [&] { return run_minor(input, ms, mt, false, as_json); }; });

  auto* restriction = app.add_subcommand("restriction", "Look for a U_{s,t}-restriction");
  add_common(restriction, true);
  restriction->add_option("--s", ms, "Rank of the uniform matroid")->required();
  restriction->add_option("--t", mt, "Size of the uniform matroid")->required();
  restriction->callback([&] { action = [&] { return run_minor(input, ms, mt, true, as_json); }; });

  LagrangianArgs la;
  auto* lagrangian = app.add_subcommand("lagrangian", "Maximise the basis polynomial over the simplex");
  lagrangian->add_flag("--json", la.json, "Emit JSON");
  lagrangian->add_option("input", la.input, "Matroid file; '-' or absent reads stdin");
  lagrangian->add_option("--tol", la.opt.tol, "Stop when an update changes p by less than this");
  lagrangian->add_option("--max-iter", la.opt.max_iter, "Iteration cap per start");
  lagrangian->add_option("--restarts", la.opt.restarts, "Random starts besides the barycentre");
  lagrangian->add_option("--seed", la.opt.seed, "Seed for the random starts");
  lagrangian->add_option("--workers", la.opt.workers, "Threads")->check(CLI::Range(1, 256));
  lagrangian->add_option("--bound-t", la.bound_t, "Use this t for the ceiling");
  lagrangian->add_option("--precision", la.precision, "Printed decimal places")->check(CLI::Range(1, 60));
  lagrangian->add_flag("--exact-bound", la.exact_bound, "Also print the ceiling as a fraction");
  lagrangian->callback([&] { action = [&] { return run_lagrangian(la); }; });

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Evaluate a bound or density exactly");
  bounds->add_option("--selector", ba.selector,
                     "b | b-recursive | kung | ex-upper-u2 | density-u2 | density-u2-normalized | theorem43 | "
                     "infinite-product | density-envelope | prime-band | ex_u1 | ex_u23 | pi_u34 | ex_u34_even | "
                     "ex_u34_odd_leading | ex_u35 | pi_u35 | rank3_lower_odd | rank3_lower_even")
      ->required();
  bounds->add_option("--n", ba.n, "Ground set size");
  bounds->add_option("--r", ba.r, "Rank");
  bounds->add_option("--t", ba.t, "Forbidden U_{2,t+2} parameter");
  bounds->add_option("--m", ba.m, "Rank-3 arc parameter");
  bounds->add_option("--q", ba.q, "Field order");
  bounds->add_option("--eps", ba.eps, "Interval width for the infinite product");
  bounds->add_option("--constant", ba.constant, "Constant of the prime band");
  bounds->add_option("--digits", ba.digits, "Decimal places")->check(CLI::Range(0, 200));
  bounds->add_flag("--json", ba.json, "Emit JSON");
  bounds->callback([&] { action = [&] { return run_bounds(ba); }; });

  TablesArgs ta;
  auto* tables = app.add_subcommand("tables", "Print CSV tables");
  tables->add_option("--kind", ta.kind, "density | search")->check(CLI::IsMember({"density", "search"}));
  tables->add_option("--r-max", ta.r_max, "Largest rank (density)")->check(CLI::Range(1, 40));
  tables->add_option("--q", ta.qs, "Field orders (density)")->delimiter(',');
  tables->add_option("--digits", ta.digits, "Decimal places")->check(CLI::Range(0, 200));
  tables->add_option("--r", ta.r, "Rank (search)");
  tables->add_option("--forbid", ta.forbid, "s,t of the forbidden U_{s,t} (search)");
  tables->add_option("--n-lo", ta.n_lo, "First ground set size (search)");
  tables->add_option("--n-hi", ta.n_hi, "Last ground set size (search)");
  tables->add_option("--backend", ta.backend, "generic | rank3");
  tables->add_option("--max-nodes", ta.max_nodes, "Node budget per subtree");
  tables->add_option("--workers", ta.workers, "Threads")->check(CLI::Range(1, 256));
  tables->add_flag("--json", ta.json, "Emit JSON");
  tables->callback([&] { action = [&] { return run_tables(ta); }; });

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Largest basis count without a U_{s,t}-minor");
  search->add_option("--n", sa.n, "Ground set size")->required();
  search->add_option("--r", sa.r, "Rank")->required();
  search->add_option("--forbid", sa.forbid, "s,t of the forbidden U_{s,t}")->required();
  search->add_option("--backend", sa.backend, "generic | rank3")->check(CLI::IsMember({"generic", "rank3"}));
  search->add_option("--max-nodes", sa.max_nodes, "Node budget per subtree");
  search->add_option("--workers", sa.workers, "Threads")->check(CLI::Range(1, 256));
  search->add_option("--witness-cap", sa.witness_cap, "Most witnesses kept");
  search->add_option("--emit-witnesses", sa.emit, "Write witnesses into this directory");
  search->add_flag("--json", sa.json, "Emit JSON");
  search->callback([&] { action = [&] { return run_search(sa); }; });

  int br = 0;
  int bsize = 0;
  int bworkers = 1;
  std::optional<std::uint64_t> bnodes;
  std::string bemit;
  auto* binary = app.add_subcommand("binary-search", "Most bases over point sets of PG(r-1,2)");
  add_common(binary, false);
  binary->add_option("--r", br, "Rank")->required();
  binary->add_option("--size", bsize, "Number of points")->required();
  binary->add_option("--workers", bworkers, "Threads")->check(CLI::Range(1, 256));
  binary->add_option("--max-nodes", bnodes, "Subset budget");
  binary->add_option("--emit-witnesses", bemit, "Write witnesses into this directory");
  binary->callback([&] { action = [&] { return run_binary(br, bsize, bworkers, bnodes, bemit, as_json); }; });

  int dm = 0;
  std::string parity = "odd";
  auto* decompose = app.add_subcommand("decompose", "Certified line decomposition of a rank-3 matroid");
  add_common(decompose, true);
  decompose->add_option("--m", dm, "Arc parameter m >= 2")->required();
  decompose->add_option("--parity", parity, "odd (no U_{3,2m+1}) | even (no U_{3,2m+2})")
      ->check(CLI::IsMember({"odd", "even"}));
  decompose->callback([&] { action = [&] { return run_decompose(input, dm, parity, as_json); }; });

  auto* classify = app.add_subcommand("classify", "Classify a rank-3 matroid without a U_{3,5}-restriction");
  add_common(classify, true);
  classify->callback([&] { action = [&] { return run_classify(input, as_json); }; });

  auto* cover = app.add_subcommand("cover", "Fewest lines covering the ground set");
  add_common(cover, true);
  cover->callback([&] {
    action = [&] {
      const int k = line_cover_number(read_matroid(input));
      if (as_json) {
        print_json({{"line_cover", k}});
      } else {
        std::cout << k << "\n";
      }
      return 0;
    };
  });

  int pr = 0;
  int pm = 0;
  int pq = 0;
  int ps = 0;
  auto* probe = app.add_subcommand("truncation-probe", "Largest U_{s,t}-minor of a truncated projective geometry");
  add_common(probe, false);
  probe->add_option("--r", pr, "Rank after truncation")->required();
  probe->add_option("--m", pm, "Truncation depth")->required();
  probe->add_option("--q", pq, "Field order")->required();
  probe->add_option("--s", ps, "Rank of the uniform minor")->required();
  probe->callback([&] {
    action = [&] {
      const int t = truncation_probe(pr, pm, pq, ps);
      if (as_json) {
        print_json({{"r", pr}, {"m", pm}, {"q", pq}, {"s", ps}, {"t", t}});
      } else {
        std::cout << t << "\n";
      }
      return 0;
    };
  });

  std::string suite = "all";
  std::vector<int> criteria;
  bool timing = false;
  auto* verify = app.add_subcommand("verify-theorems", "Run the acceptance checks");
  add_common(verify, false);
  verify->add_option("--suite", suite, "all | counting | lagrangian | bounds | search | rank3 | identities | minors | determinism");
  verify->add_option("--criterion", criteria, "Run only these criterion numbers")->delimiter(',');
  verify->add_flag("--timing", timing, "Report wall time per criterion (output is then not reproducible)");
  verify->callback([&] { action = [&] { return run_verify(suite, criteria, timing, as_json); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    return action();
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
