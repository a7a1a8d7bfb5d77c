// welded: command-line front end for the welded-diagram library.
// Every subcommand prints JSON lines on stdout; --pretty switches to plain text.
// Exit codes: 0 success, 1 invariant mismatch found by fuzz, 2 usage or input error.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "welded/coloring.hpp"
#include "welded/gauss.hpp"
#include "welded/linking.hpp"
#include "welded/moves.hpp"
#include "welded/numbering.hpp"
#include "welded/parallelize.hpp"
#include "welded/planar.hpp"
#include "welded/presentation.hpp"
#include "welded/quandle.hpp"

using json = nlohmann::ordered_json;
using namespace welded;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string code;
  std::string file;
  bool pretty = false;
  bool timing = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("code", c.code, "Gauss code, e.g. O1+U2+O3+U1+O2+U3+ (use - for stdin)");
  sub->add_option("-f,--file", c.file, "read the Gauss code from a file");
  sub->add_flag("--pretty", c.pretty, "human-readable output");
  sub->add_flag("--timing", c.timing, "include wall-clock timing in the report");
}

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string trim(std::string s) {
  auto ws = [](char ch) { return ch == ' ' || ch == '\n' || ch == '\r' || ch == '\t'; };
  while (!s.empty() && ws(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && ws(s[i])) ++i;
  return s.substr(i);
}

std::string input_text(const Common& c) {
  if (!c.file.empty()) {
    std::ifstream in(c.file);
    if (!in) throw UsageError("cannot read " + c.file);
    return trim(slurp(in));
  }
  if (c.code == "-") return trim(slurp(std::cin));
  return c.code;
}

GaussCode load(const Common& c, std::string& text) {
  text = input_text(c);
  try {
    return parse_gauss(text);
  } catch (const GaussError& e) {
    throw UsageError(std::string("parse error: ") + e.what());
  }
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);)
    if (!trim(item).empty()) out.push_back(trim(item));
  return out;
}

FiniteQuandle quandle_arg(const std::string& spec) {
  try {
    return resolve_quandle(spec);
  } catch (const std::exception& e) {
    throw UsageError("unknown quandle '" + spec + "': " + e.what());
  }
}

std::pair<std::size_t, std::size_t> pair_arg(const std::string& s, std::size_t components) {
  auto parts = split_list(s, ',');
  if (parts.size() != 2) throw UsageError("expected a component pair i,j but got '" + s + "'");
  std::size_t ij[2];
  for (int k = 0; k < 2; ++k) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(parts[k], &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != parts[k].size()) throw UsageError("bad component index '" + parts[k] + "'");
    if (v >= components) throw UsageError("component " + parts[k] + " out of range");
    ij[k] = v;
  }
  if (ij[0] == ij[1]) throw UsageError("linking number needs two distinct components");
  return {ij[0], ij[1]};
}

Orientation orientation_arg(const std::string& sign) { return sign == "-" ? Orientation::antiparallel : Orientation::parallel; }

// Diagram an invariant is computed on: the input itself or one of its doubles.
GaussCode target_code(const GaussCode& g, const std::string& target) {
  if (target == "plus") return parallel_gauss(g, Orientation::parallel);
  if (target == "minus") return parallel_gauss(g, Orientation::antiparallel);
  return g;
}

class Clock {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json report(const std::string& op, const std::string& input) {
  json r;
  r["operation"] = op;
  r["input"] = input;
  return r;
}

void finish(json& r, const Common& c, const Clock& clock) {
  if (c.timing) r["timing"] = {{"seconds", clock.seconds()}};
  std::cout << r.dump() << '\n';
}

// ---- parse ----

int run_parse(const Common& c, bool emit_pd) {
  Clock clock;
  std::string text;
  GaussCode g = load(c, text);
  GaussCode canon = canonical(g);
  Writhe w = writhe(g);
  if (c.pretty) {
    std::cout << serialize_gauss(canon) << '\n'
              << "components " << g.num_components() << ", crossings " << g.num_crossings() << ", writhe " << w.total << '\n';
    if (emit_pd) std::cout << planar_to_json(gauss_to_planar(g)) << '\n';
    return 0;
  }
  json r = report("parse", text);
  r["outputs"] = {{"canonical", serialize_gauss(canon)},
                  {"components", g.num_components()},
                  {"crossings", g.num_crossings()},
                  {"writhe", w.total},
                  {"self_writhe", w.self}};
  if (emit_pd) r["outputs"]["pd"] = json::parse(planar_to_json(gauss_to_planar(g)));
  finish(r, c, clock);
  return 0;
}

// ---- double ----

int run_double(const Common& c, const std::string& sign, const std::string& emit, const std::string& labels_path) {
  Clock clock;
  std::string text;
  GaussCode g = load(c, text);
  ParallelDiagram p = parallelize(gauss_to_planar(g), orientation_arg(sign));
  std::string code = serialize_gauss(parallel_gauss(p));
  if (!labels_path.empty()) {
    std::ofstream out(labels_path);
    if (!out) throw UsageError("cannot write " + labels_path);
    out << labels_to_json(p.labels) << '\n';
  }
  const bool want_gauss = emit != "pd";
  const bool want_pd = emit != "gauss";
  if (c.pretty) {
    if (want_gauss) std::cout << code << '\n';
    if (want_pd) std::cout << planar_to_json(p.diagram) << '\n';
    return 0;
  }
  json r = report("double", text);
  r["sign"] = sign;
  json out;
  if (want_gauss) out["gauss"] = code;
  if (want_pd) out["pd"] = json::parse(planar_to_json(p.diagram));
  out["labels"] = json::parse(labels_to_json(p.labels));
  r["outputs"] = std::move(out);
  finish(r, c, clock);
  return 0;
}

// ---- invariants ----

json linking_json(const GaussCode& g, std::size_t i, std::size_t j) {
  HalfInteger lk = linking_number(g, i, j);
  return {{"i", i}, {"j", j}, {"lk", lk.str()}, {"twice_lk", lk.twice}};
}

int run_invariants(const Common& c, const std::vector<std::string>& quandles, const std::vector<std::string>& rings,
                   const std::vector<std::string>& pairs, const std::string& target) {
  Clock clock;
  std::string text;
  GaussCode g = target_code(load(c, text), target);
  std::vector<FiniteQuandle> xs;
  for (const auto& q : quandles) xs.push_back(quandle_arg(q));
  std::vector<std::pair<std::size_t, std::size_t>> lk_pairs;
  for (const auto& s : pairs) lk_pairs.push_back(pair_arg(s, g.num_components()));

  json out;
  out["colorings"] = json::array();
  for (const auto& x : xs)
    out["colorings"].push_back({{"quandle", x.name()}, {"order", x.size()}, {"count", count_colorings(g, x)}});
  out["alexander"] = json::array();
  for (const auto& ring : rings) {
    NumberingResult res = alexander_numbering(g, ring == "Z" ? Ring::Z : Ring::Z2);
    json entry = json::parse(numbering_to_json(res));
    out["alexander"].push_back({{"ring", ring}, {"result", entry}});
  }
  out["linking"] = json::array();
  for (auto [i, j] : lk_pairs) out["linking"].push_back(linking_json(g, i, j));

  if (c.pretty) {
    for (const auto& e : out["colorings"])
      std::cout << "#Col " << e["quandle"].get<std::string>() << " = " << e["count"].get<std::uint64_t>() << '\n';
    for (std::size_t k = 0; k < rings.size(); ++k) {
      bool sat = std::holds_alternative<Numbering>(alexander_numbering(g, rings[k] == "Z" ? Ring::Z : Ring::Z2));
      std::cout << "Alexander numbering over " << rings[k] << ": " << (sat ? "SAT" : "UNSAT") << '\n';
    }
    for (const auto& e : out["linking"])
      std::cout << "lk(" << e["i"].get<std::size_t>() << "," << e["j"].get<std::size_t>() << ") = " << e["lk"].get<std::string>() << '\n';
    return 0;
  }
  json r = report("invariants", text);
  r["target"] = target;
  r["outputs"] = std::move(out);
  finish(r, c, clock);
  return 0;
}

// ---- present ----

int run_present(const Common& c, bool parallel, bool group) {
  Clock clock;
  std::string text;
  GaussCode g = load(c, text);
  if (parallel && group && g.num_components() != 1)
    throw UsageError("--parallel --group is defined for knot diagrams only (got " + std::to_string(g.num_components()) + " components)");
  std::string txt;
  std::string js;
  if (group) {
    GroupPresentation p = parallel ? parallel_group_presentation(g) : wirtinger_group(g);
    txt = to_text(p);
    js = to_json(p);
  } else {
    QuandlePresentation p = parallel ? parallel_quandle_presentation(g) : wirtinger_quandle(g);
    txt = to_text(p);
    js = to_json(p);
  }
  if (c.pretty) {
    std::cout << txt << '\n';
    return 0;
  }
  json r = report("present", text);
  r["parallel"] = parallel;
  r["group"] = group;
  r["outputs"] = {{"text", txt}, {"presentation", json::parse(js)}};
  finish(r, c, clock);
  return 0;
}

// ---- lk ----

int run_lk(const Common& c, const std::vector<std::string>& pairs, const std::string& target) {
  Clock clock;
  std::string text;
  GaussCode g = target_code(load(c, text), target);
  std::vector<std::pair<std::size_t, std::size_t>> todo;
  for (const auto& s : pairs) todo.push_back(pair_arg(s, g.num_components()));
  if (pairs.empty())
    for (std::size_t i = 0; i < g.num_components(); ++i)
      for (std::size_t j = i + 1; j < g.num_components(); ++j) todo.emplace_back(i, j);
  json table = json::array();
  for (auto [i, j] : todo) table.push_back(linking_json(g, i, j));
  if (c.pretty) {
    for (const auto& e : table)
      std::cout << "lk(" << e["i"].get<std::size_t>() << "," << e["j"].get<std::size_t>() << ") = " << e["lk"].get<std::string>() << '\n';
    return 0;
  }
  json r = report("lk", text);
  r["target"] = target;
  r["outputs"] = {{"linking", table}};
  finish(r, c, clock);
  return 0;
}

// ---- fuzz ----

// Invariants compared before and after a walk: coloring counts of the diagram
// and of both doubles, plus every pairwise linking number of the diagram.
json battery(const GaussCode& g, const std::vector<FiniteQuandle>& xs) {
  json b;
  const std::pair<const char*, std::string> targets[] = {{"D", "d"}, {"phi_plus", "plus"}, {"phi_minus", "minus"}};
  for (const auto& [name, t] : targets) {
    GaussCode h = target_code(g, t);
    json counts;
    for (const auto& x : xs) counts[x.name()] = count_colorings(h, x);
    b[name] = std::move(counts);
  }
  json lk = json::object();
  for (std::size_t i = 0; i < g.num_components(); ++i)
    for (std::size_t j = i + 1; j < g.num_components(); ++j) lk[std::to_string(i) + "," + std::to_string(j)] = linking_number(g, i, j).str();
  b["lk"] = std::move(lk);
  return b;
}

std::set<MoveKind> kinds_arg(const std::vector<std::string>& names) {
  std::set<MoveKind> kinds;
  if (names.empty()) return {std::begin(kAllMoveKinds), std::end(kAllMoveKinds)};
  for (const auto& n : names) {
    auto k = move_kind_from_string(n);
    if (!k) throw UsageError("unknown move kind '" + n + "'");
    kinds.insert(*k);
  }
  return kinds;
}

int run_fuzz(const Common& c, std::size_t steps, std::uint64_t seed, const std::string& quandle_list, std::size_t trials,
             std::size_t threads, const std::vector<std::string>& kind_names, bool full_log) {
  Clock clock;
  if (const char* env = std::getenv("WELDED_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("WELDED_SEED is not an integer: ") + env);
    }
  }
  std::string text;
  GaussCode g = load(c, text);
  std::vector<FiniteQuandle> xs;
  for (const auto& q : split_list(quandle_list, ',')) xs.push_back(quandle_arg(q));
  std::set<MoveKind> kinds = kinds_arg(kind_names);
  json before = battery(g, xs);

  std::vector<json> results(trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < trials;) {
      std::uint64_t trial_seed = seed + t;
      WalkResult walk = random_walk(g, steps, trial_seed, kinds);
      json after = battery(walk.code, xs);
      json row;
      row["trial"] = t;
      row["seed"] = trial_seed;
      row["final"] = serialize_gauss(walk.code);
      json mismatches = json::array();
      for (const auto& [key, value] : before.items())
        if (after[key] != value) mismatches.push_back({{"invariant", key}, {"before", value}, {"after", after[key]}});
      const bool failed = !mismatches.empty();
      row["status"] = failed ? "fail" : "pass";
      if (failed) row["mismatches"] = std::move(mismatches);
      if (failed || full_log) {
        json log = json::array();
        for (const auto& e : walk.log) log.push_back(e.site ? json::parse(site_to_json(*e.site)) : json(nullptr));
        row["log"] = std::move(log);
      }
      results[t] = std::move(row);
    }
  };
  std::size_t n_threads = std::max<std::size_t>(1, std::min(threads, trials));
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i + 1 < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::size_t failures = 0;
  for (const auto& row : results) failures += row["status"] == "fail";
  if (c.pretty) {
    for (const auto& row : results)
      std::cout << "trial " << row["trial"].get<std::size_t>() << " seed " << row["seed"].get<std::uint64_t>() << ": "
                << row["status"].get<std::string>() << "  " << row["final"].get<std::string>() << '\n';
    std::cout << (trials - failures) << "/" << trials << " trials passed\n";
  } else {
    for (const auto& row : results) std::cout << row.dump() << '\n';
    json r = report("fuzz", text);
    r["seed"] = seed;
    r["steps"] = steps;
    r["quandles"] = json::array();
    for (const auto& x : xs) r["quandles"].push_back(x.name());
    r["outputs"] = {{"trials", trials}, {"passed", trials - failures}, {"failed", failures}, {"battery", before}};
    finish(r, c, clock);
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Welded link diagrams: doubling, quandle colorings, numberings, presentations"};
  app.require_subcommand(1);

  Common parse_c, double_c, inv_c, present_c, fuzz_c, lk_c;

  auto* parse = app.add_subcommand("parse", "validate a Gauss code and print its canonical form");
  add_common(parse, parse_c);
  bool parse_pd = false;
  parse->add_flag("--pd", parse_pd, "also emit a planar realization");

  auto* dbl = app.add_subcommand("double", "parallel doubling of a diagram");
  add_common(dbl, double_c);
  std::string sign = "+";
  std::string emit = "gauss";
  std::string labels_path;
  dbl->add_option("--sign", sign, "+ keeps both copies parallel, - reverses the left copies")->check(CLI::IsMember({"+", "-"}));
  dbl->add_option("--emit", emit, "gauss, pd or both")->check(CLI::IsMember({"gauss", "pd", "both"}));
  dbl->add_option("--labels", labels_path, "write component labels (origin, side) as JSON to this file");

  auto* inv = app.add_subcommand("invariants", "coloring counts, Alexander numberings and linking numbers");
  add_common(inv, inv_c);
  std::vector<std::string> inv_quandles, inv_rings, inv_pairs;
  std::string inv_target = "d";
  inv->add_option("-q,--quandle", inv_quandles, "builtin name (R3, T2, dihedral:5) or table file; repeatable");
  inv->add_option("--alexander", inv_rings, "Z or Z2; repeatable")->check(CLI::IsMember({"Z", "Z2"}));
  inv->add_option("--lk", inv_pairs, "component pair i,j; repeatable");
  inv->add_option("--on", inv_target, "d (the input), plus or minus (its doubles)")->check(CLI::IsMember({"d", "plus", "minus"}));

  auto* present = app.add_subcommand("present", "knot quandle or group presentation");
  add_common(present, present_c);
  bool parallel = false, group = false;
  present->add_flag("--parallel", parallel, "presentation of the parallel doubling");
  present->add_flag("--group", group, "group instead of quandle");

  auto* fuzz = app.add_subcommand("fuzz", "random move walks checking invariant batteries");
  add_common(fuzz, fuzz_c);
  std::size_t steps = 30, trials = 10, threads = std::max(1U, std::thread::hardware_concurrency());
  std::uint64_t seed = 1;
  std::string fuzz_quandles = "T2,R3,R5,R7";
  std::vector<std::string> fuzz_kinds;
  bool full_log = false;
  fuzz->add_option("--steps", steps, "moves per walk");
  fuzz->add_option("--seed", seed, "base seed; trial t uses seed + t (WELDED_SEED overrides)");
  fuzz->add_option("--quandles", fuzz_quandles, "comma-separated quandle list");
  fuzz->add_option("--trials", trials, "number of walks");
  fuzz->add_option("--threads", threads, "worker threads; output order does not depend on it");
  fuzz->add_option("--kinds", fuzz_kinds, "restrict to these move kinds");
  fuzz->add_flag("--log", full_log, "include the move log of passing trials too");

  auto* lk = app.add_subcommand("lk", "pairwise linking numbers");
  add_common(lk, lk_c);
  std::vector<std::string> lk_pairs;
  std::string lk_target = "d";
  lk->add_option("--pair", lk_pairs, "component pair i,j; default all pairs");
  lk->add_option("--on", lk_target, "d (the input), plus or minus (its doubles)")->check(CLI::IsMember({"d", "plus", "minus"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*parse) return run_parse(parse_c, parse_pd);
    if (*dbl) return run_double(double_c, sign, emit, labels_path);
    if (*inv) return run_invariants(inv_c, inv_quandles, inv_rings, inv_pairs, inv_target);
    if (*present) return run_present(present_c, parallel, group);
    if (*fuzz) return run_fuzz(fuzz_c, steps, seed, fuzz_quandles, trials, threads, fuzz_kinds, full_log);
    if (*lk) return run_lk(lk_c, lk_pairs, lk_target);
  } catch (const UsageError& e) {
    std::cerr << "welded: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "welded: internal error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
