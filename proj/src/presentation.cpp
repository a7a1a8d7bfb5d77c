#include "welded/presentation.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace welded {

Word free_reduce(const Word& w) {
  Word out;
  for (const Letter& l : w) {
    if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->generator, -it->exponent});
  return out;
}

int exponent_sum(const Word& w) {
  int s = 0;
  for (const Letter& l : w) s += l.exponent;
  return s;
}

namespace {

std::vector<std::string> arc_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace

QuandlePresentation wirtinger_quandle(const GaussCode& g) {
  auto arcs = long_arcs(g);
  QuandlePresentation p;
  p.generators = arc_names(arcs.count);
  for (const auto& [id, info] : g.crossings()) {
    std::size_t in = arcs.before(g, info.under);
    std::size_t out = arcs.after[info.under.component][info.under.position];
    std::size_t over = arcs.after[info.over.component][info.over.position];
    p.relations.push_back({Power{in, {{over, to_int(info.sign)}}}, Power{out, {}}});
  }
  return p;
}

Word preferred_longitude(const GaussCode& g, std::size_t comp) {
  if (comp >= g.num_components()) throw std::out_of_range("preferred_longitude: component out of range");
  auto arcs = long_arcs(g);
  auto crossings = g.crossings();
  Word w;
  int total = 0;
  for (const Passage& p : g.component(comp)) {
    if (p.role != Role::under) continue;
    const auto& over = crossings.at(p.crossing).over;
    w.push_back({arcs.after[over.component][over.position], to_int(p.sign)});
    total += to_int(p.sign);
  }
  std::size_t base = arcs.offset[comp];
  for (int k = 0; k < std::abs(total); ++k) w.push_back({base, total > 0 ? -1 : 1});
  return w;
}

QuandlePresentation parallel_quandle_presentation(const GaussCode& g) {
  QuandlePresentation p = wirtinger_quandle(g);
  const std::size_t m = p.generators.size();
  const std::size_t mu = g.num_components();
  for (std::size_t i = 0; i < mu; ++i) {
    p.generators.push_back(mu == 1 ? "y" : "y" + std::to_string(i + 1));
    p.relations.push_back({Power{m + i, preferred_longitude(g, i)}, Power{m + i, {}}});
  }
  return p;
}

QuandlePresentation split_presentation(const GaussCode& g) {
  if (g.num_components() != 1) throw std::invalid_argument("split_presentation: expects a knot diagram");
  QuandlePresentation p = wirtinger_quandle(g);
  p.generators.push_back("y");
  return p;
}

GroupPresentation wirtinger_group(const GaussCode& g) {
  GroupPresentation gp;
  auto q = wirtinger_quandle(g);
  gp.generators = q.generators;
  for (const auto& r : q.relations) {
    const Letter& over = r.lhs.word.front();
    gp.relators.push_back({{over.generator, -over.exponent}, {r.lhs.base, 1}, {over.generator, over.exponent}, {r.rhs.base, -1}});
  }
  return gp;
}

GroupPresentation parallel_group_presentation(const GaussCode& g) {
  if (g.num_components() != 1) throw std::invalid_argument("parallel_group_presentation: expects a knot diagram");
  GroupPresentation gp = wirtinger_group(g);
  std::size_t y = gp.generators.size();
  gp.generators.push_back("y");
  Word l = preferred_longitude(g, 0);
  Word rel{{y, 1}};
  rel.insert(rel.end(), l.begin(), l.end());
  rel.push_back({y, -1});
  Word li = inverse(l);
  rel.insert(rel.end(), li.begin(), li.end());
  gp.relators.push_back(std::move(rel));
  return gp;
}

int evaluate(const Power& p, const std::vector<int>& assignment, const FiniteQuandle& x) {
  int v = assignment[p.base];
  for (const Letter& l : p.word) v = x.act(v, assignment[l.generator], l.exponent);
  return v;
}

std::uint64_t count_homs(const QuandlePresentation& p, const FiniteQuandle& x) {
  const std::size_t n = p.generators.size();
  // Check each relation as soon as its highest generator is assigned.
  std::vector<std::vector<std::size_t>> due(n);
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    const auto& r = p.relations[i];
    std::size_t hi = std::max(r.lhs.base, r.rhs.base);
    for (const auto* pw : {&r.lhs, &r.rhs})
      for (const Letter& l : pw->word) hi = std::max(hi, l.generator);
    if (hi >= n) throw std::invalid_argument("count_homs: relation uses an undeclared generator");
    due[hi].push_back(i);
  }
  if (n == 0) return 1;
  std::vector<int> assignment(n, 0);
  std::uint64_t total = 0;
  const int q = static_cast<int>(x.size());
  std::size_t level = 0;
  assignment[0] = -1;
  while (true) {
    if (++assignment[level] >= q) {
      if (level == 0) break;
      --level;
      continue;
    }
    bool ok = true;
    for (std::size_t ri : due[level]) {
      const auto& r = p.relations[ri];
      if (evaluate(r.lhs, assignment, x) != evaluate(r.rhs, assignment, x)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (level + 1 == n) {
      ++total;
      continue;
    }
    ++level;
    assignment[level] = -1;
  }
  return total;
}

std::string word_to_text(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    int power = static_cast<int>(j - i) * w[i].exponent;
    if (!out.empty()) out += ' ';
    out += names.at(w[i].generator);
    if (power != 1) out += "^" + std::to_string(power);
    i = j;
  }
  return out;
}

namespace {

std::string power_to_text(const Power& p, const std::vector<std::string>& names) {
  if (p.word.empty()) return names.at(p.base);
  return names.at(p.base) + "^(" + word_to_text(p.word, names) + ")";
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

nlohmann::ordered_json word_json(const Word& w, const std::vector<std::string>& names) {
  auto j = nlohmann::ordered_json::array();
  for (const Letter& l : w) j.push_back({names.at(l.generator), l.exponent});
  return j;
}

}  // namespace

std::string to_text(const QuandlePresentation& p) {
  std::vector<std::string> rels;
  for (const auto& r : p.relations) rels.push_back(power_to_text(r.lhs, p.generators) + " = " + power_to_text(r.rhs, p.generators));
  std::string body = join(p.generators);
  if (!rels.empty()) body += " | " + join(rels);
  else body += " |";
  return "qdle< " + body + " >";
}

std::string to_text(const GroupPresentation& p) {
  std::vector<std::string> rels;
  for (const auto& r : p.relators) rels.push_back(word_to_text(r, p.generators));
  std::string body = join(p.generators);
  if (!rels.empty()) body += " | " + join(rels);
  else body += " |";
  return "grp< " + body + " >";
}

std::string to_json(const QuandlePresentation& p) {
  nlohmann::ordered_json j;
  j["type"] = "qdle";
  j["generators"] = p.generators;
  j["relations"] = nlohmann::ordered_json::array();
  for (const auto& r : p.relations)
    j["relations"].push_back({{"lhs", {{"base", p.generators.at(r.lhs.base)}, {"word", word_json(r.lhs.word, p.generators)}}},
                              {"rhs", {{"base", p.generators.at(r.rhs.base)}, {"word", word_json(r.rhs.word, p.generators)}}}});
  return j.dump();
}

std::string to_json(const GroupPresentation& p) {
  nlohmann::ordered_json j;
  j["type"] = "grp";
  j["generators"] = p.generators;
  j["relators"] = nlohmann::ordered_json::array();
  for (const auto& r : p.relators) j["relators"].push_back(word_json(r, p.generators));
  return j.dump();
}

}  // namespace welded
