#include "welded/gauss.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

namespace welded {

namespace {

struct Occurrences {
  int overs = 0;
  int unders = 0;
  Sign sign = Sign::positive;
  bool seen = false;
};

}  // namespace

void validate_components(const std::vector<Component>& components) {
  if (components.empty()) throw GaussError("a Gauss code needs at least one component");
  std::unordered_map<int, Occurrences> occ;
  for (const auto& comp : components) {
    for (const auto& p : comp) {
      if (p.crossing <= 0) throw GaussError("crossing id must be positive, got " + std::to_string(p.crossing));
      auto& o = occ[p.crossing];
      if (o.seen && o.sign != p.sign)
        throw GaussError("crossing " + std::to_string(p.crossing) + " has mismatched signs");
      o.seen = true;
      o.sign = p.sign;
      (p.role == Role::over ? o.overs : o.unders)++;
    }
  }
  for (const auto& [id, o] : occ) {
    if (o.overs + o.unders != 2)
      throw GaussError("crossing " + std::to_string(id) + " occurs " + std::to_string(o.overs + o.unders) +
                       " times (expected 2)");
    if (o.overs != 1)
      throw GaussError("crossing " + std::to_string(id) + " has mismatched roles (" +
                       (o.overs == 2 ? "two overs" : "two unders") + ")");
  }
}

GaussCode::GaussCode() : components_(1) {}

GaussCode::GaussCode(std::vector<Component> components) : components_(std::move(components)) {
  validate_components(components_);
}

std::size_t GaussCode::num_passages() const noexcept {
  std::size_t n = 0;
  for (const auto& c : components_) n += c.size();
  return n;
}

std::size_t GaussCode::num_crossings() const noexcept { return num_passages() / 2; }

std::map<int, CrossingInfo> GaussCode::crossings() const {
  std::map<int, CrossingInfo> out;
  for (std::size_t c = 0; c < components_.size(); ++c) {
    for (std::size_t i = 0; i < components_[c].size(); ++i) {
      const auto& p = components_[c][i];
      auto& info = out[p.crossing];
      info.id = p.crossing;
      info.sign = p.sign;
      (p.role == Role::over ? info.over : info.under) = PassageRef{c, i};
    }
  }
  return out;
}

int GaussCode::max_crossing_id() const noexcept {
  int m = 0;
  for (const auto& c : components_)
    for (const auto& p : c) m = std::max(m, p.crossing);
  return m;
}

GaussCode parse_gauss(std::string_view text) {
  std::vector<Component> comps(1);
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '|') {
      comps.emplace_back();
      ++i;
      continue;
    }
    if (ch != 'O' && ch != 'U')
      throw GaussError("malformed token at offset " + std::to_string(i) + ": expected 'O', 'U' or '|'");
    Passage p;
    p.role = ch == 'O' ? Role::over : Role::under;
    ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (start == i) throw GaussError("malformed token at offset " + std::to_string(start) + ": missing crossing id");
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, p.crossing);
    if (ec == std::errc::result_out_of_range)
      throw GaussError("crossing id overflow at offset " + std::to_string(start));
    if (ec != std::errc() || ptr != text.data() + i)
      throw GaussError("malformed crossing id at offset " + std::to_string(start));
    if (p.crossing <= 0) throw GaussError("crossing id must be positive at offset " + std::to_string(start));
    if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
      throw GaussError("malformed token at offset " + std::to_string(i) + ": missing sign");
    p.sign = text[i] == '+' ? Sign::positive : Sign::negative;
    ++i;
    comps.back().push_back(p);
  }
  return GaussCode(std::move(comps));
}

std::string serialize_gauss(const GaussCode& g) {
  std::string out;
  bool first = true;
  for (const auto& comp : g.components()) {
    if (!first) out += '|';
    first = false;
    for (const auto& p : comp) {
      out += p.role == Role::over ? 'O' : 'U';
      out += std::to_string(p.crossing);
      out += p.sign == Sign::positive ? '+' : '-';
    }
  }
  return out;
}

GaussCode canonical(const GaussCode& g) {
  std::unordered_map<int, int> rename;
  std::vector<Component> comps = g.components();
  for (auto& comp : comps) {
    for (auto& p : comp) {
      auto [it, inserted] = rename.try_emplace(p.crossing, static_cast<int>(rename.size()) + 1);
      p.crossing = it->second;
    }
  }
  return GaussCode(std::move(comps));
}

Writhe writhe(const GaussCode& g) {
  Writhe w;
  w.self.assign(g.num_components(), 0);
  for (const auto& [id, info] : g.crossings()) {
    w.total += to_int(info.sign);
    if (info.over.component == info.under.component) w.self[info.over.component] += to_int(info.sign);
  }
  return w;
}

GaussCode delete_components(const GaussCode& g, const std::set<std::size_t>& keep) {
  if (keep.empty()) throw std::out_of_range("delete_components: keep set is empty");
  for (auto k : keep)
    if (k >= g.num_components()) throw std::out_of_range("delete_components: component " + std::to_string(k) + " out of range");
  std::unordered_map<int, int> surviving;
  for (auto k : keep)
    for (const auto& p : g.component(k)) surviving[p.crossing]++;
  std::vector<Component> comps;
  for (auto k : keep) {
    Component c;
    for (const auto& p : g.component(k))
      if (surviving[p.crossing] == 2) c.push_back(p);
    comps.push_back(std::move(c));
  }
  return canonical(GaussCode(std::move(comps)));
}

GaussCode reverse_orientation(const GaussCode& g, const std::set<std::size_t>& comps) {
  for (auto k : comps)
    if (k >= g.num_components()) throw std::out_of_range("reverse_orientation: component " + std::to_string(k) + " out of range");
  std::unordered_map<int, int> reversed_passages;
  for (auto k : comps)
    for (const auto& p : g.component(k)) reversed_passages[p.crossing]++;
  std::vector<Component> out = g.components();
  for (auto k : comps) std::reverse(out[k].begin(), out[k].end());
  for (auto& comp : out)
    for (auto& p : comp)
      if (auto it = reversed_passages.find(p.crossing); it != reversed_passages.end() && it->second == 1)
        p.sign = flip(p.sign);
  return canonical(GaussCode(std::move(out)));
}

GaussCode disjoint_union(const GaussCode& a, const GaussCode& b) {
  std::vector<Component> comps = a.components();
  int shift = a.max_crossing_id();
  for (auto comp : b.components()) {
    for (auto& p : comp) p.crossing += shift;
    comps.push_back(std::move(comp));
  }
  return GaussCode(std::move(comps));
}

LongArcs long_arcs(const GaussCode& g) {
  LongArcs arcs;
  const auto& comps = g.components();
  for (const auto& comp : comps) {
    std::size_t unders = static_cast<std::size_t>(
        std::count_if(comp.begin(), comp.end(), [](const Passage& p) { return p.role == Role::under; }));
    std::size_t n_arcs = std::max<std::size_t>(unders, 1);
    arcs.offset.push_back(arcs.count);
    arcs.per_component.push_back(n_arcs);
    std::vector<std::size_t> after(comp.size());
    std::size_t seen = 0;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      if (comp[i].role == Role::under) ++seen;
      after[i] = arcs.count + seen % n_arcs;
    }
    arcs.after.push_back(std::move(after));
    arcs.count += n_arcs;
  }
  return arcs;
}

std::size_t LongArcs::before(const GaussCode& g, PassageRef p) const {
  const auto& comp = g.component(p.component);
  std::size_t prev = p.position == 0 ? comp.size() - 1 : p.position - 1;
  return after[p.component][prev];
}

SemiArcs semi_arcs(const GaussCode& g) {
  SemiArcs s;
  for (const auto& comp : g.components()) {
    s.offset.push_back(s.count);
    std::size_t n = std::max<std::size_t>(comp.size(), 1);
    s.per_component.push_back(n);
    s.count += n;
  }
  return s;
}

std::size_t SemiArcs::before(const GaussCode& g, PassageRef p) const {
  std::size_t n = g.component(p.component).size();
  return offset[p.component] + (p.position == 0 ? n - 1 : p.position - 1);
}

}  // namespace welded
