#include "welded/moves.hpp"

#include <algorithm>
#include <random>

#include "json.hpp"

namespace welded {

namespace {

struct KindName {
  MoveKind kind;
  const char* name;
};

constexpr KindName kKindNames[] = {
    {MoveKind::R1a_insert, "R1a_insert"}, {MoveKind::R1c_insert, "R1c_insert"}, {MoveKind::R1_delete, "R1_delete"},
    {MoveKind::R2c_insert, "R2c_insert"}, {MoveKind::R2d_insert, "R2d_insert"}, {MoveKind::R2_delete, "R2_delete"},
    {MoveKind::R3b, "R3b"},               {MoveKind::WeldedSwap, "WeldedSwap"}, {MoveKind::TwistSlide, "TwistSlide"},
};

using Comps = std::vector<Component>;

std::size_t succ(std::size_t i, std::size_t n) { return (i + 1) % n; }
std::size_t pred(std::size_t i, std::size_t n) { return (i + n - 1) % n; }

const Passage& at(const GaussCode& g, PassageRef r) { return g.component(r.component).at(r.position); }

PassageRef next_ref(const GaussCode& g, PassageRef r) { return {r.component, succ(r.position, g.component(r.component).size())}; }

bool has_pair(const GaussCode& g, PassageRef first) {
  return first.component < g.num_components() && g.component(first.component).size() >= 2 &&
         first.position < g.component(first.component).size();
}

void swap_pair(Comps& comps, PassageRef first) {
  auto& c = comps[first.component];
  std::swap(c[first.position], c[succ(first.position, c.size())]);
}

GaussCode remove_passages(const GaussCode& g, std::vector<PassageRef> refs) {
  Comps comps = g.components();
  std::sort(refs.begin(), refs.end(), [](PassageRef a, PassageRef b) {
    return a.component != b.component ? a.component < b.component : a.position > b.position;
  });
  for (auto r : refs) comps[r.component].erase(comps[r.component].begin() + static_cast<long>(r.position));
  return GaussCode(std::move(comps));
}

[[noreturn]] void not_applicable(const MoveSite& site, const std::string& why) {
  throw MoveError(to_string(site.kind) + " site not applicable: " + why);
}

void require_locations(const MoveSite& site, std::size_t n) {
  if (site.locations.size() != n) not_applicable(site, "expected " + std::to_string(n) + " locations");
}

int param(const MoveSite& site, const std::string& key) {
  auto it = site.params.find(key);
  return it == site.params.end() ? 0 : it->second;
}

// ---------------------------------------------------------------- R1

std::vector<MoveSite> r1_insert_sites(const GaussCode& g, MoveKind kind) {
  std::vector<MoveSite> out;
  for (std::size_t c = 0; c < g.num_components(); ++c) {
    std::size_t gaps = std::max<std::size_t>(g.component(c).size(), 1);
    for (std::size_t gap = 0; gap < gaps; ++gap)
      for (int order : {0, 1}) out.push_back({kind, {{c, gap}}, {{"order", order}}});
  }
  return out;
}

GaussCode r1_insert(const GaussCode& g, const MoveSite& site) {
  require_locations(site, 1);
  auto [c, gap] = site.locations[0];
  if (c >= g.num_components() || gap > g.component(c).size()) not_applicable(site, "gap out of range");
  Sign s = site.kind == MoveKind::R1a_insert ? Sign::positive : Sign::negative;
  int id = g.max_crossing_id() + 1;
  Passage o{id, Role::over, s}, u{id, Role::under, s};
  Comps comps = g.components();
  auto pos = comps[c].begin() + static_cast<long>(gap);
  if (param(site, "order") == 0)
    comps[c].insert(pos, {o, u});
  else
    comps[c].insert(pos, {u, o});
  return GaussCode(std::move(comps));
}

bool is_r1_pair(const GaussCode& g, PassageRef first) {
  if (!has_pair(g, first)) return false;
  return at(g, first).crossing == at(g, next_ref(g, first)).crossing;
}

std::vector<MoveSite> r1_delete_sites(const GaussCode& g) {
  std::vector<MoveSite> out;
  std::set<int> seen;
  for (std::size_t c = 0; c < g.num_components(); ++c)
    for (std::size_t i = 0; i < g.component(c).size(); ++i)
      if (is_r1_pair(g, {c, i}) && seen.insert(g.component(c)[i].crossing).second)
        out.push_back({MoveKind::R1_delete, {{c, i}}, {}});
  return out;
}

// ---------------------------------------------------------------- R2

std::vector<MoveSite> r2_insert_sites(const GaussCode& g, MoveKind kind) {
  std::vector<PassageRef> gaps;
  for (std::size_t c = 0; c < g.num_components(); ++c)
    for (std::size_t gap = 0; gap < std::max<std::size_t>(g.component(c).size(), 1); ++gap) gaps.push_back({c, gap});
  std::vector<MoveSite> out;
  for (auto a : gaps)
    for (auto b : gaps) out.push_back({kind, {a, b}, {}});
  return out;
}

GaussCode r2_insert(const GaussCode& g, const MoveSite& site) {
  require_locations(site, 2);
  auto a = site.locations[0], b = site.locations[1];
  for (auto r : {a, b})
    if (r.component >= g.num_components() || r.position > g.component(r.component).size()) not_applicable(site, "gap out of range");
  Sign first = site.kind == MoveKind::R2c_insert ? Sign::positive : Sign::negative;
  int ia = g.max_crossing_id() + 1, ib = ia + 1;
  std::vector<Passage> over_pair{{ia, Role::over, first}, {ib, Role::over, flip(first)}};
  std::vector<Passage> under_pair{{ib, Role::under, flip(first)}, {ia, Role::under, first}};
  Comps comps = g.components();
  auto insert = [&](PassageRef r, const std::vector<Passage>& ps) {
    comps[r.component].insert(comps[r.component].begin() + static_cast<long>(r.position), ps.begin(), ps.end());
  };
  if (a.component == b.component && a.position > b.position) {
    insert(a, over_pair);
    insert(b, under_pair);
  } else {
    insert(b, under_pair);
    insert(a, over_pair);
  }
  return GaussCode(std::move(comps));
}

bool is_r2_site(const GaussCode& g, PassageRef over_first, PassageRef under_first) {
  if (!has_pair(g, over_first) || !has_pair(g, under_first)) return false;
  const Passage& oa = at(g, over_first);
  const Passage& ob = at(g, next_ref(g, over_first));
  const Passage& ub = at(g, under_first);
  const Passage& ua = at(g, next_ref(g, under_first));
  return oa.role == Role::over && ob.role == Role::over && oa.crossing != ob.crossing && oa.sign != ob.sign &&
         ub.role == Role::under && ua.role == Role::under && ub.crossing == ob.crossing && ua.crossing == oa.crossing;
}

std::vector<MoveSite> r2_delete_sites(const GaussCode& g) {
  std::vector<MoveSite> out;
  std::set<std::pair<int, int>> seen;
  auto crossings = g.crossings();
  for (std::size_t c = 0; c < g.num_components(); ++c) {
    for (std::size_t i = 0; i < g.component(c).size(); ++i) {
      PassageRef of{c, i};
      if (!has_pair(g, of)) continue;
      const Passage& oa = at(g, of);
      const Passage& ob = at(g, next_ref(g, of));
      if (oa.role != Role::over || ob.role != Role::over) continue;
      PassageRef ub = crossings.at(ob.crossing).under;
      if (!is_r2_site(g, of, ub)) continue;
      if (seen.insert(std::minmax(oa.crossing, ob.crossing)).second) out.push_back({MoveKind::R2_delete, {of, ub}, {}});
    }
  }
  return out;
}

GaussCode r2_delete(const GaussCode& g, const MoveSite& site) {
  require_locations(site, 2);
  if (!is_r2_site(g, site.locations[0], site.locations[1])) not_applicable(site, "no bigon at the given passages");
  return remove_passages(g, {site.locations[0], next_ref(g, site.locations[0]), site.locations[1], next_ref(g, site.locations[1])});
}

// ---------------------------------------------------------------- R3b

// Strands of the triangle: top (two overs), middle (under then over or over
// then under), bottom (two unders). Each pair is given by its first passage.
bool is_r3b_site(const GaussCode& g, PassageRef top, PassageRef mid, PassageRef bot) {
  for (auto r : {top, mid, bot})
    if (!has_pair(g, r)) return false;
  const std::array<PassageRef, 3> firsts{top, mid, bot};
  std::array<std::array<Passage, 2>, 3> pairs{};
  for (std::size_t s = 0; s < 3; ++s) pairs[s] = {at(g, firsts[s]), at(g, next_ref(g, firsts[s]))};
  auto roles = [&](std::size_t s) {
    int overs = 0;
    for (const auto& p : pairs[s]) overs += p.role == Role::over;
    return overs;
  };
  if (roles(0) != 2 || roles(1) != 1 || roles(2) != 0) return false;
  auto crossing_on = [&](std::size_t s, Role r) {
    for (const auto& p : pairs[s])
      if (p.role == r) return p.crossing;
    return 0;
  };
  int z = crossing_on(1, Role::over);
  int x = crossing_on(1, Role::under);
  // x joins top and middle, z joins middle and bottom, y joins top and bottom.
  int y = pairs[0][0].crossing == x ? pairs[0][1].crossing : pairs[0][0].crossing;
  if (x == y || (pairs[0][0].crossing != x && pairs[0][1].crossing != x)) return false;
  bool bottom_ok = (pairs[2][0].crossing == y && pairs[2][1].crossing == z) || (pairs[2][0].crossing == z && pairs[2][1].crossing == y);
  if (!bottom_ok || z == x || z == y) return false;

  struct Corner {
    int crossing;
    std::size_t over_strand;
    std::size_t under_strand;
  };
  const Corner corners[3] = {{x, 0, 1}, {y, 0, 2}, {z, 1, 2}};
  auto is_first = [&](std::size_t s, int c) { return pairs[s][0].crossing == c; };
  auto crossings = g.crossings();
  int sigma = 0;
  for (const auto& k : corners) {
    bool over_first = is_first(k.over_strand, k.crossing);
    bool under_first = is_first(k.under_strand, k.crossing);
    if (over_first == under_first) return false;  // braid-like corner
    int s = to_int(crossings.at(k.crossing).sign) * (over_first ? -1 : 1);
    if (sigma != 0 && s != sigma) return false;
    sigma = s;
  }
  return true;
}

std::vector<MoveSite> r3b_sites(const GaussCode& g) {
  std::vector<MoveSite> out;
  auto crossings = g.crossings();
  auto neighbours = [&](PassageRef r) {
    std::size_t n = g.component(r.component).size();
    return std::array<PassageRef, 2>{PassageRef{r.component, r.position}, PassageRef{r.component, pred(r.position, n)}};
  };
  for (std::size_t c = 0; c < g.num_components(); ++c) {
    for (std::size_t i = 0; i < g.component(c).size(); ++i) {
      PassageRef top{c, i};
      if (!has_pair(g, top)) continue;
      const Passage& t0 = at(g, top);
      const Passage& t1 = at(g, next_ref(g, top));
      if (t0.role != Role::over || t1.role != Role::over) continue;
      for (int x : {t0.crossing, t1.crossing}) {
        int y = x == t0.crossing ? t1.crossing : t0.crossing;
        PassageRef ux = crossings.at(x).under;
        if (g.component(ux.component).size() < 2) continue;
        for (PassageRef mid : neighbours(ux)) {
          const Passage& m0 = at(g, mid);
          const Passage& m1 = at(g, next_ref(g, mid));
          const Passage& oz = m0.crossing == x ? m1 : m0;
          if (oz.role != Role::over || oz.crossing == x || oz.crossing == y) continue;
          PassageRef uy = crossings.at(y).under;
          if (g.component(uy.component).size() < 2) continue;
          for (PassageRef bot : neighbours(uy)) {
            MoveSite site{MoveKind::R3b, {top, mid, bot}, {}};
            if (is_r3b_site(g, top, mid, bot) && std::find(out.begin(), out.end(), site) == out.end()) out.push_back(site);
          }
        }
      }
    }
  }
  return out;
}

GaussCode r3b(const GaussCode& g, const MoveSite& site) {
  require_locations(site, 3);
  if (!is_r3b_site(g, site.locations[0], site.locations[1], site.locations[2])) not_applicable(site, "no cyclic triangle here");
  Comps comps = g.components();
  for (auto r : site.locations) swap_pair(comps, r);
  return GaussCode(std::move(comps));
}

// ---------------------------------------------------------------- welded swap

bool is_over_pair(const GaussCode& g, PassageRef first) {
  return has_pair(g, first) && at(g, first).role == Role::over && at(g, next_ref(g, first)).role == Role::over;
}

std::vector<MoveSite> welded_swap_sites(const GaussCode& g) {
  std::vector<MoveSite> out;
  for (std::size_t c = 0; c < g.num_components(); ++c) {
    std::size_t n = g.component(c).size();
    for (std::size_t i = 0; i < (n == 2 ? 1 : n); ++i)
      if (is_over_pair(g, {c, i})) out.push_back({MoveKind::WeldedSwap, {{c, i}}, {}});
  }
  return out;
}

// ---------------------------------------------------------------- twist slide

// Forward: the crossing t is followed on both of its strands by under-passages
// p and q beneath one strand segment (O_p, O_q adjacent) with equal signs.
// Backward: the mirror situation with p, q preceding t.
bool is_twist_slide(const GaussCode& g, PassageRef over_first, PassageRef under_first, bool backward) {
  if (!has_pair(g, over_first) || !has_pair(g, under_first)) return false;
  const auto& a0 = at(g, over_first);
  const auto& a1 = at(g, next_ref(g, over_first));
  const auto& b0 = at(g, under_first);
  const auto& b1 = at(g, next_ref(g, under_first));
  const Passage& ot = backward ? a1 : a0;
  const Passage& up = backward ? a0 : a1;
  const Passage& ut = backward ? b1 : b0;
  const Passage& uq = backward ? b0 : b1;
  if (ot.role != Role::over || ut.role != Role::under || ot.crossing != ut.crossing) return false;
  if (up.role != Role::under || uq.role != Role::under) return false;
  if (up.crossing == uq.crossing || up.sign != uq.sign) return false;
  if (up.crossing == ot.crossing || uq.crossing == ot.crossing) return false;
  auto crossings = g.crossings();
  PassageRef op = crossings.at(up.crossing).over;
  std::size_t n = g.component(op.component).size();
  if (n < 2) return false;
  const auto& comp = g.component(op.component);
  auto is_oq = [&](const Passage& x) { return x.crossing == uq.crossing && x.role == Role::over; };
  return is_oq(comp[succ(op.position, n)]) || is_oq(comp[pred(op.position, n)]);
}

std::vector<MoveSite> twist_slide_sites(const GaussCode& g) {
  std::vector<MoveSite> out;
  for (const auto& [id, info] : g.crossings()) {
    std::size_t na = g.component(info.over.component).size();
    std::size_t nb = g.component(info.under.component).size();
    if (na < 2 || nb < 2) continue;
    PassageRef fwd_a = info.over, fwd_b = info.under;
    if (is_twist_slide(g, fwd_a, fwd_b, false)) out.push_back({MoveKind::TwistSlide, {fwd_a, fwd_b}, {{"direction", 0}}});
    PassageRef bwd_a{info.over.component, pred(info.over.position, na)};
    PassageRef bwd_b{info.under.component, pred(info.under.position, nb)};
    if (is_twist_slide(g, bwd_a, bwd_b, true)) out.push_back({MoveKind::TwistSlide, {bwd_a, bwd_b}, {{"direction", 1}}});
  }
  return out;
}

GaussCode twist_slide(const GaussCode& g, const MoveSite& site) {
  require_locations(site, 2);
  if (!is_twist_slide(g, site.locations[0], site.locations[1], param(site, "direction") != 0))
    not_applicable(site, "no crossing pair to slide");
  Comps comps = g.components();
  swap_pair(comps, site.locations[0]);
  swap_pair(comps, site.locations[1]);
  return GaussCode(std::move(comps));
}

}  // namespace

std::string to_string(MoveKind k) {
  for (const auto& kn : kKindNames)
    if (kn.kind == k) return kn.name;
  return "unknown";
}

std::optional<MoveKind> move_kind_from_string(const std::string& s) {
  for (const auto& kn : kKindNames)
    if (s == kn.name) return kn.kind;
  return std::nullopt;
}

std::vector<MoveSite> enumerate_sites(const GaussCode& g, MoveKind kind) {
  switch (kind) {
    case MoveKind::R1a_insert:
    case MoveKind::R1c_insert: return r1_insert_sites(g, kind);
    case MoveKind::R1_delete: return r1_delete_sites(g);
    case MoveKind::R2c_insert:
    case MoveKind::R2d_insert: return r2_insert_sites(g, kind);
    case MoveKind::R2_delete: return r2_delete_sites(g);
    case MoveKind::R3b: return r3b_sites(g);
    case MoveKind::WeldedSwap: return welded_swap_sites(g);
    case MoveKind::TwistSlide: return twist_slide_sites(g);
  }
  return {};
}

GaussCode apply(const GaussCode& g, const MoveSite& site) {
  switch (site.kind) {
    case MoveKind::R1a_insert:
    case MoveKind::R1c_insert: return r1_insert(g, site);
    case MoveKind::R1_delete:
      require_locations(site, 1);
      if (!is_r1_pair(g, site.locations[0])) not_applicable(site, "no kink at the given passage");
      return remove_passages(g, {site.locations[0], next_ref(g, site.locations[0])});
    case MoveKind::R2c_insert:
    case MoveKind::R2d_insert: return r2_insert(g, site);
    case MoveKind::R2_delete: return r2_delete(g, site);
    case MoveKind::R3b: return r3b(g, site);
    case MoveKind::WeldedSwap: {
      require_locations(site, 1);
      if (!is_over_pair(g, site.locations[0])) not_applicable(site, "passages are not two adjacent overs");
      Comps comps = g.components();
      swap_pair(comps, site.locations[0]);
      return GaussCode(std::move(comps));
    }
    case MoveKind::TwistSlide: return twist_slide(g, site);
  }
  throw MoveError("unknown move kind");
}

WalkResult random_walk(const GaussCode& g, std::size_t steps, std::uint64_t seed, const std::set<MoveKind>& kinds) {
  std::mt19937_64 rng(seed);
  WalkResult result{g, {}};
  for (std::size_t step = 0; step < steps; ++step) {
    std::vector<std::vector<MoveSite>> candidates;
    for (MoveKind k : kAllMoveKinds) {
      if (!kinds.count(k)) continue;
      auto sites = enumerate_sites(result.code, k);
      if (!sites.empty()) candidates.push_back(std::move(sites));
    }
    if (candidates.empty()) {
      result.log.push_back({step, std::nullopt});
      continue;
    }
    std::uniform_int_distribution<std::size_t> pick_kind(0, candidates.size() - 1);
    const auto& sites = candidates[pick_kind(rng)];
    std::uniform_int_distribution<std::size_t> pick_site(0, sites.size() - 1);
    const MoveSite& site = sites[pick_site(rng)];
    result.code = apply(result.code, site);
    result.log.push_back({step, site});
  }
  return result;
}

GaussCode replay(const GaussCode& g, const std::vector<WalkEntry>& log) {
  GaussCode out = g;
  for (const auto& e : log)
    if (e.site) out = apply(out, *e.site);
  return out;
}

std::string site_to_json(const MoveSite& site) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(site.kind);
  j["component"] = site.locations.empty() ? 0 : site.locations.front().component;
  j["positions"] = nlohmann::ordered_json::array();
  nlohmann::ordered_json comps = nlohmann::ordered_json::array();
  for (auto r : site.locations) {
    j["positions"].push_back(r.position);
    comps.push_back(r.component);
  }
  nlohmann::ordered_json params;
  params["components"] = std::move(comps);
  for (const auto& [k, v] : site.params) params[k] = v;
  j["params"] = std::move(params);
  return j.dump();
}

MoveSite site_from_json(const std::string& line) {
  try {
    auto j = nlohmann::json::parse(line);
    MoveSite site;
    auto kind = move_kind_from_string(j.at("kind").get<std::string>());
    if (!kind) throw MoveError("unknown move kind '" + j.at("kind").get<std::string>() + "'");
    site.kind = *kind;
    auto positions = j.at("positions").get<std::vector<std::size_t>>();
    const auto& params = j.at("params");
    std::vector<std::size_t> comps;
    if (params.contains("components"))
      comps = params.at("components").get<std::vector<std::size_t>>();
    else
      comps.assign(positions.size(), j.at("component").get<std::size_t>());
    if (comps.size() != positions.size()) throw MoveError("components and positions differ in length");
    for (std::size_t i = 0; i < positions.size(); ++i) site.locations.push_back({comps[i], positions[i]});
    for (const auto& [k, v] : params.items())
      if (k != "components") site.params[k] = v.get<int>();
    return site;
  } catch (const nlohmann::json::exception& e) {
    throw MoveError(std::string("malformed move JSON: ") + e.what());
  }
}

}  // namespace welded
