#include "welded/planar.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <unordered_set>

#include "json.hpp"

namespace welded {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

bool slot_is_in(const Vertex& v, int slot) {
  if (slot == 0) return true;
  if (slot == 2) return false;
  bool under_in_at_1 = v.sign == Sign::positive;
  return (slot == 1) == under_in_at_1;
}

}  // namespace

PlanarDiagram::PlanarDiagram(std::vector<Vertex> vertices, std::vector<Edge> edges,
                             std::vector<std::size_t> basepoints)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), basepoints_(std::move(basepoints)) {
  build();
}

std::size_t PlanarDiagram::num_classical() const noexcept {
  return static_cast<std::size_t>(std::count_if(vertices_.begin(), vertices_.end(),
                                                [](const Vertex& v) { return v.kind == VertexKind::classical; }));
}

std::size_t PlanarDiagram::num_virtual() const noexcept { return vertices_.size() - num_classical(); }

std::pair<std::size_t, int> PlanarDiagram::locate(int he) const {
  if (he < 0 || static_cast<std::size_t>(he) >= he_location_.size()) throw PlanarError("unknown half-edge " + std::to_string(he));
  return he_location_[static_cast<std::size_t>(he)];
}

std::size_t PlanarDiagram::edge_leaving(std::size_t vertex, int slot) const {
  return out_edge_of_he_[static_cast<std::size_t>(vertices_[vertex].halfedges[static_cast<std::size_t>(slot)])];
}

void PlanarDiagram::build() {
  const std::size_t n_he = 4 * vertices_.size();
  he_location_.assign(n_he, {npos, -1});
  std::unordered_set<int> ids;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (!ids.insert(vertices_[v].id).second) throw PlanarError("duplicate vertex id " + std::to_string(vertices_[v].id));
    for (int s = 0; s < 4; ++s) {
      int he = vertices_[v].halfedges[static_cast<std::size_t>(s)];
      if (he < 0 || static_cast<std::size_t>(he) >= n_he)
        throw PlanarError("half-edge id " + std::to_string(he) + " outside [0, 4*#vertices)");
      auto& loc = he_location_[static_cast<std::size_t>(he)];
      if (loc.first != npos) throw PlanarError("half-edge " + std::to_string(he) + " listed twice");
      loc = {v, s};
    }
  }

  // 0 = unused, 1 = in end of an edge, 2 = out end
  std::vector<int> usage(n_he, 0);
  out_edge_of_he_.assign(n_he, npos);
  std::vector<std::size_t> in_edge_of_he(n_he, npos);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.is_loop()) {
      if (ed.in_he >= 0) throw PlanarError("edge " + std::to_string(e) + " has only one end");
      continue;
    }
    for (int he : {ed.out_he, ed.in_he}) {
      if (he < 0 || static_cast<std::size_t>(he) >= n_he) throw PlanarError("edge " + std::to_string(e) + " references unknown half-edge");
      if (usage[static_cast<std::size_t>(he)] != 0) throw PlanarError("half-edge " + std::to_string(he) + " belongs to two edges");
    }
    usage[static_cast<std::size_t>(ed.out_he)] = 2;
    usage[static_cast<std::size_t>(ed.in_he)] = 1;
    out_edge_of_he_[static_cast<std::size_t>(ed.out_he)] = e;
    in_edge_of_he[static_cast<std::size_t>(ed.in_he)] = e;
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const Vertex& vx = vertices_[v];
    for (int s = 0; s < 4; ++s) {
      int u = usage[static_cast<std::size_t>(vx.halfedges[static_cast<std::size_t>(s)])];
      if (u == 0) throw PlanarError("half-edge " + std::to_string(vx.halfedges[static_cast<std::size_t>(s)]) + " belongs to no edge");
      if (vx.kind == VertexKind::classical) {
        if ((u == 1) != slot_is_in(vx, s))
          throw PlanarError("edge direction disagrees with the rotation of classical vertex " + std::to_string(vx.id));
      } else if (s < 2) {
        int opposite = usage[static_cast<std::size_t>(vx.halfedges[static_cast<std::size_t>(s + 2)])];
        if (u == opposite) throw PlanarError("virtual vertex " + std::to_string(vx.id) + " has a strand without a direction");
      }
    }
  }

  circuits_.clear();
  edge_component_.assign(edges_.size(), npos);
  for (std::size_t c = 0; c < basepoints_.size(); ++c) {
    std::size_t start = basepoints_[c];
    if (start >= edges_.size()) throw PlanarError("basepoint edge out of range");
    std::vector<CircuitStep> steps;
    std::size_t e = start;
    do {
      if (edge_component_[e] != npos) throw PlanarError("two basepoints on one circuit");
      edge_component_[e] = c;
      if (edges_[e].is_loop()) break;
      auto [v, s] = he_location_[static_cast<std::size_t>(edges_[e].in_he)];
      steps.push_back({e, v, s});
      e = out_edge_of_he_[static_cast<std::size_t>(vertices_[v].halfedges[static_cast<std::size_t>((s + 2) % 4)])];
      if (e == npos) throw PlanarError("circuit leaves through an unused half-edge");
    } while (e != start);
    circuits_.push_back(std::move(steps));
  }
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edge_component_[e] == npos) throw PlanarError("edge " + std::to_string(e) + " lies on no basepointed circuit");
}

// ---------------------------------------------------------------------------
// Routing

namespace {

int out_slot(const Passage& p) {
  if (p.role == Role::over) return 2;
  return p.sign == Sign::positive ? 3 : 1;
}

int in_slot(const Passage& p) {
  if (p.role == Role::over) return 0;
  return p.sign == Sign::positive ? 1 : 3;
}

struct Staple {
  long x_from = 0;
  long x_to = 0;
  long height = 0;
  std::size_t component = 0;
  bool closes_component = false;  // ends at the component's first passage
};

struct Hit {
  double param = 0;
  std::size_t vertex = 0;
  int in_he = 0;
  int out_he = 0;
};

int slot_of_direction(long dx, long dy) {
  if (dx > 0) return 0;
  if (dy > 0) return 1;
  if (dx < 0) return 2;
  return 3;
}

}  // namespace

PlanarDiagram gauss_to_planar(const GaussCode& g) {
  const auto crossings = g.crossings();
  std::vector<Vertex> vertices;
  std::map<int, std::size_t> index_of;
  for (const auto& [id, info] : crossings) {
    std::size_t k = vertices.size();
    index_of[id] = k;
    Vertex v;
    v.id = id;
    v.kind = VertexKind::classical;
    v.sign = info.sign;
    for (int s = 0; s < 4; ++s) v.halfedges[static_cast<std::size_t>(s)] = static_cast<int>(4 * k) + s;
    vertices.push_back(v);
  }
  // Each vertex gadget bends its four arms upward; the CCW rotation read from
  // the right gives the left-to-right port order 3, 2, 1, 0.
  auto port_x = [&](int crossing, int slot) { return static_cast<long>(4 * index_of.at(crossing)) + (3 - slot); };
  auto he_of = [&](int crossing, int slot) { return static_cast<int>(4 * index_of.at(crossing)) + slot; };

  std::vector<Staple> staples;
  std::vector<std::pair<int, int>> staple_ends;  // (out he, in he)
  for (std::size_t c = 0; c < g.num_components(); ++c) {
    const auto& comp = g.component(c);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Passage& a = comp[i];
      const Passage& b = comp[(i + 1) % comp.size()];
      Staple st;
      st.x_from = port_x(a.crossing, out_slot(a));
      st.x_to = port_x(b.crossing, in_slot(b));
      st.component = c;
      st.closes_component = i + 1 == comp.size();
      staples.push_back(st);
      staple_ends.emplace_back(he_of(a.crossing, out_slot(a)), he_of(b.crossing, in_slot(b)));
    }
  }
  std::vector<std::size_t> order(staples.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::labs(staples[a].x_to - staples[a].x_from) < std::labs(staples[b].x_to - staples[b].x_from);
  });
  for (std::size_t r = 0; r < order.size(); ++r) staples[order[r]].height = static_cast<long>(r) + 1;

  int next_he = static_cast<int>(4 * vertices.size());
  int next_id = g.max_crossing_id() + 1;
  std::vector<std::vector<Hit>> hits(staples.size());
  for (std::size_t e = 0; e < staples.size(); ++e) {
    for (std::size_t f = 0; f < staples.size(); ++f) {
      const Staple& lo = staples[e];
      const Staple& hi = staples[f];
      if (lo.height >= hi.height) continue;
      long left = std::min(lo.x_from, lo.x_to);
      long right = std::max(lo.x_from, lo.x_to);
      for (bool rising : {true, false}) {
        long x = rising ? hi.x_from : hi.x_to;
        if (x <= left || x >= right) continue;
        long hdx = lo.x_to > lo.x_from ? 1 : -1;
        long vdy = rising ? 1 : -1;
        Vertex v;
        v.id = next_id++;
        v.kind = VertexKind::virtual_;
        int lo_in = next_he++, lo_out = next_he++, hi_in = next_he++, hi_out = next_he++;
        v.halfedges[static_cast<std::size_t>(slot_of_direction(hdx, 0))] = lo_out;
        v.halfedges[static_cast<std::size_t>(slot_of_direction(-hdx, 0))] = lo_in;
        v.halfedges[static_cast<std::size_t>(slot_of_direction(0, vdy))] = hi_out;
        v.halfedges[static_cast<std::size_t>(slot_of_direction(0, -vdy))] = hi_in;
        std::size_t vi = vertices.size();
        vertices.push_back(v);
        double lo_param = static_cast<double>(lo.height + std::labs(x - lo.x_from));
        double hi_param = rising ? static_cast<double>(lo.height)
                                 : static_cast<double>(hi.height + std::labs(hi.x_to - hi.x_from) + (hi.height - lo.height));
        hits[e].push_back({lo_param, vi, lo_in, lo_out});
        hits[f].push_back({hi_param, vi, hi_in, hi_out});
      }
    }
  }

  std::vector<Edge> edges;
  std::vector<std::size_t> basepoints(g.num_components(), npos);
  for (std::size_t c = 0; c < g.num_components(); ++c) {
    if (g.component(c).empty()) {
      basepoints[c] = edges.size();
      edges.push_back(Edge{});
    }
  }
  for (std::size_t e = 0; e < staples.size(); ++e) {
    auto& hs = hits[e];
    std::sort(hs.begin(), hs.end(), [](const Hit& a, const Hit& b) { return a.param < b.param; });
    int from = staple_ends[e].first;
    for (const Hit& h : hs) {
      edges.push_back(Edge{from, h.in_he});
      from = h.out_he;
    }
    if (staples[e].closes_component) basepoints[staples[e].component] = edges.size();
    edges.push_back(Edge{from, staple_ends[e].second});
  }
  return PlanarDiagram(std::move(vertices), std::move(edges), std::move(basepoints));
}

GaussCode planar_to_gauss(const PlanarDiagram& p) {
  std::vector<Component> comps;
  for (std::size_t c = 0; c < p.num_components(); ++c) {
    Component comp;
    for (const auto& step : p.circuit(c)) {
      const Vertex& v = p.vertices()[step.vertex];
      if (v.kind != VertexKind::classical) continue;
      bool over = step.in_slot == 0 || step.in_slot == 2;
      comp.push_back(Passage{v.id, over ? Role::over : Role::under, v.sign});
    }
    comps.push_back(std::move(comp));
  }
  try {
    return GaussCode(std::move(comps));
  } catch (const GaussError& e) {
    throw PlanarError(std::string("inconsistent circuit structure: ") + e.what());
  }
}

PlanarDiagram reverse_components(const PlanarDiagram& p, const std::set<std::size_t>& comps) {
  std::vector<Edge> edges = p.edges();
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (comps.count(p.edge_component()[e]) && !edges[e].is_loop()) std::swap(edges[e].out_he, edges[e].in_he);

  std::vector<char> is_in(4 * p.vertices().size(), 0);
  for (const Edge& e : edges)
    if (!e.is_loop()) is_in[static_cast<std::size_t>(e.in_he)] = 1;

  std::vector<Vertex> vertices = p.vertices();
  for (Vertex& v : vertices) {
    if (v.kind != VertexKind::classical) continue;
    auto h = v.halfedges;
    int shift = is_in[static_cast<std::size_t>(h[0])] ? 0 : 2;
    for (int s = 0; s < 4; ++s) v.halfedges[static_cast<std::size_t>(s)] = h[static_cast<std::size_t>((s + shift) % 4)];
    v.sign = is_in[static_cast<std::size_t>(v.halfedges[1])] ? Sign::positive : Sign::negative;
  }
  return PlanarDiagram(std::move(vertices), std::move(edges), p.basepoints());
}

std::string planar_to_json(const PlanarDiagram& p) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const Vertex& v : p.vertices()) {
    nlohmann::ordered_json jv;
    jv["id"] = v.id;
    jv["kind"] = v.kind == VertexKind::classical ? "classical" : "virtual";
    if (v.kind == VertexKind::classical) jv["sign"] = to_int(v.sign);
    jv["halfedges"] = v.halfedges;
    j["vertices"].push_back(std::move(jv));
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : p.edges()) j["edges"].push_back({e.out_he, e.in_he});
  j["basepoints"] = p.basepoints();
  return j.dump();
}

PlanarDiagram planar_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    std::vector<Vertex> vertices;
    for (const auto& jv : j.at("vertices")) {
      Vertex v;
      v.id = jv.at("id").get<int>();
      std::string kind = jv.at("kind").get<std::string>();
      if (kind == "classical") {
        v.kind = VertexKind::classical;
        int s = jv.at("sign").get<int>();
        if (s != 1 && s != -1) throw PlanarError("sign must be +1 or -1");
        v.sign = sign_of(s);
      } else if (kind == "virtual") {
        v.kind = VertexKind::virtual_;
      } else {
        throw PlanarError("unknown vertex kind '" + kind + "'");
      }
      v.halfedges = jv.at("halfedges").get<std::array<int, 4>>();
      vertices.push_back(v);
    }
    std::vector<Edge> edges;
    for (const auto& je : j.at("edges")) {
      auto pair = je.get<std::array<int, 2>>();
      edges.push_back(Edge{pair[0], pair[1]});
    }
    auto basepoints = j.at("basepoints").get<std::vector<std::size_t>>();
    return PlanarDiagram(std::move(vertices), std::move(edges), std::move(basepoints));
  } catch (const nlohmann::json::exception& e) {
    throw PlanarError(std::string("malformed planar diagram JSON: ") + e.what());
  }
}

}  // namespace welded
