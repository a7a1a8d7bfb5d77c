#include "welded/parallelize.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace welded {

namespace {

struct Vec {
  double x = 0;
  double y = 0;
};

Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y}; }
Vec operator-(Vec a, Vec b) { return {a.x - b.x, a.y - b.y}; }
Vec operator*(double k, Vec a) { return {k * a.x, k * a.y}; }
double cross(Vec a, Vec b) { return a.x * b.y - a.y * b.x; }

Vec slot_direction(int slot) {
  static constexpr Vec dirs[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return dirs[slot % 4];
}

/// Right-hand normal of a direction.
Vec right_of(Vec d) { return {d.y, -d.x}; }

constexpr double kArm = 2.0;
constexpr double kOffset = 0.25;

/// A strand copy crossing a local disk.
struct Segment {
  Vec from;
  Vec to;
  Vec dir() const { return to - from; }
};

struct Event {
  double param = 0;
  int in_he = 0;
  int out_he = 0;
};

/// Accumulates the vertices of the parallel diagram.
class Builder {
 public:
  /// Creates a vertex where `a` meets `b`. `over` is 0 (a over), 1 (b over) or
  /// -1 for a virtual crossing. Returns the events on a and b.
  std::pair<Event, Event> cross_segments(const Segment& a, const Segment& b, int over, double ta, double tb) {
    Vertex v;
    v.id = static_cast<int>(vertices_.size()) + 1;
    int a_in = next_he_++, a_out = next_he_++, b_in = next_he_++, b_out = next_he_++;
    Vec da = a.dir(), db = b.dir();
    struct Arm {
      double angle;
      int he;
    };
    std::array<Arm, 4> arms{{{std::atan2(da.y, da.x), a_out},
                             {std::atan2(-da.y, -da.x), a_in},
                             {std::atan2(db.y, db.x), b_out},
                             {std::atan2(-db.y, -db.x), b_in}}};
    std::sort(arms.begin(), arms.end(), [](const Arm& l, const Arm& r) { return l.angle < r.angle; });
    std::array<int, 4> ccw{};
    for (std::size_t i = 0; i < 4; ++i) ccw[i] = arms[i].he;
    if (over < 0) {
      v.kind = VertexKind::virtual_;
      v.halfedges = ccw;
    } else {
      v.kind = VertexKind::classical;
      Vec d_over = over == 0 ? da : db;
      Vec d_under = over == 0 ? db : da;
      v.sign = cross(d_over, d_under) > 0 ? Sign::positive : Sign::negative;
      int over_in = over == 0 ? a_in : b_in;
      int under_in = over == 0 ? b_in : a_in;
      auto start = static_cast<std::size_t>(std::find(ccw.begin(), ccw.end(), over_in) - ccw.begin());
      for (std::size_t s = 0; s < 4; ++s) v.halfedges[s] = ccw[(start + s) % 4];
      bool rotation_positive = v.halfedges[1] == under_in;
      if (rotation_positive != (v.sign == Sign::positive))
        throw std::logic_error("parallelize: crossing rotation disagrees with its sign");
    }
    vertices_.push_back(v);
    return {Event{ta, a_in, a_out}, Event{tb, b_in, b_out}};
  }

  const Vertex& last() const { return vertices_.back(); }
  std::vector<Vertex> take() { return std::move(vertices_); }

 private:
  std::vector<Vertex> vertices_;
  int next_he_ = 0;
};

/// Intersection parameters (in [0,1] along each segment), if any.
bool intersect(const Segment& a, const Segment& b, double& ta, double& tb) {
  Vec da = a.dir(), db = b.dir();
  double den = cross(da, db);
  if (std::abs(den) < 1e-12) return false;
  Vec w = b.from - a.from;
  ta = cross(w, db) / den;
  tb = cross(w, da) / den;
  return ta > 0 && ta < 1 && tb > 0 && tb < 1;
}

struct CopyKey {
  std::size_t vertex;
  int in_slot;
  Side side;
  auto operator<=>(const CopyKey&) const = default;
};

}  // namespace

ParallelDiagram phi_plus(const PlanarDiagram& d) {
  std::vector<char> he_is_in(4 * d.vertices().size(), 0);
  for (const Edge& e : d.edges())
    if (!e.is_loop()) he_is_in[static_cast<std::size_t>(e.in_he)] = 1;

  Builder builder;
  std::map<CopyKey, std::vector<Event>> events;

  for (std::size_t vi = 0; vi < d.vertices().size(); ++vi) {
    const Vertex& v = d.vertices()[vi];
    // The two strands through v, identified by their in-slot.
    std::array<int, 2> in_slots{};
    for (int k = 0; k < 2; ++k)
      in_slots[static_cast<std::size_t>(k)] = he_is_in[static_cast<std::size_t>(v.halfedges[static_cast<std::size_t>(k)])] ? k : k + 2;
    // For a classical vertex strand 0 is the over strand (in-slot 0).
    std::array<Vec, 2> dirs{};
    std::array<std::array<Segment, 2>, 2> copies{};  // [strand][side]
    for (std::size_t k = 0; k < 2; ++k) {
      Vec dir = slot_direction(in_slots[k] + 2);
      dirs[k] = dir;
      for (Side side : {Side::R, Side::L}) {
        Vec off = (side == Side::R ? kOffset : -kOffset) * right_of(dir);
        copies[k][side == Side::R ? 0 : 1] = Segment{off - kArm * dir, off + kArm * dir};
      }
    }
    std::map<CopyKey, std::vector<Event>> local;
    for (std::size_t s0 = 0; s0 < 2; ++s0) {
      for (std::size_t s1 = 0; s1 < 2; ++s1) {
        double t0 = 0, t1 = 0;
        if (!intersect(copies[0][s0], copies[1][s1], t0, t1))
          throw std::logic_error("parallelize: cable copies do not meet");
        // Classical only where the right copy of the over strand is involved.
        int over = (v.kind == VertexKind::classical && s0 == 0) ? 0 : -1;
        auto [e0, e1] = builder.cross_segments(copies[0][s0], copies[1][s1], over, t0, t1);
        local[{vi, in_slots[0], s0 == 0 ? Side::R : Side::L}].push_back(e0);
        local[{vi, in_slots[1], s1 == 0 ? Side::R : Side::L}].push_back(e1);
      }
    }
    for (auto& [key, evs] : local)
      std::sort(evs.begin(), evs.end(), [](const Event& a, const Event& b) { return a.param < b.param; });

    if (v.kind == VertexKind::classical) {
      // Twist on the under strand, right copy over: after the crossing for a
      // positive vertex, before it for a negative one.
      Vec dir = dirs[1];
      Vec r = kOffset * right_of(dir);
      bool positive = v.sign == Sign::positive;
      Vec base = (positive ? kArm : -kArm - 2.0) * dir;
      std::array<std::vector<Event>, 2> twist;  // [R, L]
      for (int stage = 0; stage < 2; ++stage) {
        Vec p0 = base + static_cast<double>(stage) * dir;
        Vec p1 = p0 + dir;
        double sgn = stage == 0 ? 1.0 : -1.0;
        Segment right_copy{p0 + sgn * r, p1 - sgn * r};
        Segment left_copy{p0 - sgn * r, p1 + sgn * r};
        double tr = 0, tl = 0;
        if (!intersect(right_copy, left_copy, tr, tl)) throw std::logic_error("parallelize: twist strands do not meet");
        bool classical = (stage == 0) == positive;  // minus1v for positive, v1 for negative
        auto [er, el] = builder.cross_segments(right_copy, left_copy, classical ? 0 : -1, tr, tl);
        if (classical && builder.last().sign == v.sign)
          throw std::logic_error("parallelize: twist sign must oppose the crossing sign");
        twist[0].push_back(er);
        twist[1].push_back(el);
      }
      for (Side side : {Side::R, Side::L}) {
        auto& evs = local[{vi, in_slots[1], side}];
        const auto& tw = twist[side == Side::R ? 0 : 1];
        evs.insert(positive ? evs.end() : evs.begin(), tw.begin(), tw.end());
      }
    }
    for (auto& [key, evs] : local) events[key] = std::move(evs);
  }

  std::vector<Edge> edges;
  std::vector<std::size_t> basepoints;
  std::vector<CableLabel> labels;
  for (std::size_t c = 0; c < d.num_components(); ++c) {
    for (Side side : {Side::R, Side::L}) {
      std::vector<Event> chain;
      for (const auto& step : d.circuit(c)) {
        const auto& evs = events.at({step.vertex, step.in_slot, side});
        chain.insert(chain.end(), evs.begin(), evs.end());
      }
      labels.push_back({c, side});
      if (chain.empty()) {
        basepoints.push_back(edges.size());
        edges.push_back(Edge{});
        continue;
      }
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) edges.push_back(Edge{chain[i].out_he, chain[i + 1].in_he});
      basepoints.push_back(edges.size());
      edges.push_back(Edge{chain.back().out_he, chain.front().in_he});
    }
  }
  return ParallelDiagram{PlanarDiagram(builder.take(), std::move(edges), std::move(basepoints)), std::move(labels)};
}

ParallelDiagram phi_minus(const PlanarDiagram& d) {
  ParallelDiagram p = phi_plus(d);
  auto left = components_on_side(p, Side::L);
  p.diagram = reverse_components(p.diagram, std::set<std::size_t>(left.begin(), left.end()));
  return p;
}

ParallelDiagram parallelize(const PlanarDiagram& d, Orientation o) {
  return o == Orientation::parallel ? phi_plus(d) : phi_minus(d);
}

GaussCode parallel_gauss(const ParallelDiagram& p) { return canonical(planar_to_gauss(p.diagram)); }

GaussCode parallel_gauss(const GaussCode& g, Orientation o) { return parallel_gauss(parallelize(gauss_to_planar(g), o)); }

std::vector<std::size_t> components_on_side(const ParallelDiagram& p, Side side) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.labels.size(); ++i)
    if (p.labels[i].side == side) out.push_back(i);
  return out;
}

namespace {

GaussCode keep_side(const ParallelDiagram& p, Side side) {
  if (p.labels.size() != p.diagram.num_components())
    throw std::invalid_argument("parallel diagram is missing cable labels");
  auto keep = components_on_side(p, side);
  return delete_components(planar_to_gauss(p.diagram), std::set<std::size_t>(keep.begin(), keep.end()));
}

}  // namespace

GaussCode subdiagram_main(const ParallelDiagram& p) { return keep_side(p, Side::R); }

GaussCode subdiagram_secondary(const ParallelDiagram& p) { return keep_side(p, Side::L); }

std::string labels_to_json(const std::vector<CableLabel>& labels) {
  nlohmann::ordered_json j;
  j["components"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < labels.size(); ++i)
    j["components"].push_back({{"index", i}, {"origin", labels[i].origin}, {"side", labels[i].side == Side::R ? "R" : "L"}});
  return j.dump();
}

}  // namespace welded
