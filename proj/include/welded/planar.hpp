#ifndef WELDED_PLANAR_HPP
#define WELDED_PLANAR_HPP

#include <array>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "welded/gauss.hpp"

namespace welded {

enum class VertexKind { classical, virtual_ };

/// A 4-valent vertex. `halfedges` lists the incident half-edge ids in
/// counterclockwise order. For a classical vertex the list starts at the
/// over-in half-edge, so slot 2 is over-out and the sign fixes the other two:
/// positive -> (over-in, under-in, over-out, under-out),
/// negative -> (over-in, under-out, over-out, under-in).
/// For a virtual vertex, slots i and i+2 are joined straight through.
struct Vertex {
  int id = 0;
  VertexKind kind = VertexKind::virtual_;
  Sign sign = Sign::positive;
  std::array<int, 4> halfedges{};
};

/// Directed edge from an out-half-edge to an in-half-edge. An edge with both
/// ends -1 is a closed loop without vertices (a crossing-free component).
struct Edge {
  int out_he = -1;
  int in_he = -1;

  bool is_loop() const noexcept { return out_he < 0; }
};

class PlanarError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One step of a component circuit: arrival at `vertex` through `in_slot`.
struct CircuitStep {
  std::size_t edge = 0;    ///< edge taken to arrive
  std::size_t vertex = 0;  ///< vertex index (not id)
  int in_slot = 0;
};

/// 4-valent graph with classical and virtual vertices. Each component is a
/// closed oriented circuit starting with the edge listed in `basepoints`.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  /// Validates; throws PlanarError.
  PlanarDiagram(std::vector<Vertex> vertices, std::vector<Edge> edges, std::vector<std::size_t> basepoints);

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& basepoints() const noexcept { return basepoints_; }
  std::size_t num_components() const noexcept { return basepoints_.size(); }
  std::size_t num_classical() const noexcept;
  std::size_t num_virtual() const noexcept;

  /// Steps of component `c` in traversal order from its basepoint edge.
  const std::vector<CircuitStep>& circuit(std::size_t c) const { return circuits_.at(c); }
  /// Component index of each edge.
  const std::vector<std::size_t>& edge_component() const noexcept { return edge_component_; }

  /// Vertex index and slot of a half-edge id.
  std::pair<std::size_t, int> locate(int he) const;
  /// Edge whose out end is the half-edge at (vertex, slot).
  std::size_t edge_leaving(std::size_t vertex, int slot) const;

 private:
  void build();

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> basepoints_;

  std::vector<std::pair<std::size_t, int>> he_location_;  // indexed by half-edge id
  std::vector<std::size_t> out_edge_of_he_;
  std::vector<std::vector<CircuitStep>> circuits_;
  std::vector<std::size_t> edge_component_;
};

/// Realizes a Gauss code: classical vertices sit on a line in id order (vertex
/// id = crossing id), edges are routed as stacked staples above the line, and
/// every staple intersection becomes a virtual vertex.
PlanarDiagram gauss_to_planar(const GaussCode& g);

/// Reads each component from its basepoint and records classical passages.
/// Crossing ids are the classical vertex ids.
GaussCode planar_to_gauss(const PlanarDiagram& p);

/// Reverses the listed components; classical vertex rotations and signs are
/// recomputed from the new edge directions.
PlanarDiagram reverse_components(const PlanarDiagram& p, const std::set<std::size_t>& comps);

std::string planar_to_json(const PlanarDiagram& p);
PlanarDiagram planar_from_json(const std::string& text);

}  // namespace welded

#endif  // WELDED_PLANAR_HPP
