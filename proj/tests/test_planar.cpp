#include <random>

#include "doctest.h"
#include "welded/gauss.hpp"
#include "welded/planar.hpp"
#include "welded/random_diagram.hpp"

using namespace welded;

TEST_CASE("gauss_to_planar: small cases") {
  auto unknot = gauss_to_planar(parse_gauss(""));
  CHECK(unknot.vertices().empty());
  CHECK(unknot.num_components() == 1);
  CHECK(unknot.edges().size() == 1);
  CHECK(planar_to_gauss(unknot) == parse_gauss(""));

  auto kink = gauss_to_planar(parse_gauss("O1+U1+"));
  CHECK(kink.num_classical() == 1);
  CHECK(planar_to_gauss(kink) == parse_gauss("O1+U1+"));

  auto vt = gauss_to_planar(parse_gauss("O1+O2+U1+U2+"));
  CHECK(vt.num_classical() == 2);
  CHECK(vt.num_virtual() >= 1);
  CHECK(planar_to_gauss(vt) == parse_gauss("O1+O2+U1+U2+"));
}

TEST_CASE("gauss_to_planar: vertex structure matches the code") {
  auto g = parse_gauss("O1+U2-O3+U1+O2-U3+");
  auto p = gauss_to_planar(g);
  auto crossings = g.crossings();
  for (const Vertex& v : p.vertices()) {
    if (v.kind != VertexKind::classical) continue;
    REQUIRE(crossings.count(v.id));
    CHECK(crossings.at(v.id).sign == v.sign);
  }
}

TEST_CASE("gauss_to_planar / planar_to_gauss round trip on random codes") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 300; ++i) {
    auto g = random_diagram(rng, 8, 3);
    auto p = gauss_to_planar(g);
    CHECK(p.num_classical() == g.num_crossings());
    CHECK(planar_to_gauss(p) == g);
    CHECK(planar_to_gauss(planar_from_json(planar_to_json(p))) == g);
  }
}

TEST_CASE("planar JSON shape") {
  auto text = planar_to_json(gauss_to_planar(parse_gauss("O1+U1+")));
  CHECK(text.find("\"vertices\"") != std::string::npos);
  CHECK(text.find("\"edges\"") != std::string::npos);
  CHECK(text.find("\"basepoints\"") != std::string::npos);
  CHECK(text.find("\"classical\"") != std::string::npos);
  CHECK_THROWS_AS(planar_from_json("{"), PlanarError);
  CHECK_THROWS_AS(planar_from_json("{\"vertices\":[]}"), PlanarError);
}

TEST_CASE("planar validation") {
  // One virtual vertex joining two loops straight through: slots 0->2, 1->3.
  Vertex v{1, VertexKind::virtual_, Sign::positive, {0, 1, 2, 3}};
  // Edges from out half-edges (2, 3) back to in half-edges (0, 1).
  CHECK_NOTHROW(PlanarDiagram({v}, {{2, 0}, {3, 1}}, {0, 1}));
  // Slots 0 and 2 both outgoing.
  CHECK_THROWS_AS(PlanarDiagram({v}, {{0, 1}, {2, 3}}, {0, 1}), PlanarError);
  // Half-edge used twice.
  CHECK_THROWS_AS(PlanarDiagram({v}, {{2, 0}, {2, 1}}, {0, 1}), PlanarError);
  // Half-edge id outside the vertex range.
  Vertex bad{1, VertexKind::virtual_, Sign::positive, {0, 1, 2, 9}};
  CHECK_THROWS_AS(PlanarDiagram({bad}, {{2, 0}, {9, 1}}, {0, 1}), PlanarError);
  // Two basepoints on one component.
  CHECK_THROWS_AS(PlanarDiagram({v}, {{2, 0}, {3, 1}}, {0, 0}), PlanarError);
}

TEST_CASE("reverse_components agrees with reverse_orientation") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    auto g = random_diagram(rng, 7, 3);
    std::set<std::size_t> comps;
    for (std::size_t c = 0; c < g.num_components(); ++c)
      if (rng() & 1U) comps.insert(c);
    auto from_planar = canonical(planar_to_gauss(reverse_components(gauss_to_planar(g), comps)));
    auto direct = reverse_orientation(g, comps);
    // Basepoints may differ after reversal, so compare cyclic rotations.
    REQUIRE(from_planar.num_components() == direct.num_components());
    CHECK(from_planar.num_crossings() == direct.num_crossings());
    CHECK(writhe(from_planar).total == writhe(direct).total);
    CHECK(writhe(from_planar).self == writhe(direct).self);
  }
}
