#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "welded/coloring.hpp"
#include "welded/moves.hpp"
#include "welded/random_diagram.hpp"

using namespace welded;

namespace {

const char* const kTrefoil = "O1+U2+O3+U1+O2+U3+";

oracle::Table table_of(const FiniteQuandle& q) { return oracle::Table{q.table()}; }

}  // namespace

TEST_CASE("reference counts") {
  auto r3 = quandle_from_name("R3");
  CHECK(count_colorings(parse_gauss(""), r3) == 3);
  CHECK(count_colorings(parse_gauss(kTrefoil), r3) == 9);
  CHECK(count_colorings(parse_gauss("O1+O2+U1+U2+"), r3) == 3);
  CHECK(count_colorings(parse_gauss("O1+U1+"), r3) == 3);
  CHECK(count_colorings(parse_gauss("|"), r3) == 9);
  // Oracle agreement on the same inputs: 27 assignments for the trefoil.
  CHECK(oracle::count_colorings(parse_gauss(kTrefoil), oracle::dihedral(3)) == 9);
  CHECK(oracle::count_colorings(parse_gauss("O1+O2+U1+U2+"), oracle::dihedral(3)) == 3);
  // Figure-eight knot: 5-colorable, not 3-colorable.
  auto fig8 = parse_gauss("O1-U2+O3-U4+O2+U1-O4+U3-");
  CHECK(count_colorings(fig8, r3) == 3);
  CHECK(count_colorings(fig8, quandle_from_name("R5")) == 25);
}

TEST_CASE("search agrees with brute force on random diagrams") {
  std::mt19937_64 rng(43);
  std::vector<FiniteQuandle> battery{quandle_from_name("T2"), quandle_from_name("R3"), quandle_from_name("R4"),
                                     quandle_from_name("R5"), load_quandle_file(std::string(WELDED_TEST_DATA) + "/q6.json")};
  for (int i = 0; i < 150; ++i) {
    auto g = random_diagram(rng, 5, 2);
    for (const auto& x : battery) CHECK(count_colorings(g, x) == oracle::count_colorings(g, table_of(x)));
  }
}

TEST_CASE("every enumerated coloring is valid and distinct") {
  auto g = parse_gauss(kTrefoil);
  auto r3 = quandle_from_name("R3");
  auto all = enumerate_colorings(g, r3);
  CHECK(all.size() == 9);
  std::set<Coloring> distinct(all.begin(), all.end());
  CHECK(distinct.size() == 9);
  for (const auto& c : all) CHECK(is_valid_coloring(g, r3, c));
  CHECK(enumerate_colorings(g, r3, 4).size() == 4);
  CHECK(enumerate_colorings(g, r3, 0).empty());
  CHECK_FALSE(is_valid_coloring(g, r3, {0, 1, 0}));
  CHECK_FALSE(is_valid_coloring(g, r3, {0, 1}));
  CHECK(find_nontrivial_coloring(g, r3).has_value());
  CHECK_FALSE(find_nontrivial_coloring(parse_gauss("O1+O2+U1+U2+"), r3).has_value());
}

TEST_CASE("pinning") {
  auto g = parse_gauss(kTrefoil);
  ColoringSearch s(g, quandle_from_name("R3"));
  CHECK(s.pin(0, 1));
  CHECK(s.count() == 3);
  CHECK(s.pin(1, 2));
  CHECK(s.count() == 1);
  ColoringSearch t(parse_gauss("O1+U1+"), quandle_from_name("R3"));
  CHECK(t.pin(0, 0));
  CHECK_FALSE(t.pin(0, 1));
  CHECK(t.count() == 0);
}

TEST_CASE("disjoint union multiplies counts") {
  std::mt19937_64 rng(47);
  auto r5 = quandle_from_name("R5");
  for (int i = 0; i < 50; ++i) {
    auto a = random_diagram(rng, 5, 2), b = random_diagram(rng, 5, 2);
    CHECK(count_colorings(disjoint_union(a, b), r5) == count_colorings(a, r5) * count_colorings(b, r5));
  }
}

TEST_CASE("counts are invariant under each move kind") {
  std::mt19937_64 rng(53);
  std::vector<FiniteQuandle> battery{quandle_from_name("T2"), quandle_from_name("R3"), quandle_from_name("R4"),
                                     quandle_from_name("R5"), quandle_from_name("R6"), quandle_from_name("R7"),
                                     load_quandle_file(std::string(WELDED_TEST_DATA) + "/q6.json")};
  std::map<MoveKind, int> exercised;
  for (int i = 0; i < 120; ++i) {
    auto g = random_diagram(rng, 8, 3);
    for (MoveKind k : kAllMoveKinds) {
      auto sites = enumerate_sites(g, k);
      if (sites.empty()) continue;
      const auto& site = sites[rng() % sites.size()];
      auto h = apply(g, site);
      ++exercised[k];
      for (const auto& x : battery) CHECK(count_colorings(g, x) == count_colorings(h, x));
    }
  }
  for (MoveKind k : kAllMoveKinds) CHECK_MESSAGE(exercised[k] > 0, to_string(k));
}

TEST_CASE("lifting colorings to the parallel diagrams") {
  auto r3 = quandle_from_name("R3");
  for (const char* code : {kTrefoil, "O1+U1+", "O1-U2+O3-U4+O2+U1-O4+U3-", "O1+U2+|U1+O2+", "O1+O2+U1+U2+"}) {
    auto d = parse_gauss(code);
    for (auto o : {Orientation::parallel, Orientation::antiparallel}) {
      auto p = parallel_gauss(d, o);
      for (const auto& c : enumerate_colorings(d, r3)) {
        auto lifted = extend_coloring(d, r3, c, o);
        CHECK(is_valid_coloring(p, r3, lifted));
        CHECK(restrict_to_main(d, lifted, o) == c);
      }
    }
  }
  CHECK_THROWS_AS(extend_coloring(parse_gauss(kTrefoil), r3, {0, 1, 0}, Orientation::parallel), std::invalid_argument);
}

TEST_CASE("parallel diagrams of knots have nontrivial colorings") {
  std::mt19937_64 rng(59);
  std::vector<FiniteQuandle> battery{quandle_from_name("R3"), quandle_from_name("R4"), quandle_from_name("R5"),
                                     load_quandle_file(std::string(WELDED_TEST_DATA) + "/q6.json")};
  for (int i = 0; i < 30; ++i) {
    auto d = random_knot(rng, 1 + i % 6);
    for (auto o : {Orientation::parallel, Orientation::antiparallel}) {
      auto p = parallel_gauss(d, o);
      for (const auto& x : battery) {
        auto c = find_nontrivial_coloring(p, x);
        REQUIRE(c.has_value());
        CHECK(is_valid_coloring(p, x, *c));
        CHECK_FALSE(is_trivial_coloring(*c));
      }
    }
  }
}
