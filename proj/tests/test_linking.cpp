#include <random>

#include "doctest.h"
#include "welded/linking.hpp"
#include "welded/parallelize.hpp"
#include "welded/random_diagram.hpp"

using namespace welded;

TEST_CASE("Hopf link") {
  auto hopf = parse_gauss("O1+U2+|U1+O2+");
  CHECK(linking_number(hopf, 0, 1) == HalfInteger{2});
  CHECK(linking_number(hopf, 0, 1).str() == "1");
  CHECK(linking_number(reverse_orientation(hopf, {0}), 0, 1).str() == "-1");
  CHECK_THROWS_AS(linking_number(hopf, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(linking_number(hopf, 0, 2), std::out_of_range);
}

TEST_CASE("half-integer values") {
  auto virtual_hopf = parse_gauss("O1+|U1+");
  CHECK(linking_number(virtual_hopf, 0, 1).str() == "1/2");
  CHECK(linking_number(virtual_hopf, 0, 1).value() == doctest::Approx(0.5));
  CHECK(linking_number(parse_gauss("O1-|U1-"), 1, 0).str() == "-1/2");
  CHECK(linking_number(parse_gauss("O1+U1+|"), 0, 1).str() == "0");
}

TEST_CASE("parallel kink: mixed and twist crossings cancel") {
  auto p = parallel_gauss(parse_gauss("O1+U1+"), Orientation::parallel);
  CHECK(linking_number(p, 0, 1).twice == 0);
}

TEST_CASE("parallel Hopf link") {
  auto p = parallel_gauss(parse_gauss("O1+U2+|U1+O2+"), Orientation::parallel);
  // Right copy of component 0 against left copy of component 1.
  CHECK(linking_number(p, 0, 3).str() == "1/2");
  // A component against its own left copy.
  CHECK(linking_number(p, 0, 1).str() == "-1/2");
  CHECK(linking_number(p, 0, 2).str() == "1");
}

TEST_CASE("symmetry on random links") {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 300; ++i) {
    auto g = random_diagram(rng, 8, 3);
    if (g.num_components() < 2) continue;
    CHECK(linking_number(g, 0, 1) == linking_number(g, 1, 0));
  }
}

TEST_CASE("split obstruction") {
  auto r3 = quandle_from_name("R3");
  auto unknot = split_obstruction(parse_gauss(""), r3, Orientation::parallel);
  CHECK(unknot.parallel_count == 9);
  CHECK(unknot.split_count == 9);
  CHECK(unknot.verdict == SplitVerdict::inconclusive);
  CHECK(to_string(unknot.verdict) == "INCONCLUSIVE");
  CHECK_THROWS_AS(split_obstruction(parse_gauss("|"), r3, Orientation::parallel), std::invalid_argument);
  CHECK(to_string(SplitVerdict::non_split_certified) == "NON_SPLIT_CERTIFIED");
}
