#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "welded/numbering.hpp"
#include "welded/parallelize.hpp"
#include "welded/random_diagram.hpp"

using namespace welded;

namespace {

bool sat(const NumberingResult& r) { return std::holds_alternative<Numbering>(r); }

}  // namespace

TEST_CASE("trefoil over Z alternates") {
  auto t = parse_gauss("O1+U2+O3+U1+O2+U3+");
  auto r = alexander_numbering(t, Ring::Z);
  REQUIRE(sat(r));
  const auto& n = std::get<Numbering>(r);
  CHECK(n.values == std::vector<long>{0, 1, 0, 1, 0, 1});
  CHECK(is_numbering(t, n));
  CHECK(numbering_to_json(r) == "{\"ring\":\"Z\",\"values\":{\"0\":0,\"1\":1,\"2\":0,\"3\":1,\"4\":0,\"5\":1}}");
}

TEST_CASE("virtual trefoil is UNSAT over both rings") {
  auto vt = parse_gauss("O1+O2+U1+U2+");
  for (Ring ring : {Ring::Z, Ring::Z2}) {
    CHECK_FALSE(oracle::numberable(vt, ring == Ring::Z2));
    auto r = alexander_numbering(vt, ring);
    REQUIRE_FALSE(sat(r));
    const auto& cert = std::get<UnsatCertificate>(r);
    CHECK(is_unsat_certificate(vt, cert));
    CHECK(numbering_to_json(r).find("\"unsat_cycle\"") != std::string::npos);
  }
}

TEST_CASE("tampered results fail the checkers") {
  auto t = parse_gauss("O1+U2+O3+U1+O2+U3+");
  auto n = std::get<Numbering>(alexander_numbering(t, Ring::Z));
  n.values[0] += 1;
  CHECK_FALSE(is_numbering(t, n));
  auto vt = parse_gauss("O1+O2+U1+U2+");
  auto cert = std::get<UnsatCertificate>(alexander_numbering(vt, Ring::Z));
  cert.cycle.pop_back();
  CHECK_FALSE(is_unsat_certificate(vt, cert));
}

TEST_CASE("solver agrees with the union-find oracle") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 400; ++i) {
    auto g = random_diagram(rng, 7, 3);
    for (Ring ring : {Ring::Z, Ring::Z2}) {
      auto r = alexander_numbering(g, ring);
      CHECK(sat(r) == oracle::numberable(g, ring == Ring::Z2));
      if (sat(r))
        CHECK(is_numbering(g, std::get<Numbering>(r)));
      else
        CHECK(is_unsat_certificate(g, std::get<UnsatCertificate>(r)));
    }
  }
}

TEST_CASE("Z solutions reduce mod 2; Z2 status ignores orientation") {
  std::mt19937_64 rng(67);
  for (int i = 0; i < 300; ++i) {
    auto g = random_diagram(rng, 7, 3);
    if (sat(alexander_numbering(g, Ring::Z))) CHECK(sat(alexander_numbering(g, Ring::Z2)));
    std::set<std::size_t> comps;
    for (std::size_t c = 0; c < g.num_components(); ++c)
      if (rng() & 1U) comps.insert(c);
    CHECK(sat(alexander_numbering(g, Ring::Z2)) == sat(alexander_numbering(reverse_orientation(g, comps), Ring::Z2)));
  }
}

TEST_CASE("parallel diagrams are numberable") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 200; ++i) {
    auto d = random_diagram(rng, 8, 3);
    auto minus = parallel_gauss(d, Orientation::antiparallel);
    auto plus = parallel_gauss(d, Orientation::parallel);
    CHECK(sat(alexander_numbering(minus, Ring::Z)));
    CHECK(sat(alexander_numbering(plus, Ring::Z2)));
    CHECK(sat(alexander_numbering(minus, Ring::Z2)));
  }
}

TEST_CASE("constraints") {
  auto cs = numbering_constraints(parse_gauss("O1-U1-"), Ring::Z);
  CHECK(cs.size() == 3);
  long step = 0;
  for (const auto& c : cs)
    if (c.kind == NumberingConstraint::Kind::under_step) step = c.diff;
  CHECK(step == -1);
  for (const auto& c : numbering_constraints(parse_gauss("O1-U1-"), Ring::Z2))
    if (c.kind == NumberingConstraint::Kind::under_step) CHECK(c.diff == 1);
  CHECK(sat(alexander_numbering(parse_gauss("||"), Ring::Z)));
}
