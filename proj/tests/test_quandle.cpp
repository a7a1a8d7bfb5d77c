#include <random>

#include "doctest.h"
#include "quandle_check.hpp"
#include "welded/quandle.hpp"

using namespace welded;

TEST_CASE("dihedral R3 table") {
  auto r3 = builtin_quandle("dihedral", 3);
  CHECK(r3.table() == std::vector<std::vector<int>>{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  CHECK(r3.op(0, 1) == 2);
  CHECK(r3.op(1, 0) == 2);
  CHECK(r3.op(2, 2) == 2);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(r3.inv(r3.op(a, b), b) == a);
}

TEST_CASE("trivial T2 rows are constant") {
  auto t2 = builtin_quandle("trivial", 2);
  CHECK(t2.table() == std::vector<std::vector<int>>{{0, 0}, {1, 1}});
}

TEST_CASE("builtins satisfy the axioms") {
  for (std::size_t n = 1; n <= 9; ++n) {
    CHECK(oracle::is_quandle(builtin_quandle("dihedral", n).table()));
    CHECK(oracle::is_quandle(builtin_quandle("trivial", n).table()));
  }
  CHECK_THROWS_AS(builtin_quandle("dihedral", 0), std::invalid_argument);
  CHECK_THROWS_AS(builtin_quandle("alexander", 3), std::invalid_argument);
}

TEST_CASE("names") {
  CHECK(quandle_from_name("R5").size() == 5);
  CHECK(quandle_from_name("T2").op(1, 0) == 1);
  CHECK(quandle_from_name("dihedral:7").op(0, 1) == 2);
  CHECK(quandle_from_name("trivial:4").size() == 4);
  for (const char* bad : {"", "R", "Rx", "Q3", "dihedral:", "R-3", "R0"}) CHECK_THROWS(quandle_from_name(bad));
}

TEST_CASE("axiom violations carry witnesses") {
  SUBCASE("idempotence") {
    oracle::Grid t{{1, 1}, {0, 0}};
    try {
      FiniteQuandle q(t);
      FAIL("accepted");
    } catch (const QuandleAxiomError& e) {
      CHECK(e.axiom() == QuandleAxiom::idempotence);
      CHECK(oracle::witness_holds(t, e.axiom(), e.witness()));
    }
  }
  SUBCASE("right invertibility") {
    oracle::Grid t{{0, 0, 0}, {1, 1, 0}, {2, 2, 2}};
    try {
      FiniteQuandle q(t);
      FAIL("accepted");
    } catch (const QuandleAxiomError& e) {
      CHECK(e.axiom() == QuandleAxiom::right_invertibility);
      CHECK(oracle::witness_holds(t, e.axiom(), e.witness()));
    }
  }
  SUBCASE("self-distributivity on a Latin square") {
    // R5 with two entries of column 3 exchanged: still idempotent with
    // bijective columns.
    oracle::Grid t{{0, 2, 4, 0, 3}, {4, 1, 3, 1, 2}, {3, 0, 2, 4, 1}, {2, 4, 1, 3, 0}, {1, 3, 0, 2, 4}};
    REQUIRE_FALSE(oracle::is_quandle(t));
    try {
      FiniteQuandle q(t);
      FAIL("accepted");
    } catch (const QuandleAxiomError& e) {
      CHECK(e.axiom() == QuandleAxiom::self_distributivity);
      CHECK(oracle::witness_holds(t, e.axiom(), e.witness()));
    }
  }
  SUBCASE("malformed") {
    CHECK_THROWS_AS(FiniteQuandle({{0, 1}, {1}}), QuandleAxiomError);
    CHECK_THROWS_AS(FiniteQuandle({{0, 5}, {1, 1}}), QuandleAxiomError);
  }
}

TEST_CASE("perturbed tables are rejected exactly when not quandles") {
  std::mt19937_64 rng(41);
  int rejected = 0;
  for (int trial = 0; trial < 500; ++trial) {
    auto t = builtin_quandle("dihedral", 3 + trial % 5).table();
    const int n = static_cast<int>(t.size());
    std::uniform_int_distribution<int> pick(0, n - 1);
    int a = pick(rng), b = pick(rng), v = pick(rng);
    t[a][b] = v;
    bool ok = oracle::is_quandle(t);
    try {
      FiniteQuandle q(t);
      CHECK(ok);
    } catch (const QuandleAxiomError& e) {
      CHECK_FALSE(ok);
      CHECK(oracle::witness_holds(t, e.axiom(), e.witness()));
      ++rejected;
    }
  }
  CHECK(rejected > 0);
}

TEST_CASE("file formats") {
  auto q6 = load_quandle_file(std::string(WELDED_TEST_DATA) + "/q6.json");
  CHECK(q6.size() == 6);
  CHECK(oracle::is_quandle(q6.table()));
  auto r3 = load_quandle_file(std::string(WELDED_TEST_DATA) + "/r3.csv");
  CHECK(r3.table() == builtin_quandle("dihedral", 3).table());
  CHECK(quandle_from_json("{\"n\":3, \"table\":[[0,2,1],[2,1,0],[1,0,2]]}").table() == r3.table());
  CHECK_THROWS(quandle_from_json("{\"n\":2, \"table\":[[0,2,1],[2,1,0],[1,0,2]]}"));
  CHECK_THROWS(quandle_from_json("not json"));
  CHECK_THROWS(quandle_from_csv("0,1\n1"));
  CHECK_THROWS(load_quandle_file("/nonexistent/q.json"));
  auto round = quandle_from_json(quandle_to_json(q6));
  CHECK(round.table() == q6.table());
  CHECK(resolve_quandle("R3").table() == r3.table());
  CHECK(resolve_quandle(std::string(WELDED_TEST_DATA) + "/q6.json").size() == 6);
}
