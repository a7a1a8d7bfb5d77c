#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "doctest.h"
#include "welded/coloring.hpp"
#include "welded/presentation.hpp"
#include "welded/random_diagram.hpp"

using namespace welded;

namespace {

const char* const kTrefoil = "O1+U2+O3+U1+O2+U3+";

// Relations as (lhs base, over generator, exponent, rhs base).
using Simple = std::array<std::size_t, 4>;

std::vector<Simple> simple_relations(const QuandlePresentation& p, const std::vector<std::size_t>& relabel) {
  std::vector<Simple> out;
  for (const auto& r : p.relations) {
    REQUIRE(r.lhs.word.size() == 1);
    const auto& l = r.lhs.word.front();
    out.push_back({relabel[r.lhs.base], relabel[l.generator], static_cast<std::size_t>(l.exponent + 1), relabel[r.rhs.base]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// S3 as permutations of {0,1,2}; words multiply left to right.
using Perm = std::array<int, 3>;

Perm compose(const Perm& a, const Perm& b) { return {b[a[0]], b[a[1]], b[a[2]]}; }  // a then b
Perm invert(const Perm& a) {
  Perm r{};
  for (int i = 0; i < 3; ++i) r[a[i]] = i;
  return r;
}

std::vector<Perm> s3() {
  std::vector<Perm> all;
  Perm p{0, 1, 2};
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return all;
}

Perm evaluate_word(const Word& w, const std::vector<Perm>& images) {
  Perm acc{0, 1, 2};
  for (const Letter& l : w) acc = compose(acc, l.exponent > 0 ? images[l.generator] : invert(images[l.generator]));
  return acc;
}

}  // namespace

TEST_CASE("trefoil Wirtinger quandle matches the reference up to relabeling") {
  auto p = wirtinger_quandle(parse_gauss(kTrefoil));
  CHECK(p.generators == std::vector<std::string>{"x1", "x2", "x3"});
  // Reference: x1^(x3) = x2, x2^(x1) = x3, x3^(x2) = x1, labels 0-based.
  QuandlePresentation ref;
  ref.generators = {"x1", "x2", "x3"};
  ref.relations = {{{0, {{2, 1}}}, {1, {}}}, {{1, {{0, 1}}}, {2, {}}}, {{2, {{1, 1}}}, {0, {}}}};
  std::vector<std::size_t> id{0, 1, 2}, perm = id;
  bool matched = false;
  do matched |= simple_relations(p, perm) == simple_relations(ref, id);
  while (!matched && std::next_permutation(perm.begin(), perm.end()));
  CHECK(matched);
  CHECK(to_text(p) == "qdle< x1, x2, x3 | x2^(x1) = x3, x1^(x3) = x2, x3^(x2) = x1 >");
}

TEST_CASE("trefoil longitude") {
  auto t = parse_gauss(kTrefoil);
  Word l = preferred_longitude(t, 0);
  CHECK(exponent_sum(l) == 0);
  REQUIRE(l.size() == 6);
  for (int i = 0; i < 3; ++i) CHECK(l[i].exponent == 1);
  for (int i = 3; i < 6; ++i) CHECK(l[i] == Letter{0, -1});
  std::vector<std::string> names{"x1", "x2", "x3"};
  CHECK(word_to_text(l, names) == "x3 x1 x2 x1^-3");
}

TEST_CASE("small presentations") {
  CHECK(to_text(wirtinger_quandle(parse_gauss(""))) == "qdle< x1 | >");
  CHECK(to_text(wirtinger_quandle(parse_gauss("O1+U1+"))) == "qdle< x1 | x1^(x1) = x1 >");
  CHECK(free_reduce(preferred_longitude(parse_gauss("O1+U1+"), 0)).empty());
  CHECK(preferred_longitude(parse_gauss(""), 0).empty());
  CHECK_THROWS_AS(preferred_longitude(parse_gauss(""), 1), std::out_of_range);
  auto hopf = parallel_quandle_presentation(parse_gauss("O1+U2+|U1+O2+"));
  CHECK(hopf.generators == std::vector<std::string>{"x1", "x2", "y1", "y2"});
  CHECK(hopf.relations.size() == 4);
  CHECK(hopf.relations[2].lhs.base == 2);
  CHECK(hopf.relations[2].rhs.base == 2);
  auto split = split_presentation(parse_gauss(kTrefoil));
  CHECK(split.generators.back() == "y");
  CHECK(split.relations.size() == 3);
  CHECK_THROWS(split_presentation(parse_gauss("|")));
  CHECK_THROWS(parallel_group_presentation(parse_gauss("|")));
}

TEST_CASE("word helpers") {
  Word w{{0, 1}, {1, 1}, {1, -1}, {0, -1}, {2, 1}};
  CHECK(free_reduce(w) == Word{{2, 1}});
  CHECK(inverse(Word{{0, 1}, {1, -1}}) == Word{{1, 1}, {0, -1}});
  CHECK(exponent_sum(w) == 1);
}

TEST_CASE("longitudes have exponent sum zero") {
  std::mt19937_64 rng(79);
  for (int i = 0; i < 200; ++i) {
    auto g = random_diagram(rng, 8, 3);
    for (std::size_t c = 0; c < g.num_components(); ++c) CHECK(exponent_sum(preferred_longitude(g, c)) == 0);
  }
}

TEST_CASE("group relators follow the b^-1 a b convention") {
  auto group = s3();
  std::mt19937_64 rng(83);
  for (int i = 0; i < 40; ++i) {
    auto g = random_diagram(rng, 5, 2);
    auto q = wirtinger_quandle(g);
    auto gp = wirtinger_group(g);
    REQUIRE(gp.relators.size() == q.relations.size());
    std::vector<Perm> images(q.generators.size());
    for (int trial = 0; trial < 50; ++trial) {
      for (auto& im : images) im = group[rng() % group.size()];
      for (std::size_t r = 0; r < q.relations.size(); ++r) {
        const auto& rel = q.relations[r];
        const Letter& over = rel.lhs.word.front();
        Perm b = images[over.generator];
        Perm a = images[rel.lhs.base];
        // a^b = b^-1 a b, a^(b^-1) = b a b^-1.
        Perm acted = over.exponent > 0 ? compose(compose(invert(b), a), b) : compose(compose(b, a), invert(b));
        bool quandle_holds = acted == images[rel.rhs.base];
        bool relator_trivial = evaluate_word(gp.relators[r], images) == Perm{0, 1, 2};
        CHECK(quandle_holds == relator_trivial);
      }
    }
  }
  auto pg = parallel_group_presentation(parse_gauss(kTrefoil));
  CHECK(to_text(pg) ==
        "grp< x1, x2, x3, y | x1^-1 x2 x1 x3^-1, x3^-1 x1 x3 x2^-1, x2^-1 x3 x2 x1^-1, y x3 x1 x2 x1^-3 y^-1 x1^3 x2^-1 x1^-1 x3^-1 >");
}

TEST_CASE("hom counts equal parallel coloring counts") {
  auto t = parse_gauss(kTrefoil);
  auto r3 = quandle_from_name("R3");
  CHECK(count_homs(parallel_quandle_presentation(t), r3) == count_colorings(parallel_gauss(t, Orientation::parallel), r3));
  CHECK(count_homs(wirtinger_quandle(t), r3) == 9);

  std::mt19937_64 rng(89);
  std::vector<FiniteQuandle> battery{quandle_from_name("R3"), quandle_from_name("R5"),
                                     load_quandle_file(std::string(WELDED_TEST_DATA) + "/q6.json")};
  for (int i = 0; i < 25; ++i) {
    auto d = i % 2 ? random_knot(rng, 1 + i % 6) : random_diagram(rng, 4, 2);
    auto p = parallel_gauss(d, Orientation::parallel);
    auto pres = parallel_quandle_presentation(d);
    for (const auto& x : battery) CHECK(count_homs(pres, x) == count_colorings(p, x));
  }
}

TEST_CASE("JSON output") {
  auto j = to_json(wirtinger_quandle(parse_gauss("O1+U1+")));
  CHECK(j == "{\"type\":\"qdle\",\"generators\":[\"x1\"],\"relations\":[{\"lhs\":{\"base\":\"x1\",\"word\":[[\"x1\",1]]},\"rhs\":{\"base\":\"x1\",\"word\":[]}}]}");
  auto g = to_json(wirtinger_group(parse_gauss("")));
  CHECK(g == "{\"type\":\"grp\",\"generators\":[\"x1\"],\"relators\":[]}");
}
