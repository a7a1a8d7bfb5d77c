#include "welded/linking.hpp"

#include <stdexcept>

#include "welded/coloring.hpp"

namespace welded {

std::string HalfInteger::str() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

HalfInteger linking_number(const GaussCode& g, std::size_t i, std::size_t j) {
  if (i >= g.num_components() || j >= g.num_components()) throw std::out_of_range("linking_number: component out of range");
  if (i == j) throw std::invalid_argument("linking_number: components must differ");
  HalfInteger lk;
  for (const auto& [id, info] : g.crossings()) {
    auto a = info.over.component, b = info.under.component;
    if ((a == i && b == j) || (a == j && b == i)) lk.twice += to_int(info.sign);
  }
  return lk;
}

SplitReport split_obstruction(const GaussCode& d, const FiniteQuandle& x, Orientation o) {
  if (d.num_components() != 1) throw std::invalid_argument("split_obstruction: expects a knot diagram");
  SplitReport r;
  r.parallel_count = count_colorings(parallel_gauss(d, o), x);
  r.split_count = count_colorings(d, x) * x.size();
  r.verdict = r.parallel_count != r.split_count ? SplitVerdict::non_split_certified : SplitVerdict::inconclusive;
  return r;
}

std::string to_string(SplitVerdict v) { return v == SplitVerdict::non_split_certified ? "NON_SPLIT_CERTIFIED" : "INCONCLUSIVE"; }

}  // namespace welded
