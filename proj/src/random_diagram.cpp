#include "welded/random_diagram.hpp"

#include <algorithm>

namespace welded {

namespace {

std::vector<Passage> random_passages(std::mt19937_64& rng, std::size_t crossings) {
  std::vector<Passage> ps;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < crossings; ++i) {
    int id = static_cast<int>(i) + 1;
    Sign s = coin(rng) ? Sign::positive : Sign::negative;
    ps.push_back({id, Role::over, s});
    ps.push_back({id, Role::under, s});
  }
  std::shuffle(ps.begin(), ps.end(), rng);
  return ps;
}

}  // namespace

GaussCode random_diagram(std::mt19937_64& rng, std::size_t max_crossings, std::size_t max_components) {
  std::uniform_int_distribution<std::size_t> n_dist(0, max_crossings);
  std::uniform_int_distribution<std::size_t> c_dist(1, std::max<std::size_t>(max_components, 1));
  std::size_t n = n_dist(rng), k = c_dist(rng);
  auto ps = random_passages(rng, n);
  std::uniform_int_distribution<std::size_t> cut(0, ps.size());
  std::vector<std::size_t> cuts{0, ps.size()};
  for (std::size_t i = 1; i < k; ++i) cuts.push_back(cut(rng));
  std::sort(cuts.begin(), cuts.end());
  std::vector<Component> comps;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    comps.emplace_back(ps.begin() + static_cast<long>(cuts[i]), ps.begin() + static_cast<long>(cuts[i + 1]));
  return canonical(GaussCode(std::move(comps)));
}

GaussCode random_knot(std::mt19937_64& rng, std::size_t crossings) {
  return canonical(GaussCode({random_passages(rng, crossings)}));
}

}  // namespace welded
