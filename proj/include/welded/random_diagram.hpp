#ifndef WELDED_RANDOM_DIAGRAM_HPP
#define WELDED_RANDOM_DIAGRAM_HPP

#include <cstddef>
#include <random>

#include "welded/gauss.hpp"

namespace welded {

/// Uniformly chosen crossing count in [0, max_crossings] and component count
/// in [1, max_components]; passages are shuffled and cut into components, so
/// components may be empty. Every Gauss code is a welded diagram.
GaussCode random_diagram(std::mt19937_64& rng, std::size_t max_crossings, std::size_t max_components);

/// Single component with exactly `crossings` crossings.
GaussCode random_knot(std::mt19937_64& rng, std::size_t crossings);

}  // namespace welded

#endif  // WELDED_RANDOM_DIAGRAM_HPP
