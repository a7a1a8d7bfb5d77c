#ifndef WELDED_LINKING_HPP
#define WELDED_LINKING_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "welded/gauss.hpp"
#include "welded/parallelize.hpp"
#include "welded/quandle.hpp"

namespace welded {

/// Exact half-integer stored as twice its value.
struct HalfInteger {
  long twice = 0;

  double value() const noexcept { return static_cast<double>(twice) / 2.0; }
  std::string str() const;
  friend bool operator==(const HalfInteger&, const HalfInteger&) = default;
};

/// Half the sum of signs of crossings with one passage on each of i and j.
HalfInteger linking_number(const GaussCode& g, std::size_t i, std::size_t j);

enum class SplitVerdict { non_split_certified, inconclusive };

struct SplitReport {
  SplitVerdict verdict = SplitVerdict::inconclusive;
  std::uint64_t parallel_count = 0;  ///< colorings of the parallel diagram
  std::uint64_t split_count = 0;     ///< colorings of original + unknot
};

/// Compares #Col_X of the parallel diagram of a knot with #Col_X(d) * |X|,
/// the count for the split union of its two copies.
SplitReport split_obstruction(const GaussCode& d, const FiniteQuandle& x, Orientation o);

std::string to_string(SplitVerdict v);

}  // namespace welded

#endif  // WELDED_LINKING_HPP
