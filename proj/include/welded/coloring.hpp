#ifndef WELDED_COLORING_HPP
#define WELDED_COLORING_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "welded/gauss.hpp"
#include "welded/parallelize.hpp"
#include "welded/quandle.hpp"

namespace welded {

/// Quandle element per long arc (global arc id from long_arcs()).
using Coloring = std::vector<int>;

/// Crossing condition on long arcs: color(out) = color(in) * color(over) for a
/// positive crossing and color(in) *bar color(over) for a negative one.
struct ArcRelation {
  int crossing = 0;
  std::size_t in = 0;
  std::size_t over = 0;
  std::size_t out = 0;
  int exponent = 1;
};

std::vector<ArcRelation> arc_relations(const GaussCode& g, const LongArcs& arcs);

bool is_valid_coloring(const GaussCode& g, const FiniteQuandle& x, const Coloring& c);
bool is_trivial_coloring(const Coloring& c);

/// Backtracking over per-arc candidate sets kept arc-consistent with every
/// crossing relation; branches on the smallest open set. Arcs can be pinned
/// before the search; `prefer` lists arcs to branch on first, each trying
/// colors from a given start value upward (mod |X|).
class ColoringSearch {
 public:
  ColoringSearch(const GaussCode& g, const FiniteQuandle& x);

  /// Returns false if pinning contradicts earlier pins.
  bool pin(std::size_t arc, int color);
  void prefer(std::size_t arc, int first_color);

  /// Calls `visit` for every coloring extending the pins; stops early when it
  /// returns false.
  void run(const std::function<bool(const Coloring&)>& visit);
  std::uint64_t count() const;

  std::size_t num_arcs() const noexcept { return num_arcs_; }

 private:
  using Domains = std::vector<std::uint64_t>;

  bool restrict_to(Domains& d, std::size_t arc, const std::uint64_t* allowed) const;
  bool revise(Domains& d, std::size_t relation, std::vector<std::size_t>& changed) const;
  bool propagate(Domains& d, std::vector<std::size_t> changed) const;
  std::size_t size_of(const Domains& d, std::size_t arc) const;
  std::size_t branch_arc(const Domains& d, std::size_t& open) const;
  bool search(Domains& d, const std::function<bool(const Coloring&)>& visit);
  std::uint64_t count_from(const Domains& d) const;

  FiniteQuandle x_;
  std::size_t num_arcs_ = 0;
  std::size_t words_ = 1;
  std::vector<ArcRelation> relations_;
  std::vector<std::vector<std::size_t>> relations_of_arc_;
  Domains domains_;
  std::vector<std::size_t> branch_order_;
  std::vector<int> first_color_;
  bool consistent_ = true;
  mutable std::vector<std::uint64_t> scratch_;  // revise() work area; not thread-safe
};

std::uint64_t count_colorings(const GaussCode& g, const FiniteQuandle& x);
std::vector<Coloring> enumerate_colorings(const GaussCode& g, const FiniteQuandle& x, std::size_t limit = SIZE_MAX);
std::optional<Coloring> find_nontrivial_coloring(const GaussCode& g, const FiniteQuandle& x);

/// Lifts a coloring of `d` to the parallel diagram of the given orientation
/// (as a coloring of parallel_gauss(d, o)). Right-copy arcs take the colors of
/// the corresponding arcs of `d`; each left copy is seeded at its basepoint
/// with the color of the adjacent right-copy arc and propagated, trying the
/// other seeds if the first does not close up. Throws std::runtime_error if
/// no lift exists.
Coloring extend_coloring(const GaussCode& d, const FiniteQuandle& x, const Coloring& c, Orientation o);

/// Colors of the right-copy arcs of a parallel-diagram coloring, in the arc
/// numbering of the original diagram.
Coloring restrict_to_main(const GaussCode& d, const Coloring& parallel_coloring, Orientation o);

}  // namespace welded

#endif  // WELDED_COLORING_HPP
