#ifndef WELDED_PARALLELIZE_HPP
#define WELDED_PARALLELIZE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "welded/gauss.hpp"
#include "welded/planar.hpp"

namespace welded {

enum class Side { R, L };

/// Which copy of which original component a parallel component is.
struct CableLabel {
  std::size_t origin = 0;
  Side side = Side::R;

  friend bool operator==(const CableLabel&, const CableLabel&) = default;
};

/// Cable twist inserted next to each classical crossing: one classical
/// crossing between the two copies (right copy over) and one virtual crossing.
/// minus1v has the classical crossing first and sign -1; v1 has the virtual
/// crossing first and sign +1.
enum class TwistKind { minus1v, v1 };

enum class Orientation { parallel, antiparallel };

/// Parallel diagram with one label per component. Components are ordered
/// R_0, L_0, R_1, L_1, ...
struct ParallelDiagram {
  PlanarDiagram diagram;
  std::vector<CableLabel> labels;
};

/// Doubles every strand. A classical crossing of sign e becomes: the two right
/// copies crossing classically with sign e; the right copy of the over strand
/// passing over the left copy of the under strand with sign e; two virtual
/// crossings; and a twist on the under strand's cable, of kind minus1v just
/// after the crossing when e = +1 and of kind v1 just before it when e = -1.
/// A virtual crossing becomes four virtual crossings. Passage order is read
/// off local coordinates.
ParallelDiagram phi_plus(const PlanarDiagram& d);

/// phi_plus with every left copy reversed.
ParallelDiagram phi_minus(const PlanarDiagram& d);

ParallelDiagram parallelize(const PlanarDiagram& d, Orientation o);

/// Gauss code of the parallel diagram, canonically renumbered.
GaussCode parallel_gauss(const ParallelDiagram& p);

/// Convenience: realize, parallelize and read back.
GaussCode parallel_gauss(const GaussCode& g, Orientation o);

std::vector<std::size_t> components_on_side(const ParallelDiagram& p, Side side);

/// The right copies: a copy of the original diagram.
GaussCode subdiagram_main(const ParallelDiagram& p);
/// The left copies: carries no classical crossings.
GaussCode subdiagram_secondary(const ParallelDiagram& p);

std::string labels_to_json(const std::vector<CableLabel>& labels);

}  // namespace welded

#endif  // WELDED_PARALLELIZE_HPP
