#ifndef WELDED_GAUSS_HPP
#define WELDED_GAUSS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace welded {

/// Sign of a classical crossing. Positive iff (over direction, under
/// direction) is a positively oriented frame of the plane.
enum class Sign : std::int8_t { negative = -1, positive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign flip(Sign s) noexcept { return s == Sign::positive ? Sign::negative : Sign::positive; }
constexpr Sign sign_of(int v) noexcept { return v < 0 ? Sign::negative : Sign::positive; }

enum class Role : std::uint8_t { over, under };

/// One strand-visit to a classical crossing.
struct Passage {
  int crossing = 0;
  Role role = Role::over;
  Sign sign = Sign::positive;

  friend bool operator==(const Passage&, const Passage&) = default;
};

using Component = std::vector<Passage>;

class GaussError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Position of a passage inside a code.
struct PassageRef {
  std::size_t component = 0;
  std::size_t position = 0;

  friend bool operator==(const PassageRef&, const PassageRef&) = default;
};

struct CrossingInfo {
  int id = 0;
  Sign sign = Sign::positive;
  PassageRef over;
  PassageRef under;
};

/// Oriented virtual link diagram as a Gauss code: per component, the cyclic
/// list of classical passages starting at the basepoint. Virtual crossings are
/// implicit. Always holds at least one component; components may be empty.
class GaussCode {
 public:
  /// The one-component crossing-free unknot.
  GaussCode();
  /// Validates; throws GaussError when a crossing id does not occur exactly
  /// once over and once under with a common sign.
  explicit GaussCode(std::vector<Component> components);

  const std::vector<Component>& components() const noexcept { return components_; }
  const Component& component(std::size_t i) const { return components_.at(i); }
  std::size_t num_components() const noexcept { return components_.size(); }
  std::size_t num_crossings() const noexcept;
  std::size_t num_passages() const noexcept;

  /// Crossings keyed by id.
  std::map<int, CrossingInfo> crossings() const;
  int max_crossing_id() const noexcept;

  friend bool operator==(const GaussCode&, const GaussCode&) = default;

 private:
  std::vector<Component> components_;
};

/// Throws GaussError describing the first violated rule.
void validate_components(const std::vector<Component>& components);

GaussCode parse_gauss(std::string_view text);
std::string serialize_gauss(const GaussCode& g);

/// Renumbers crossing ids 1, 2, ... in order of first occurrence.
GaussCode canonical(const GaussCode& g);

struct Writhe {
  std::vector<int> self;  ///< per component, crossings with both passages on it
  int total = 0;          ///< all crossings
};
Writhe writhe(const GaussCode& g);

/// Keeps the listed components (in original order). Crossings left with a
/// single passage are erased. Result is canonically renumbered.
GaussCode delete_components(const GaussCode& g, const std::set<std::size_t>& keep);

/// Reverses the listed components. A crossing with exactly one passage on a
/// reversed component changes sign. Result is canonically renumbered.
GaussCode reverse_orientation(const GaussCode& g, const std::set<std::size_t>& comps);

/// Components of `a` followed by those of `b`, with `b`'s ids shifted.
GaussCode disjoint_union(const GaussCode& a, const GaussCode& b);

/// Wirtinger (long) arcs: maximal segments between consecutive
/// under-passages. Arc 0 of a component contains its basepoint, i.e. the
/// point just before the first passage; further arcs follow traversal order.
struct LongArcs {
  std::size_t count = 0;
  std::vector<std::size_t> offset;                 ///< first global arc id per component
  std::vector<std::vector<std::size_t>> after;     ///< global arc id of the segment leaving each passage
  std::vector<std::size_t> per_component;

  std::size_t before(const GaussCode& g, PassageRef p) const;
};
LongArcs long_arcs(const GaussCode& g);

/// Semi-arcs: segments between consecutive classical passages. Semi-arc
/// `offset[c] + i` leaves passage i of component c; an empty component has
/// exactly one semi-arc.
struct SemiArcs {
  std::size_t count = 0;
  std::vector<std::size_t> offset;
  std::vector<std::size_t> per_component;

  std::size_t after(PassageRef p) const { return offset[p.component] + p.position; }
  std::size_t before(const GaussCode& g, PassageRef p) const;
};
SemiArcs semi_arcs(const GaussCode& g);

}  // namespace welded

#endif  // WELDED_GAUSS_HPP
