#ifndef WELDED_MOVES_HPP
#define WELDED_MOVES_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "welded/gauss.hpp"

namespace welded {

/// Oriented moves acting on Gauss codes. Virtual Reidemeister moves and the
/// detour move leave a Gauss code unchanged, so they have no kind here. The
/// under-strand variant of the welded move is deliberately absent.
enum class MoveKind {
  R1a_insert,  ///< positive kink
  R1c_insert,  ///< negative kink
  R1_delete,
  R2c_insert,  ///< opposite-direction bigon, first crossing on the over strand positive
  R2d_insert,  ///< same, first crossing negative
  R2_delete,
  R3b,         ///< cyclic third move
  WeldedSwap,  ///< two adjacent over-passages commute
  TwistSlide,  ///< crossing pair slides under a strand passing over both its branches
};

inline constexpr MoveKind kAllMoveKinds[] = {MoveKind::R1a_insert, MoveKind::R1c_insert, MoveKind::R1_delete,
                                             MoveKind::R2c_insert, MoveKind::R2d_insert, MoveKind::R2_delete,
                                             MoveKind::R3b,        MoveKind::WeldedSwap, MoveKind::TwistSlide};

std::string to_string(MoveKind k);
std::optional<MoveKind> move_kind_from_string(const std::string& s);

/// Where a move applies. Meaning of `locations` by kind:
///   R1 inserts:  [gap]                 params: order (0 = over first, 1 = under first)
///   R1_delete:   [first passage of the adjacent pair]
///   R2 inserts:  [over-strand gap, under-strand gap]
///   R2_delete:   [first over passage, first under passage]
///   R3b:         [top pair, middle pair, bottom pair] (first passage of each)
///   WeldedSwap:  [first passage of the pair]
///   TwistSlide:  [pair on the twist's over strand, pair on its under strand]
///                params: direction (0 = forward, 1 = backward)
/// A gap g on component c inserts before passage g.
struct MoveSite {
  MoveKind kind = MoveKind::R1_delete;
  std::vector<PassageRef> locations;
  std::map<std::string, int> params;

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<MoveSite> enumerate_sites(const GaussCode& g, MoveKind kind);

/// Applies a site; throws MoveError if it does not match the code.
/// Inserted crossings get fresh ids above the current maximum; ids are not
/// renumbered.
GaussCode apply(const GaussCode& g, const MoveSite& site);

struct WalkEntry {
  std::size_t step = 0;
  std::optional<MoveSite> site;  ///< empty when no site was applicable
};

struct WalkResult {
  GaussCode code;
  std::vector<WalkEntry> log;
};

/// Each step picks a kind uniformly among the allowed kinds that have a site,
/// then a site of that kind uniformly. Deterministic in `seed`.
WalkResult random_walk(const GaussCode& g, std::size_t steps, std::uint64_t seed, const std::set<MoveKind>& kinds);

/// Replays a log with apply().
GaussCode replay(const GaussCode& g, const std::vector<WalkEntry>& log);

/// {"kind":..., "component":..., "positions":[...], "params":{...}}; the
/// component of every position is listed in params.components.
std::string site_to_json(const MoveSite& site);
MoveSite site_from_json(const std::string& line);

}  // namespace welded

#endif  // WELDED_MOVES_HPP
