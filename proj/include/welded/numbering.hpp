#ifndef WELDED_NUMBERING_HPP
#define WELDED_NUMBERING_HPP

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "welded/gauss.hpp"

namespace welded {

enum class Ring { Z, Z2 };

/// value(to) - value(from) = diff, imposed at `crossing`.
struct NumberingConstraint {
  enum class Kind { over_in_under_out, over_out_under_in, under_step };

  std::size_t from = 0;
  std::size_t to = 0;
  long diff = 0;
  int crossing = 0;
  Kind kind = Kind::under_step;
};

/// Per classical crossing of sign e with semi-arcs o_in, o_out, u_in, u_out:
///   n(o_in) = n(u_out),  n(o_out) = n(u_in),  n(u_out) = n(u_in) + e
/// over Z, and the same with +1 in place of e over Z/2.
std::vector<NumberingConstraint> numbering_constraints(const GaussCode& g, Ring ring);

/// Values per semi-arc (see semi_arcs()); over Z/2 they are 0 or 1.
struct Numbering {
  Ring ring = Ring::Z;
  std::vector<long> values;
};

/// A closed walk of constraints, each oriented from -> to, whose diffs sum to
/// a nonzero value (mod 2 over Z/2).
struct UnsatCertificate {
  Ring ring = Ring::Z;
  std::vector<NumberingConstraint> cycle;
};

using NumberingResult = std::variant<Numbering, UnsatCertificate>;

/// Potential assignment along a spanning forest of the constraint graph; the
/// smallest semi-arc of each connected part gets 0.
NumberingResult alexander_numbering(const GaussCode& g, Ring ring);

bool is_numbering(const GaussCode& g, const Numbering& n);
bool is_unsat_certificate(const GaussCode& g, const UnsatCertificate& cert);

std::string numbering_to_json(const NumberingResult& r);

}  // namespace welded

#endif  // WELDED_NUMBERING_HPP
