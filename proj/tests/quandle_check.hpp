#ifndef WELDED_TESTS_QUANDLE_CHECK_HPP
#define WELDED_TESTS_QUANDLE_CHECK_HPP

#include <vector>

#include "welded/quandle.hpp"

namespace oracle {

using Grid = std::vector<std::vector<int>>;

inline bool is_quandle(const Grid& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a)
    if (t[a][a] != a) return false;
  for (int b = 0; b < n; ++b) {
    std::vector<int> seen(n, 0);
    for (int a = 0; a < n; ++a)
      if (seen[t[a][b]]++) return false;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[t[a][c]][t[b][c]]) return false;
  return true;
}

// Does the witness really break the named axiom?
inline bool witness_holds(const Grid& t, welded::QuandleAxiom axiom, const std::vector<int>& w) {
  using welded::QuandleAxiom;
  switch (axiom) {
    case QuandleAxiom::idempotence: return w.size() == 1 && t[w[0]][w[0]] != w[0];
    case QuandleAxiom::right_invertibility: return w.size() == 3 && w[0] != w[1] && t[w[0]][w[2]] == t[w[1]][w[2]];
    case QuandleAxiom::self_distributivity:
      return w.size() == 3 && t[t[w[0]][w[1]]][w[2]] != t[t[w[0]][w[2]]][t[w[1]][w[2]]];
    case QuandleAxiom::malformed: return false;
  }
  return false;
}

}  // namespace oracle

#endif  // WELDED_TESTS_QUANDLE_CHECK_HPP
