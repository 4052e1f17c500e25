#pragma once

// Test-only oracles, independent of the library's fast paths.

#include "digitop/digital_space.hpp"
#include "digitop/topology.hpp"

namespace digitop::testing {

// Literal recursive surface check: no degree-2 shortcut, no memoization.
inline bool naive_is_n_surface(const DigitalSpace& g, int n) {
  if (n == 0) return g.point_count() == 2 && g.edge_count() == 0;
  if (g.empty() || !is_connected(g)) return false;
  for (PointId v : g.points()) {
    if (!naive_is_n_surface(rim(g, v), n - 1)) return false;
  }
  return true;
}

}  // namespace digitop::testing
