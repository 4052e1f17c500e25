#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "digitop/digital_space.hpp"

namespace digitop {

enum class PointClass { Interior, Boundary, Defective };

struct SurfaceReport {
  int dimension = 0;
  bool is_surface = false;  // no defective points, nonempty connected
  std::map<PointId, PointClass> classes;
  long long euler = 0;
  std::size_t triangle_count = 0;
  std::optional<bool> orientable;  // set for valid 2-surfaces only
  std::vector<DigitalSpace> boundary_components;
};

// S^0: a disconnected graph with just two points.
bool is_zero_sphere(const DigitalSpace& g);

// Digital n-surface: S^0 for n=0; for n>=1 a nonempty connected graph in
// which every point's rim is an (n-1)-surface. The n=1 case uses the
// degree-2 shortcut (connected, >=4 points, all degrees 2); rim verdicts
// are memoized across the recursion.
bool is_n_surface(const DigitalSpace& g, int n);

// Digital n-ball convention used for boundary classification:
//   n=0: a single point;
//   n=1: an induced path with >=2 points;
//   n>=2: connected, every point interior or boundary at dimension n,
//         boundary nonempty, and (for n=2) Euler characteristic 1.
bool is_n_ball(const DigitalSpace& g, int n);

// Interior iff rim(v) is an (n-1)-surface; boundary iff rim(v) is an
// (n-1)-ball; defective otherwise. Throws on unknown point.
PointClass classify_point(const DigitalSpace& g, PointId v, int n);

// Classifies every point and assembles the invariants. is_surface is true
// iff no point is defective and the space is nonempty connected. For n=2
// valid surfaces, orientability is computed from the triangle complex.
SurfaceReport surface_with_boundary(const DigitalSpace& g, int n);

// All 3-cliques, each once as an increasing triple, sorted.
std::vector<std::array<PointId, 3>> triangles(const DigitalSpace& g);

// V - E + T with T the triangle count.
long long euler_characteristic(const DigitalSpace& g);

// Orientability of a 2-surface (with or without boundary): true iff the
// triangles admit a consistent orientation. Verifies first that every
// edge lies in exactly 2 triangles, or exactly 1 for boundary-boundary
// edges; throws std::invalid_argument otherwise.
bool is_orientable(const DigitalSpace& g);

}  // namespace digitop
