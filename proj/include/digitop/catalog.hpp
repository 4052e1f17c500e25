#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "digitop/digital_space.hpp"
#include "digitop/topology.hpp"

namespace digitop::catalog {

// Induced k-cycle 1-2-...-k-1. Throws for k < 4 (a 3-cycle is not a
// digital 1-sphere).
DigitalSpace build_cycle(int k);

// Minimal digital n-sphere: iterated join of n+1 copies of S^0, so
// 2(n+1) points. 0 <= n <= 4.
DigitalSpace build_min_sphere(int n);

// Minimal digital n-ball: cone of one apex point over the minimal
// (n-1)-sphere. 1 <= n <= 4. The apex is the highest label.
DigitalSpace build_ball(int n);

// w x h lattice with 4-neighbor adjacency. Not a digital 2-surface: every
// interior rim is four non-adjacent points. w, h >= 3.
DigitalSpace build_square_grid(int w, int h);

// w x h lattice plus one diagonal per cell, all parallel (lower-left to
// upper-right), so interior rims are induced 6-cycles. w, h >= 3.
DigitalSpace build_tri_grid(int w, int h);

// The 12-point Moebius strip: boundary 8-cycle on points 1-8, interior
// 4-cycle on 9-12, cross edges 9-{1,4,5,8}, 10-{1,2,5,6}, 11-{2,3,6,7},
// 12-{3,4,7,8}. 28 edges; chi = 0; non-orientable; one boundary circle.
DigitalSpace build_moebius_12();

struct SearchSpec {
  int point_count = 11;
  // Target degree per point label (1-based); empty means the default
  // 11-point profile deg(1)=4, deg(2..5)=deg(10)=deg(11)=6, deg(6..9)=5.
  std::map<PointId, int> degrees;
  std::uint64_t node_budget = 500'000'000;
  // When set, the found space is persisted here (and reloaded on rerun).
  std::string cache_path;
};

SearchSpec default_projective_spec();

struct SearchStats {
  std::uint64_t nodes_explored = 0;
  bool from_cache = false;
};

// Deterministic backtracking search for an 11-point closed digital
// 2-surface matching the degree spec. Every rim an induced cycle of
// length >= 4 forces chi = 1 and non-orientability at these counts.
// Returns the lexicographically first solution under the fixed edge
// ordering. Throws on inconsistent spec or exhausted budget.
DigitalSpace find_projective_plane_11(const SearchSpec& spec,
                                      SearchStats* stats = nullptr);

struct ExpectedSummary {
  int dimension = 2;
  bool is_surface = true;  // no defective points, connected
  std::optional<long long> euler;
  std::optional<bool> orientable;
  std::optional<std::size_t> boundary_component_count;
};

struct CatalogEntry {
  std::string name;
  DigitalSpace space;
  ExpectedSummary expected;
};

// All named catalog spaces. include_projective runs (or loads) the
// projective-plane search, which is slower than the closed-form builders.
std::vector<CatalogEntry> entries(bool include_projective = false,
                                  const std::string& cache_dir = {});

// Builds the named space ("s0", "cycle-8", "min-sphere-2", "ball-3",
// "square-grid-5x5", "tri-grid-4x4", "moebius12", "projective-plane-11").
// Throws std::invalid_argument for unknown names.
DigitalSpace build_by_name(const std::string& name,
                           const std::string& cache_dir = {});

std::vector<std::string> known_names();

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Revalidates every entry against its expected summary via the topology
// module; failures are content, not errors.
std::vector<SelftestResult> catalog_selftest(
    const std::vector<CatalogEntry>& entries);

}  // namespace digitop::catalog
