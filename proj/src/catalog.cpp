#include "digitop/catalog.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "digitop/io.hpp"

namespace digitop::catalog {

namespace {

DigitalSpace zero_sphere() {
  return DigitalSpace::make({1, 2}, {}, "s0");
}

PointId grid_label(int w, int i, int j) { return j * w + i + 1; }

std::uint64_t spec_digest(const SearchSpec& spec, const std::map<PointId, int>& degrees) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(spec.point_count));
  for (const auto& [p, d] : degrees) {
    mix(static_cast<std::uint64_t>(p));
    mix(static_cast<std::uint64_t>(d));
  }
  return h;
}

// Accepting oracle: connected and every rim an induced cycle of length
// >= 4 (a digital 1-sphere), i.e. a closed digital 2-surface.
bool is_closed_2_surface(const DigitalSpace& g) {
  if (g.empty() || !is_connected(g)) return false;
  for (PointId v : g.points()) {
    if (!is_n_surface(rim(g, v), 1)) return false;
  }
  return true;
}

struct PlaneSearch {
  int n;
  std::vector<int> target;          // target degree, 0-based vertex index
  std::vector<std::pair<int, int>> pairs;  // lexicographic
  std::vector<std::uint32_t> adj;   // adjacency bitsets
  std::vector<int> deg;
  std::vector<int> undecided;       // undecided pairs per vertex
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  std::vector<std::pair<PointId, PointId>> solution;
  bool found = false;

  int common(int a, int b) const {
    return std::popcount(adj[static_cast<std::size_t>(a)] &
                         adj[static_cast<std::size_t>(b)]);
  }

  bool leaf_ok() {
    for (int v = 0; v < n; ++v) {
      if (deg[static_cast<std::size_t>(v)] != target[static_cast<std::size_t>(v)]) return false;
    }
    std::vector<PointId> pts(static_cast<std::size_t>(n));
    std::iota(pts.begin(), pts.end(), 1);
    std::vector<std::pair<PointId, PointId>> edges;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (adj[static_cast<std::size_t>(a)] >> b & 1u) edges.emplace_back(a + 1, b + 1);
      }
    }
    DigitalSpace g = DigitalSpace::make(pts, edges);
    if (!is_closed_2_surface(g)) return false;
    solution = std::move(edges);
    return true;
  }

  bool search(std::size_t idx) {
    if (++nodes > budget) {
      throw std::runtime_error("projective-plane search budget exhausted after " +
                               std::to_string(nodes) + " nodes");
    }
    if (idx == pairs.size()) return leaf_ok();
    auto [u, v] = pairs[idx];
    auto su = static_cast<std::size_t>(u);
    auto sv = static_cast<std::size_t>(v);
    --undecided[su];
    --undecided[sv];

    // Include the edge: degrees must have room and no edge may exceed two
    // triangles (an edge of a closed 2-surface lies in exactly two).
    if (deg[su] < target[su] && deg[sv] < target[sv]) {
      adj[su] |= 1u << v;
      adj[sv] |= 1u << u;
      ++deg[su];
      ++deg[sv];
      bool ok = common(u, v) <= 2;
      if (ok) {
        std::uint32_t shared = adj[su] & adj[sv];
        while (shared && ok) {
          int w = std::countr_zero(shared);
          shared &= shared - 1;
          ok = common(u, w) <= 2 && common(v, w) <= 2;
        }
      }
      if (ok && search(idx + 1)) return true;
      adj[su] &= ~(1u << v);
      adj[sv] &= ~(1u << u);
      --deg[su];
      --deg[sv];
    }

    // Exclude: only if the remaining undecided pairs can still reach the
    // degree targets.
    if (deg[su] + undecided[su] >= target[su] &&
        deg[sv] + undecided[sv] >= target[sv]) {
      if (search(idx + 1)) return true;
    }
    ++undecided[su];
    ++undecided[sv];
    return false;
  }
};

}  // namespace

DigitalSpace build_cycle(int k) {
  if (k < 4) {
    throw std::invalid_argument("cycle needs k >= 4 (a 3-cycle is not a digital 1-sphere)");
  }
  std::vector<PointId> pts(static_cast<std::size_t>(k));
  std::iota(pts.begin(), pts.end(), 1);
  std::vector<std::pair<PointId, PointId>> edges;
  for (int i = 1; i < k; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(k, 1);
  return DigitalSpace::make(std::move(pts), edges, "cycle-" + std::to_string(k));
}

DigitalSpace build_min_sphere(int n) {
  if (n < 0 || n > 4) throw std::invalid_argument("min sphere supports 0 <= n <= 4");
  DigitalSpace g = zero_sphere();
  for (int i = 0; i < n; ++i) g = join(g, zero_sphere());
  g.set_name("min-sphere-" + std::to_string(n));
  return g;
}

DigitalSpace build_ball(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("ball supports 1 <= n <= 4");
  DigitalSpace sphere = build_min_sphere(n - 1);
  DigitalSpace apex = DigitalSpace::make({1}, {});
  DigitalSpace g = join(sphere, apex);  // apex relabeled to the highest label
  g.set_name("ball-" + std::to_string(n));
  return g;
}

DigitalSpace build_square_grid(int w, int h) {
  if (w < 3 || h < 3) throw std::invalid_argument("grid needs w, h >= 3");
  std::vector<PointId> pts(static_cast<std::size_t>(w * h));
  std::iota(pts.begin(), pts.end(), 1);
  std::vector<std::pair<PointId, PointId>> edges;
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < w; ++i) {
      if (i + 1 < w) edges.emplace_back(grid_label(w, i, j), grid_label(w, i + 1, j));
      if (j + 1 < h) edges.emplace_back(grid_label(w, i, j), grid_label(w, i, j + 1));
    }
  }
  return DigitalSpace::make(std::move(pts), edges,
                            "square-grid-" + std::to_string(w) + "x" + std::to_string(h));
}

DigitalSpace build_tri_grid(int w, int h) {
  if (w < 3 || h < 3) throw std::invalid_argument("grid needs w, h >= 3");
  std::vector<PointId> pts(static_cast<std::size_t>(w * h));
  std::iota(pts.begin(), pts.end(), 1);
  std::vector<std::pair<PointId, PointId>> edges;
  for (int j = 0; j < h; ++j) {
    for (int i = 0; i < w; ++i) {
      if (i + 1 < w) edges.emplace_back(grid_label(w, i, j), grid_label(w, i + 1, j));
      if (j + 1 < h) edges.emplace_back(grid_label(w, i, j), grid_label(w, i, j + 1));
      if (i + 1 < w && j + 1 < h) {
        edges.emplace_back(grid_label(w, i, j), grid_label(w, i + 1, j + 1));
      }
    }
  }
  return DigitalSpace::make(std::move(pts), edges,
                            "tri-grid-" + std::to_string(w) + "x" + std::to_string(h));
}

DigitalSpace build_moebius_12() {
  std::vector<PointId> pts(12);
  std::iota(pts.begin(), pts.end(), 1);
  std::vector<std::pair<PointId, PointId>> edges = {
      // boundary 8-cycle
      {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 1},
      // interior 4-cycle
      {9, 10}, {10, 11}, {11, 12}, {12, 9},
      // cross edges
      {9, 1}, {9, 4}, {9, 5}, {9, 8},
      {10, 1}, {10, 2}, {10, 5}, {10, 6},
      {11, 2}, {11, 3}, {11, 6}, {11, 7},
      {12, 3}, {12, 4}, {12, 7}, {12, 8},
  };
  return DigitalSpace::make(std::move(pts), edges, "moebius12");
}

SearchSpec default_projective_spec() {
  SearchSpec spec;
  spec.point_count = 11;
  for (PointId p = 1; p <= 11; ++p) {
    int d = 6;
    if (p == 1) d = 4;
    else if (p >= 6 && p <= 9) d = 5;
    spec.degrees[p] = d;
  }
  return spec;
}

DigitalSpace find_projective_plane_11(const SearchSpec& spec, SearchStats* stats) {
  const int n = spec.point_count;
  if (n < 5 || n > 32) throw std::invalid_argument("point count out of range");
  std::map<PointId, int> degrees = spec.degrees;
  if (degrees.empty()) degrees = default_projective_spec().degrees;
  if (static_cast<int>(degrees.size()) != n) {
    throw std::invalid_argument("degree spec must cover every point");
  }
  long long sum = 0;
  for (const auto& [p, d] : degrees) {
    if (p < 1 || p > n) throw std::invalid_argument("degree spec names unknown point");
    if (d < 4 || d > n - 1) {
      throw std::invalid_argument(
          "inconsistent spec: degree " + std::to_string(d) + " at point " +
          std::to_string(p) + " (rims must be induced cycles of length >= 4)");
    }
    sum += d;
  }
  if (sum % 2 != 0) throw std::invalid_argument("inconsistent spec: odd degree sum");

  if (!spec.cache_path.empty() && std::filesystem::exists(spec.cache_path)) {
    DigitalSpace g = io::read_space(spec.cache_path);
    bool ok = static_cast<int>(g.point_count()) == n && is_closed_2_surface(g);
    if (ok) {
      for (const auto& [p, d] : degrees) ok = ok && g.degree(p) == d;
    }
    if (ok) {
      if (stats) stats->from_cache = true;
      return g;
    }
    // stale or corrupted cache: fall through and re-search
  }

  PlaneSearch s;
  s.n = n;
  s.target.resize(static_cast<std::size_t>(n));
  for (const auto& [p, d] : degrees) s.target[static_cast<std::size_t>(p - 1)] = d;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) s.pairs.emplace_back(a, b);
  }
  s.adj.assign(static_cast<std::size_t>(n), 0);
  s.deg.assign(static_cast<std::size_t>(n), 0);
  s.undecided.assign(static_cast<std::size_t>(n), n - 1);
  s.budget = spec.node_budget;

  bool found = s.search(0);
  if (stats) stats->nodes_explored = s.nodes;
  if (!found) {
    throw std::runtime_error("no graph matches the degree spec (explored " +
                             std::to_string(s.nodes) + " nodes)");
  }

  std::vector<PointId> pts(static_cast<std::size_t>(n));
  std::iota(pts.begin(), pts.end(), 1);
  DigitalSpace g = DigitalSpace::make(std::move(pts), s.solution, "projective-plane-11");
  if (!spec.cache_path.empty()) io::write_space(spec.cache_path, g);
  return g;
}

std::vector<CatalogEntry> entries(bool include_projective, const std::string& cache_dir) {
  std::vector<CatalogEntry> out;
  auto add = [&](DigitalSpace g, ExpectedSummary exp) {
    out.push_back({g.name(), std::move(g), exp});
  };
  add(zero_sphere(), {0, true, 2, std::nullopt, 0});
  add(build_cycle(4), {1, true, 0, std::nullopt, 0});
  add(build_cycle(8), {1, true, 0, std::nullopt, 0});
  add(build_min_sphere(2), {2, true, 2, true, 0});
  add(build_min_sphere(3), {3, true, std::nullopt, std::nullopt, 0});
  add(build_ball(1), {1, true, 1, std::nullopt, 2});
  add(build_ball(2), {2, true, 1, true, 1});
  add(build_ball(3), {3, true, std::nullopt, std::nullopt, 1});
  add(build_square_grid(5, 5), {2, false, -15, std::nullopt, std::nullopt});
  add(build_tri_grid(4, 4), {2, true, 1, true, 1});
  add(build_moebius_12(), {2, true, 0, false, 1});
  if (include_projective) {
    SearchSpec spec = default_projective_spec();
    if (!cache_dir.empty()) {
      std::ostringstream os;
      os << cache_dir << "/projective_plane_11_" << std::hex
         << spec_digest(spec, spec.degrees) << ".json";
      spec.cache_path = os.str();
    }
    add(find_projective_plane_11(spec), {2, true, 1, false, 0});
  }
  return out;
}

std::vector<std::string> known_names() {
  return {"s0",          "cycle-4",        "cycle-8",      "min-sphere-2",
          "min-sphere-3", "ball-1",        "ball-2",       "ball-3",
          "square-grid-5x5", "tri-grid-4x4", "moebius12",
          "projective-plane-11"};
}

DigitalSpace build_by_name(const std::string& name, const std::string& cache_dir) {
  if (name == "s0") return zero_sphere();
  if (name == "moebius12") return build_moebius_12();
  if (name == "projective-plane-11") {
    SearchSpec spec = default_projective_spec();
    if (!cache_dir.empty()) {
      std::ostringstream os;
      os << cache_dir << "/projective_plane_11_" << std::hex
         << spec_digest(spec, spec.degrees) << ".json";
      spec.cache_path = os.str();
    }
    return find_projective_plane_11(spec);
  }
  auto parse_suffix = [&](const std::string& prefix) -> std::optional<std::string> {
    if (name.rfind(prefix, 0) == 0) return name.substr(prefix.size());
    return std::nullopt;
  };
  if (auto s = parse_suffix("cycle-")) return build_cycle(std::stoi(*s));
  if (auto s = parse_suffix("min-sphere-")) return build_min_sphere(std::stoi(*s));
  if (auto s = parse_suffix("ball-")) return build_ball(std::stoi(*s));
  for (const char* prefix : {"square-grid-", "tri-grid-"}) {
    if (auto s = parse_suffix(prefix)) {
      auto x = s->find('x');
      if (x == std::string::npos) break;
      int w = std::stoi(s->substr(0, x));
      int h = std::stoi(s->substr(x + 1));
      return prefix == std::string("square-grid-") ? build_square_grid(w, h)
                                                   : build_tri_grid(w, h);
    }
  }
  throw std::invalid_argument("unknown catalog name: " + name);
}

std::vector<SelftestResult> catalog_selftest(const std::vector<CatalogEntry>& entries) {
  std::vector<SelftestResult> results;
  for (const auto& e : entries) {
    SelftestResult r{e.name, true, ""};
    std::ostringstream detail;
    const auto& exp = e.expected;
    if (exp.dimension == 0) {
      if (is_zero_sphere(e.space) != exp.is_surface) {
        r.passed = false;
        detail << "zero-sphere verdict mismatch; ";
      }
    } else {
      SurfaceReport rep = surface_with_boundary(e.space, exp.dimension);
      if (rep.is_surface != exp.is_surface) {
        r.passed = false;
        detail << "is_surface=" << rep.is_surface << " expected " << exp.is_surface << "; ";
      }
      if (exp.euler && rep.euler != *exp.euler) {
        r.passed = false;
        detail << "euler=" << rep.euler << " expected " << *exp.euler << "; ";
      }
      if (exp.orientable && (!rep.orientable || *rep.orientable != *exp.orientable)) {
        r.passed = false;
        detail << "orientability mismatch; ";
      }
      if (exp.boundary_component_count &&
          rep.boundary_components.size() != *exp.boundary_component_count) {
        r.passed = false;
        detail << "boundary components=" << rep.boundary_components.size()
               << " expected " << *exp.boundary_component_count << "; ";
      }
    }
    r.detail = detail.str();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace digitop::catalog
