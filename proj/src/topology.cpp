#include "digitop/topology.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace digitop {

namespace {

std::string canonical_key(const DigitalSpace& g) {
  std::ostringstream os;
  for (PointId v : g.points()) os << v << ',';
  os << '|';
  for (auto [a, b] : g.edge_list()) os << a << '-' << b << ';';
  return os.str();
}

using SurfaceCache = std::map<std::pair<int, std::string>, bool>;

bool is_n_surface_impl(const DigitalSpace& g, int n, SurfaceCache& cache) {
  if (n == 0) return is_zero_sphere(g);
  if (g.empty()) return false;
  if (n == 1) {
    // Equivalent shortcut: a connected graph with >=4 points and all
    // degrees 2 is a single chordless cycle; every rim is then two
    // non-adjacent points, i.e. S^0. A 3-cycle fails (adjacent rims).
    if (g.point_count() < 4 || !is_connected(g)) return false;
    for (PointId v : g.points()) {
      if (g.degree(v) != 2) return false;
    }
    return true;
  }
  if (!is_connected(g)) return false;
  for (PointId v : g.points()) {
    DigitalSpace r = rim(g, v);
    auto key = std::make_pair(n - 1, canonical_key(r));
    auto it = cache.find(key);
    bool ok;
    if (it != cache.end()) {
      ok = it->second;
    } else {
      ok = is_n_surface_impl(r, n - 1, cache);
      cache.emplace(std::move(key), ok);
    }
    if (!ok) return false;
  }
  return true;
}

bool is_induced_path(const DigitalSpace& g) {
  if (g.point_count() < 2 || !is_connected(g)) return false;
  if (g.edge_count() != g.point_count() - 1) return false;
  int leaves = 0;
  for (PointId v : g.points()) {
    int d = g.degree(v);
    if (d > 2) return false;
    if (d == 1) ++leaves;
  }
  return leaves == 2;
}

}  // namespace

bool is_zero_sphere(const DigitalSpace& g) {
  return g.point_count() == 2 && g.edge_count() == 0;
}

bool is_n_surface(const DigitalSpace& g, int n) {
  if (n < 0) return false;
  SurfaceCache cache;
  return is_n_surface_impl(g, n, cache);
}

bool is_n_ball(const DigitalSpace& g, int n) {
  if (n == 0) return g.point_count() == 1;
  if (n == 1) return is_induced_path(g);
  if (g.empty() || !is_connected(g)) return false;
  bool any_boundary = false;
  for (PointId v : g.points()) {
    PointClass c = classify_point(g, v, n);
    if (c == PointClass::Defective) return false;
    if (c == PointClass::Boundary) any_boundary = true;
  }
  if (!any_boundary) return false;
  if (n == 2) return euler_characteristic(g) == 1;
  return true;
}

PointClass classify_point(const DigitalSpace& g, PointId v, int n) {
  DigitalSpace r = rim(g, v);
  if (is_n_surface(r, n - 1)) return PointClass::Interior;
  if (is_n_ball(r, n - 1)) return PointClass::Boundary;
  return PointClass::Defective;
}

std::vector<std::array<PointId, 3>> triangles(const DigitalSpace& g) {
  std::vector<std::array<PointId, 3>> out;
  for (auto [a, b] : g.edge_list()) {
    for (PointId c : g.neighbors(b)) {
      if (c > b && g.has_edge(a, c)) out.push_back({a, b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long euler_characteristic(const DigitalSpace& g) {
  return static_cast<long long>(g.point_count()) -
         static_cast<long long>(g.edge_count()) +
         static_cast<long long>(triangles(g).size());
}

SurfaceReport surface_with_boundary(const DigitalSpace& g, int n) {
  SurfaceReport rep;
  rep.dimension = n;
  bool any_defective = false;
  std::vector<PointId> boundary_pts;
  for (PointId v : g.points()) {
    PointClass c = classify_point(g, v, n);
    rep.classes[v] = c;
    if (c == PointClass::Defective) any_defective = true;
    if (c == PointClass::Boundary) boundary_pts.push_back(v);
  }
  rep.is_surface = !any_defective && !g.empty() && is_connected(g);
  rep.triangle_count = triangles(g).size();
  rep.euler = static_cast<long long>(g.point_count()) -
              static_cast<long long>(g.edge_count()) +
              static_cast<long long>(rep.triangle_count);
  if (!boundary_pts.empty()) {
    rep.boundary_components =
        connected_components(induced_subspace(g, boundary_pts));
  }
  if (rep.is_surface && n == 2) rep.orientable = is_orientable(g);
  return rep;
}

bool is_orientable(const DigitalSpace& g) {
  auto tris = triangles(g);
  if (tris.empty()) return true;

  // Each undirected edge must lie in 1 or 2 triangles (1 on the boundary
  // circle, 2 in the interior); anything else is not a 2-surface.
  std::map<std::pair<PointId, PointId>, std::vector<int>> edge_tris;
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const auto& t = tris[i];
    edge_tris[{t[0], t[1]}].push_back(static_cast<int>(i));
    edge_tris[{t[0], t[2]}].push_back(static_cast<int>(i));
    edge_tris[{t[1], t[2]}].push_back(static_cast<int>(i));
  }
  for (const auto& [e, ts] : edge_tris) {
    if (ts.size() > 2) {
      throw std::invalid_argument(
          "edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
          " lies in " + std::to_string(ts.size()) +
          " triangles; not a 2-surface");
    }
  }

  // Orientation flag per triangle: +1 means the cycle t0->t1->t2->t0.
  // Two triangles sharing an edge are consistent when they traverse the
  // shared edge in opposite directions.
  std::vector<int> orient(tris.size(), 0);
  auto traverses_forward = [&](int ti, PointId u, PointId w) {
    // true if triangle ti, with orientation +1, contains directed edge u->w
    const auto& t = tris[static_cast<std::size_t>(ti)];
    return (t[0] == u && t[1] == w) || (t[1] == u && t[2] == w) ||
           (t[2] == u && t[0] == w);
  };
  for (std::size_t start = 0; start < tris.size(); ++start) {
    if (orient[start] != 0) continue;
    orient[start] = 1;
    std::queue<int> q;
    q.push(static_cast<int>(start));
    while (!q.empty()) {
      int ti = q.front();
      q.pop();
      const auto& t = tris[static_cast<std::size_t>(ti)];
      for (auto [u, w] : {std::pair{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}) {
        for (int tj : edge_tris.at({u, w})) {
          if (tj == ti) continue;
          bool same_dir = traverses_forward(ti, u, w) == traverses_forward(tj, u, w);
          int needed = same_dir ? -orient[ti] : orient[ti];
          if (orient[tj] == 0) {
            orient[tj] = needed;
            q.push(tj);
          } else if (orient[tj] != needed) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace digitop
