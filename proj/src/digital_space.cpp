#include "digitop/digital_space.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_set>

namespace digitop {

DigitalSpace DigitalSpace::make(std::vector<PointId> points,
                                const std::vector<std::pair<PointId, PointId>>& edges,
                                std::string name) {
  DigitalSpace g;
  std::sort(points.begin(), points.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] <= 0) {
      throw SpaceError(SpaceErrorKind::NonPositiveLabel,
                       "point label must be positive: " + std::to_string(points[i]));
    }
    if (i > 0 && points[i] == points[i - 1]) {
      throw SpaceError(SpaceErrorKind::DuplicatePoint,
                       "duplicate point label: " + std::to_string(points[i]));
    }
    g.adj_.emplace(points[i], std::vector<PointId>{});
  }
  g.points_ = std::move(points);

  std::set<std::pair<PointId, PointId>> seen;
  for (auto [a, b] : edges) {
    if (a == b) {
      throw SpaceError(SpaceErrorKind::SelfLoop,
                       "self-loop at point " + std::to_string(a));
    }
    for (PointId v : {a, b}) {
      if (!g.adj_.count(v)) {
        throw SpaceError(SpaceErrorKind::DanglingEndpoint,
                         "edge endpoint " + std::to_string(v) + " is not a point");
      }
    }
    auto e = std::minmax(a, b);
    if (!seen.insert({e.first, e.second}).second) continue;
    g.adj_[e.first].push_back(e.second);
    g.adj_[e.second].push_back(e.first);
  }
  g.edge_count_ = seen.size();
  for (auto& [v, nbrs] : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  g.name_ = std::move(name);
  return g;
}

bool DigitalSpace::has_edge(PointId a, PointId b) const {
  auto it = adj_.find(a);
  if (it == adj_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), b);
}

const std::vector<PointId>& DigitalSpace::neighbors(PointId v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) {
    throw SpaceError(SpaceErrorKind::UnknownPoint,
                     "unknown point " + std::to_string(v));
  }
  return it->second;
}

std::vector<std::pair<PointId, PointId>> DigitalSpace::edge_list() const {
  std::vector<std::pair<PointId, PointId>> out;
  out.reserve(edge_count_);
  for (PointId v : points_) {
    for (PointId w : adj_.at(v)) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DigitalSpace induced_subspace(const DigitalSpace& g, std::vector<PointId> keep) {
  std::unordered_set<PointId> in(keep.begin(), keep.end());
  std::vector<std::pair<PointId, PointId>> edges;
  for (PointId v : keep) {
    for (PointId w : g.neighbors(v)) {
      if (v < w && in.count(w)) edges.emplace_back(v, w);
    }
  }
  return DigitalSpace::make(std::move(keep), edges);
}

DigitalSpace rim(const DigitalSpace& g, PointId v) {
  return induced_subspace(g, g.neighbors(v));
}

DigitalSpace ball(const DigitalSpace& g, PointId v) {
  std::vector<PointId> keep = g.neighbors(v);
  keep.push_back(v);
  return induced_subspace(g, std::move(keep));
}

DigitalSpace join(const DigitalSpace& g, const DigitalSpace& h) {
  PointId offset = 0;
  bool collision = false;
  for (PointId v : h.points()) {
    if (g.has_point(v)) { collision = true; break; }
  }
  if (collision) {
    offset = g.points().empty() ? 0 : g.points().back();
  }

  std::vector<PointId> points = g.points();
  for (PointId v : h.points()) points.push_back(v + offset);

  std::vector<std::pair<PointId, PointId>> edges = g.edge_list();
  for (auto [a, b] : h.edge_list()) edges.emplace_back(a + offset, b + offset);
  for (PointId a : g.points()) {
    for (PointId b : h.points()) edges.emplace_back(a, b + offset);
  }

  std::string name;
  if (collision) name = "join(relabel offset " + std::to_string(offset) + ")";
  return DigitalSpace::make(std::move(points), edges, std::move(name));
}

std::vector<DigitalSpace> connected_components(const DigitalSpace& g) {
  std::unordered_set<PointId> visited;
  std::vector<DigitalSpace> out;
  for (PointId start : g.points()) {
    if (visited.count(start)) continue;
    std::vector<PointId> comp;
    std::queue<PointId> q;
    q.push(start);
    visited.insert(start);
    while (!q.empty()) {
      PointId v = q.front();
      q.pop();
      comp.push_back(v);
      for (PointId w : g.neighbors(v)) {
        if (visited.insert(w).second) q.push(w);
      }
    }
    out.push_back(induced_subspace(g, std::move(comp)));
  }
  return out;
}

bool is_connected(const DigitalSpace& g) {
  if (g.empty()) return false;
  return connected_components(g).size() == 1;
}

}  // namespace digitop
