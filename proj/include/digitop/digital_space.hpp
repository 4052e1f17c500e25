#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace digitop {

using PointId = int;  // positive integer labels, preserved verbatim

enum class SpaceErrorKind {
  NonPositiveLabel,
  DuplicatePoint,
  SelfLoop,
  DanglingEndpoint,
  UnknownPoint,
};

class SpaceError : public std::invalid_argument {
 public:
  SpaceError(SpaceErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  SpaceErrorKind kind() const { return kind_; }

 private:
  SpaceErrorKind kind_;
};

// A digital space: a finite simple undirected graph. Points carry opaque
// positive integer labels that survive every operation (subspaces keep the
// parent's labels). Immutable after construction.
class DigitalSpace {
 public:
  DigitalSpace() = default;

  // Validates and normalizes: points sorted, neighbor lists sorted, edges
  // deduplicated. Throws SpaceError on duplicate labels, self-loops or
  // edge endpoints that are not listed points.
  static DigitalSpace make(std::vector<PointId> points,
                           const std::vector<std::pair<PointId, PointId>>& edges,
                           std::string name = {});

  const std::vector<PointId>& points() const { return points_; }
  std::size_t point_count() const { return points_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return points_.empty(); }

  bool has_point(PointId v) const { return adj_.count(v) != 0; }
  bool has_edge(PointId a, PointId b) const;

  // Sorted neighbor list. Throws SpaceError(UnknownPoint) if v is not in
  // the space.
  const std::vector<PointId>& neighbors(PointId v) const;
  int degree(PointId v) const { return static_cast<int>(neighbors(v).size()); }

  // Canonical edge list: each edge once as (min,max), lexicographically
  // sorted. This is the equality and serialization form.
  std::vector<std::pair<PointId, PointId>> edge_list() const;

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  friend bool operator==(const DigitalSpace& a, const DigitalSpace& b) {
    return a.points_ == b.points_ && a.edge_list() == b.edge_list();
  }

 private:
  std::vector<PointId> points_;
  std::unordered_map<PointId, std::vector<PointId>> adj_;
  std::size_t edge_count_ = 0;
  std::string name_;
};

// Induced subspace on the given points (all parent edges between them).
DigitalSpace induced_subspace(const DigitalSpace& g, std::vector<PointId> keep);

// Rim O(v): induced subspace on the neighbors of v, excluding v.
DigitalSpace rim(const DigitalSpace& g, PointId v);

// Ball U(v) = O(v) plus v itself.
DigitalSpace ball(const DigitalSpace& g, PointId v);

// Join G*H: disjoint union plus all cross edges. On label collision H is
// relabeled by adding max label of G; the relabeling is recorded in the
// result's name.
DigitalSpace join(const DigitalSpace& g, const DigitalSpace& h);

// Maximal connected induced subspaces, ordered by smallest contained label.
std::vector<DigitalSpace> connected_components(const DigitalSpace& g);

bool is_connected(const DigitalSpace& g);

}  // namespace digitop
