#include <doctest.h>

#include <algorithm>

#include "digitop/catalog.hpp"
#include "digitop/digital_space.hpp"

using namespace digitop;

namespace {

DigitalSpace zero_sphere() { return DigitalSpace::make({1, 2}, {}); }

DigitalSpace four_cycle() {
  return DigitalSpace::make({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
}

}  // namespace

TEST_CASE("make_space normalizes and validates") {
  auto g = DigitalSpace::make({3, 1, 2}, {{1, 2}, {2, 1}, {2, 3}});
  CHECK(g.points() == std::vector<PointId>{1, 2, 3});
  CHECK(g.edge_count() == 2);  // deduplicated
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(1, 3));

  CHECK_THROWS_AS(DigitalSpace::make({1, 1}, {}), SpaceError);
  CHECK_THROWS_AS(DigitalSpace::make({1, 2}, {{1, 1}}), SpaceError);
  CHECK_THROWS_AS(DigitalSpace::make({1, 2}, {{1, 3}}), SpaceError);
  CHECK_THROWS_AS(DigitalSpace::make({0, 1}, {}), SpaceError);

  try {
    DigitalSpace::make({1, 2}, {{2, 2}});
    FAIL("expected SpaceError");
  } catch (const SpaceError& e) {
    CHECK(e.kind() == SpaceErrorKind::SelfLoop);
  }
}

TEST_CASE("rim and ball") {
  auto s0 = zero_sphere();
  CHECK(rim(s0, 1).empty());
  CHECK(ball(s0, 1).points() == std::vector<PointId>{1});

  auto c4 = four_cycle();
  auto r = rim(c4, 1);
  CHECK(r.points() == std::vector<PointId>{2, 4});
  CHECK(r.edge_count() == 0);  // cycle neighbors non-adjacent

  auto b = ball(c4, 1);
  CHECK(b.points() == std::vector<PointId>{1, 2, 4});
  CHECK(b.edge_count() == 2);  // 3-point path centered at 1

  CHECK_THROWS_AS(rim(c4, 99), SpaceError);
}

TEST_CASE("rim of octahedron vertex is an induced 4-cycle") {
  auto oct = catalog::build_min_sphere(2);
  for (PointId v : oct.points()) {
    auto r = rim(oct, v);
    CHECK(r.point_count() == 4);
    CHECK(r.edge_count() == 4);
    for (PointId w : r.points()) CHECK(r.degree(w) == 2);
  }
  for (PointId v : oct.points()) {
    auto b = ball(oct, v);
    CHECK(b.point_count() == 5);
    CHECK(b.degree(v) == 4);  // cone apex over the 4-cycle
  }
}

TEST_CASE("join") {
  auto empty = DigitalSpace::make({}, {});
  auto c4 = four_cycle();
  CHECK(join(empty, c4) == c4);

  // two S^0 copies fully cross-connected give a 4-cycle
  auto j = join(zero_sphere(), zero_sphere());
  CHECK(j.point_count() == 4);
  CHECK(j.edge_count() == 4);
  for (PointId v : j.points()) CHECK(j.degree(v) == 2);

  // S^0 * 4-cycle = octahedron
  auto oct = join(zero_sphere(), four_cycle());
  CHECK(oct.point_count() == 6);
  CHECK(oct.edge_count() == 12);
}

TEST_CASE("join size and degree arithmetic") {
  auto g = catalog::build_cycle(5);
  auto h = catalog::build_min_sphere(1);
  auto j = join(g, h);
  CHECK(j.point_count() == g.point_count() + h.point_count());
  CHECK(j.edge_count() ==
        g.edge_count() + h.edge_count() + g.point_count() * h.point_count());
  for (PointId v : g.points()) {
    CHECK(j.degree(v) == g.degree(v) + static_cast<int>(h.point_count()));
  }
}

TEST_CASE("connected components") {
  CHECK(connected_components(zero_sphere()).size() == 2);
  CHECK(connected_components(four_cycle()).size() == 1);
  CHECK(connected_components(catalog::build_moebius_12()).size() == 1);

  // partition: each point appears exactly once, components ordered by
  // smallest label
  auto g = DigitalSpace::make({1, 2, 3, 4, 5}, {{2, 3}, {4, 5}});
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].points() == std::vector<PointId>{1});
  CHECK(comps[1].points() == std::vector<PointId>{2, 3});
  CHECK(comps[2].points() == std::vector<PointId>{4, 5});
  std::size_t total = 0;
  for (const auto& c : comps) total += c.point_count();
  CHECK(total == g.point_count());
}

TEST_CASE("degrees on the Moebius strip match the coefficient support") {
  auto m = catalog::build_moebius_12();
  CHECK(m.degree(10) == 6);
  CHECK(m.degree(2) == 4);
}

TEST_CASE("subspaces preserve parent labels and pass validation") {
  auto m = catalog::build_moebius_12();
  auto sub = induced_subspace(m, {1, 2, 3, 10, 11});
  for (PointId v : sub.points()) CHECK(m.has_point(v));
  CHECK(sub.has_edge(1, 2));
  CHECK(sub.has_edge(10, 11));
  CHECK_FALSE(sub.has_edge(1, 3));
}
