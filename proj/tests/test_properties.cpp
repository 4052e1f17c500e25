#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "digitop/catalog.hpp"
#include "digitop/parabolic.hpp"

using namespace digitop;
namespace pb = digitop::parabolic;

namespace {

// Random valid coefficient matrix: lazy_uniform with a random weight,
// then random mass moves within each column's support. Column sums,
// nonnegativity and ball support are preserved; symmetry is not.
pb::CoefficientMatrix random_valid_matrix(const DigitalSpace& g, std::mt19937& rng) {
  int max_deg = 1;
  for (PointId v : g.points()) max_deg = std::max(max_deg, g.degree(v));
  std::uniform_real_distribution<double> wdist(0.01, 1.0 / max_deg);
  auto c = pb::CoefficientMatrix::lazy_uniform(g, wdist(rng));

  pb::Matrix m = c.dense();
  std::uniform_int_distribution<Eigen::Index> col(0, c.size() - 1);
  std::uniform_real_distribution<double> frac(0.0, 1.0);
  for (int moves = 0; moves < 3 * c.size(); ++moves) {
    Eigen::Index k = col(rng);
    std::vector<Eigen::Index> support;
    for (Eigen::Index p = 0; p < c.size(); ++p) {
      if (m(p, k) > 0.0) support.push_back(p);
    }
    if (support.size() < 2) continue;
    std::uniform_int_distribution<std::size_t> pick(0, support.size() - 1);
    Eigen::Index from = support[pick(rng)];
    Eigen::Index to = support[pick(rng)];
    if (from == to) continue;
    double delta = frac(rng) * m(from, k);
    m(from, k) -= delta;
    m(to, k) += delta;
  }

  std::vector<std::tuple<PointId, PointId, double>> entries;
  for (Eigen::Index p = 0; p < c.size(); ++p) {
    for (Eigen::Index k = 0; k < c.size(); ++k) {
      if (m(p, k) != 0.0) entries.emplace_back(c.label_of(p), c.label_of(k), m(p, k));
    }
  }
  return pb::CoefficientMatrix::from_entries(g, entries);
}

pb::Field random_field(const pb::CoefficientMatrix& c, std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  pb::Field f;
  f.values.resize(c.size());
  for (Eigen::Index i = 0; i < c.size(); ++i) f.values(i) = dist(rng);
  return f;
}

}  // namespace

TEST_CASE("randomized invariants on catalog spaces") {
  std::vector<DigitalSpace> spaces = {
      catalog::build_moebius_12(), catalog::build_min_sphere(2),
      catalog::build_cycle(8), catalog::build_ball(2),
      catalog::build_tri_grid(4, 4)};
  std::mt19937 rng(20240817);

  const int trials = 250;
  for (int trial = 0; trial < trials; ++trial) {
    const auto& g = spaces[static_cast<std::size_t>(trial) % spaces.size()];
    auto c = random_valid_matrix(g, rng);
    REQUIRE(pb::validate(c).valid);
    auto f = random_field(c, rng);

    // norm monotonicity (stability) and sum conservation per step
    auto f1 = pb::step(c, f);
    CHECK(pb::l1_norm(f1) <= pb::l1_norm(f) + 1e-12);
    CHECK(std::abs(f1.values.sum() - f.values.sum()) <= 1e-12 * std::max(1.0, std::abs(f.values.sum())));

    // sparse and dense routes agree
    auto fd = pb::step_dense(c, f);
    CHECK((f1.values - fd.values).cwiseAbs().maxCoeff() <= 1e-12);

    // spectrum stays in the closed unit disc
    if (trial % 10 == 0) {
      Eigen::EigenSolver<pb::Matrix> es(c.dense());
      REQUIRE(es.info() == Eigen::Success);
      for (Eigen::Index s = 0; s < c.size(); ++s) {
        CHECK(std::abs(es.eigenvalues()(s)) <= 1.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("random trajectories stay stable and conserved") {
  std::mt19937 rng(7);
  auto g = catalog::build_moebius_12();
  for (int trial = 0; trial < 50; ++trial) {
    auto c = random_valid_matrix(g, rng);
    auto traj = pb::run(c, random_field(c, rng), nullptr, 40);
    CHECK(pb::check_stability(traj).stable);
    CHECK(pb::check_conservation(traj).conserved);
  }
}
