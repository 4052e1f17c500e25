#include "digitop/parabolic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace digitop::parabolic {

Eigen::Index CoefficientMatrix::index_of(PointId p) const {
  auto it = index_.find(p);
  if (it == index_.end()) {
    throw std::invalid_argument("point " + std::to_string(p) + " not in bound space");
  }
  return it->second;
}

double CoefficientMatrix::coeff(PointId p, PointId k) const {
  return dense_(index_of(p), index_of(k));
}

CoefficientMatrix CoefficientMatrix::from_entries(
    const DigitalSpace& space,
    const std::vector<std::tuple<PointId, PointId, double>>& entries) {
  CoefficientMatrix c;
  c.space_ = space;
  c.labels_ = space.points();
  for (std::size_t i = 0; i < c.labels_.size(); ++i) {
    c.index_[c.labels_[i]] = static_cast<Eigen::Index>(i);
  }
  auto n = static_cast<Eigen::Index>(c.labels_.size());
  c.dense_ = Matrix::Zero(n, n);
  for (const auto& [p, k, v] : entries) {
    c.dense_(c.index_of(p), c.index_of(k)) = v;
  }
  c.rows_.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (c.dense_(i, j) != 0.0) c.rows_[static_cast<std::size_t>(i)].emplace_back(j, c.dense_(i, j));
    }
  }
  return c;
}

CoefficientMatrix CoefficientMatrix::lazy_uniform(const DigitalSpace& space, double w) {
  int max_deg = 0;
  for (PointId v : space.points()) max_deg = std::max(max_deg, space.degree(v));
  if (w <= 0.0 || (max_deg > 0 && w > 1.0 / max_deg)) {
    throw std::invalid_argument("lazy_uniform weight out of range (0, 1/max_degree]");
  }
  std::vector<std::tuple<PointId, PointId, double>> entries;
  for (PointId p : space.points()) {
    entries.emplace_back(p, p, 1.0 - w * space.degree(p));
    for (PointId s : space.neighbors(p)) entries.emplace_back(p, s, w);
  }
  return from_entries(space, entries);
}

ValidationReport validate(const CoefficientMatrix& c) {
  ValidationReport rep;
  const auto n = c.size();
  const auto& m = c.dense();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      double v = m(i, j);
      if (v == 0.0) continue;
      PointId p = c.label_of(i), k = c.label_of(j);
      if (v < 0.0) {
        rep.issues.push_back({"nonnegativity", p, k, v,
                              "c_{" + std::to_string(p) + "," + std::to_string(k) +
                                  "} is negative"});
      }
      if (p != k && !c.space().has_edge(p, k)) {
        rep.issues.push_back({"support", p, k, v,
                              "c_{" + std::to_string(p) + "," + std::to_string(k) +
                                  "} lies outside the closed ball U(v_p)"});
      }
    }
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    double s = m.col(j).sum();
    if (std::abs(s - 1.0) > 1e-12) {
      PointId k = c.label_of(j);
      rep.issues.push_back({"column-stochastic", 0, k, s,
                            "column " + std::to_string(k) + " sums to " +
                                std::to_string(s)});
    }
  }
  rep.valid = rep.issues.empty();
  return rep;
}

Field make_field(const CoefficientMatrix& c, const std::map<PointId, double>& init) {
  Field f;
  f.values = Vector::Zero(c.size());
  for (const auto& [p, v] : init) f.values(c.index_of(p)) = v;
  return f;
}

Field step(const CoefficientMatrix& c, const Field& f, const SourceTerm& q) {
  if (f.values.size() != c.size()) throw std::invalid_argument("field/matrix dimension mismatch");
  Field out;
  out.values = Vector::Zero(c.size());
  const auto& rows = c.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    double acc = 0.0;
    for (auto [j, v] : rows[i]) acc += v * f.values(j);
    if (q) acc += q(c.label_of(static_cast<Eigen::Index>(i)), f.t);
    out.values(static_cast<Eigen::Index>(i)) = acc;
  }
  out.t = f.t + 1;
  return out;
}

Field step_dense(const CoefficientMatrix& c, const Field& f, const SourceTerm& q) {
  if (f.values.size() != c.size()) throw std::invalid_argument("field/matrix dimension mismatch");
  Field out;
  out.values = c.dense() * f.values;
  if (q) {
    for (Eigen::Index i = 0; i < c.size(); ++i) out.values(i) += q(c.label_of(i), f.t);
  }
  out.t = f.t + 1;
  return out;
}

Trajectory run(const CoefficientMatrix& c, const Field& f0, const SourceTerm& q, int steps) {
  if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
  Trajectory traj;
  traj.labels = c.labels();
  traj.fields.reserve(static_cast<std::size_t>(steps) + 1);
  Field f = f0;
  traj.fields.push_back(f.values);
  for (int t = 0; t < steps; ++t) {
    f = step(c, f, q);
    traj.fields.push_back(f.values);
  }
  return traj;
}

double l1_norm(const Vector& v) { return v.cwiseAbs().sum(); }
double l1_norm(const Field& f) { return l1_norm(f.values); }

StabilityResult check_stability(const Trajectory& traj) {
  StabilityResult r;
  for (std::size_t t = 0; t + 1 < traj.fields.size(); ++t) {
    if (l1_norm(traj.fields[t + 1]) > l1_norm(traj.fields[t]) + 1e-12) {
      r.stable = false;
      r.first_violation = static_cast<int>(t);
      return r;
    }
  }
  return r;
}

ConservationResult check_conservation(const Trajectory& traj, const SourceTerm& q) {
  ConservationResult r;
  for (std::size_t t = 0; t + 1 < traj.fields.size(); ++t) {
    double expected = traj.fields[t].sum();
    if (q) {
      // Summing the update over p: columns sum to 1, so the sum grows by
      // exactly the total source input at step t.
      for (Eigen::Index i = 0; i < traj.fields[t].size(); ++i) {
        expected += q(traj.labels[static_cast<std::size_t>(i)], static_cast<int>(t));
      }
    }
    double drift = std::abs(traj.fields[t + 1].sum() - expected);
    r.max_drift = std::max(r.max_drift, drift);
    if (drift > 1e-9 && r.first_violation < 0) {
      r.conserved = false;
      r.first_violation = static_cast<int>(t);
    }
  }
  return r;
}

namespace {

// Support digraph: arc k -> p when c_pk > 0.
std::vector<std::vector<int>> support_digraph(const CoefficientMatrix& c) {
  auto n = static_cast<std::size_t>(c.size());
  std::vector<std::vector<int>> out(n);
  const auto& m = c.dense();
  for (Eigen::Index p = 0; p < c.size(); ++p) {
    for (Eigen::Index k = 0; k < c.size(); ++k) {
      if (m(p, k) > 0.0) out[static_cast<std::size_t>(k)].push_back(static_cast<int>(p));
    }
  }
  return out;
}

bool all_reachable(const std::vector<std::vector<int>>& g, int start) {
  std::vector<char> seen(g.size(), 0);
  std::queue<int> q;
  q.push(start);
  seen[static_cast<std::size_t>(start)] = 1;
  std::size_t count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++count;
        q.push(w);
      }
    }
  }
  return count == g.size();
}

}  // namespace

bool is_irreducible(const CoefficientMatrix& c) {
  if (c.size() == 0) return false;
  auto g = support_digraph(c);
  std::vector<std::vector<int>> rev(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    for (int p : g[k]) rev[static_cast<std::size_t>(p)].push_back(static_cast<int>(k));
  }
  return all_reachable(g, 0) && all_reachable(rev, 0);
}

bool is_primitive(const CoefficientMatrix& c) {
  if (!is_irreducible(c)) {
    throw std::invalid_argument("primitivity requires an irreducible matrix");
  }
  // Period = gcd over arcs of (level(u) + 1 - level(v)) in a BFS layering;
  // an irreducible matrix is primitive iff the period is 1. A positive
  // diagonal entry is a self-loop and forces period 1.
  auto g = support_digraph(c);
  std::vector<int> level(g.size(), -1);
  std::queue<int> q;
  q.push(0);
  level[0] = 0;
  int period = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g[static_cast<std::size_t>(v)]) {
      if (level[static_cast<std::size_t>(w)] < 0) {
        level[static_cast<std::size_t>(w)] = level[static_cast<std::size_t>(v)] + 1;
        q.push(w);
      } else {
        int diff = level[static_cast<std::size_t>(v)] + 1 - level[static_cast<std::size_t>(w)];
        period = std::gcd(period, std::abs(diff));
      }
    }
  }
  return period == 1;
}

StationaryResult stationary(const CoefficientMatrix& c, double tolerance,
                            int max_iterations) {
  ValidationReport v = validate(c);
  if (!v.valid) throw std::invalid_argument("stationary requires a valid coefficient matrix");
  if (!is_irreducible(c)) throw std::invalid_argument("stationary requires an irreducible matrix");
  if (!is_primitive(c)) throw std::invalid_argument("stationary requires a primitive matrix");

  // Power iteration from the uniform vector (strictly positive, never
  // orthogonal to the Perron vector).
  auto n = c.size();
  Vector x = Vector::Constant(n, 1.0 / static_cast<double>(n));
  StationaryResult r;
  for (int it = 1; it <= max_iterations; ++it) {
    Vector next = c.dense() * x;
    double change = (next - x).cwiseAbs().sum();
    x = next;
    r.iterations = it;
    if (change < tolerance) {
      r.stationary = x / x.sum();
      r.residual = (c.dense() * r.stationary - r.stationary).cwiseAbs().maxCoeff();
      return r;
    }
  }
  throw std::runtime_error("power iteration did not converge within " +
                           std::to_string(max_iterations) + " iterations");
}

Field final_field(const CoefficientMatrix& c, const Field& f0) {
  StationaryResult s = stationary(c);
  Field out;
  out.values = f0.values.sum() * s.stationary;
  out.t = f0.t;
  return out;
}

bool commutes_with_transpose(const CoefficientMatrix& c, double tol) {
  const Matrix& m = c.dense();
  Matrix d = m * m.transpose() - m.transpose() * m;
  return d.cwiseAbs().maxCoeff() <= tol;
}

Vector SpectralSolution::evaluate(int t) const {
  Vector scale(eigenvalues_.size());
  for (Eigen::Index s = 0; s < eigenvalues_.size(); ++s) {
    scale(s) = coefficients_(s) * std::pow(eigenvalues_(s), t);
  }
  return eigenvectors_ * scale;
}

SpectralSolution spectral_solve(const CoefficientMatrix& c, const Field& f0) {
  const Matrix& m = c.dense();
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw UnsupportedCase(
        "spectral_solve supports symmetric matrices only; the general "
        "commuting-with-transpose case admits complex spectra");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");

  // Eigen returns ascending eigenvalues; re-sort descending.
  auto n = m.rows();
  SpectralSolution sol;
  sol.eigenvalues_.resize(n);
  sol.eigenvectors_.resize(n, n);
  for (Eigen::Index s = 0; s < n; ++s) {
    sol.eigenvalues_(s) = es.eigenvalues()(n - 1 - s);
    sol.eigenvectors_.col(s) = es.eigenvectors().col(n - 1 - s);
  }
  double max_residual =
      (m * sol.eigenvectors_ - sol.eigenvectors_ * sol.eigenvalues_.asDiagonal())
          .cwiseAbs()
          .maxCoeff();
  if (max_residual > 1e-10) {
    throw std::runtime_error("eigenpair residual too large: " + std::to_string(max_residual));
  }
  sol.coefficients_ = sol.eigenvectors_.transpose() * f0.values;
  return sol;
}

SumZeroReport check_eigen_sum_zero(const SpectralSolution& s) {
  SumZeroReport rep;
  for (Eigen::Index k = 0; k < s.eigenvalues().size(); ++k) {
    if (std::abs(s.eigenvalues()(k)) >= 1.0 - 1e-10) continue;
    double sum = s.eigenvectors().col(k).sum();
    rep.sums.push_back(sum);
    if (std::abs(sum) > 1e-9) rep.all_pass = false;
  }
  return rep;
}

std::vector<Vector> solve_elliptic(const CoefficientMatrix& c) {
  auto n = c.size();
  Matrix a = c.dense() - Matrix::Identity(n, n);
  Eigen::FullPivLU<Matrix> lu(a);
  lu.setThreshold(1e-9);
  Matrix kernel = lu.kernel();
  std::vector<Vector> basis;
  // FullPivLU returns a single zero column for a trivial kernel.
  if (kernel.cols() == 1 && kernel.col(0).cwiseAbs().maxCoeff() == 0.0) return basis;
  for (Eigen::Index j = 0; j < kernel.cols(); ++j) basis.push_back(kernel.col(j));
  return basis;
}

}  // namespace digitop::parabolic
