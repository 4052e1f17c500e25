#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "digitop/digital_space.hpp"

namespace digitop::parabolic {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

struct UnsupportedCase : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sparse nonnegative column-stochastic coefficient matrix supported on
// the closed balls of a digital space. Rows/columns are indexed by the
// space's points in ascending label order.
class CoefficientMatrix {
 public:
  static CoefficientMatrix from_entries(
      const DigitalSpace& space,
      const std::vector<std::tuple<PointId, PointId, double>>& entries);

  // c_pp = 1 - w*deg(p), c_ps = w for s in O(p). Symmetric, hence doubly
  // stochastic. Requires 0 < w <= 1/max_degree.
  static CoefficientMatrix lazy_uniform(const DigitalSpace& space, double w);

  const DigitalSpace& space() const { return space_; }
  Eigen::Index size() const { return dense_.rows(); }
  const std::vector<PointId>& labels() const { return labels_; }
  Eigen::Index index_of(PointId p) const;
  PointId label_of(Eigen::Index i) const { return labels_[static_cast<std::size_t>(i)]; }

  double coeff(PointId p, PointId k) const;
  const Matrix& dense() const { return dense_; }
  // Per-row sparse entries (column index, value), ordered by column.
  const std::vector<std::vector<std::pair<Eigen::Index, double>>>& rows() const {
    return rows_;
  }

 private:
  DigitalSpace space_;
  std::vector<PointId> labels_;
  std::map<PointId, Eigen::Index> index_;
  Matrix dense_;
  std::vector<std::vector<std::pair<Eigen::Index, double>>> rows_;
};

struct ValidationIssue {
  std::string constraint;  // "nonnegativity" | "support" | "column-stochastic"
  PointId p = 0, k = 0;    // offending entry or column (k)
  double value = 0.0;
  std::string message;
};

struct ValidationReport {
  bool valid = true;
  std::vector<ValidationIssue> issues;
};

ValidationReport validate(const CoefficientMatrix& c);

// Real-valued function on the points of the bound space at one time step.
struct Field {
  Vector values;
  int t = 0;
};

Field make_field(const CoefficientMatrix& c, const std::map<PointId, double>& init);

using SourceTerm = std::function<double(PointId p, int t)>;

// One explicit step f'_p = sum_k c_pk f_k + q_p(t). Sparse neighborhood
// accumulation; step_dense is the matrix-product route, kept as the
// internal oracle (the two must agree to 1e-12).
Field step(const CoefficientMatrix& c, const Field& f, const SourceTerm& q = nullptr);
Field step_dense(const CoefficientMatrix& c, const Field& f, const SourceTerm& q = nullptr);

struct Trajectory {
  std::vector<PointId> labels;
  std::vector<Vector> fields;  // fields[t], t = 0..T
};

Trajectory run(const CoefficientMatrix& c, const Field& f0, const SourceTerm& q,
               int steps);

double l1_norm(const Field& f);
double l1_norm(const Vector& v);

struct StabilityResult {
  bool stable = true;
  int first_violation = -1;  // step t where ||f^{t+1}|| > ||f^t|| + 1e-12
};
StabilityResult check_stability(const Trajectory& traj);

struct ConservationResult {
  bool conserved = true;
  double max_drift = 0.0;
  int first_violation = -1;
};
// Homogeneous: per-step sum drift <= 1e-9. With a source, the expected
// per-step increase is sum_p q_p^t.
ConservationResult check_conservation(const Trajectory& traj, const SourceTerm& q = nullptr);

bool is_irreducible(const CoefficientMatrix& c);
// Requires irreducibility; true iff the support digraph is aperiodic.
bool is_primitive(const CoefficientMatrix& c);

struct StationaryResult {
  Vector stationary;  // Cc = c, sum 1, all positive
  int iterations = 0;
  double residual = 0.0;
};

StationaryResult stationary(const CoefficientMatrix& c, double tolerance = 1e-13,
                            int max_iterations = 1'000'000);

// f^inf = S * stationary where S = sum of f0.
Field final_field(const CoefficientMatrix& c, const Field& f0);

bool commutes_with_transpose(const CoefficientMatrix& c, double tol = 1e-12);

// Closed-form solution f^t = sum_s d_s lambda_s^t X_s for symmetric C.
class SpectralSolution {
 public:
  const Vector& eigenvalues() const { return eigenvalues_; }  // descending
  const Matrix& eigenvectors() const { return eigenvectors_; }  // orthonormal columns
  const Vector& coefficients() const { return coefficients_; }
  Vector evaluate(int t) const;

 private:
  friend SpectralSolution spectral_solve(const CoefficientMatrix&, const Field&);
  Vector eigenvalues_;
  Matrix eigenvectors_;
  Vector coefficients_;
};

// Throws UnsupportedCase for asymmetric C (the broader commuting-with-
// transpose hypothesis admits complex spectra, which are out of scope).
SpectralSolution spectral_solve(const CoefficientMatrix& c, const Field& f0);

struct SumZeroReport {
  bool all_pass = true;
  std::vector<double> sums;  // per eigenpair with |lambda| < 1 - 1e-10
};
// Every eigenvector with |lambda| < 1 must sum to 0 (within 1e-9).
SumZeroReport check_eigen_sum_zero(const SpectralSolution& s);

// Basis of the fixed-point space f = Cf (null space of C - I).
std::vector<Vector> solve_elliptic(const CoefficientMatrix& c);

}  // namespace digitop::parabolic
