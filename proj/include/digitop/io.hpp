#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "digitop/digital_space.hpp"
#include "digitop/topology.hpp"

namespace digitop::io {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Space file: JSON document with fields `name`, `points`, `edges`.
std::string space_to_json(const DigitalSpace& g);
DigitalSpace space_from_json(const std::string& text);
void write_space(const std::string& path, const DigitalSpace& g);
DigitalSpace read_space(const std::string& path);

// Coefficient file: either explicit sparse entries
//   {"entries": [[p, k, value], ...]}
// or a scheme descriptor resolved against a space,
//   {"scheme": "lazy_uniform", "w": 0.03}.
struct CoefficientFile {
  std::optional<std::string> scheme;
  double w = 0.0;
  std::vector<std::tuple<PointId, PointId, double>> entries;
};
CoefficientFile read_coefficients(const std::string& path);

// Initial-condition file: JSON object mapping point label -> value;
// absent points are 0.
std::map<PointId, double> read_initial(const std::string& path);

// Trajectory CSV: header `t,f_1,...,f_n` (labels in ascending order), one
// row per step, 17 significant digits.
void write_trajectory_csv(const std::string& path,
                          const std::vector<PointId>& labels,
                          const std::vector<std::vector<double>>& rows);
struct TrajectoryFile {
  std::vector<PointId> labels;
  std::vector<std::vector<double>> rows;  // rows[t][i] = f_{labels[i]}^t
};
TrajectoryFile read_trajectory_csv(const std::string& path);

// Two-column plot data (t, value), plain text.
void write_plot_data(const std::string& path, const std::vector<double>& values);

std::string report_to_json(const SurfaceReport& rep);
void write_report(const std::string& path, const SurfaceReport& rep);

std::string format_double(double x);  // 17 significant digits

}  // namespace digitop::io
