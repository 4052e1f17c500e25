// Command-line surface over the digitop library: catalog construction,
// surface validation, parabolic runs, spectral evaluation and the two
// preset diffusion experiments.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "digitop/catalog.hpp"
#include "digitop/io.hpp"
#include "digitop/parabolic.hpp"
#include "digitop/topology.hpp"

namespace pb = digitop::parabolic;
namespace cat = digitop::catalog;
using digitop::DigitalSpace;
using digitop::PointId;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

pb::CoefficientMatrix resolve_coefficients(const DigitalSpace& space,
                                           const std::string& coeffs_path) {
  auto cf = digitop::io::read_coefficients(coeffs_path);
  if (cf.scheme) {
    if (*cf.scheme != "lazy_uniform") {
      throw InputError("unknown coefficient scheme: " + *cf.scheme);
    }
    return pb::CoefficientMatrix::lazy_uniform(space, cf.w);
  }
  return pb::CoefficientMatrix::from_entries(space, cf.entries);
}

std::vector<std::vector<double>> to_rows(const pb::Trajectory& traj) {
  std::vector<std::vector<double>> rows;
  rows.reserve(traj.fields.size());
  for (const auto& f : traj.fields) rows.emplace_back(f.data(), f.data() + f.size());
  return rows;
}

json run_report(const pb::CoefficientMatrix& c, const pb::Trajectory& traj,
                const std::string& trajectory_path) {
  json rep;
  rep["trajectory"] = trajectory_path;
  auto cons = pb::check_conservation(traj);
  rep["max_conservation_drift"] = cons.max_drift;
  rep["conserved"] = cons.conserved;
  auto stab = pb::check_stability(traj);
  rep["stable"] = stab.stable;

  if (pb::is_irreducible(c) && pb::is_primitive(c)) {
    auto st = pb::stationary(c);
    double sum = traj.fields.front().sum();
    rep["distance_to_stationary_at_final_t"] =
        (traj.fields.back() - sum * st.stationary).cwiseAbs().maxCoeff();
  }
  if (pb::commutes_with_transpose(c) &&
      (c.dense() - c.dense().transpose()).cwiseAbs().maxCoeff() <= 1e-12) {
    pb::Field f0{traj.fields.front(), 0};
    auto sol = pb::spectral_solve(c, f0);
    double dev = 0.0;
    for (std::size_t t = 0; t < traj.fields.size(); ++t) {
      dev = std::max(dev, (sol.evaluate(static_cast<int>(t)) - traj.fields[t])
                              .cwiseAbs()
                              .maxCoeff());
    }
    rep["spectral_vs_iterative_max_deviation"] = dev;
  }
  return rep;
}

int cmd_catalog_list() {
  for (const auto& name : cat::known_names()) std::cout << name << '\n';
  return kExitPass;
}

int cmd_catalog_build(const std::string& name, const std::string& out) {
  auto space = cat::build_by_name(name, std::filesystem::path(out).parent_path().string());
  digitop::io::write_space(out, space);
  std::cout << "wrote " << out << " (" << space.point_count() << " points, "
            << space.edge_count() << " edges)\n";
  return kExitPass;
}

int cmd_validate(const std::string& space_file, int dim, bool allow_boundary,
                 const std::string& out) {
  auto space = digitop::io::read_space(space_file);
  auto rep = digitop::surface_with_boundary(space, dim);
  if (!out.empty()) digitop::io::write_report(out, rep);
  std::cout << digitop::io::report_to_json(rep);
  bool closed = rep.is_surface && rep.boundary_components.empty();
  bool pass = closed || (allow_boundary && rep.is_surface);
  return pass ? kExitPass : kExitFail;
}

int cmd_solve(const std::string& space_file, const std::string& coeffs_file,
              const std::string& init_file, int steps, const std::string& out) {
  auto space = digitop::io::read_space(space_file);
  auto c = resolve_coefficients(space, coeffs_file);
  auto validation = pb::validate(c);
  if (!validation.valid) {
    for (const auto& i : validation.issues) {
      std::cerr << "coefficient validation failed [" << i.constraint << "]: "
                << i.message << '\n';
    }
    return kExitInputError;
  }
  std::map<PointId, double> init;
  if (!init_file.empty()) init = digitop::io::read_initial(init_file);
  auto f0 = pb::make_field(c, init);
  auto traj = pb::run(c, f0, nullptr, steps);
  digitop::io::write_trajectory_csv(out, traj.labels, to_rows(traj));
  std::cout << run_report(c, traj, out).dump(2) << '\n';
  return kExitPass;
}

int cmd_experiment(const std::string& which, const std::string& outdir) {
  std::filesystem::create_directories(outdir);
  DigitalSpace space;
  double w = 0.0;
  double initial = 0.0;
  int horizon = 0;
  if (which == "moebius") {
    space = cat::build_moebius_12();
    w = 0.03;
    initial = 12.0;
    horizon = 100;
  } else if (which == "projective") {
    space = cat::build_by_name("projective-plane-11", outdir);
    w = 0.1;
    initial = 11.0;
    horizon = 30;
  } else {
    throw InputError("unknown experiment: " + which + " (moebius | projective)");
  }

  auto c = pb::CoefficientMatrix::lazy_uniform(space, w);
  auto f0 = pb::make_field(c, {{1, initial}});
  auto traj = pb::run(c, f0, nullptr, horizon);

  auto prefix = std::filesystem::path(outdir) / which;
  std::string traj_path = prefix.string() + "_trajectory.csv";
  digitop::io::write_trajectory_csv(traj_path, traj.labels, to_rows(traj));
  for (PointId p : {3, 10}) {
    std::vector<double> values;
    for (const auto& f : traj.fields) values.push_back(f(c.index_of(p)));
    digitop::io::write_plot_data(prefix.string() + "_point" + std::to_string(p) + ".dat",
                                 values);
  }

  json rep = run_report(c, traj, traj_path);

  // extended run: distance from the uniform stationary field at t = 10^4
  pb::Field f = f0;
  for (int t = 0; t < 10'000; ++t) f = pb::step(c, f);
  double uniform = initial / static_cast<double>(space.point_count());
  rep["extended_t"] = 10'000;
  rep["max_distance_from_uniform_at_extended_t"] =
      (f.values.array() - uniform).abs().maxCoeff();

  std::cout << rep.dump(2) << '\n';
  return kExitPass;
}

int cmd_spectral(const std::string& space_file, const std::string& coeffs_file,
                 const std::string& init_file, const std::vector<int>& times,
                 bool compare, const std::string& out) {
  auto space = digitop::io::read_space(space_file);
  auto c = resolve_coefficients(space, coeffs_file);
  std::map<PointId, double> init;
  if (!init_file.empty()) init = digitop::io::read_initial(init_file);
  auto f0 = pb::make_field(c, init);

  pb::SpectralSolution sol;
  try {
    sol = pb::spectral_solve(c, f0);
  } catch (const pb::UnsupportedCase& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitInputError;
  }

  std::vector<std::vector<double>> rows;
  int max_t = 0;
  for (int t : times) {
    if (t < 0) throw InputError("times must be nonnegative");
    max_t = std::max(max_t, t);
    auto v = sol.evaluate(t);
    std::vector<double> row(v.data(), v.data() + v.size());
    rows.push_back(std::move(row));
  }
  if (!out.empty()) {
    // CSV with the requested times in the t column
    std::ostringstream os;
    os << 't';
    for (PointId p : c.labels()) os << ",f_" << p;
    os << '\n';
    for (std::size_t i = 0; i < times.size(); ++i) {
      os << times[i];
      for (double x : rows[i]) os << ',' << digitop::io::format_double(x);
      os << '\n';
    }
    std::ofstream f(out);
    f << os.str();
  }

  json rep;
  rep["times"] = times;
  if (compare) {
    auto traj = pb::run(c, f0, nullptr, max_t);
    double dev = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
      const auto& iter = traj.fields[static_cast<std::size_t>(times[i])];
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        dev = std::max(dev, std::abs(rows[i][j] - iter(static_cast<Eigen::Index>(j))));
      }
    }
    rep["max_deviation_vs_iteration"] = dev;
  }
  std::cout << rep.dump(2) << '\n';
  return kExitPass;
}

std::vector<int> parse_times(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    auto dots = cell.find("..");
    if (dots != std::string::npos) {
      int lo = std::stoi(cell.substr(0, dots));
      int hi = std::stoi(cell.substr(dots + 2));
      for (int t = lo; t <= hi; ++t) out.push_back(t);
    } else {
      out.push_back(std::stoi(cell));
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digital n-surfaces and the discrete parabolic equation"};
  app.require_subcommand(1);
  bool dump_config = false;
  app.add_flag("--dump-config", dump_config, "print the resolved configuration");

  auto* catalog_cmd = app.add_subcommand("catalog", "list or build catalog spaces");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->add_subcommand("list", "list known space names");
  auto* build_cmd = catalog_cmd->add_subcommand("build", "build a named space");
  std::string build_name, build_out = "space.json";
  bool seed_order = true;
  build_cmd->add_option("name", build_name)->required();
  build_cmd->add_option("--out", build_out, "output space file");
  build_cmd->add_flag("--seed-order", seed_order,
                      "deterministic lexicographic search order (always on)");

  auto* validate_cmd = app.add_subcommand("validate", "classify a space file as a surface");
  std::string v_space, v_out;
  int v_dim = 2;
  bool allow_boundary = false;
  validate_cmd->add_option("space", v_space)->required();
  validate_cmd->add_option("--dim", v_dim, "dimension to test");
  validate_cmd->add_flag("--allow-boundary", allow_boundary,
                         "accept surfaces with boundary");
  validate_cmd->add_option("--out", v_out, "report file");

  auto* solve_cmd = app.add_subcommand("solve", "run the explicit parabolic iteration");
  std::string s_space, s_coeffs, s_init, s_out = "trajectory.csv";
  int s_steps = 100;
  solve_cmd->add_option("--space", s_space)->required();
  solve_cmd->add_option("--coeffs", s_coeffs)->required();
  solve_cmd->add_option("--init", s_init, "initial-condition file (default all zero)");
  solve_cmd->add_option("--steps", s_steps);
  solve_cmd->add_option("--out", s_out, "trajectory CSV");

  auto* exp_cmd = app.add_subcommand("experiment", "run a preset experiment");
  std::string e_which, e_outdir = ".";
  exp_cmd->add_option("which", e_which, "moebius | projective")->required();
  exp_cmd->add_option("--out", e_outdir, "output directory");

  auto* spectral_cmd = app.add_subcommand("spectral", "closed-form spectral solution");
  std::string p_space, p_coeffs, p_init, p_times = "0", p_out;
  bool compare = false;
  spectral_cmd->add_option("--space", p_space)->required();
  spectral_cmd->add_option("--coeffs", p_coeffs)->required();
  spectral_cmd->add_option("--init", p_init);
  spectral_cmd->add_option("--times", p_times, "comma list, ranges as a..b");
  spectral_cmd->add_flag("--compare", compare, "compare against iteration");
  spectral_cmd->add_option("--out", p_out, "CSV of closed-form values");

  CLI11_PARSE(app, argc, argv);

  try {
    if (dump_config) {
      json cfg;
      for (const auto* sub : app.get_subcommands()) cfg["subcommand"] = sub->get_name();
      cfg["options"] = {{"space", s_space.empty() ? v_space : s_space},
                        {"coeffs", s_coeffs},
                        {"init", s_init},
                        {"steps", s_steps},
                        {"dim", v_dim},
                        {"allow_boundary", allow_boundary},
                        {"times", p_times},
                        {"compare", compare}};
      std::cout << cfg.dump(2) << '\n';
    }
    if (catalog_cmd->parsed()) {
      if (catalog_cmd->get_subcommand("list")->parsed()) return cmd_catalog_list();
      return cmd_catalog_build(build_name, build_out);
    }
    if (validate_cmd->parsed()) return cmd_validate(v_space, v_dim, allow_boundary, v_out);
    if (solve_cmd->parsed()) return cmd_solve(s_space, s_coeffs, s_init, s_steps, s_out);
    if (exp_cmd->parsed()) return cmd_experiment(e_which, e_outdir);
    if (spectral_cmd->parsed()) {
      return cmd_spectral(p_space, p_coeffs, p_init, parse_times(p_times), compare, p_out);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const digitop::io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitPass;
}
