#include "digitop/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace digitop::io {

namespace {

using nlohmann::json;

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << text;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string space_to_json(const DigitalSpace& g) {
  json j;
  j["name"] = g.name();
  j["points"] = g.points();
  json edges = json::array();
  for (auto [a, b] : g.edge_list()) edges.push_back({a, b});
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

DigitalSpace space_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.contains("points") || !j.contains("edges")) {
    throw ParseError("space file must contain `points` and `edges`");
  }
  std::vector<PointId> points = j["points"].get<std::vector<PointId>>();
  std::vector<std::pair<PointId, PointId>> edges;
  std::set<std::pair<PointId, PointId>> seen;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) {
      throw ParseError("each edge must be a 2-element array");
    }
    PointId a = e[0].get<PointId>();
    PointId b = e[1].get<PointId>();
    auto mm = std::minmax(a, b);
    if (!seen.insert({mm.first, mm.second}).second) {
      throw ParseError("duplicate edge " + std::to_string(a) + "-" +
                       std::to_string(b));
    }
    edges.emplace_back(a, b);
  }
  std::string name = j.value("name", std::string{});
  return DigitalSpace::make(std::move(points), edges, std::move(name));
}

void write_space(const std::string& path, const DigitalSpace& g) {
  write_file(path, space_to_json(g));
}

DigitalSpace read_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open space file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return space_from_json(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

CoefficientFile read_coefficients(const std::string& path) {
  json j = parse_file(path);
  CoefficientFile cf;
  if (j.contains("scheme")) {
    cf.scheme = j["scheme"].get<std::string>();
    if (!j.contains("w")) throw ParseError(path + ": scheme requires `w`");
    cf.w = j["w"].get<double>();
  } else if (j.contains("entries")) {
    for (const auto& e : j["entries"]) {
      if (!e.is_array() || e.size() != 3) {
        throw ParseError(path + ": each entry must be [p, k, value]");
      }
      cf.entries.emplace_back(e[0].get<PointId>(), e[1].get<PointId>(),
                              e[2].get<double>());
    }
  } else {
    throw ParseError(path + ": expected `scheme` or `entries`");
  }
  return cf;
}

std::map<PointId, double> read_initial(const std::string& path) {
  json j = parse_file(path);
  if (!j.is_object()) throw ParseError(path + ": expected an object");
  std::map<PointId, double> out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    PointId p = 0;
    try {
      p = std::stoi(it.key());
    } catch (const std::exception&) {
      throw ParseError(path + ": key is not a point label: " + it.key());
    }
    out[p] = it.value().get<double>();
  }
  return out;
}

void write_trajectory_csv(const std::string& path,
                          const std::vector<PointId>& labels,
                          const std::vector<std::vector<double>>& rows) {
  std::ostringstream os;
  os << 't';
  for (PointId p : labels) os << ",f_" << p;
  os << '\n';
  for (std::size_t t = 0; t < rows.size(); ++t) {
    os << t;
    for (double x : rows[t]) os << ',' << format_double(x);
    os << '\n';
  }
  write_file(path, os.str());
}

TrajectoryFile read_trajectory_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open trajectory file: " + path);
  TrajectoryFile tf;
  std::string line;
  if (!std::getline(in, line)) throw ParseError(path + ": empty file");
  {
    std::stringstream ss(line);
    std::string cell;
    bool first = true;
    while (std::getline(ss, cell, ',')) {
      if (first) {
        if (cell != "t") throw ParseError(path + ": header must start with t");
        first = false;
        continue;
      }
      if (cell.rfind("f_", 0) != 0) {
        throw ParseError(path + ": bad header column: " + cell);
      }
      tf.labels.push_back(std::stoi(cell.substr(2)));
    }
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> row;
    bool first = true;
    while (std::getline(ss, cell, ',')) {
      if (first) {
        first = false;
        continue;
      }
      row.push_back(std::stod(cell));
    }
    if (row.size() != tf.labels.size()) {
      throw ParseError(path + ": row width mismatch");
    }
    tf.rows.push_back(std::move(row));
  }
  return tf;
}

void write_plot_data(const std::string& path, const std::vector<double>& values) {
  std::ostringstream os;
  for (std::size_t t = 0; t < values.size(); ++t) {
    os << t << ' ' << format_double(values[t]) << '\n';
  }
  write_file(path, os.str());
}

std::string report_to_json(const SurfaceReport& rep) {
  json j;
  j["dimension"] = rep.dimension;
  j["is_surface"] = rep.is_surface;
  j["euler"] = rep.euler;
  j["triangle_count"] = rep.triangle_count;
  if (rep.orientable) j["orientable"] = *rep.orientable;
  json classes = json::object();
  for (const auto& [p, c] : rep.classes) {
    const char* s = c == PointClass::Interior   ? "interior"
                    : c == PointClass::Boundary ? "boundary"
                                                : "defective";
    classes[std::to_string(p)] = s;
  }
  j["classes"] = classes;
  json bcs = json::array();
  for (const auto& b : rep.boundary_components) {
    bcs.push_back(json::parse(space_to_json(b)));
  }
  j["boundary_components"] = bcs;
  return j.dump(2) + "\n";
}

void write_report(const std::string& path, const SurfaceReport& rep) {
  write_file(path, report_to_json(rep));
}

}  // namespace digitop::io
