#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "digitop/catalog.hpp"
#include "digitop/io.hpp"
#include "digitop/parabolic.hpp"

using namespace digitop;
namespace fs = std::filesystem;

namespace {

fs::path tmp_dir() {
  auto dir = fs::temp_directory_path() / "digitop_io_test";
  fs::create_directories(dir);
  return dir;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace

TEST_CASE("space file round trip") {
  auto m = catalog::build_moebius_12();
  auto path = (tmp_dir() / "moebius.json").string();
  io::write_space(path, m);
  auto back = io::read_space(path);
  CHECK(back == m);
  CHECK(back.name() == "moebius12");
}

TEST_CASE("space file rejections") {
  CHECK_THROWS_AS(io::space_from_json("{"), io::ParseError);
  CHECK_THROWS_AS(io::space_from_json(R"({"points": [1,2]})"), io::ParseError);
  CHECK_THROWS_AS(io::space_from_json(R"({"points": [1,2], "edges": [[1,2],[2,1]]})"),
                  io::ParseError);
  CHECK_THROWS_AS(io::space_from_json(R"({"points": [1,2], "edges": [[1,2,3]]})"),
                  io::ParseError);
  // self-loop surfaces as a space validation error
  CHECK_THROWS_AS(io::space_from_json(R"({"points": [1], "edges": [[1,1]]})"), SpaceError);
}

TEST_CASE("coefficient files: scheme and explicit entries") {
  auto dir = tmp_dir();
  write_text(dir / "scheme.json", R"({"scheme": "lazy_uniform", "w": 0.03})");
  auto cf = io::read_coefficients((dir / "scheme.json").string());
  REQUIRE(cf.scheme.has_value());
  CHECK(*cf.scheme == "lazy_uniform");
  CHECK(cf.w == doctest::Approx(0.03));

  write_text(dir / "entries.json", R"({"entries": [[1,1,0.5],[1,2,0.5],[2,1,0.5],[2,2,0.5]]})");
  auto cf2 = io::read_coefficients((dir / "entries.json").string());
  CHECK_FALSE(cf2.scheme.has_value());
  CHECK(cf2.entries.size() == 4);

  write_text(dir / "bad.json", R"({"w": 0.1})");
  CHECK_THROWS_AS(io::read_coefficients((dir / "bad.json").string()), io::ParseError);
}

TEST_CASE("initial condition files") {
  auto dir = tmp_dir();
  write_text(dir / "init.json", R"({"1": 12, "5": -2.5})");
  auto init = io::read_initial((dir / "init.json").string());
  CHECK(init.at(1) == 12.0);
  CHECK(init.at(5) == -2.5);
  CHECK(init.size() == 2);

  write_text(dir / "badkey.json", R"({"x": 1})");
  CHECK_THROWS_AS(io::read_initial((dir / "badkey.json").string()), io::ParseError);
}

TEST_CASE("trajectory CSV round trip preserves values exactly") {
  auto m = catalog::build_moebius_12();
  auto c = parabolic::CoefficientMatrix::lazy_uniform(m, 0.03);
  auto traj = parabolic::run(c, parabolic::make_field(c, {{1, 12.0}}), nullptr, 20);

  std::vector<std::vector<double>> rows;
  for (const auto& f : traj.fields) {
    rows.emplace_back(f.data(), f.data() + f.size());
  }
  auto path = (tmp_dir() / "traj.csv").string();
  io::write_trajectory_csv(path, traj.labels, rows);

  auto back = io::read_trajectory_csv(path);
  CHECK(back.labels == traj.labels);
  REQUIRE(back.rows.size() == rows.size());
  for (std::size_t t = 0; t < rows.size(); ++t) {
    for (std::size_t i = 0; i < rows[t].size(); ++i) {
      CHECK(back.rows[t][i] == rows[t][i]);  // 17 digits: bit-exact
    }
  }
}

TEST_CASE("report serialization includes classes and boundary components") {
  auto rep = surface_with_boundary(catalog::build_moebius_12(), 2);
  auto text = io::report_to_json(rep);
  CHECK(text.find("\"euler\": 0") != std::string::npos);
  CHECK(text.find("\"orientable\": false") != std::string::npos);
  CHECK(text.find("boundary") != std::string::npos);
}
