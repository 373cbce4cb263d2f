#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli_app.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = hpfem::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hpfem_cli_" + name)).string();
}

}  // namespace

TEST_CASE("solve with defaults gives one record below the benchmark threshold") {
  const Outcome o = run({"solve"});
  REQUIRE(o.code == 0);
  const auto rows = csv_rows(o.out);
  REQUIRE(rows.size() == 2);
  CHECK(o.out.rfind("eps,p,N,err_energy_abs,err_energy_rel,err_l2,runtime_ms\n", 0) == 0);
  CHECK(rows[1][1] == "8");
  CHECK(std::stod(rows[1][4]) <= 1e-3);
}

TEST_CASE("manufactured solve is exact to 1e-8") {
  for (const char* eps : {"1", "0.01"}) {
    const Outcome o = run({"solve", "--case", "manufactured", "--p", "3", "--eps", eps});
    REQUIRE(o.code == 0);
    CHECK(std::stod(csv_rows(o.out)[1][4]) <= 1e-8);
  }
}

TEST_CASE("zero data dumps an all-zero solution") {
  const std::string path = temp_path("zero.json");
  const Outcome o = run({"solve", "--f", "0", "--h", "0", "--p", "2", "--sectors", "4", "--solution", path});
  REQUIRE(o.code == 0);
  std::ifstream in(path);
  const json doc = json::parse(in);
  CHECK(doc["N"].get<std::size_t>() == doc["value"].size());
  CHECK(doc["x"].size() == doc["value"].size());
  for (const auto& v : doc["value"]) CHECK(v.get<double>() == 0.0);
  std::filesystem::remove(path);
}

TEST_CASE("sweep appends a fit line with positive b") {
  const Outcome o = run({"sweep", "--p", "1,2,3,4,5,6,7,8"});
  REQUIRE(o.code == 0);
  CHECK(csv_rows(o.out).size() == 9);
  const auto pos = o.out.find("# fit eps=0.01 b=");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(o.out.substr(pos + 17)) > 0.0);
}

TEST_CASE("sweep output is deterministic apart from runtime") {
  auto strip = [](const std::string& text) {
    auto rows = csv_rows(text);
    for (auto& r : rows) r.pop_back();
    return rows;
  };
  const Outcome a = run({"sweep", "--eps", "0.1,0.001", "--p", "1,2,3", "--sectors", "4"});
  const Outcome b = run({"sweep", "--eps", "0.001,0.1", "--p", "3,2,1", "--sectors", "4"});
  REQUIRE(a.code == 0);
  CHECK(strip(a.out) == strip(b.out));
  const Outcome j = run({"sweep", "--eps", "0.1", "--p", "1,2", "--sectors", "4", "--json"});
  const json doc = json::parse(j.out);
  REQUIRE(doc.size() == 2);
  CHECK(doc[1]["p"] == 2);
  CHECK(doc[0].contains("err_energy_rel"));
}

TEST_CASE("mesh dumps") {
  Outcome o = run({"mesh", "--p", "8", "--eps", "0.01"});
  REQUIRE(o.code == 0);
  json doc = json::parse(o.out);
  CHECK(doc["regime"] == "preasymptotic");
  CHECK(doc["m"] == 16);
  CHECK(doc["p"] == 8);
  const double rho0 = 0.9;
  CHECK(doc["w_bl"].get<double>() == doctest::Approx(0.5 * rho0 * 1 * 8 * 0.01).epsilon(1e-15));
  CHECK(doc["elements"].size() == 7u * 16u);
  CHECK(doc["elements"][0]["band"] == "boundary-needle");
  CHECK(doc["elements"][0]["region"] == "plus");

  o = run({"mesh", "--eps", "1"});
  REQUIRE(o.code == 0);
  doc = json::parse(o.out);
  CHECK(doc["regime"] == "asymptotic");
  for (const auto& e : doc["elements"]) CHECK(e["band"] == "bulk");

  const std::string path = temp_path("mesh.json");
  o = run({"mesh", "--out", path});
  REQUIRE(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream in(path);
  CHECK(json::parse(in)["regime"] == "preasymptotic");
  std::filesystem::remove(path);
}

TEST_CASE("configuration errors exit with code 2") {
  CHECK(run({"mesh", "--radii", "2,1,3"}).code == 2);
  CHECK(run({"sweep", "--p", ""}).code == 2);
  CHECK(run({"sweep", "--p", "0"}).code == 2);
  CHECK(run({"solve", "--p", "2,3"}).code == 2);
  CHECK(run({"solve", "--eps", "2"}).code == 2);
  CHECK(run({"solve", "--case", "other"}).code == 2);
  CHECK(run({"solve", "--h-sign", "x"}).code == 2);
  CHECK(run({"solve", "--radii", "1,2"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  const Outcome o = run({"mesh", "--radii", "2,1,3"});
  CHECK(o.err.find("0 < a < b < c") != std::string::npos);
  CHECK(run({"solve", "--help"}).code == 0);
}

TEST_CASE("oracle and expansion tables") {
  Outcome o = run({"oracle", "--eps", "1,0.01", "--samples", "5"});
  REQUIRE(o.code == 0);
  auto rows = csv_rows(o.out);
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == std::vector<std::string>{"eps", "r", "u", "du_dr"});
  CHECK(std::stod(rows[1][2]) == 0.0);

  o = run({"expansion", "--eps", "0.1,0.001"});
  REQUIRE(o.code == 0);
  rows = csv_rows(o.out);
  REQUIRE(rows.size() == 3);
  CHECK(std::stod(rows[2][1]) < std::stod(rows[1][1]));
}
