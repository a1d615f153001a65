#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hypgreen/cli.hpp"

using hypgreen::cli::run;
using nlohmann::json;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}
}  // namespace

TEST_CASE("number formatting") {
  using hypgreen::cli::format_double;
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(20.0) == "20");
  CHECK(format_double(-1.125) == "-1.125");
  CHECK(std::stod(format_double(1.0 / 3)) == 1.0 / 3);
  CHECK(format_double(NAN) == "nan");
}

TEST_CASE("green command") {
  auto r = invoke({"green", "--n", "6", "--k", "1"});
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 41);
  CHECK(ls[0] == "rho,pk_green,pk_green_bound,gap,rel_gap");
  for (std::size_t i = 1; i < ls.size(); ++i) {
    auto last = ls[i].substr(ls[i].rfind(',') + 1);
    CHECK(std::fabs(std::stod(last)) < 1e-13);
  }
  r = invoke({"green", "--n", "5", "--k", "2", "--format", "json"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["rows"].size() == 40);
  for (const auto& row : doc["rows"]) CHECK(row["gap"].get<double>() >= 0.0);
  CHECK(doc["config"]["n"] == 5);

  r = invoke({"green", "--n", "3", "--k", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("k < n/2") != std::string::npos);
  CHECK(invoke({"green", "--n", "6"}).code == 2);
  CHECK(invoke({"green", "--k", "2"}).code == 2);
  CHECK(invoke({"green", "--n", "6", "--k", "2", "--rho-min", "-1"}).code == 2);

  r = invoke({"green", "--n", "7", "--l", "2", "--k0", "1", "--sigma", "1/2", "--rho-count", "6",
              "--spacing", "linear", "--rho-min", "0.5", "--rho-max", "3"});
  CHECK(r.code == 0);
  ls = lines(r.out);
  REQUIRE(ls.size() == 7);
  CHECK(ls[0] == "rho,product_green");
  CHECK(ls[1].rfind("0.5,", 0) == 0);
  CHECK(invoke({"green", "--n", "6", "--l", "2", "--sigma", "0"}).code == 2);
  CHECK(invoke({"green", "--n", "7", "--l", "2", "--sigma", "1/3"}).code == 2);
}

TEST_CASE("csv output is bit-stable") {
  std::vector<std::string> args{"green", "--n", "9", "--k", "3"};
  auto a = invoke(args);
  auto b = invoke(args);
  auto args_serial = args;
  args_serial.push_back("--serial");
  auto c = invoke(args_serial);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  auto l1 = invoke({"lambda-table"});
  auto l2 = invoke({"lambda-table", "--serial"});
  CHECK(l1.out == l2.out);
}

TEST_CASE("json round trip") {
  auto r = invoke({"lambda-table", "--format", "json", "--k-max", "4"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  for (const char* key : {"config", "rows", "residuals", "pass"}) CHECK(doc.contains(key));
  CHECK(json::parse(doc.dump()) == doc);
  const auto& first = doc["rows"][0];
  CHECK(first["n"] == 6);
  CHECK(first["lambda_lower_bound"].get<double>() == doctest::Approx(-0.25).epsilon(1e-10));
  CHECK(first["neg_hardy_product"].get<double>() == -0.5625);
  CHECK(first["closed_form"].get<double>() == -0.25);
  CHECK(doc["rows"][1]["closed_form"].is_null());
  for (const auto& row : doc["rows"])
    CHECK(row["lambda_lower_bound"].get<double>() > row["neg_hardy_product"].get<double>());
  bool found = false;
  for (const auto& row : doc["rows"])
    if (row["n"] == 8 && row["k"] == 3) {
      CHECK(row["closed_form"].get<double>() == -1.125);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("verify command") {
  auto r = invoke({"verify", "--only", "symbols", "--format", "json"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["pass"] == true);
  for (const auto& row : doc["rows"]) CHECK(row["group"] == "symbols");
  CHECK(doc["residuals"].contains("symbol_inequality"));

  r = invoke({"verify", "--only", "lambda,duality", "--tol", "1e-3"});
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  CHECK(ls[0] == "group,name,max_residual,tolerance,samples,pass");
  CHECK(ls.size() == 4);
  for (std::size_t i = 1; i < ls.size(); ++i) CHECK(ls[i].find(",0.001,") != std::string::npos);

  r = invoke({"verify", "--only", "duality", "--tol", "0"});
  CHECK(r.code == 1);
  CHECK(r.err.find("failed: sobolev_hls_duality") != std::string::npos);

  CHECK(invoke({"verify", "--only", "nonsense"}).code == 2);
  CHECK(invoke({"verify", "--tol", "-1"}).code == 2);
}

TEST_CASE("usage errors and files") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"green", "--n", "6", "--k", "1", "--format", "xml"}).code == 2);
  CHECK(invoke({"green", "--n", "six"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);

  auto dir = std::filesystem::temp_directory_path() / "hypgreen_cli_test";
  std::filesystem::create_directories(dir);
  auto cfg = dir / "run.ini";
  {
    std::ofstream f(cfg);
    f << "n=8\nk=2\nrho-count=5\nformat=csv\n";
  }
  auto out = dir / "table.csv";
  auto r = invoke({"green", "--config", cfg.string(), "--out", out.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == invoke({"green", "--n", "8", "--k", "2", "--rho-count", "5"}).out);
  CHECK(invoke({"green", "--n", "8", "--k", "2", "--out", (dir / "missing" / "x.csv").string()}).code == 2);
  std::filesystem::remove_all(dir);
}
