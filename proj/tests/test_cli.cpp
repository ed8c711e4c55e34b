#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

using dipolar::cli::run;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> v;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      v.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  v.push_back(cur);
  return v;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("dipolar_cli_" + name);
}

}  // namespace

TEST_CASE("format_number") {
  CHECK(dipolar::cli::format_number(0.5, 12) == "0.5");
  CHECK(dipolar::cli::format_number(-0.0, 12) == "0");
  CHECK(dipolar::cli::format_number(1.0 / 3.0, 4) == "0.3333");
  CHECK(dipolar::cli::format_number(2.5e-18, 3) == "2.5e-18");
}

TEST_CASE("point json") {
  const Result r = call({"point", "--delta", "-2", "--t", "1"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const json& c = j["correlations"];
  CHECK(c["Q"].get<double>() == doctest::Approx(0.0817023222533).epsilon(1e-11));
  CHECK(c["C"].get<double>() == doctest::Approx(0.336029218928).epsilon(1e-11));
  CHECK(c["I"].get<double>() == doctest::Approx(c["C"].get<double>() + c["Q"].get<double>()).epsilon(1e-11));
  CHECK(c["Qg"].get<double>() == doctest::Approx(0.0173106638272).epsilon(1e-11));
  CHECK(c["concurrence"].get<double>() == 0.0);
  CHECK(j["correlators"]["g_par"].get<double>() == doctest::Approx(0.65448790568).epsilon(1e-11));

  const json field = json::parse(call({"point", "--t", "0.5", "--eta", "0.5"}).out);
  CHECK(field["correlations"]["Qg"].is_null());
  CHECK(field["correlations"]["Q"].get<double>() == doctest::Approx(0.037190442142607194).epsilon(1e-10));
}

TEST_CASE("point csv and zero temperature") {
  const Result r = call({"point", "--t", "0", "--eta", "0", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == "t,eta,m,g_par,g_perp,I,C,Q,Q1,Q2,E,Qg");
  const auto f = split(ls[1], ',');
  CHECK(f[3] == "1");  // g_par
  CHECK(f[6] == "1");  // C
  CHECK(f[7] == "0");  // Q
}

TEST_CASE("scan csv layout and determinism") {
  const std::vector<std::string> args = {"scan", "--t-range", "0.1:2", "--t-count", "7",
                                         "--eta-range", "-1:1", "--eta-count", "5"};
  const Result a = call(args);
  REQUIRE(a.code == 0);
  auto ls = lines(a.out);
  REQUIRE(ls.size() == 1 + 35);
  CHECK(ls[0] == "t,eta,m,g_par,g_perp,I,C,Q,Q1,Q2,E,Qg");
  // t outer, eta inner.
  CHECK(split(ls[1], ',')[0] == "0.1");
  CHECK(split(ls[1], ',')[1] == "-1");
  CHECK(split(ls[2], ',')[0] == "0.1");
  CHECK(split(ls[2], ',')[1] == "-0.5");
  // Qg present only at eta = 0.
  CHECK(split(ls[1], ',')[11].empty());
  CHECK_FALSE(split(ls[3], ',')[11].empty());

  std::vector<std::string> threaded = args;
  threaded.insert(threaded.end(), {"--jobs", "4"});
  CHECK(call(threaded).out == a.out);
  CHECK(call(args).out == a.out);
}

TEST_CASE("scan quantities and json") {
  const Result r = call({"scan", "--t-list-is-not-an-option"});
  CHECK(r.code == 1);

  const Result q = call({"scan", "--t", "1", "--quantities", "Q,C", "--format", "json"});
  REQUIRE(q.code == 0);
  const json j = json::parse(q.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0].size() == 4);
  CHECK(j[0]["Q"].get<double>() == doctest::Approx(0.0817023222533).epsilon(1e-11));

  const Result step = call({"scan", "--t-range", "0.5:1.5", "--t-step", "0.25", "--quantities", "Q"});
  REQUIRE(step.code == 0);
  CHECK(lines(step.out).size() == 1 + 5);

  CHECK(call({"scan", "--t", "1", "--eta", "0.5", "--quantities", "Qg"}).code == 1);
  CHECK(call({"scan", "--t", "1", "--quantities", "bogus"}).code == 1);
  CHECK(call({"scan", "--t-range", "2:1", "--t-count", "3"}).code == 1);
  CHECK(call({"scan", "--t-range", "abc", "--t-count", "3"}).code == 1);
}

TEST_CASE("solve-max") {
  const Result r = call({"solve-max", "--delta", "-2"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["t_m"].get<double>() == doctest::Approx(0.881297).epsilon(1e-5));
  CHECK(j["q_m"].get<double>() == doctest::Approx(0.083061).epsilon(1e-4));
  CHECK(j["method"] == "stationarity-root");

  const json f = json::parse(call({"solve-max", "--eta", "0.5"}).out);
  CHECK(f["method"] == "direct-maximization");
  CHECK(f["t_m"].get<double>() > j["t_m"].get<double>());

  const Result csv = call({"solve-max", "--format", "csv"});
  REQUIRE(csv.code == 0);
  CHECK(lines(csv.out)[0] == "delta,eta,x_m,t_m,q_m,residual,cross_check_gap");

  CHECK(call({"solve-max", "--delta", "0.5"}).code == 1);
}

TEST_CASE("material") {
  const Result r = call({"material", "--material", "gypsum", "--at", "300"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["d_kelvin"].get<double>() == doctest::Approx(7.30660038009e-7).epsilon(1e-10));
  CHECK(j["t_max"].get<double>() == doctest::Approx(6.43928788684e-7).epsilon(1e-10));
  CHECK(j["at"]["q"].get<double>() == doctest::Approx(2.1394529859e-18).epsilon(1e-9));

  const Result custom = call({"material", "--gamma", "2.675e8", "--r", "0.17e-9"});
  REQUIRE(custom.code == 0);
  CHECK(json::parse(custom.out)["t_max"].get<double>() == doctest::Approx(5.16966425473e-7).epsilon(1e-10));

  CHECK(call({"material", "--material", "unobtainium"}).code == 1);
  CHECK(call({"material"}).code == 1);

  const auto cfg = temp_path("materials.txt");
  {
    std::ofstream f(cfg);
    f << "# test\nwater 2.675e8 0.151e-9\n";
  }
  const Result loaded = call({"material", "--config", cfg.string(), "--material", "water"});
  CHECK(loaded.code == 0);
  CHECK(json::parse(loaded.out)["name"] == "water");
  std::filesystem::remove(cfg);
  CHECK(call({"material", "--config", "/nonexistent/file", "--material", "water"}).code == 1);
}

TEST_CASE("kelvin temperatures") {
  const Result r = call({"point", "--t", "300", "--kelvin", "--material", "gypsum", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["correlations"]["Q"].get<double>() == doctest::Approx(2.1394529859e-18).epsilon(1e-8));
  CHECK(call({"point", "--t", "300", "--kelvin"}).code == 1);
}

TEST_CASE("verify") {
  const Result r = call({"verify"});
  CHECK(r.code == 0);
  CHECK(r.out.find("# verify PASS") != std::string::npos);
  CHECK(lines(r.out).size() == 1 + 20 + 1);

  const Result j = call({"verify", "--t-list", "1", "--eta-list", "0,0.5", "--format", "json"});
  REQUIRE(j.code == 0);
  const json v = json::parse(j.out);
  CHECK(v["pass"] == true);
  CHECK(v["points"].size() == 2);

  // An impossible tolerance turns into a verification failure.
  const Result fail = call({"verify", "--t-list", "0.3,1", "--eta-list", "0", "--tol", "1e-300"});
  CHECK(fail.code == 2);
  CHECK(fail.out.find("# verify FAIL") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 1);
  CHECK(call({"nonsense"}).code == 1);
  CHECK(call({"point"}).code == 1);
  CHECK(call({"point", "--t", "-1"}).code == 1);
  CHECK(call({"point", "--t", "1", "--format", "xml"}).code == 1);
  CHECK(call({"point", "--t", "abc"}).code == 1);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("output file is written through a temporary and renamed") {
  const auto path = temp_path("scan.csv");
  std::filesystem::remove(path);
  const Result r = call({"scan", "--t", "1", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  CHECK(std::filesystem::exists(path));
  CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "t,eta,m,g_par,g_perp,I,C,Q,Q1,Q2,E,Qg");
  std::filesystem::remove(path);

  CHECK(call({"scan", "--t", "1", "--out", "/nonexistent/dir/out.csv"}).code == 1);
}
