#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "banhatti/cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "bsoindex");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = banhatti::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("bsoindex-test-" + std::to_string(::getpid()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string write(const std::string& name, const std::string& content) const {
    fs::path p = path_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }

 private:
  fs::path path_;
};

nlohmann::json find_report(const nlohmann::json& graph, const std::string& id) {
  for (const auto& r : graph["reports"])
    if (r["id"] == id) return r;
  return nullptr;
}

}  // namespace

TEST_CASE("indices table and csv") {
  TempDir dir;
  const std::string c5 = dir.write("c5.g6", "Dhc\n");
  Outcome table = invoke({"indices", c5});
  CHECK(table.status == 0);
  CHECK(table.out.find("BSO") != std::string::npos);
  CHECK(table.out.find("3.5355339") != std::string::npos);

  const std::string p4 = dir.write("p4.edges", "0 1\n1 2\n2 3\n");
  Outcome csv = invoke({"indices", "--format", "csv", p4});
  CHECK(csv.status == 0);
  CHECK(csv.out.starts_with("graph,index,value\n"));
  CHECK(csv.out.find(",H,1.8333333") != std::string::npos);
}

TEST_CASE("indices json for K2") {
  TempDir dir;
  const std::string k2 = dir.write("k2.txt", "A_\n");
  Outcome r = invoke({"indices", "--format", "json", "--input-format", "g6", k2});
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  auto idx = j["graphs"][0]["indices"];
  CHECK(idx["BSO"].get<double>() == doctest::Approx(std::sqrt(2.0)));
  CHECK(idx["SO"].get<double>() == doctest::Approx(std::sqrt(2.0)));
  CHECK(idx["R"].get<double>() == doctest::Approx(1.0));
  CHECK(idx["H"].get<double>() == doctest::Approx(1.0));
  CHECK(j["errors"].empty());
}

TEST_CASE("indices reports bad lines and keeps going") {
  TempDir dir;
  const std::string file = dir.write("mixed.g6", "A_\nB?\nA`\nBg\n");
  Outcome r = invoke({"indices", "--format", "json", file});
  CHECK(r.status == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["graphs"].size() == 2);
  CHECK(j["errors"].size() == 2);
  CHECK(r.err.find(":2:") != std::string::npos);
  CHECK(r.err.find(":3:") != std::string::npos);
}

TEST_CASE("bounds on C6 and K_{2,3}") {
  TempDir dir;
  const std::string file = dir.write("g.g6", "EhEG\nD]o\n");
  Outcome r = invoke({"bounds", "--format", "json", file});
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["graphs"].size() == 2);
  for (const auto& report : j["graphs"][0]["reports"]) {
    CHECK(report["holds"] == true);
    CHECK(report["consistent"] == true);
    if (report["id"] == "T3.1-lower") CHECK(report["equality_detected"] == true);
  }
  auto t34 = find_report(j["graphs"][1], "T3.4");
  CHECK(t34["equality_detected"] == true);
  CHECK(t34["consistent"] == true);
}

TEST_CASE("bounds on K5 lists skipped complement bounds") {
  TempDir dir;
  const std::string file = dir.write("k5.g6", "D~{\n");
  Outcome table = invoke({"bounds", file});
  CHECK(table.status == 0);
  CHECK(table.out.find("skipped: complement-zero-degree") != std::string::npos);

  Outcome one = invoke({"bounds", "--format", "json", "--id", "C3.3-lower", file});
  auto j = nlohmann::json::parse(one.out);
  REQUIRE(j["graphs"][0]["reports"].size() == 1);
  CHECK(j["graphs"][0]["reports"][0]["skip_reason"] == "complement-zero-degree");
  CHECK(j["graphs"][0]["reports"][0]["lhs"].is_null());
}

TEST_CASE("bounds csv header matches report fields") {
  TempDir dir;
  const std::string file = dir.write("c5.g6", "Dhc\n");
  Outcome r = invoke({"bounds", "--format", "csv", file});
  CHECK(r.out.starts_with(
      "graph,id,lhs,rhs,slack,holds,equality_detected,equality_predicted,consistent,skipped,skip_reason\n"));
}

TEST_CASE("bounds rejects disconnected input") {
  TempDir dir;
  const std::string file = dir.write("two.edges", "0 1\n2 3\n");
  Outcome r = invoke({"bounds", file});
  CHECK(r.status == 1);
  CHECK(r.err.find("disconnected") != std::string::npos);
}

TEST_CASE("extremal n = 5") {
  Outcome r = invoke({"extremal", "--n", "5", "--format", "json"});
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["min_value"].get<double>() == doctest::Approx(3.6502815).epsilon(1e-7));
  CHECK(j["max_value"].get<double>() == doctest::Approx(4.1231056).epsilon(1e-7));
  CHECK(j["checks"]["closed_form_min_matches"] == true);
  CHECK(j["checks"]["closed_form_max_matches"] == true);
  CHECK(j["min_trees"] == nlohmann::json::array({"DkC"}));
  CHECK(j["passed"] == true);
}

TEST_CASE("extremal chemical n = 8") {
  Outcome r = invoke({"extremal", "--n", "8", "--chemical", "--format", "json"});
  CHECK(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["chemical"] == true);
  CHECK(j["max_value"].get<double>() <= 6.5382119);
  CHECK(j["chemical_bound"]["holds"] == true);
  CHECK(j["chemical_bound"]["attaining"].get<int>() >= 1);
}

TEST_CASE("extremal range errors") {
  Outcome r = invoke({"extremal", "--n", "2"});
  CHECK(r.status == 1);
  CHECK(r.err.find("starts at n = 3") != std::string::npos);
  CHECK(invoke({"extremal", "--n", "40"}).status == 1);
}

TEST_CASE("verify suites") {
  Outcome random = invoke({"verify", "--suite", "random", "--count", "0"});
  CHECK(random.status == 0);
  CHECK(random.out.find("FAIL") == std::string::npos);

  Outcome trees = invoke({"verify", "--suite", "trees", "--max-n", "10", "--format", "json"});
  CHECK(trees.status == 0);
  auto j = nlohmann::json::parse(trees.out);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() > 5);
}

TEST_CASE("identical invocations give identical output") {
  for (const char* format : {"json", "csv"}) {
    Outcome a = invoke({"verify", "--suite", "random", "--count", "60", "--seed", "9", "--format", format});
    Outcome b = invoke({"verify", "--suite", "random", "--count", "60", "--seed", "9", "--format", format});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).status == 2);
  CHECK(invoke({"frobnicate"}).status == 2);
  CHECK(invoke({"extremal"}).status == 2);
  CHECK(invoke({"extremal", "--n", "5", "--index", "XYZ"}).status == 2);
  CHECK(invoke({"bounds", "--id", "T9.9", "x.g6"}).status == 2);
  CHECK(invoke({"indices", "--tol", "-1", "x.g6"}).status == 2);
  CHECK(invoke({"verify", "--suite", "nope"}).status == 2);
}

TEST_CASE("unreadable input") {
  Outcome r = invoke({"indices", "/nonexistent/graph.g6"});
  CHECK(r.status == 1);
  CHECK(r.err.find("cannot open") != std::string::npos);
}
