#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;
using shannon::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json j() const { return json::parse(out); }
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(SHANNON_DATA_DIR) + "/" + name; }

std::string temp_file(const char* name, const std::string& contents) {
  const auto p = (std::filesystem::temp_directory_path() / name).string();
  std::ofstream(p) << contents;
  return p;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("alpha") {
    auto r = call({"alpha", "5/2", "5/2"});
    REQUIRE(r.code == 0);
    CHECK(r.j()["alpha"] == 5);
    CHECK(r.j()["status"] == "exact");
    CHECK(r.j()["witness_verified"] == true);
    r = call({"alpha", "5/2", "5/2", "8/3"});
    CHECK(r.j()["alpha"] == 11);
    r = call({"alpha", "7/2", "--power", "2", "--method", "heuristic", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(r.j()["status"] == "lower-bound-only");
    CHECK(r.j()["alpha"] <= 10);
  }

  TEST_CASE("alpha writes a witness") {
    const auto path = (std::filesystem::temp_directory_path() / "shannon_cli_witness.txt").string();
    auto r = call({"alpha", "8/3", "--power", "2", "--witness", path});
    REQUIRE(r.code == 0);
    CHECK(r.j()["witness_path"] == path);
    auto v = call({"verify", path, "--graph", "8/3^2"});
    CHECK(v.code == 0);
    CHECK(v.j()["size"] == 5);
    std::filesystem::remove(path);
  }

  TEST_CASE("exhausted budget") {
    auto r = call({"alpha", "11/4", "--power", "3", "--method", "exact", "--nodes", "10"});
    CHECK(r.code == 3);
    CHECK(r.j()["status"] == "timeout");
  }

  TEST_CASE("verify the 15-cycle certificate") {
    auto r = call({"verify", data("c15_4_2842.txt"), "--graph", "15/2^4"});
    REQUIRE(r.code == 0);
    CHECK(r.j()["pass"] == true);
    CHECK(r.j()["size"] == 2842);
    CHECK(r.j()["format"] == "base15");
  }

  TEST_CASE("verify rejects a duplicated token") {
    std::ifstream in(data("c15_4_2842.txt"));
    std::stringstream ss;
    ss << in.rdbuf();
    const auto p = temp_file("shannon_cli_dup.txt", ss.str() + " 0018\n");
    auto r = call({"verify", p, "--graph", "15/2^4"});
    CHECK(r.code == 2);
    CHECK(r.j()["reason"] == "duplicate");
    CHECK(r.j()["first_violation"]["indices"] == json::array({0, 2842}));
    std::filesystem::remove(p);
  }

  TEST_CASE("verify rejects a truncated file") {
    std::ifstream in(data("c15_4_2842.txt"));
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
    text.pop_back();
    const auto p = temp_file("shannon_cli_trunc.txt", text);
    auto r = call({"verify", p, "--graph", "15/2^4"});
    CHECK(r.code == 4);
    CHECK(r.err.find("token 2841") != std::string::npos);
    std::filesystem::remove(p);
  }

  TEST_CASE("verify reports an adjacent pair") {
    const auto p = temp_file("shannon_cli_adj.txt", "0,0\n1,1\n");
    auto r = call({"verify", p, "--graph", "5/2^2"});
    CHECK(r.code == 2);
    CHECK(r.j()["reason"] == "adjacent");
    std::filesystem::remove(p);
  }

  TEST_CASE("orbit") {
    auto r = call({"orbit", "--spec", "m=2873 gens=1,15,1073,1125 qs=383,382,381,381"});
    REQUIRE(r.code == 0);
    CHECK(r.j()["independent"] == true);
    CHECK(r.j()["size"] == 2873);
    r = call({"orbit", "--m", "383", "--gens", "1,75,265", "--qs", "51,51,51"});
    CHECK(r.code == 2);
    CHECK(r.j()["independent"] == false);
    CHECK(r.j().contains("witness_t"));
  }

  TEST_CASE("theta, distance, converge, convergents") {
    auto r = call({"theta", "15/2"});
    CHECK(r.code == 0);
    CHECK(r.j()["theta"]["display"] == "7.417148");
    r = call({"distance", "8/3", "5/2"});
    CHECK(r.j()["bound"] == "5/14");
    r = call({"converge", "7/2", "--count", "3"});
    CHECK(r.j()["terms"][0]["term"] == "11/3");
    CHECK(r.j()["terms"][0]["distance_bound"] == "7/20");
    r = call({"convergents", "--decimal", "3.14159", "--n", "1"});
    CHECK(r.code == 0);
    CHECK(r.j()["terms"][1] == "22/7");
  }

  TEST_CASE("bounds") {
    auto r = call({"bounds", "8/3", "--power", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.j()["lower"]["value"] == 12);
    CHECK(r.j()["upper"]["nested_floor"] == "13");
    CHECK(r.j()["alpha_determined"] == true);
  }

  TEST_CASE("round") {
    const auto cfg = temp_file("shannon_cli_round.json", R"({"orbit": "m=5 gens=1,2 qs=2,2", "target": "6/2", "eps": ["0", "0"]})");
    auto r = call({"round", "--config", cfg});
    CHECK(r.code == 0);
    CHECK(r.j()["alpha"] == 5);
    CHECK(r.j()["verified"] == true);
    std::filesystem::remove(cfg);
  }

  TEST_CASE("discont on a small grid") {
    auto r = call({"discont", "--max-p", "5", "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(r.j()["grid"] == 10);
    CHECK(r.j()["complete"] == true);
    CHECK(r.j()["discontinuities"].size() == 6);
  }

  TEST_CASE("malformed input") {
    CHECK(call({"alpha", "foo"}).code == 4);
    CHECK(call({"alpha", "5/0"}).code == 4);
    CHECK(call({"verify", "/nonexistent/file", "--graph", "5/2"}).code != 0);
    CHECK(call({"orbit", "--spec", "m=5 gens=1,2"}).code == 4);
    CHECK(call({"frobnicate"}).code == 4);
    CHECK(call({"--help"}).code == 0);
  }
}
