#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pentadgf/cli.hpp"
#include "pentadgf/dgf.hpp"

using namespace pentadgf;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval at s = 2") {
  const Run r = run({"eval", "--s", "2,0"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(std::abs(j["value"]["re"].get<double>() - (-1.19842171457)) < 1e-10);
  CHECK(j["method"] == "explicit");
  CHECK(j["command"] == "eval");
  CHECK(j.contains("elapsed_ms"));
}

TEST_CASE("reported method matches the request") {
  for (std::string m : {"integral", "series", "mellin", "explicit"}) {
    const Run r = run({"eval", "--s", "3", "--method", m});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["method"] == m);
  }
  CHECK(json::parse(run({"eval", "--s", "0.5,15", "--method", "auto"}).out)["method"] == "mellin");
}

TEST_CASE("printed numbers round-trip exactly") {
  const Run r = run({"eval", "--s", "0.5,3", "--method", "series"});
  const double re = json::parse(r.out)["value"]["re"].get<double>();
  CHECK(re == d_series(Complex(0.5, 3.0)).value.real());
  const Run c = run({"--format", "csv", "eval", "--s", "0.5,3", "--method", "series"});
  const auto line = c.out.substr(c.out.find('\n') + 1);
  std::vector<std::string> cols;
  std::string cell;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') quoted = !quoted;
    else if (ch == ',' && !quoted) { cols.push_back(cell); cell.clear(); }
    else if (ch != '\n') cell += ch;
  }
  cols.push_back(cell);
  REQUIRE(cols.size() == 6);
  CHECK(std::stod(cols[2]) == re);
  CHECK(cols[5] == "series");
}

TEST_CASE("deterministic output") {
  const Run a = run({"--deterministic", "eval", "--s", "-2.5"});
  const Run b = run({"eval", "--s", "-2.5", "--deterministic"});
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["elapsed_ms"] == 0.0);
}

TEST_CASE("dk exact") {
  const Run r = run({"dk", "--k", "2", "--exact"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["pi_coeffs"][0]["rational"] == "-108");
  CHECK(j["pi_coeffs"][1]["sqrt3"] == "16");
  CHECK(j["pi_coeffs"][2]["rational"] == "2");
  CHECK(j["symbolic"] == "-108 + 16*sqrt(3)*pi + 2*pi^2");
}

TEST_CASE("zeros subcommand") {
  const Run r = run({"zeros", "--imag-max", "5"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["zeros"].size() == 1);
  CHECK(std::abs(j["zeros"][0]["location"]["re"].get<double>() - 0.88271) < 2e-4);
  CHECK(std::abs(j["zeros"][0]["location"]["im"].get<double>() - 3.91652) < 2e-4);
}

TEST_CASE("other subcommands") {
  CHECK(json::parse(run({"partial-sum", "--x", "2.5"}).out)["value"]["re"] == -2);
  const json p = json::parse(run({"phi", "--q", "0.5", "--method", "product"}).out);
  CHECK(std::abs(p["value"]["re"].get<double>() - 0.2887880951) < 1e-10);
  const json e = json::parse(run({"eta", "--tau", "0,1", "--method", "hankel"}).out);
  CHECK(std::abs(e["value"]["re"].get<double>() - 0.768225) < 1e-6);
  const json t = json::parse(run({"table", "--what", "bernoulli", "--n", "10"}).out);
  CHECK(t["rows"].size() == 11);
  CHECK(t["rows"][10]["value"] == "5/66");
  const Run csv = run({"--format", "csv", "table", "--what", "a", "--n", "7"});
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 8);
  const json a = json::parse(run({"asymptotic", "--s", "-0.5"}).out);
  CHECK(std::abs(a["value"]["re"].get<double>() + std::sqrt(0.5)) < 1e-12);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"eval"}).code == cli::kUsage);
  CHECK(run({"eval", "--s", "abc"}).code == cli::kUsage);
  CHECK(run({"eval", "--s", "0", "--method", "series"}).code == cli::kUsage);
  CHECK(run({"eval", "--s", "2.5", "--method", "explicit"}).code == cli::kUsage);
  CHECK(run({"partial-sum", "--x", "3"}).code == cli::kUsage);
  CHECK(run({"phi", "--q", "1.5"}).code == cli::kUsage);
  CHECK(run({"eval", "--s", "1", "--method", "bogus"}).code == cli::kUsage);
  // ill-conditioned integral: best value printed and flagged
  const Run r = run({"eval", "--s", "0.5,20", "--method", "integral"});
  CHECK(r.code == cli::kFlagged);
  CHECK(json::parse(r.out)["flagged"] == true);
  CHECK(run({"--help"}).code == 0);
}

}  // TEST_SUITE
