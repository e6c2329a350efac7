#include <doctest.h>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cfrac/cli.hpp"
#include "cfrac/errors.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cfrac::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

double number(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  REQUIRE(res.ec == std::errc());
  REQUIRE(res.ptr == s.data() + s.size());
  return v;
}

}  // namespace

TEST_CASE("eval closed") {
  const auto r = run({"eval", "--op", "J^(1)", "--fn", "x", "--at", "2", "--method", "closed"});
  CHECK(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"x", "re", "im"});
  CHECK(number(rows[1][0]) == 2.0);
  CHECK(number(rows[1][1]) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(number(rows[1][2]) == 0.0);
}

TEST_CASE("eval both") {
  const auto r = run({"eval", "--op", "J^(0.5)", "--fn", "x", "--at", "1", "--method", "both"});
  CHECK(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"x", "re", "im", "ref_re", "ref_im", "abs_err",
                                            "rel_err", "status"});
  CHECK(number(rows[1][1]) == doctest::Approx(0.7522527780636751).epsilon(1e-8));
  CHECK(number(rows[1][6]) <= 1e-8);
  CHECK(rows[1][7] == "ok");
}

TEST_CASE("eval grid on the left inverse") {
  const auto r = run({"eval", "--op", "D^(0.5).J^(0.5)", "--fn", "x^(1+1i)", "--grid", "0.5:2:4",
                      "--method", "both"});
  CHECK(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 5);
  const double xs[] = {0.5, 1.0, 1.5, 2.0};
  for (int i = 0; i < 4; ++i) {
    CHECK(number(rows[i + 1][0]) == xs[i]);
    CHECK(number(rows[i + 1][6]) <= 1e-6);
  }
}

TEST_CASE("eval default method is both") {
  const auto r = run({"eval", "--op", "J^1", "--fn", "x", "--at", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("x,re,im,ref_re", 0) == 0);
}

TEST_CASE("eval with infinite lower limit and negative points") {
  const auto r = run({"eval", "--op", "J^1", "--fn", "exp(x)", "--x0", "-inf", "--at", "-1.5",
                      "--method", "closed"});
  CHECK(r.code == 0);
  const auto rows = csv(r.out);
  CHECK(number(rows[1][0]) == -1.5);
  CHECK(number(rows[1][1]) == doctest::Approx(std::exp(-1.5)).epsilon(1e-14));
}

TEST_CASE("eval json") {
  const auto r = run({"eval", "--op", "J^1", "--fn", "x", "--grid", "1:2:2", "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  CHECK(doc[1]["x"].get<double>() == 2.0);
  CHECK(doc[1]["re"].get<double>() == doctest::Approx(2.0));
  CHECK(doc[1]["status"] == "ok");
  CHECK(doc[0].contains("rel_err"));
}

TEST_CASE("eval json uses null for missing values") {
  const auto r = run({"eval", "--op", "J^0.5", "--fn", "exp(x)", "--x0", "-inf", "--at", "0",
                      "--method", "closed", "--format", "json"});
  CHECK(r.code == 2);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc[0]["re"].is_null());
}

TEST_CASE("eval writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "cfrac_cli_test.csv";
  const auto r = run({"eval", "--op", "J^1", "--fn", "x", "--at", "2", "--method", "closed",
                      "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().rfind("x,re,im\n2,", 0) == 0);
  std::filesystem::remove(path);
}

TEST_CASE("csv values round-trip exactly") {
  const auto r = run({"eval", "--op", "J^(0.3+0.7i)", "--fn", "x^(2.5-1i)", "--at", "1.7",
                      "--method", "closed"});
  const auto rows = csv(r.out);
  const double re = number(rows[1][1]);
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, re);
  CHECK(std::string(buf, res.ptr) == rows[1][1]);
}

TEST_CASE("exit codes") {
  CHECK(run({"eval", "--op", "J^1", "--fn", "x+", "--at", "1"}).code == 1);
  CHECK(run({"eval", "--op", "Q^1", "--fn", "x", "--at", "1"}).code == 1);
  CHECK(run({"eval", "--op", "J^1", "--fn", "x"}).code == 1);
  CHECK(run({"eval", "--op", "J^1", "--fn", "x", "--at", "1", "--grid", "1:2:3"}).code == 1);
  CHECK(run({"eval", "--op", "J^1", "--fn", "x", "--at", "1", "--bogus"}).code == 1);
  CHECK(run({"eval", "--op", "J^1", "--fn", "x", "--grid", "1:2:0"}).code == 1);
  CHECK(run({"eval", "--op", "J^1", "--fn", "x", "--at", "1", "--method", "exact"}).code == 1);
  CHECK(run({}).code == 1);

  const auto domain = run({"eval", "--op", "J^1", "--fn", "x", "--at", "-1"});
  CHECK(domain.code == 2);
  CHECK_FALSE(domain.err.empty());
  CHECK(run({"eval", "--op", "J^1", "--fn", "exp(x)", "--at", "1"}).code == 2);

  const auto conv = run({"eval", "--op", "J^(0.5+3i)", "--fn", "x^(0.3+5i)", "--at", "4",
                         "--degree", "4", "--rel-tol", "1e-16"});
  CHECK(conv.code == 3);
}

TEST_CASE("parse_grid") {
  CHECK(cfrac::cli::parse_grid("0.5:2:4") == std::vector<double>{0.5, 1.0, 1.5, 2.0});
  CHECK(cfrac::cli::parse_grid("3:7:1") == std::vector<double>{3.0});
  CHECK_THROWS_AS(cfrac::cli::parse_grid("1:2"), cfrac::ParseError);
  CHECK_THROWS_AS(cfrac::cli::parse_grid("1:2:2.5"), cfrac::ParseError);
}

TEST_CASE("selftest") {
  const auto all = run({"selftest"});
  CHECK(all.code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);

  const auto some = run({"selftest", "--filter", "semigroup"});
  CHECK(some.code == 0);
  std::istringstream lines(some.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    if (line.find(" PASS ") != std::string::npos) {
      CHECK(line.find("semigroup") != std::string::npos);
      ++count;
    }
  }
  CHECK(count >= 2);

  CHECK(run({"selftest", "--filter", "no_such_check"}).code == 1);
}

TEST_CASE("output is deterministic") {
  CHECK(run({"selftest", "--seed", "42"}).out == run({"selftest", "--seed", "42"}).out);
  const std::vector<std::string> eval{"eval", "--op", "D^(0.5).J^(0.5)", "--fn", "x^(1+1i)",
                                      "--grid", "0.5:2:4", "--seed", "7"};
  CHECK(run(eval).out == run(eval).out);
}
