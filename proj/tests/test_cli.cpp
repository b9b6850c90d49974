#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "rimwalk");
  std::ostringstream out;
  std::ostringstream err;
  const int code = rimwalk::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("partitions") {
  auto r = run({"partitions", "4"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) ==
        std::vector<std::string>{"[4]", "[3,1]", "[2,2]", "[2,1,1]", "[1,1,1,1]"});
  auto zero = run({"partitions", "0"});
  CHECK(zero.code == 0);
  CHECK(zero.out == "[]\n");
  auto neg = run({"partitions", "-1"});
  CHECK(neg.code == 2);
  CHECK(neg.err.find("error") != std::string::npos);
  CHECK(run({"partitions", "x"}).code == 2);
  CHECK(json::parse(run({"partitions", "3", "--format", "json"}).out) ==
        json::parse("[[3],[2,1],[1,1,1]]"));
}

TEST_CASE("char") {
  auto r = run({"char", "--lambda", "2,1", "--mu", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "-1\n");
  CHECK(run({"char", "--lambda", "5", "--mu", "5"}).out == "1\n");
  CHECK(run({"char", "--lambda", "2,1", "--mu", "1,2"}).out == "0\n");
  CHECK(run({"char", "--lambda", "2,1", "--mu", "2"}).code == 2);
  CHECK(run({"char", "--lambda", "1,2", "--mu", "3"}).code == 2);
  CHECK(run({"char", "--lambda", "2,1"}).code == 2);
}

TEST_CASE("table") {
  auto tsv = run({"table", "2", "--format", "tsv"});
  CHECK(tsv.code == 0);
  CHECK(lines(tsv.out).size() == 3);
  CHECK(lines(tsv.out)[1] == "2\t1\t1");
  CHECK(lines(tsv.out)[2] == "1,1\t-1\t1");

  auto zero = json::parse(run({"table", "0", "--format", "json"}).out);
  CHECK(zero["table"] == json::parse("[[1]]"));

  auto r = run({"table", "8", "--format", "json"});
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j["table"].size() == 22);
  for (const auto& row : j["table"]) CHECK(row.size() == 22);
  CHECK(j["orthogonality"] == "pass");
  CHECK(run({"table", "-1"}).code == 2);
}

TEST_CASE("psi") {
  auto r = run({"psi", "--nu", "1", "--n", "6"});
  CHECK(r.code == 0);
  auto terms = lines(r.out);
  REQUIRE(terms.size() == 5);
  CHECK(terms[0].rfind("+ (6)", 0) == 0);
  CHECK(terms[1].rfind("- (4,2)", 0) == 0);
  CHECK(r.err.empty());

  CHECK(run({"psi", "--nu", "1", "--n", "6", "--mu", "5,1"}).out == "5\n");
  CHECK(run({"psi", "--nu", "empty", "--n", "5", "--mu", "5"}).out == "5\n");

  auto flagged = run({"psi", "--nu", "3", "--n", "6"});
  CHECK(flagged.code == 0);
  CHECK(flagged.err.find("warning") != std::string::npos);
  CHECK(flagged.err.find("ambiguity") != std::string::npos);

  auto js = json::parse(run({"psi", "--nu", "2", "--n", "8", "--format", "json"}).out);
  CHECK(js["terms"].size() == 6);
  CHECK(js["regular"] == true);
  CHECK(run({"psi", "--nu", "1", "--n", "6", "--mu", "5"}).code == 2);
}

TEST_CASE("going-around") {
  auto j = json::parse(
      run({"going-around", "--nu", "2", "--n", "9", "--format", "json"}).out);
  CHECK(j["strips"].size() == 7);
  CHECK(j["strips"][1]["outer"] == json::parse("[6,3]"));
  auto flagged = run({"going-around", "--nu", "3", "--n", "6"});
  CHECK(flagged.code == 0);
  CHECK(flagged.err.find("warning") != std::string::npos);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "theorem", "--k", "2", "--n", "8"}).code == 0);
  auto j = json::parse(
      run({"verify", "theorem", "--k", "2", "--n", "8", "--format", "json"}).out);
  CHECK(j["checked"] == 44);
  CHECK(j["mismatches"].empty());

  auto low = run({"verify", "theorem", "--k", "3", "--n", "7"});
  CHECK(low.code == 2);
  CHECK(low.err.find("requires n >= 2k+2") != std::string::npos);

  CHECK(run({"verify", "identities", "--n-max", "20"}).code == 0);
  CHECK(run({"verify", "matrix", "--k", "2", "--n-max", "9"}).code == 0);
  CHECK(run({"verify", "decomposition", "--k", "1", "--n", "6"}).code == 0);
  CHECK(run({"verify", "centralizer", "--k", "3", "--n", "9"}).code == 0);
  CHECK(run({"verify", "orthogonality", "--k", "6"}).code == 0);
  CHECK(run({"verify", "theorem", "--n", "8"}).code == 2);
  CHECK(run({"verify", "nonsense", "--k", "1", "--n", "4"}).code == 2);
}

TEST_CASE("conjectures") {
  auto r = run({"conjectures", "--n-min", "4", "--n-max", "10"});
  CHECK(r.code == 0);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 7);
  const std::vector<std::string> quotients{
      "[1]", "[1,4,1]", "[1,7,1]", "[1,13,22,13,1]", "[1,18,27,18,1]",
      "[1,26,79,110,79,26,1]", "[1,33,93,131,93,33,1]"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto j = json::parse(rows[i]);
    CHECK(j["n"] == 4 + static_cast<int>(i));
    CHECK(j["multiplicity"] == (i % 2 == 0 ? 2 : 1));
    CHECK(j["quotient"].dump() == quotients[i]);
    CHECK(j["consistent"] == true);
  }
  CHECK(run({"conjectures", "--n-min", "4", "--n-max", "24"}).code == 0);
  CHECK(run({"conjectures", "--n-min", "9", "--n-max", "8"}).code == 2);
  CHECK(run({"conjectures", "--n-min", "3", "--n-max", "8"}).code == 2);
}

TEST_CASE("json output is byte-identical across runs and job counts") {
  auto a = run({"verify", "theorem", "--k", "3", "--n", "9", "--format", "json"});
  auto b = run({"verify", "theorem", "--k", "3", "--n", "9", "--format", "json",
                "--jobs", "3"});
  CHECK(a.out == b.out);
  CHECK(run({"table", "5", "--format", "json"}).out ==
        run({"table", "5", "--format", "json"}).out);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"table", "3", "--format", "xml"}).code == 2);
  CHECK(run({"table", "3", "--jobs", "0"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
