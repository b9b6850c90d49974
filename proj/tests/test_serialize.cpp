#include <doctest.h>

#include <sstream>

#include "rimwalk/serialize.hpp"

using namespace rimwalk;
using rimwalk::io::Json;

TEST_CASE("big integers") {
  CHECK(io::to_json(BigInt(-7)) == Json(-7));
  CHECK(io::to_json(BigInt(std::numeric_limits<std::int64_t>::max())).is_number());
  const BigInt big = factorial(25);
  CHECK(io::to_json(big) == Json(big.str()));
}

TEST_CASE("partitions round-trip") {
  CHECK(io::to_json(Partition{3, 1}).dump() == "[3,1]");
  CHECK(io::to_json(Partition{}).dump() == "[]");
  CHECK(io::partition_from_json(Json::parse("[2,2,1]")) == Partition{2, 2, 1});
  CHECK(io::partition_from_json(Json::array()) == Partition{});
  CHECK_THROWS(io::partition_from_json(Json::parse("[1,2]")));
}

TEST_CASE("strip") {
  BorderStrip s(Partition{1}, Partition{4, 2});
  CHECK(io::to_json(s).dump() ==
        R"({"inner":[1],"outer":[4,2],"height":2,"length":5})");
}

TEST_CASE("character table") {
  auto j = io::to_json(character_table(2));
  CHECK(j.dump() ==
        R"({"k":2,"order":[[2],[1,1]],"table":[[1,1],[-1,1]],"centralizers":[2,2]})");
  std::ostringstream os;
  io::write_tsv(os, character_table(2));
  CHECK(os.str() == "shape\\class\t2\t1,1\n2\t1\t1\n1,1\t-1\t1\n");
  std::ostringstream empty;
  io::write_tsv(empty, character_table(0));
  CHECK(empty.str() == "shape\\class\tempty\nempty\t1\n");
}

TEST_CASE("verification report") {
  auto rep = verify_theorem(1, 4);
  auto j = io::to_json(rep);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"k", "n", "checked", "mismatches",
                                         "target", "in_range", "pass"});
  CHECK(j["checked"] == 5);
  CHECK(j["mismatches"].empty());
  CHECK(j["pass"] == true);

  VerificationReport bad;
  bad.k = 1;
  bad.n = 4;
  bad.in_range = true;
  bad.mismatches.push_back({Partition{1}, Partition{3, 1}, 2, 3, "theorem"});
  CHECK(io::to_json(bad)["mismatches"][0].dump() ==
        R"({"nu":[1],"mu":[3,1],"lhs":2,"rhs":3,"check":"theorem"})");
  CHECK(io::to_json(bad)["pass"] == false);
}

TEST_CASE("orthogonality, conjecture rows, psi") {
  auto o = io::to_json(verify_column_orthogonality(4));
  CHECK(o["orthogonality"] == "pass");
  CHECK(o["max_deviation"] == 0);

  auto row = io::to_json(conjecture_row(6));
  CHECK(row.dump() ==
        R"({"n":6,"multiplicity":2,"q_at_minus1":-5,"positive":true,)"
        R"("unimodal":true,"palindromic":true,"quotient":[1,7,1],"consistent":true})");

  auto psi = io::to_json(build_psi(Partition{}, 3));
  CHECK(psi.dump() ==
        R"({"nu":[],"n":3,"regular":true,"terms":[)"
        R"({"sign":1,"shape":[3],"height":1},)"
        R"({"sign":-1,"shape":[2,1],"height":2},)"
        R"({"sign":1,"shape":[1,1,1],"height":3}]})");
}

TEST_CASE("output is deterministic across thread counts") {
  CharacterEvaluator a;
  CharacterEvaluator b;
  auto one = io::to_json(verify_theorem(3, 8, {.jobs = 1, .evaluator = &a}));
  auto many = io::to_json(verify_theorem(3, 8, {.jobs = 4, .evaluator = &b}));
  CHECK(one.dump() == many.dump());
  CHECK(io::to_json(character_table(6, a, 1)).dump() ==
        io::to_json(character_table(6, b, 3)).dump());
}
