#include <doctest.h>

#include <set>

#include "rimwalk/character.hpp"
#include "rimwalk/errors.hpp"
#include "rimwalk/identities.hpp"

using namespace rimwalk;

TEST_CASE("dimension polynomial of the empty partition") {
  for (int n = 2; n <= 14; ++n) {
    CHECK(poly_p(Partition{}, n) ==
          IntPolynomial{0, 1} * IntPolynomial::t_plus_one_pow(n - 1));
    CHECK(poly_p_table(Partition{}, n) == IntPolynomial::t_plus_one_pow(n - 1));
  }
}

TEST_CASE("tabulated dimension polynomials for nu = (1)") {
  const auto sq = IntPolynomial::t_plus_one_pow(2);
  const IntPolynomial t1{1, 1};
  CHECK(poly_p_table(Partition{1}, 4) == sq);
  CHECK(poly_p_table(Partition{1}, 5) == t1 * IntPolynomial{1, 4, 1});
  CHECK(poly_p_table(Partition{1}, 6) == sq * IntPolynomial{1, 7, 1});
  CHECK(poly_p_table(Partition{1}, 7) == t1 * IntPolynomial{1, 13, 22, 13, 1});
  CHECK(poly_p_table(Partition{1}, 8) == sq * IntPolynomial{1, 18, 27, 18, 1});
  CHECK(poly_p_table(Partition{1}, 9) ==
        t1 * IntPolynomial{1, 26, 79, 110, 79, 26, 1});
  CHECK(poly_p_table(Partition{1}, 10) ==
        sq * IntPolynomial{1, 33, 93, 131, 93, 33, 1});
  CHECK(poly_p(Partition{1}, 6).coefficient(0) == 0);
  CHECK(poly_p(Partition{1}, 6).coefficient(2) == 9);
  CHECK_THROWS_AS(poly_p(Partition{1}, 3), OutOfRange);
}

TEST_CASE("the sum over A_n") {
  CHECK(an_sum(4) == 4);
  CHECK(an_sum(5) == 12);
  CHECK(an_sum(6) == 36);
  for (int n = 4; n <= 30; ++n) {
    CHECK(an_sum(n) == an_sum_closed(n));
    // Independent route through the closed form for the middle shapes.
    BigInt s = 2;
    for (int r = 2; r <= n - 2; ++r) s += special_dimension(n, r);
    CHECK(s == an_sum_closed(n));
  }
  CHECK(an_shapes(5) ==
        std::vector<Partition>{{5}, {3, 2}, {2, 2, 1}, {1, 1, 1, 1, 1}});
  CHECK_THROWS_AS(an_sum(3), OutOfRange);
}

TEST_CASE("recurrence") {
  auto checks = verify_recurrence(30);
  REQUIRE(checks.size() == 27);
  CHECK(checks[0].lhs == 2);
  CHECK(checks[1].lhs == 10);
  CHECK(checks[2].lhs == 34);
  CHECK(checks[3].lhs == 98);
  for (const auto& c : checks) CHECK_MESSAGE(c.pass(), c.subject);
}

TEST_CASE("rational form of the sum") {
  for (int n = 4; n <= 30; ++n)
    CHECK(wz_sum(n) == BigRational(an_sum_closed(n) - 2));
  CHECK(wz_sum(4) == 2);
}

TEST_CASE("alternating sums") {
  CHECK(alternating_dim_sum(Partition{2, 1}, 10) == 0);
  for (int k = 0; k <= 4; ++k)
    for (const auto& nu : enumerate_partitions(k))
      for (int n = 2 * k + 2; n <= 2 * k + 10; ++n)
        CHECK(alternating_dim_sum(nu, n) == 0);
  for (int n = 2; n <= 40; ++n) CHECK(binomial_alternating_sum(n) == 0);
  CHECK(binomial_alternating_sum(1) == -1);
}

TEST_CASE("conjecture rows") {
  auto five = conjecture_row(5);
  CHECK(five.multiplicity == 1);
  CHECK(five.quotient == IntPolynomial{1, 4, 1});
  CHECK(five.q_at_minus1 == -2);
  CHECK(five.consistent());

  auto eight = conjecture_row(8);
  CHECK(eight.multiplicity == 2);
  CHECK(eight.quotient == IntPolynomial{1, 18, 27, 18, 1});
  CHECK(eight.palindromic);
  CHECK(eight.consistent());

  auto nine = conjecture_row(9);
  CHECK(nine.multiplicity == 1);
  CHECK(nine.q_at_minus1 == -2);
  CHECK(nine.positive);
  CHECK(nine.unimodal);

  auto rows = check_conjectures(4, 24, 2);
  REQUIRE(rows.size() == 21);
  for (const auto& r : rows) {
    CHECK(r.n == rows.front().n + (&r - rows.data()));
    CHECK_MESSAGE(r.consistent(), "n=" << r.n);
  }
  CHECK(check_conjectures(10, 9).empty());
  CHECK_THROWS_AS(check_conjectures(3, 9), OutOfRange);
}

TEST_CASE("verify_identities covers every family and passes") {
  auto checks = verify_identities(20);
  std::set<std::string> names;
  for (const auto& c : checks) {
    names.insert(c.name);
    CHECK_MESSAGE(c.pass(), c.name << " " << c.subject);
  }
  CHECK(names == std::set<std::string>{"an_sum", "wz_sum", "recurrence",
                                       "binomial_alternating",
                                       "alternating_dim_sum"});
}
