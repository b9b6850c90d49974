#include <doctest.h>

#include <set>

#include "rimwalk/errors.hpp"
#include "rimwalk/strip.hpp"

using namespace rimwalk;

namespace {

using Cell = std::pair<int, int>;

std::set<Cell> skew_cells(const Partition& outer, const Partition& inner) {
  std::set<Cell> cells;
  for (int i = 0; i < outer.length(); ++i)
    for (int j = inner.part(i); j < outer.part(i); ++j) cells.insert({i, j});
  return cells;
}

// Border-strip test straight from the definition: nonempty, edge connected,
// no 2x2 block.
bool strip_by_cells(const Partition& inner, const Partition& outer) {
  if (!contains(outer, inner)) return false;
  auto cells = skew_cells(outer, inner);
  if (cells.empty()) return false;
  for (auto [i, j] : cells)
    if (cells.count({i + 1, j}) && cells.count({i, j + 1}) &&
        cells.count({i + 1, j + 1}))
      return false;
  std::set<Cell> seen{*cells.begin()};
  std::vector<Cell> stack{*cells.begin()};
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    for (Cell nb : {Cell{i + 1, j}, Cell{i - 1, j}, Cell{i, j + 1}, Cell{i, j - 1}})
      if (cells.count(nb) && seen.insert(nb).second) stack.push_back(nb);
  }
  return seen.size() == cells.size();
}

// All border strips of the given length on nu, by exhausting partitions of
// |nu|+length.
std::set<Partition> strips_by_exhaustion(const Partition& nu, int length) {
  std::set<Partition> out;
  for (const auto& lambda : enumerate_partitions(nu.size() + length))
    if (strip_by_cells(nu, lambda)) out.insert(lambda);
  return out;
}

std::set<Partition> outers(const std::vector<BorderStrip>& strips) {
  std::set<Partition> out;
  for (const auto& s : strips) out.insert(s.outer());
  return out;
}

}  // namespace

TEST_CASE("strip_between") {
  // Cells: row 1 columns 3-5, row 2 columns 1-3, row 3 column 1.
  auto s = strip_between(Partition{2}, Partition{5, 3, 1});
  CHECK(s.height() == 3);
  CHECK(s.width() == 5);
  CHECK(s.length() == 7);

  auto row = strip_between(Partition{}, Partition{6});
  CHECK(row.height() == 1);
  CHECK(row.width() == 6);
  CHECK(row.length() == 6);

  auto hook = strip_between(Partition{1}, Partition{2, 2});
  CHECK(hook.height() == 2);
  CHECK(hook.width() == 2);
  CHECK(hook.length() == 3);

  CHECK_THROWS_AS(strip_between(Partition{1}, Partition{3, 1}), NotAStrip);  // disconnected
  CHECK_THROWS_AS(strip_between(Partition{}, Partition{2, 2}), NotAStrip);   // 2x2 block
  CHECK_THROWS_AS(strip_between(Partition{3}, Partition{2, 2}), NotAStrip);  // not contained
  CHECK_THROWS_AS(strip_between(Partition{2}, Partition{2}), NotAStrip);     // empty
}

TEST_CASE("row-interval predicate agrees with the cell definition") {
  for (int n = 1; n <= 9; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (int k = 0; k <= n; ++k)
        for (const auto& nu : enumerate_partitions(k))
          CHECK(is_border_strip(nu, lambda) == strip_by_cells(nu, lambda));
}

TEST_CASE("add_strips") {
  CHECK(outers(add_strips(Partition{}, 3)) ==
        std::set<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(outers(add_strips(Partition{1}, 3)) ==
        std::set<Partition>{{4}, {2, 2}, {1, 1, 1, 1}});

  auto on2 = add_strips(Partition{2}, 7);
  std::multiset<int> heights;
  for (const auto& s : on2) heights.insert(s.height());
  CHECK(heights == std::multiset<int>{1, 2, 3, 4, 5, 6, 7});

  CHECK_THROWS_AS(add_strips(Partition{1}, 0), OutOfRange);
}

TEST_CASE("remove_strips") {
  auto from22 = remove_strips(Partition{2, 2}, 3);
  REQUIRE(from22.size() == 1);
  CHECK(from22[0].inner() == Partition{1});
  CHECK(from22[0].height() == 2);

  auto row = remove_strips(Partition{6}, 6);
  REQUIRE(row.size() == 1);
  CHECK(row[0].inner().empty());
  CHECK(row[0].height() == 1);

  auto from33 = remove_strips(Partition{3, 3}, 3);
  REQUIRE(from33.size() == 2);
  CHECK(from33[0].inner() == Partition{3});
  CHECK(from33[1].inner() == Partition{2, 1});
}

TEST_CASE("add/remove strips match exhaustive search; length = height + width - 1") {
  for (int k = 0; k <= 6; ++k) {
    for (const auto& nu : enumerate_partitions(k)) {
      for (int s = 1; s <= 8; ++s) {
        auto added = add_strips(nu, s);
        CHECK(outers(added) == strips_by_exhaustion(nu, s));
        CHECK(outers(added).size() == added.size());
        for (const auto& strip : added) {
          CHECK(strip.length() == s);
          CHECK(strip.length() == strip.height() + strip.width() - 1);
          CHECK(strip.inner() == nu);
          // Removal finds the same strip back.
          auto back = remove_strips(strip.outer(), s);
          CHECK(std::find(back.begin(), back.end(), strip) != back.end());
        }
      }
    }
  }
  for (int n = 1; n <= 9; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      for (int s = 1; s <= n; ++s) {
        std::set<Partition> inners;
        for (const auto& strip : remove_strips(lambda, s)) {
          CHECK(strip.outer() == lambda);
          CHECK(strip.length() == strip.height() + strip.width() - 1);
          inners.insert(strip.inner());
        }
        std::set<Partition> expected;
        for (const auto& nu : enumerate_partitions(n - s))
          if (strip_by_cells(nu, lambda)) expected.insert(nu);
        CHECK(inners == expected);
      }
    }
  }
}

TEST_CASE("conjugation swaps height and width") {
  for (int k = 0; k <= 5; ++k) {
    for (const auto& nu : enumerate_partitions(k)) {
      for (int s = 1; s <= 10; ++s) {
        auto direct = add_strips(nu, s);
        auto dual = add_strips(conjugate(nu), s);
        REQUIRE(direct.size() == dual.size());
        for (const auto& strip : direct) {
          auto it = std::find_if(dual.begin(), dual.end(), [&](const BorderStrip& d) {
            return d.outer() == conjugate(strip.outer());
          });
          REQUIRE(it != dual.end());
          CHECK(it->height() == strip.width());
          CHECK(it->width() == strip.height());
        }
      }
    }
  }
}

TEST_CASE("going around the empty partition") {
  auto g = going_around(Partition{}, 5);
  CHECK(g.regular);
  CHECK_FALSE(g.ambiguous);
  std::vector<Partition> expected{
      {5}, {4, 1}, {3, 1, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
  CHECK(g.shapes() == expected);
  CHECK(g.heights() == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("going around (2) at n = 9") {
  auto g = going_around(Partition{2}, 9);
  std::vector<Partition> expected{{9},
                                  {6, 3},
                                  {5, 3, 1},
                                  {4, 3, 1, 1},
                                  {3, 3, 1, 1, 1},
                                  {2, 2, 1, 1, 1, 1, 1},
                                  {2, 1, 1, 1, 1, 1, 1, 1}};
  CHECK(g.shapes() == expected);
  CHECK(g.regular);
}

TEST_CASE("going around (3) at n = 6 is flagged") {
  auto g = going_around(Partition{3}, 6);
  CHECK_FALSE(g.regular);
  CHECK(g.ambiguous);
  REQUIRE(g.strips.size() >= 2);
  CHECK(g.strips[1].height() == 1);
  CHECK_THROWS_AS(g.require_regular(), AmbiguousOrdering);
  CHECK_THROWS_AS(going_around(Partition{3}, 3), OutOfRange);
}

TEST_CASE("going around is regular in range; first two entries") {
  for (int k = 0; k <= 5; ++k) {
    for (const auto& nu : enumerate_partitions(k)) {
      for (int n = 2 * k + 2; n <= 2 * k + 8; ++n) {
        auto g = going_around(nu, n);
        REQUIRE(g.regular);
        CHECK(static_cast<int>(g.strips.size()) == n - k);
        for (int j = 0; j < n - k; ++j) {
          CHECK(g.strips[static_cast<std::size_t>(j)].height() == j + 1);
          CHECK(g.strips[static_cast<std::size_t>(j)].outer().size() == n);
        }
        // (nu_1+n-k, nu_2, ...)
        std::vector<int> first(nu.vec());
        if (first.empty()) first.push_back(0);
        first[0] += n - k;
        CHECK(g.strips[0].outer() == Partition(first));
        // (n-k+nu_2-1, nu_1+1, nu_3, ...)
        std::vector<int> second{n - k + nu.part(1) - 1, nu.part(0) + 1};
        for (int i = 2; i < nu.length(); ++i) second.push_back(nu.part(i));
        CHECK(g.strips[1].outer() == Partition(second));
      }
    }
  }
}

TEST_CASE("decompose_unique") {
  auto d = decompose_unique(Partition{6, 3}, 2);
  REQUIRE(d);
  CHECK(d->rho == Partition{2});
  CHECK(d->strip.height() == 2);

  CHECK_THROWS_AS(decompose_unique(Partition{3, 3}, 3), UniquenessViolated);
  auto both = decompositions(Partition{3, 3}, 3);
  REQUIRE(both.size() == 2);
  CHECK(both[0].rho == Partition{3});
  CHECK(both[1].rho == Partition{2, 1});

  auto column = decompose_unique(Partition::rectangle(1, 6), 0);
  REQUIRE(column);
  CHECK(column->rho.empty());
  CHECK(column->strip.height() == 6);

  // (4,4) has no strip of length 6 leaving two cells.
  CHECK_FALSE(decompose_unique(Partition{4, 4}, 2).has_value());
  CHECK_THROWS_AS(decompositions(Partition{2}, 2), OutOfRange);
}

TEST_CASE("rho*S is injective over rho of size k in range") {
  for (int k = 0; k <= 5; ++k) {
    for (int n = 2 * k + 2; n <= 2 * k + 8; ++n) {
      std::set<Partition> images;
      std::size_t pairs = 0;
      for (const auto& rho : enumerate_partitions(k)) {
        for (const auto& s : add_strips(rho, n - k)) {
          images.insert(s.outer());
          ++pairs;
        }
      }
      CHECK(images.size() == pairs);
      for (const auto& lambda : enumerate_partitions(n)) {
        auto d = decompose_unique(lambda, k);
        CHECK(d.has_value() == (images.count(lambda) == 1));
      }
    }
  }
}

TEST_CASE("has_tail") {
  CHECK(strip_between(Partition{2}, Partition{6, 3}).has_tail());
  CHECK_FALSE(strip_between(Partition{2}, Partition{2, 2, 1, 1, 1}).has_tail());
}
