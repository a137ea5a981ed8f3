#include <doctest.h>

#include "dessinry/error.hpp"
#include "dessinry/permutation.hpp"

using namespace dessinry;

TEST_CASE("products are read left to right") {
  auto a = Permutation::from_cycles(3, {{0, 1}});
  auto b = Permutation::from_cycles(3, {{1, 2}});
  // 0 -a-> 1 -b-> 2
  CHECK((a * b)(0) == 2);
  CHECK((a * b) == Permutation::from_cycles(3, {{0, 2, 1}}));
  CHECK((a * a).is_identity());
}

TEST_CASE("inverse, cycles and cycle type") {
  auto p = Permutation::from_cycles(5, {{0, 3, 1}, {2, 4}});
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.cycle_type() == std::vector<int>{3, 2});
  CHECK(p.cycle_count() == 2);
  CHECK(to_cycle_string(p) == "(0 3 1)(2 4)");
  CHECK(to_cycle_string(Permutation::identity(4)) == "()");
  CHECK(Permutation::identity(3).cycle_type() == std::vector<int>{1, 1, 1});
}

TEST_CASE("non-bijections are rejected") {
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0}), Error);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 2}), Error);
  CHECK_THROWS_AS(Permutation::identity(2) * Permutation::identity(3), Error);
}

TEST_CASE("all_permutations lists Sym(d) once each") {
  auto all = all_permutations(4);
  CHECK(all.size() == 24);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
}
