#include <doctest.h>

#include <set>

#include "dessinry/enumeration.hpp"
#include "dessinry/error.hpp"
#include "support/oracles.hpp"

using namespace dessinry;

namespace {

std::uint64_t factorial(int d) {
  std::uint64_t f = 1;
  for (int i = 2; i <= d; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<MonodromyTuple> canon(const EnumerationResult& r) {
  std::vector<MonodromyTuple> out;
  for (const auto& c : r.classes) out.push_back(c.canonical);
  return out;
}

}  // namespace

TEST_CASE("small class counts") {
  CHECK(enumerate(3, 1).classes.size() == 1);
  CHECK(enumerate(3, 2).classes.size() == 3);
  CHECK(enumerate(4, 2).classes.size() == 7);
}

TEST_CASE("hall counts") {
  const int expected[] = {1, 3, 13, 71, 461, 3447};
  for (int d = 1; d <= 6; ++d) CHECK(hall_count(2, d) == expected[d - 1]);
  CHECK(hall_count(3, 2) == 7);
  CHECK(hall_count(1, 5) == 1);
  // rank-r index-2 subgroups: 2^r - 1
  for (int r = 1; r <= 40; ++r) CHECK(hall_count(r, 2) == (boost::multiprecision::cpp_int(1) << r) - 1);
}

TEST_CASE("transitive tuple counts") {
  CHECK(count_transitive_tuples(3, 1) == 1);
  CHECK(count_transitive_tuples(3, 2) == 3);
  CHECK(count_transitive_tuples(4, 2) == 7);
  for (int d = 1; d <= 3; ++d)
    for (int n = 3; n <= 4; ++n) CHECK(count_transitive_tuples(n, d) == oracles::all_valid_tuples(n, d).size());
  for (int d = 1; d <= 5; ++d)
    CHECK(boost::multiprecision::cpp_int(count_transitive_tuples(3, d)) == hall_count(2, d) * factorial(d - 1));
  for (int d = 1; d <= 4; ++d)
    CHECK(boost::multiprecision::cpp_int(count_transitive_tuples(4, d)) == hall_count(3, d) * factorial(d - 1));
}

TEST_CASE("pruned enumeration agrees with the naive scan") {
  auto same = [](int n, int d) {
    auto a = enumerate(n, d);
    auto b = enumerate_naive(n, d);
    CHECK(canon(a) == canon(b));
    CHECK(a.marked_count == b.marked_count);
  };
  for (int d = 1; d <= 5; ++d) same(3, d);
  for (int d = 1; d <= 4; ++d) same(4, d);
  for (int d = 1; d <= 3; ++d) same(5, d);
}

TEST_CASE("marked count equals transitive count") {
  for (int d = 1; d <= 5; ++d) CHECK(enumerate(3, d).marked_count == count_transitive_tuples(3, d));
  for (int d = 1; d <= 4; ++d) CHECK(enumerate(4, d).marked_count == count_transitive_tuples(4, d));
  auto r = enumerate(3, 6);
  CHECK(boost::multiprecision::cpp_int(r.marked_count) == hall_count(2, 6) * factorial(5));
}

TEST_CASE("classes are canonical, sorted and pairwise distinct") {
  auto r = enumerate(4, 3);
  std::set<MonodromyTuple> seen;
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const auto& c = r.classes[i];
    CHECK(validate(c.canonical).ok);
    CHECK(canonical_form(c.canonical) == c.canonical);
    CHECK(c.genus == genus(c.canonical));
    CHECK(c.profile == cycle_profile(c.canonical));
    CHECK(c.normal == is_normal(c.canonical));
    CHECK(seen.insert(c.canonical).second);
    if (i > 0) CHECK(r.classes[i - 1].canonical.encoding() < c.canonical.encoding());
  }
}

TEST_CASE("output does not depend on jobs") {
  auto one = enumerate(3, 6, 1);
  for (int jobs : {2, 3, 8}) {
    auto many = enumerate(3, 6, jobs);
    CHECK(canon(many) == canon(one));
    CHECK(many.marked_count == one.marked_count);
  }
  CHECK(canon(enumerate(4, 4, 4)) == canon(enumerate(4, 4, 1)));
}

TEST_CASE("genus bound and normal profiles") {
  for (int n = 3; n <= 4; ++n)
    for (int d = 1; d <= (n == 3 ? 6 : 4); ++d)
      for (const auto& c : enumerate(n, d).classes) {
        CHECK(c.genus >= 0);
        CHECK(c.genus <= (n - 2) * (d - 1) / 2);
        if (c.normal)
          for (const auto& p : c.profile.partitions) CHECK(p.front() == p.back());
      }
}

TEST_CASE("bounds") {
  CHECK_THROWS_AS(enumerate(3, 12), Error);
  CHECK_THROWS_AS(count_transitive_tuples(4, 7), Error);
  CHECK_THROWS_AS(enumerate(2, 2), Error);
  CHECK_THROWS_AS(enumerate(3, 0), Error);
}

TEST_CASE("integer partitions") {
  CHECK(integer_partitions(4) == std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  const std::size_t p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int d = 0; d <= 8; ++d) CHECK(integer_partitions(d).size() == p[d]);
}
