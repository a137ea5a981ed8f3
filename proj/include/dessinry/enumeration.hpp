#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dessinry/monodromy.hpp"

namespace dessinry {

struct EnumerationResult {
  int n = 0;
  int d = 0;
  std::vector<DessinClass> classes;  // sorted by canonical encoding
  std::uint64_t marked_count = 0;    // sum of d!/|centralizer| over classes
};

// Work estimate p(d) * (d!)^(n-2) above which enumerate() refuses to run.
inline constexpr double kEnumerationBound = 2.0e7;
// (d!)^(n-1) limit for count_transitive_tuples and enumerate_naive.
inline constexpr double kNaiveBound = 2.0e7;

// Throws Error(BoundExceeded) past kEnumerationBound. jobs > 1 splits the
// search over worker threads; the output does not depend on jobs.
EnumerationResult enumerate(int n, int d, int jobs = 1);

// Canonicalizes every transitive product-one tuple; kept as a test oracle.
EnumerationResult enumerate_naive(int n, int d);

std::uint64_t count_transitive_tuples(int n, int d);

// Number of index-d subgroups of the free group of rank r.
boost::multiprecision::cpp_int hall_count(int r, int d);

// Integer partitions of d, parts in decreasing order, partitions in decreasing lexicographic order.
std::vector<std::vector<int>> integer_partitions(int d);

}  // namespace dessinry
