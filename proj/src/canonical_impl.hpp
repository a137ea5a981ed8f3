#pragma once

#include <vector>

namespace dessinry::detail {

// Flat tuple data: perms[nu * d + i] = g_nu(i).
struct FlatTuple {
  int n = 0;
  int d = 0;
  std::vector<int> perms;
  std::vector<int> inverses;
};

FlatTuple make_flat(int n, int d, std::vector<int> perms);

bool is_transitive(const FlatTuple& t);

struct CanonicalSearch {
  std::vector<int> best;     // relabeled images, flat, length n*d
  int centralizer = 0;       // basepoints whose relabeling equals the one from 0
};

// Requires a transitive tuple.
CanonicalSearch canonical_search(const FlatTuple& t);

}  // namespace dessinry::detail
