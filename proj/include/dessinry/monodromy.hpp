#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dessinry/permutation.hpp"

namespace dessinry {

// n permutations g_0..g_{n-1} of {0,...,d-1}; g_nu is the monodromy around the
// marked point P_nu. Products are left to right, so a valid tuple satisfies
// g_0 * g_1 * ... * g_{n-1} = id and generates a transitive group.
class MonodromyTuple {
 public:
  // Structural checks only (n >= 3, d >= 1, n permutations of degree d);
  // throws Error(InvalidTuple). Product and transitivity are checked by validate().
  MonodromyTuple(int n, int d, std::vector<Permutation> perms);

  static MonodromyTuple trivial(int n);

  int n() const { return n_; }
  int degree() const { return d_; }
  const Permutation& operator[](int nu) const { return perms_[static_cast<std::size_t>(nu)]; }
  const std::vector<Permutation>& perms() const { return perms_; }

  // n, d, then the images of g_0, ..., g_{n-1}; ordering of tuples is the
  // lexicographic order of this vector.
  std::vector<int> encoding() const;

  auto operator<=>(const MonodromyTuple&) const = default;

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<Permutation> perms_;
};

struct Diagnostic {
  bool ok = true;
  std::string message;
  explicit operator bool() const { return ok; }
};

Diagnostic validate(const MonodromyTuple& t);

using Partition = std::vector<int>;

struct RamificationProfile {
  std::vector<Partition> partitions;
  auto operator<=>(const RamificationProfile&) const = default;
};

// "(4),(2,1,1),(2,1,1),(2,1,1)"
std::string to_string(const RamificationProfile& p);

MonodromyTuple canonical_form(const MonodromyTuple& t);
bool isomorphic(const MonodromyTuple& a, const MonodromyTuple& b);
int genus(const MonodromyTuple& t);
RamificationProfile cycle_profile(const MonodromyTuple& t);
// Order of the centralizer of the generated group in Sym(d).
int centralizer_order(const MonodromyTuple& t);
bool is_normal(const MonodromyTuple& t);

// Tuple of the same dessin on the surface with reversed orientation:
// g'_nu = T_{nu-1} g_nu^{-1} T_{nu-1}^{-1} with T_k = g_0 * ... * g_k, T_{-1} = id.
MonodromyTuple orientation_reverse(const MonodromyTuple& t);

// Relabel the fiber by pi: label i becomes pi(i).
MonodromyTuple relabel(const MonodromyTuple& t, const Permutation& pi);

struct DessinClass {
  MonodromyTuple canonical;
  int genus = 0;
  RamificationProfile profile;
  bool normal = false;
};

DessinClass classify(const MonodromyTuple& t);

}  // namespace dessinry
