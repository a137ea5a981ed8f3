#pragma once

#include <compare>
#include <string>
#include <vector>

namespace dessinry {

// A bijection of {0,...,d-1}; images()[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  // Throws Error(InvalidArgument) unless images is a bijection of {0,...,d-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int d);
  // Disjoint cycles, e.g. from_cycles(3, {{0, 1}}) is the transposition (01).
  static Permutation from_cycles(int d, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  int cycle_count() const;
  // Cycle lengths sorted in decreasing order.
  std::vector<int> cycle_type() const;
  std::vector<std::vector<int>> cycles() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Left-to-right product: (a * b)(i) = b(a(i)), i.e. apply a first.
Permutation operator*(const Permutation& a, const Permutation& b);

// Cycle notation, "()" for the identity.
std::string to_cycle_string(const Permutation& p);

// All permutations of degree d in lexicographic order of their image vectors.
std::vector<Permutation> all_permutations(int d);

}  // namespace dessinry
