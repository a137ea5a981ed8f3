#include "dessinry/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dessinry/error.hpp"

namespace dessinry {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int d = degree();
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= d || seen[static_cast<std::size_t>(v)])
      throw Error(ErrorKind::InvalidArgument, "not a bijection of {0,...," + std::to_string(d - 1) + "}");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int d) {
  std::vector<int> im(static_cast<std::size_t>(d));
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::from_cycles(int d, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> im(static_cast<std::size_t>(d));
  std::iota(im.begin(), im.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] < 0 || c[k] >= d) throw Error(ErrorKind::InvalidArgument, "cycle entry out of range");
      im[static_cast<std::size_t>(c[k])] = c[(k + 1) % c.size()];
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> c;
    for (int x = i; !seen[static_cast<std::size_t>(x)]; x = images_[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

int Permutation::cycle_count() const { return static_cast<int>(cycles().size()); }

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> t;
  for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error(ErrorKind::InvalidArgument, "degree mismatch in product");
  std::vector<int> im(static_cast<std::size_t>(a.degree()));
  for (int i = 0; i < a.degree(); ++i) im[static_cast<std::size_t>(i)] = b(a(i));
  return Permutation(std::move(im));
}

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : p.cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return any ? os.str() : "()";
}

std::vector<Permutation> all_permutations(int d) {
  std::vector<int> im(static_cast<std::size_t>(d));
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

}  // namespace dessinry
