#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dessinry/monodromy.hpp"
#include "dessinry/orbit.hpp"

namespace dessinry {

struct Letter {
  int generator = 0;  // index nu of x_nu
  int exponent = 1;   // +1 or -1
  auto operator<=>(const Letter&) const = default;
};

// Word in x_0..x_{n-1}; the empty word is the identity.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters);

  static FreeWord generator(int nu);
  // "x2 x3 x2^-1"; "1" or "" is the empty word.
  static FreeWord parse(const std::string& text);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  FreeWord inverse() const;
  // Cancels adjacent x x^-1 pairs.
  FreeWord reduced() const;
  // Replaces every x_nu by images[nu].
  FreeWord substitute(const std::vector<FreeWord>& images) const;
  std::string to_string() const;

  auto operator<=>(const FreeWord&) const = default;

 private:
  std::vector<Letter> letters_;
};

FreeWord operator*(const FreeWord& a, const FreeWord& b);

// Throws Error(IndexOutOfRange) for letters with index >= t.n().
Permutation evaluate_word(const FreeWord& w, const MonodromyTuple& t);

// images[nu] is the image of x_nu. inverse_images, when non-empty, is a
// table for the inverse endomorphism.
struct EndomorphismTable {
  int n = 0;
  std::string name;
  std::vector<FreeWord> images;
  std::vector<FreeWord> inverse_images;

  bool has_inverse() const { return !inverse_images.empty(); }
  EndomorphismTable inverse() const;
};

EndomorphismTable identity_table(int n);
// First e1, then e2: x_nu goes to e2.images[nu] with x_mu replaced by e1.images[mu].
EndomorphismTable compose(const EndomorphismTable& e1, const EndomorphismTable& e2);

// Throws Error(InvalidResult) when the image tuple is not valid.
MonodromyTuple apply_endomorphism(const EndomorphismTable& e, const MonodromyTuple& t);

// Half twist sigma_i: (x_i, x_{i+1}) -> (x_{i+1}, x_{i+1}^-1 x_i x_{i+1}).
EndomorphismTable half_twist(int n, int i);

// Full twists A_ij, 0 <= i < j < n: sigma_{j-1}^-1 ... sigma_{i+1}^-1, then
// sigma_i twice, then sigma_{i+1} ... sigma_{j-1} (applied in that order).
std::vector<EndomorphismTable> preset_pure_generators(int n);

// n = 4 words for delta_hor = A_23^-1 and delta_ver = A_12; these agree with
// the origami rewrites in origami.hpp on all classes of degree <= 3.
std::vector<EndomorphismTable> preset_gamma2_generators();

using OrbitResult = Orbit<MonodromyTuple>;

// Closure of the canonical forms of seeds under gens and, when available,
// their inverse tables. Members are canonical forms sorted by encoding.
OrbitResult braid_orbit(const std::vector<MonodromyTuple>& seeds, const std::vector<EndomorphismTable>& gens,
                        bool log_edges = true);

// Splits classes (canonical, common n and d) into orbits, ordered by their least member.
std::vector<OrbitResult> orbit_partition(const std::vector<MonodromyTuple>& classes,
                                         const std::vector<EndomorphismTable>& gens);

}  // namespace dessinry
