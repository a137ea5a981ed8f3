#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dessinry/monodromy.hpp"
#include "dessinry/orbit.hpp"

namespace dessinry {

// m white and m grey unit squares. Each pairing is a bijection White -> Grey:
// R glues white-right to grey-left, L white-left to grey-right, U white-upper
// to grey-upper and D white-lower to grey-lower. Products below are left to
// right, so (R * L.inverse()) maps a white square to a white square.
class BipartiteOrigami {
 public:
  // Throws Error(InvalidOrigami) when the four maps are not permutations of degree m.
  BipartiteOrigami(int m, Permutation R, Permutation L, Permutation U, Permutation D);

  static BipartiteOrigami pillowcase();

  int m() const { return m_; }
  const Permutation& R() const { return R_; }
  const Permutation& L() const { return L_; }
  const Permutation& U() const { return U_; }
  const Permutation& D() const { return D_; }

  auto operator<=>(const BipartiteOrigami&) const = default;

 private:
  int m_;
  Permutation R_, L_, U_, D_;
};

Diagnostic validate_origami(const BipartiteOrigami& o);

// Fiber = white squares. Tracing the corners of a white square gives
// g0 = L D^-1, g1 = D R^-1, g2 = R U^-1, g3 = U L^-1 (vertex colors 0..3
// at the lower-left, lower-right, upper-right and upper-left corners).
MonodromyTuple origami_to_dessin(const BipartiteOrigami& o);
// L = id, D = g0^-1, R = (g0 g1)^-1, U = g3.
BipartiteOrigami dessin_to_origami(const MonodromyTuple& t);

// Lexicographically least relabeling over breadth-first traversals from each
// white square; whites and greys are numbered separately.
BipartiteOrigami canonical_origami(const BipartiteOrigami& o);
bool origami_isomorphic(const BipartiteOrigami& a, const BipartiteOrigami& b);

// Shear by (1 2 / 0 1): only U changes, U' = R L^-1 U R^-1 L.
BipartiteOrigami delta_hor(const BipartiteOrigami& o);
BipartiteOrigami delta_hor_inv(const BipartiteOrigami& o);
// Shear by (1 0 / 2 1): L' = L D^-1 U, R' = U D^-1 R, U' = U D^-1 U, D' = U.
BipartiteOrigami delta_ver(const BipartiteOrigami& o);
BipartiteOrigami delta_ver_inv(const BipartiteOrigami& o);

enum class DeltaOp { Hor, Ver, HorInv, VerInv };
BipartiteOrigami delta(const BipartiteOrigami& o, DeltaOp op);
const char* to_string(DeltaOp op);

using OrigamiOrbitResult = Orbit<BipartiteOrigami>;

// Closure of the canonical class of o under the four delta maps.
OrigamiOrbitResult origami_orbit(const BipartiteOrigami& o, bool log_edges = true);

}  // namespace dessinry
