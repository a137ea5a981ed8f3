#pragma once

#include <functional>
#include <vector>

#include "dessinry/monodromy.hpp"
#include "dessinry/roots.hpp"

namespace dessinry {

// Cover of the y-sphere: the fiber over y is the root set of fiber_poly(y),
// a polynomial of degree `degree` for y off the branch set. Color 0 is
// infinity; branch_points[k] gets color k + 1.
struct CoverSpec {
  std::function<Eigen::VectorXcd(Complex)> fiber_poly;
  std::vector<Complex> branch_points;
  int degree = 0;
};

// Fiber of the polynomial map P over y is {x : P(x) - y = 0}.
CoverSpec polynomial_cover(const Eigen::VectorXcd& map_coeffs, std::vector<Complex> branch_points);

struct TrackOptions {
  double max_step = 1.0 / 64;  // parameter step per path piece, each piece parametrized by [0,1]
  double min_step = 1e-12;
  double radius_factor = 0.25;  // loop radius = factor * distance to nearest other branch point
  int newton_iterations = 40;
};

// One path piece, parametrized by t in [0,1].
struct PathPiece {
  enum class Kind { Segment, Circle } kind = Kind::Segment;
  Complex from, to;       // segment ends
  Complex center;         // circle data: center + radius * exp(i (angle0 + 2 pi t))
  double radius = 0, angle0 = 0;
  Complex at(double t) const;
};

using Loop = std::vector<PathPiece>;

// Standard loop from base around finite branch point index k, counterclockwise.
Loop branch_loop(const CoverSpec& c, Complex base, std::size_t k, const TrackOptions& opts = {});
// Counterclockwise circle of radius 2 max|b| reached radially from base.
Loop big_loop(const CoverSpec& c, Complex base);

// Permutation of the fiber at base (labels = positions in fiber) induced by transporting along loop.
Permutation transport(const CoverSpec& c, const Loop& loop, const Eigen::VectorXcd& fiber, double tol,
                      const TrackOptions& opts = {});

// g_0 (infinity) is determined by the product constraint and compared with the
// big loop; throws Error(ProductConstraintViolation) on mismatch and
// Error(PathTrackingFailure) when tracking cannot separate the roots. The fiber
// at base is labeled in poly_roots order.
MonodromyTuple numerical_monodromy(const CoverSpec& c, Complex base, double tol = 1e-10,
                                   const TrackOptions& opts = {});

}  // namespace dessinry
