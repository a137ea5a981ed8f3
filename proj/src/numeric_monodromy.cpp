#include "dessinry/numeric_monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dessinry/error.hpp"

namespace dessinry {

namespace {

double min_separation(const Eigen::VectorXcd& r) {
  double m = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < r.size(); ++i)
    for (Eigen::Index j = i + 1; j < r.size(); ++j) m = std::min(m, std::abs(r(i) - r(j)));
  return m;
}

double distance_to_segment(Complex p, Complex a, Complex b) {
  Complex ab = b - a;
  double len2 = std::norm(ab);
  double t = len2 == 0 ? 0 : std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

Eigen::VectorXcd coefficients(const CoverSpec& c, Complex y) {
  Eigen::VectorXcd coeffs = c.fiber_poly(y);
  if (coeffs.size() != c.degree + 1)
    throw Error(ErrorKind::InvalidArgument, "fiber polynomial has degree " + std::to_string(coeffs.size() - 1) +
                                                ", expected " + std::to_string(c.degree));
  return coeffs;
}

// Newton from x0; returns false when it does not settle.
bool correct(const Eigen::VectorXcd& coeffs, Complex& x, double tol, int iterations) {
  for (int it = 0; it < iterations; ++it) {
    auto [p, dp] = poly_eval_d(coeffs, x);
    if (dp == Complex(0)) return false;
    Complex step = p / dp;
    x -= step;
    if (std::abs(step) <= 1e-14 * (1 + std::abs(x)))
      return std::abs(poly_eval(coeffs, x)) <= tol * residual_scale(coeffs, x);
  }
  return std::abs(poly_eval(coeffs, x)) <= tol * residual_scale(coeffs, x);
}

}  // namespace

Complex PathPiece::at(double t) const {
  if (kind == Kind::Segment) return from + t * (to - from);
  return center + std::polar(radius, angle0 + 2 * std::numbers::pi * t);
}

CoverSpec polynomial_cover(const Eigen::VectorXcd& map_coeffs, std::vector<Complex> branch_points) {
  Eigen::VectorXcd P = map_coeffs;
  return CoverSpec{[P](Complex y) {
                     Eigen::VectorXcd f = P;
                     f(0) -= y;
                     return f;
                   },
                   std::move(branch_points), static_cast<int>(map_coeffs.size()) - 1};
}

Loop branch_loop(const CoverSpec& c, Complex base, std::size_t k, const TrackOptions& opts) {
  const Complex b = c.branch_points.at(k);
  double nearest = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < c.branch_points.size(); ++j)
    if (j != k) nearest = std::min(nearest, std::abs(c.branch_points[j] - b));
  if (!std::isfinite(nearest)) nearest = 1;
  const double r = opts.radius_factor * nearest;
  if (std::abs(base - b) <= 2 * r)
    throw Error(ErrorKind::InvalidArgument, "base point too close to a branch point");
  const Complex dir = (base - b) / std::abs(base - b);
  const Complex entry = b + r * dir;
  for (std::size_t j = 0; j < c.branch_points.size(); ++j)
    if (j != k && distance_to_segment(c.branch_points[j], base, entry) < r)
      throw Error(ErrorKind::PathTrackingFailure, "straight path to a branch point passes too close to another");
  PathPiece out{PathPiece::Kind::Segment, base, entry, {}, 0, 0};
  PathPiece circle{PathPiece::Kind::Circle, {}, {}, b, r, std::arg(dir)};
  PathPiece back{PathPiece::Kind::Segment, entry, base, {}, 0, 0};
  return {out, circle, back};
}

Loop big_loop(const CoverSpec& c, Complex base) {
  double far = 0;
  for (auto b : c.branch_points) far = std::max(far, std::abs(b));
  const double R = far > 0 ? 2 * far : 1;
  if (std::abs(base) == 0) throw Error(ErrorKind::InvalidArgument, "base point must be nonzero for the large loop");
  const Complex dir = base / std::abs(base);
  const Complex entry = R * dir;
  for (auto b : c.branch_points)
    if (distance_to_segment(b, base, entry) < 1e-6 * R)
      throw Error(ErrorKind::PathTrackingFailure, "radial path to the large circle meets a branch point");
  PathPiece out{PathPiece::Kind::Segment, base, entry, {}, 0, 0};
  PathPiece circle{PathPiece::Kind::Circle, {}, {}, 0, R, std::arg(dir)};
  PathPiece back{PathPiece::Kind::Segment, entry, base, {}, 0, 0};
  return {out, circle, back};
}

Permutation transport(const CoverSpec& c, const Loop& loop, const Eigen::VectorXcd& fiber, double tol,
                      const TrackOptions& opts) {
  Eigen::VectorXcd roots = fiber;
  Eigen::VectorXcd next(roots.size());
  for (const auto& piece : loop) {
    double t = 0, h = opts.max_step;
    while (t < 1) {
      h = std::min(h, 1 - t);
      const Eigen::VectorXcd coeffs = coefficients(c, piece.at(t + h));
      const double threshold = 0.5 * min_separation(roots);
      bool ok = true;
      for (Eigen::Index k = 0; k < roots.size() && ok; ++k) {
        Complex x = roots(k);
        ok = correct(coeffs, x, tol, opts.newton_iterations) && std::abs(x - roots(k)) < threshold;
        next(k) = x;
      }
      if (ok && roots.size() > 1) ok = min_separation(next) >= threshold;
      if (ok) {
        roots = next;
        t += h;
        h = std::min(2 * h, opts.max_step);
      } else {
        h /= 2;
        if (h < opts.min_step)
          throw Error(ErrorKind::PathTrackingFailure, "step size fell below the minimum while separating roots");
      }
    }
  }
  const double threshold = 0.5 * min_separation(fiber);
  std::vector<int> images(static_cast<std::size_t>(fiber.size()), -1);
  for (Eigen::Index k = 0; k < fiber.size(); ++k)
    for (Eigen::Index j = 0; j < fiber.size(); ++j)
      if (std::abs(roots(k) - fiber(j)) < threshold) images[static_cast<std::size_t>(k)] = static_cast<int>(j);
  for (int v : images)
    if (v < 0) throw Error(ErrorKind::PathTrackingFailure, "transported root does not return to the fiber");
  try {
    return Permutation(std::move(images));
  } catch (const Error&) {
    throw Error(ErrorKind::PathTrackingFailure, "transport did not induce a permutation of the fiber");
  }
}

MonodromyTuple numerical_monodromy(const CoverSpec& c, Complex base, double tol, const TrackOptions& opts) {
  const std::size_t finite = c.branch_points.size();
  if (finite < 2) throw Error(ErrorKind::InvalidArgument, "need at least two finite branch points");
  for (std::size_t i = 0; i < finite; ++i) {
    if (std::abs(base - c.branch_points[i]) == 0) throw Error(ErrorKind::InvalidArgument, "base is a branch point");
    for (std::size_t j = i + 1; j < finite; ++j)
      if (c.branch_points[i] == c.branch_points[j])
        throw Error(ErrorKind::InvalidArgument, "branch points must be pairwise distinct");
  }
  const int d = c.degree;
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "cover degree must be positive");
  if (d == 1) return MonodromyTuple::trivial(static_cast<int>(finite) + 1);

  const Eigen::VectorXcd fiber = poly_roots(coefficients(c, base), tol);
  double spread = 0;
  for (Eigen::Index k = 0; k < fiber.size(); ++k) spread = std::max(spread, std::abs(fiber(k)));
  if (min_separation(fiber) <= 1e-8 * std::max(1.0, spread))
    throw Error(ErrorKind::InvalidArgument, "fiber over the base point has a multiple root");

  std::vector<Permutation> finite_perms;
  for (std::size_t k = 0; k < finite; ++k) finite_perms.push_back(transport(c, branch_loop(c, base, k, opts), fiber, tol, opts));
  Permutation prod = Permutation::identity(d);
  for (const auto& g : finite_perms) prod = prod * g;
  const Permutation around = transport(c, big_loop(c, base), fiber, tol, opts);
  if (around != prod)
    throw Error(ErrorKind::ProductConstraintViolation,
                "large loop gives " + to_cycle_string(around) + " but the product of the branch loops is " +
                    to_cycle_string(prod));

  std::vector<Permutation> perms{prod.inverse()};
  perms.insert(perms.end(), finite_perms.begin(), finite_perms.end());
  MonodromyTuple t(static_cast<int>(finite) + 1, d, std::move(perms));
  auto diag = validate(t);
  if (!diag.ok) throw Error(ErrorKind::ProductConstraintViolation, diag.message);
  return t;
}

}  // namespace dessinry
