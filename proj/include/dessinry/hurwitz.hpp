#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dessinry/numeric_monodromy.hpp"

namespace dessinry {

// The family f_s(x) = 12/(2s-1) (x^4/4 - (s+1)/3 x^3 + s/2 x^2) with critical
// points 0, 1, s and f_s(0) = 0, f_s(1) = 1; it is branched over 0, 1, p(s), infinity.

// Ascending coefficients of f_s. Throws Error(PoleAtHalf) at s = 1/2.
Eigen::VectorXcd hurwitz_fs(Complex s);

// p(s) = f_s(s) = (2 - s) s^3 / (2s - 1).
Complex hurwitz_projection(Complex s);

// s^4 - 2 s^3 + 2 a s - a, whose roots are the s with p(s) = a.
Eigen::VectorXcd hurwitz_fiber_polynomial(Complex a);

enum class Lift { L1, L2, L3, L4 };
const char* to_string(Lift lift);
Lift parse_lift(const std::string& text);

inline constexpr double kLiftTolerance = 1e-8;

// L3 for real s < -1, L4 for real s in (1/2, 1), L1 for Im s > 0, L2 for Im s < 0;
// nullopt when p(s) is not in (1, inf). Throws Error(Ambiguous) when s is real
// within tol but in neither interval.
std::optional<Lift> classify_lift(Complex s, double tol = kLiftTolerance);

struct HurwitzPoint {
  Complex s;
  Complex a;
  std::optional<Lift> lift;
};

// The four points over a, in poly_roots order.
std::vector<HurwitzPoint> hurwitz_fiber(Complex a, double tol = 1e-10);

// Cover x -> f_s(x), branch points (0, 1, p(s)) as colors 1, 2, 3.
CoverSpec hurwitz_cover(Complex s);

// Canonical 4-dessin of the lift through the point of the fiber over a with
// the requested label. Throws Error(NoSuchLift) if a is not real and > 1 or no
// fiber point carries the label.
MonodromyTuple hurwitz_dessin(double a, Lift lift, const TrackOptions& opts = {});

// The fiber point over a on the given lift.
Complex hurwitz_lift_point(double a, Lift lift);

}  // namespace dessinry
