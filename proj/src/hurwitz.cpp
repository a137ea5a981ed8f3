#include "dessinry/hurwitz.hpp"

#include <cmath>

#include "dessinry/error.hpp"

namespace dessinry {

namespace {

void check_pole(Complex s) {
  if (std::abs(2.0 * s - 1.0) == 0) throw Error(ErrorKind::PoleAtHalf, "s = 1/2");
}

}  // namespace

Eigen::VectorXcd hurwitz_fs(Complex s) {
  check_pole(s);
  const Complex w = 2.0 * s - 1.0;
  Eigen::VectorXcd c(5);
  c << 0.0, 0.0, 6.0 * s / w, -4.0 * (s + 1.0) / w, 3.0 / w;
  return c;
}

Complex hurwitz_projection(Complex s) {
  check_pole(s);
  return (2.0 - s) * s * s * s / (2.0 * s - 1.0);
}

Eigen::VectorXcd hurwitz_fiber_polynomial(Complex a) {
  Eigen::VectorXcd c(5);
  c << -a, 2.0 * a, 0.0, -2.0, 1.0;
  return c;
}

const char* to_string(Lift lift) {
  switch (lift) {
    case Lift::L1: return "L1";
    case Lift::L2: return "L2";
    case Lift::L3: return "L3";
    case Lift::L4: return "L4";
  }
  return "?";
}

Lift parse_lift(const std::string& text) {
  if (text == "L1") return Lift::L1;
  if (text == "L2") return Lift::L2;
  if (text == "L3") return Lift::L3;
  if (text == "L4") return Lift::L4;
  throw Error(ErrorKind::Parse, "unknown lift '" + text + "' (expected L1, L2, L3 or L4)");
}

std::optional<Lift> classify_lift(Complex s, double tol) {
  if (std::abs(2.0 * s - 1.0) <= tol) return std::nullopt;
  const Complex a = hurwitz_projection(s);
  if (std::abs(a.imag()) > tol * std::max(1.0, std::abs(a)) || a.real() <= 1 + tol) return std::nullopt;
  if (s.imag() > tol) return Lift::L1;
  if (s.imag() < -tol) return Lift::L2;
  const double x = s.real();
  if (x < -1 - tol) return Lift::L3;
  if (x > 0.5 + tol && x < 1 - tol) return Lift::L4;
  throw Error(ErrorKind::Ambiguous, "real s = " + std::to_string(x) + " lies on no lift");
}

std::vector<HurwitzPoint> hurwitz_fiber(Complex a, double tol) {
  const Eigen::VectorXcd roots = poly_roots(hurwitz_fiber_polynomial(a), tol);
  std::vector<HurwitzPoint> out;
  for (Eigen::Index k = 0; k < roots.size(); ++k) out.push_back({roots(k), a, classify_lift(roots(k))});
  return out;
}

CoverSpec hurwitz_cover(Complex s) { return polynomial_cover(hurwitz_fs(s), {0.0, 1.0, hurwitz_projection(s)}); }

Complex hurwitz_lift_point(double a, Lift lift) {
  if (!(a > 1) || !std::isfinite(a)) throw Error(ErrorKind::NoSuchLift, "a must be a real number greater than 1");
  for (const auto& pt : hurwitz_fiber(a))
    if (pt.lift == lift) return pt.s;
  throw Error(ErrorKind::NoSuchLift, std::string("no fiber point over a on ") + to_string(lift));
}

MonodromyTuple hurwitz_dessin(double a, Lift lift, const TrackOptions& opts) {
  const Complex s = hurwitz_lift_point(a, lift);
  // the branch point a is taken exactly rather than as p(s)
  CoverSpec cover = polynomial_cover(hurwitz_fs(s), {0.0, 1.0, a});
  return canonical_form(numerical_monodromy(cover, Complex(0, 2), 1e-10, opts));
}

}  // namespace dessinry
