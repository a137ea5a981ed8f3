#include "dessinry/roots.hpp"

#include <algorithm>
#include <vector>

#include "dessinry/error.hpp"

namespace dessinry {

Eigen::VectorXcd poly_derivative(const Eigen::VectorXcd& c) {
  if (c.size() <= 1) return Eigen::VectorXcd::Zero(1);
  Eigen::VectorXcd d(c.size() - 1);
  for (Eigen::Index k = 1; k < c.size(); ++k) d(k - 1) = c(k) * static_cast<double>(k);
  return d;
}

Eigen::VectorXcd poly_roots(const Eigen::VectorXcd& c, double tol) {
  const Eigen::Index deg = c.size() - 1;
  if (deg < 1) throw Error(ErrorKind::InvalidArgument, "polynomial of degree < 1 has no roots to find");
  if (c(deg) == Complex(0)) throw Error(ErrorKind::DegenerateLeadingCoefficient, "leading coefficient is zero");

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (Eigen::Index k = 1; k < deg; ++k) companion(k, k - 1) = 1.0;
  for (Eigen::Index k = 0; k < deg; ++k) companion(k, deg - 1) = -c(k) / c(deg);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::ToleranceUnreachable, "eigenvalue iteration failed");
  Eigen::VectorXcd roots = solver.eigenvalues();

  for (Eigen::Index k = 0; k < deg; ++k) {
    Complex x = roots(k);
    for (int it = 0; it < 8; ++it) {
      auto [p, dp] = poly_eval_d(c, x);
      if (std::abs(p) <= 1e-3 * tol * residual_scale(c, x) || dp == Complex(0)) break;
      Complex next = x - p / dp;
      // keep the step only if it improves the residual
      if (std::abs(poly_eval(c, next)) >= std::abs(p)) break;
      x = next;
    }
    if (std::abs(poly_eval(c, x)) > tol * residual_scale(c, x))
      throw Error(ErrorKind::ToleranceUnreachable, "root residual above tolerance");
    roots(k) = x;
  }
  std::vector<Complex> sorted(roots.data(), roots.data() + deg);
  std::sort(sorted.begin(), sorted.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return Eigen::Map<Eigen::VectorXcd>(sorted.data(), deg);
}

}  // namespace dessinry
