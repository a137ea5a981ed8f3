#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

namespace dessinry {

using Complex = std::complex<double>;

// Coefficient vectors are in ascending powers: c(0) + c(1) x + ... + c(d) x^d.

template <typename Derived>
typename Derived::Scalar poly_eval(const Eigen::MatrixBase<Derived>& c, const typename Derived::Scalar& x) {
  typename Derived::Scalar acc(0);
  for (Eigen::Index k = c.size() - 1; k >= 0; --k) acc = acc * x + c(k);
  return acc;
}

// Value and first derivative.
template <typename Derived>
std::pair<typename Derived::Scalar, typename Derived::Scalar> poly_eval_d(const Eigen::MatrixBase<Derived>& c,
                                                                          const typename Derived::Scalar& x) {
  using S = typename Derived::Scalar;
  S p(0), dp(0);
  for (Eigen::Index k = c.size() - 1; k >= 0; --k) {
    dp = dp * x + p;
    p = p * x + c(k);
  }
  return {p, dp};
}

// sum |c_k| |x|^k, the natural size of the terms of F(x).
template <typename Derived>
double residual_scale(const Eigen::MatrixBase<Derived>& c, const typename Derived::Scalar& x) {
  double acc = 0, ax = std::abs(x);
  for (Eigen::Index k = c.size() - 1; k >= 0; --k) acc = acc * ax + std::abs(c(k));
  return acc;
}

// Derivative coefficients.
Eigen::VectorXcd poly_derivative(const Eigen::VectorXcd& c);

// All d roots from the companion matrix, each polished by Newton steps, sorted
// by real part then imaginary part. Throws Error(DegenerateLeadingCoefficient)
// for a zero leading coefficient and Error(ToleranceUnreachable) when a root
// cannot be brought to |F(x)| <= tol * residual_scale(c, x).
Eigen::VectorXcd poly_roots(const Eigen::VectorXcd& c, double tol = 1e-10);

}  // namespace dessinry
