#pragma once

#include <complex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dessinry/modular.hpp"

namespace dessinry {

// Power series in q2 with exact integer coefficients c_0..c_N.
struct QSeries {
  std::vector<boost::multiprecision::cpp_int> coefficients;

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
};

// (prod_{m>=0} (1 + q2^(2m+1)) / (1 - q2^(2m+1)))^8 through q2^N.
QSeries lambda_star_qseries(int N);

// Sum of c_k x^k for k <= N, with a Cauchy-estimate bound on the omitted tail.
// The coefficients are non-negative, so on |x| = rho the full series is bounded
// by its value F(rho) at x = rho, giving |c_k| <= F(rho) / rho^k.
ModularValue<long double> evaluate_truncated(const QSeries& s, std::complex<long double> x);

}  // namespace dessinry
