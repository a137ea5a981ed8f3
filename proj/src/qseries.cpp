#include "dessinry/qseries.hpp"

#include <cmath>

#include "dessinry/error.hpp"

namespace dessinry {

namespace {

using boost::multiprecision::cpp_int;
using Series = std::vector<cpp_int>;

Series multiply(const Series& a, const Series& b, std::size_t len) {
  Series out(len, 0);
  for (std::size_t i = 0; i < len && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < len && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

QSeries lambda_star_qseries(int N) {
  if (N < 0) throw Error(ErrorKind::InvalidArgument, "order must be non-negative");
  const std::size_t len = static_cast<std::size_t>(N) + 1;
  Series base(len, 0);
  base[0] = 1;
  for (std::size_t e = 1; e < len; e += 2) {
    // times (1 + x^e)
    for (std::size_t k = len - 1; k >= e; --k) base[k] += base[k - e];
    // times 1/(1 - x^e) = 1 + x^e + x^2e + ...
    for (std::size_t k = e; k < len; ++k) base[k] += base[k - e];
  }
  Series sq = multiply(base, base, len);
  Series p4 = multiply(sq, sq, len);
  return QSeries{multiply(p4, p4, len)};
}

ModularValue<long double> evaluate_truncated(const QSeries& s, std::complex<long double> x) {
  using C = std::complex<long double>;
  const long double r = std::abs(x);
  if (!(r < 1)) throw Error(ErrorKind::InvalidArgument, "series evaluated outside its disc of convergence");
  C sum = 0;
  for (int k = s.order(); k >= 0; --k) sum = sum * x + static_cast<long double>(s.coefficients[static_cast<std::size_t>(k)]);

  const long double rho = r < 0.5L ? 0.5L : (1 + r) / 2;
  // F(rho) from the product; the factors for m > 2000 change it by far less than the 1e-12 margin
  long double logF = 0;
  for (int m = 0; m <= 2000; ++m) {
    const long double z = std::pow(rho, 2 * m + 1);
    logF += 8 * (std::log1p(z) - std::log1p(-z));
  }
  const long double F = std::exp(logF) * (1 + 1e-12L);
  const long double ratio = r / rho;
  const long double tail = F * std::pow(ratio, s.order() + 1) / (1 - ratio);
  return {sum, tail};
}

}  // namespace dessinry
