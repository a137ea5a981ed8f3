#include <doctest.h>

#include <cmath>
#include <random>

#include "dessinry/error.hpp"
#include "dessinry/modular.hpp"

using namespace dessinry;

namespace {

using Real = long double;
using C = std::complex<Real>;
using P = UpperHalfPoint<Real>;
constexpr Real kTol = 1e-15L;

std::vector<C> samples() {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.8, 3.0);
  std::vector<C> out{C(0, 1), C(0, 2), C(1, 3)};
  while (out.size() < 23) out.emplace_back(re(rng), im(rng));
  return out;
}

// Plain product with a fixed number of factors, written out from the definition.
C eta_by_definition(C tau, int terms) {
  const Real pi = std::numbers::pi_v<Real>;
  C q = std::exp(C(0, 2 * pi) * tau);
  C prod = std::exp(C(0, pi / 12) * tau), qn = 1;
  for (int n = 1; n <= terms; ++n) {
    qn *= q;
    prod *= C(1) - qn;
  }
  return prod;
}

}  // namespace

TEST_CASE("eta") {
  auto e = eta(P(C(0, 1)), kTol);
  CHECK(e.trunc_bound <= kTol);
  CHECK(std::abs(e.value - C(0.7682254223260566L)) < 1e-15);
  CHECK(std::abs(e.value - eta_by_definition(C(0, 1), 50)) <= e.trunc_bound + 1e-18L);
  for (auto tau : samples()) {
    auto a = eta(P(tau), kTol), b = eta(P(tau + Real(1)), kTol);
    CHECK(std::abs(b.value - std::exp(C(0, std::numbers::pi_v<Real> / 12)) * a.value) < 1e-14);
    CHECK(std::abs(a.value - eta_by_definition(tau, 200)) < 1e-15);
  }
  P p(C(0.1L, 0.9L));
  Real prev = eta_truncated(p, 1).trunc_bound;
  for (int N = 2; N < 40; ++N) {
    Real b = eta_truncated(p, N).trunc_bound;
    CHECK(b < prev);
    CHECK(std::abs(eta_truncated(p, N).value - eta_by_definition(p.tau(), 400)) <= b * (1 + 1e-9L) + 1e-17L);
    prev = b;
  }
}

TEST_CASE("weber relations") {
  const Real r2 = std::sqrt(Real(2));
  for (auto tau : samples()) {
    P p(tau);
    auto f = weber_f(p, kTol).value, f1 = weber_f1(p, kTol).value, f2 = weber_f2(p, kTol).value;
    CHECK(std::abs(f * f1 * f2 - r2) < 1e-12);
    auto p8 = [](C x) { return std::pow(x, 8); };
    CHECK(std::abs(p8(f) - p8(f1) - p8(f2)) < 1e-12 * std::max(Real(1), std::abs(p8(f))));
    CHECK(std::abs(f - weber_f_product(p, kTol).value) < 1e-14);
    CHECK(std::abs(f1 - weber_f1_product(p, kTol).value) < 1e-14);
    CHECK(std::abs(f2 - weber_f2_product(p, kTol).value) < 1e-14);
  }
  P i(C(0, 1));
  CHECK(std::abs(std::pow(weber_f(i, kTol).value, 8) - C(4)) < 1e-14);
  CHECK(std::abs(std::pow(weber_f1(i, kTol).value, 8) - C(2)) < 1e-14);
}

TEST_CASE("lambda star") {
  const Real r2 = std::sqrt(Real(2)), r3 = std::sqrt(Real(3)), r6 = std::sqrt(Real(6));
  CHECK(std::abs(lambda_star(P(C(0, 1)), kTol).value - C(2)) < 1e-14);
  CHECK(std::abs(lambda_star(P(C(0, r2)), kTol).value - C((1 + r2) / 2)) < 1e-14);
  CHECK(std::abs(lambda_star(P(C(0, r3)), kTol).value - C(8 - 4 * r3)) < 1e-14);
  CHECK(std::abs(ap<Real>(1, kTol).value - C(2)) < 1e-14);
  CHECK(std::abs(ap<Real>(2, kTol).value - C(0.5L + 0.375L * r2)) < 1e-14);
  CHECK(std::abs(ap<Real>(r6, kTol).value - C(0.5L + r3 - r6 / 2)) < 1e-14);
  for (auto tau : samples()) {
    auto forms = lambda_star_forms(P(tau), Real(1e-12));
    CHECK(forms.max_disagreement <= forms.allowed);
    CHECK(std::abs(forms.weber.value - forms.eta_form.value) < 1e-11);
    CHECK(std::abs(forms.weber.value - forms.delta_form.value) < 1e-11);
  }
  CHECK_THROWS_AS(ap<Real>(-1, kTol), Error);
  // double instantiation
  CHECK(std::abs(ap<double>(1, 1e-13).value - 2.0) < 1e-12);
}

TEST_CASE("j") {
  CHECK(std::abs(j_from_lambda_star(C(2)) - C(1728)) < 1e-12);
  const Real r2 = std::sqrt(Real(2));
  CHECK(std::abs(j_from_lambda_star(C((1 + r2) / 2)) - C(8000)) < 1e-10);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int k = 0; k < 20; ++k) {
    C x(u(rng), u(rng));
    auto a = j_from_lambda_star(x), b = j_from_lambda_star(C(1) / x);
    CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
  }
  CHECK_THROWS_AS(j_from_lambda_star(C(0)), Error);
  CHECK_THROWS_AS(j_from_lambda_star(C(1)), Error);

  CHECK(std::abs(j_oracle(P(C(0, 1)), kTol).value - C(1728)) < 1e-9);
  CHECK(std::abs(j_oracle(P(C(0, r2)), kTol).value - C(8000)) < 1e-8);
  for (auto tau : samples()) {
    auto a = j_oracle(P(tau), kTol).value, b = j_oracle(P(tau + Real(1)), kTol).value;
    CHECK(std::abs(a - b) <= 1e-10 * std::max(Real(1), std::abs(a)));
  }
  for (int n : {1, 2, 3, 5}) {
    P p(C(0, std::sqrt(Real(n))));
    auto via_lambda = j_from_lambda_star(lambda_star(p, kTol).value);
    auto direct = j_oracle(p, kTol).value;
    CHECK(std::abs(via_lambda - direct) <= 1e-8 * std::abs(direct));
  }
  CHECK(detail::sigma3(1) == 1);
  CHECK(detail::sigma3(6) == 1 + 8 + 27 + 216);
}

TEST_CASE("cm from weber") {
  P i(C(0, 1));
  auto c = cm_from_weber(Real(4), i, Real(1e-12));
  CHECK(c.equal_roots);
  CHECK(std::abs(c.ap - 2) < 1e-12);
  CHECK(std::abs(c.f1_8 - 2) < 1e-12);
  const Real r2 = std::sqrt(Real(2));
  P p(C(0, r2));
  Real f8 = std::real(std::pow(weber_f(p, kTol).value, 8));
  auto d = cm_from_weber(f8, p, Real(1e-12));
  CHECK_FALSE(d.equal_roots);
  CHECK(std::abs(d.ap - (1 + r2) / 2) < 1e-10);
  CHECK(std::abs(d.f1_8 * d.f2_8 * f8 - 16) < 1e-10);
  CHECK(std::abs(d.f1_8 + d.f2_8 - f8) < 1e-10);
  CHECK_THROWS_AS(cm_from_weber(Real(2), p, Real(1e-12)), Error);
  CHECK_THROWS_AS(cm_from_weber(Real(-1), p, Real(1e-12)), Error);
}

TEST_CASE("integrality") {
  for (int n = 1; n <= 4; ++n) {
    auto w = integrality_witness<Real>(n, Real(1e-6));
    CHECK(w.passed);
    CHECK(integrality_check<Real>(n, Real(1e-6)));
  }
  auto w = integrality_witness<Real>(1, Real(1e-6));
  CHECK(std::abs(w.y - 32) < 1e-12);
  CHECK(std::abs(w.j - 1728) < 1e-9);
}
