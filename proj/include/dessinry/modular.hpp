#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>

#include "dessinry/error.hpp"

namespace dessinry {

// Point tau of the upper half plane. All fractional powers of q are taken from
// the exponential formulas below, never from a complex power of q.
template <class Real>
class UpperHalfPoint {
 public:
  using C = std::complex<Real>;

  explicit UpperHalfPoint(C tau) : tau_(tau) {
    if (!(tau.imag() > 0)) throw Error(ErrorKind::InvalidArgument, "tau must lie in the upper half plane");
  }

  const C& tau() const { return tau_; }
  C q() const { return ipi_exp(2); }         // e^{2 pi i tau}
  C q2() const { return ipi_exp(1); }        // e^{pi i tau}
  C q_1_24() const { return ipi_exp(Real(1) / 12); }  // e^{pi i tau / 12}
  C q_1_48() const { return ipi_exp(Real(1) / 24); }  // e^{pi i tau / 24}
  Real abs_q() const { return std::exp(-2 * std::numbers::pi_v<Real> * tau_.imag()); }

 private:
  C ipi_exp(Real factor) const { return std::exp(C(0, factor * std::numbers::pi_v<Real>) * tau_); }
  C tau_;
};

// value together with a bound on the error caused by truncating the defining
// products and series (floating-point rounding is not included).
template <class Real>
struct ModularValue {
  std::complex<Real> value;
  Real trunc_bound = 0;
};

template <class Real>
ModularValue<Real> operator*(const ModularValue<Real>& a, const ModularValue<Real>& b) {
  return {a.value * b.value,
          std::abs(a.value) * b.trunc_bound + std::abs(b.value) * a.trunc_bound + a.trunc_bound * b.trunc_bound};
}

template <class Real>
ModularValue<Real> operator*(const std::complex<Real>& c, const ModularValue<Real>& a) {
  return {c * a.value, std::abs(c) * a.trunc_bound};
}

template <class Real>
ModularValue<Real> operator+(const ModularValue<Real>& a, const ModularValue<Real>& b) {
  return {a.value + b.value, a.trunc_bound + b.trunc_bound};
}

template <class Real>
ModularValue<Real> operator/(const ModularValue<Real>& a, const ModularValue<Real>& b) {
  const Real mb = std::abs(b.value);
  if (!(mb > b.trunc_bound)) return {a.value / b.value, std::numeric_limits<Real>::infinity()};
  return {a.value / b.value, (a.trunc_bound + std::abs(a.value / b.value) * b.trunc_bound) / (mb - b.trunc_bound)};
}

template <class Real>
ModularValue<Real> pow(ModularValue<Real> a, int k) {
  ModularValue<Real> r{std::complex<Real>(1), 0};
  for (; k > 0; k >>= 1) {
    if (k & 1) r = r * a;
    a = a * a;
  }
  return r;
}

namespace detail {

inline constexpr int kMaxTerms = 200000;

// Calls f with shrinking inner tolerances until the propagated bound is <= tol.
template <class Real>
ModularValue<Real> refine(const std::function<ModularValue<Real>(Real)>& f, Real tol) {
  Real inner = tol / 64;
  for (int round = 0; round < 40; ++round) {
    auto v = f(inner);
    if (v.trunc_bound <= tol) return v;
    inner /= 4096;
    if (!(inner > std::numeric_limits<Real>::min())) break;
  }
  throw Error(ErrorKind::ToleranceUnreachable, "propagated truncation bound stays above the tolerance");
}

// prefactor * prod_{n>=1} (1 + sign * z^(a n + b)) until the tail bound drops
// below tol; tail(N) must bound |log prod_{n>N}(...)|.
template <class Real>
ModularValue<Real> product(std::complex<Real> prefactor, std::complex<Real> z, int a, int b, int sign, Real tol,
                           const std::function<Real(int)>& tail) {
  using C = std::complex<Real>;
  if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  C step = C(1);
  for (int k = 0; k < a; ++k) step *= z;
  C zn = C(1);
  for (int k = 0; k < a + b; ++k) zn *= z;  // z^(a*1 + b)
  C prod = prefactor;
  for (int n = 1; n <= kMaxTerms; ++n) {
    prod *= C(1) + Real(sign) * zn;
    zn *= step;
    const Real bound = std::abs(prod) * std::expm1(tail(n));
    if (bound <= tol) return {prod, bound};
  }
  throw Error(ErrorKind::ToleranceUnreachable, "|q| too close to 1 for the term budget");
}

}  // namespace detail

// Product truncated after N factors, with its tail bound.
template <class Real>
ModularValue<Real> eta_truncated(const UpperHalfPoint<Real>& p, int N) {
  using C = std::complex<Real>;
  const C q = p.q();
  const Real r = p.abs_q();
  C prod = p.q_1_24(), qn = C(1);
  for (int n = 1; n <= N; ++n) {
    qn *= q;
    prod *= C(1) - qn;
  }
  return {prod, std::abs(prod) * std::expm1(std::pow(r, N + 1) / ((1 - r) * (1 - r)))};
}

// eta(tau) = q^{1/24} prod (1 - q^n).
template <class Real>
ModularValue<Real> eta(const UpperHalfPoint<Real>& p, Real tol) {
  const Real r = p.abs_q();
  return detail::product<Real>(p.q_1_24(), p.q(), 1, 0, -1, tol,
                               [r](int N) { return std::pow(r, N + 1) / ((1 - r) * (1 - r)); });
}

template <class Real>
ModularValue<Real> eta_at(std::complex<Real> tau, Real tol) {
  return eta(UpperHalfPoint<Real>(tau), tol);
}

// f = e^{-pi i/24} eta((tau+1)/2) / eta(tau)
template <class Real>
ModularValue<Real> weber_f(const UpperHalfPoint<Real>& p, Real tol) {
  using C = std::complex<Real>;
  const C pre = std::exp(C(0, -std::numbers::pi_v<Real> / 24));
  return detail::refine<Real>(
      [&](Real t) { return pre * (eta_at((p.tau() + Real(1)) / Real(2), t) / eta(p, t)); }, tol);
}

// f1 = eta(tau/2) / eta(tau)
template <class Real>
ModularValue<Real> weber_f1(const UpperHalfPoint<Real>& p, Real tol) {
  return detail::refine<Real>([&](Real t) { return eta_at(p.tau() / Real(2), t) / eta(p, t); }, tol);
}

// f2 = sqrt(2) eta(2 tau) / eta(tau)
template <class Real>
ModularValue<Real> weber_f2(const UpperHalfPoint<Real>& p, Real tol) {
  using C = std::complex<Real>;
  const C s2 = C(std::sqrt(Real(2)));
  return detail::refine<Real>([&](Real t) { return s2 * (eta_at(p.tau() * Real(2), t) / eta(p, t)); }, tol);
}

namespace detail {

// bound for prod over n > N of (1 +- q2^(2n-1))
template <class Real>
Real odd_tail(Real rho, int N) {
  return std::pow(rho, 2 * N + 1) / ((1 - rho) * (1 - rho * rho));
}

}  // namespace detail

// f = q^{-1/48} prod (1 + q^{n-1/2})
template <class Real>
ModularValue<Real> weber_f_product(const UpperHalfPoint<Real>& p, Real tol) {
  const Real rho = std::abs(p.q2());
  return detail::product<Real>(Real(1) / p.q_1_48(), p.q2(), 2, -1, 1, tol,
                               [rho](int N) { return detail::odd_tail(rho, N); });
}

// f1 = q^{-1/48} prod (1 - q^{n-1/2})
template <class Real>
ModularValue<Real> weber_f1_product(const UpperHalfPoint<Real>& p, Real tol) {
  const Real rho = std::abs(p.q2());
  return detail::product<Real>(Real(1) / p.q_1_48(), p.q2(), 2, -1, -1, tol,
                               [rho](int N) { return detail::odd_tail(rho, N); });
}

// f2 = sqrt(2) q^{1/24} prod (1 + q^n)
template <class Real>
ModularValue<Real> weber_f2_product(const UpperHalfPoint<Real>& p, Real tol) {
  const Real r = p.abs_q();
  return detail::product<Real>(std::sqrt(Real(2)) * p.q_1_24(), p.q(), 1, 0, 1, tol,
                               [r](int N) { return std::pow(r, N + 1) / ((1 - r) * (1 - r)); });
}

template <class Real>
struct LambdaStarForms {
  ModularValue<Real> weber;     // f^8 / f1^8
  ModularValue<Real> eta_form;  // e^{-pi i/3} eta((tau+1)/2)^8 / eta(tau/2)^8
  ModularValue<Real> delta_form;  // -(eta((tau+1)/2)^24 + 16 eta(tau)^24) / (eta(tau/2)^24 + 16 eta(tau)^24)
  Real max_disagreement = 0;
  Real allowed = 0;
};

template <class Real>
LambdaStarForms<Real> lambda_star_forms(const UpperHalfPoint<Real>& p, Real tol) {
  using C = std::complex<Real>;
  const C tau = p.tau();
  LambdaStarForms<Real> out;
  out.weber = detail::refine<Real>([&](Real t) { return pow(weber_f(p, t), 8) / pow(weber_f1(p, t), 8); }, tol);
  const C pre = std::exp(C(0, -std::numbers::pi_v<Real> / 3));
  out.eta_form = detail::refine<Real>(
      [&](Real t) { return pre * (pow(eta_at((tau + Real(1)) / Real(2), t), 8) / pow(eta_at(tau / Real(2), t), 8)); },
      tol);
  out.delta_form = detail::refine<Real>(
      [&](Real t) {
        auto e24 = C(16) * pow(eta(p, t), 24);
        auto num = pow(eta_at((tau + Real(1)) / Real(2), t), 24) + e24;
        auto den = pow(eta_at(tau / Real(2), t), 24) + e24;
        return C(-1) * (num / den);
      },
      tol);
  out.max_disagreement = std::max({std::abs(out.weber.value - out.eta_form.value),
                                    std::abs(out.weber.value - out.delta_form.value),
                                    std::abs(out.eta_form.value - out.delta_form.value)});
  // floating-point rounding floor for very small tolerances
  const Real rounding = 4096 * std::numeric_limits<Real>::epsilon() * std::max(Real(1), std::abs(out.weber.value));
  out.allowed = std::max(10 * tol, rounding);
  return out;
}

// lambda*(tau) = 1 / (1 - lambda(tau)), evaluated by all three expressions;
// returns the Weber quotient. Throws Error(ExpressionMismatch) if they disagree.
template <class Real>
ModularValue<Real> lambda_star(const UpperHalfPoint<Real>& p, Real tol) {
  auto forms = lambda_star_forms(p, tol);
  if (forms.max_disagreement > forms.allowed)
    throw Error(ErrorKind::ExpressionMismatch,
                "lambda* expressions disagree by " + std::to_string(static_cast<double>(forms.max_disagreement)));
  return forms.weber;
}

// ap(t) = lambda*(i t)
template <class Real>
ModularValue<Real> ap(Real t, Real tol) {
  if (!(t > 0)) throw Error(ErrorKind::InvalidArgument, "ap(t) needs t > 0");
  return lambda_star(UpperHalfPoint<Real>(std::complex<Real>(0, t)), tol);
}

// 256 (x^2 - x + 1)^3 / (x^2 (x - 1)^2)
template <class Real>
std::complex<Real> j_from_lambda_star(std::complex<Real> x) {
  if (x == std::complex<Real>(0) || x == std::complex<Real>(1))
    throw Error(ErrorKind::PoleAtZeroOrOne, "j_from_lambda_star is singular at 0 and 1");
  const auto a = x * x - x + Real(1);
  return Real(256) * a * a * a / (x * x * (x - Real(1)) * (x - Real(1)));
}

namespace detail {

inline long long sigma3(long long n) {
  long long s = 0;
  for (long long k = 1; k * k <= n; ++k)
    if (n % k == 0) {
      s += k * k * k;
      long long other = n / k;
      if (other != k) s += other * other * other;
    }
  return s;
}

}  // namespace detail

// E4 = 1 + 240 sum sigma_3(n) q^n, using sigma_3(n) <= zeta(3) n^3 for the tail.
template <class Real>
ModularValue<Real> eisenstein_e4(const UpperHalfPoint<Real>& p, Real tol) {
  using C = std::complex<Real>;
  const C q = p.q();
  const Real r = p.abs_q();
  C sum = C(1), qn = C(1);
  for (int n = 1; n <= detail::kMaxTerms; ++n) {
    qn *= q;
    sum += Real(240) * Real(detail::sigma3(n)) * qn;
    const Real m = Real(n + 1);
    const Real ratio = std::pow((m + 1) / m, 3) * r;
    if (ratio < 1) {
      const Real tail = Real(240) * Real(1.2021) * m * m * m * std::pow(r, n + 1) / (1 - ratio);
      if (tail <= tol) return {sum, tail};
    }
  }
  throw Error(ErrorKind::ToleranceUnreachable, "|q| too close to 1 for the term budget");
}

// j = E4^3 / eta^24, independent of the lambda* route.
template <class Real>
ModularValue<Real> j_oracle(const UpperHalfPoint<Real>& p, Real tol) {
  return detail::refine<Real>([&](Real t) { return pow(eisenstein_e4(p, t), 3) / pow(eta(p, t), 24); }, tol);
}

template <class Real>
struct CmValues {
  Real f1_8 = 0;
  Real f2_8 = 0;
  Real ap = 0;
  bool equal_roots = false;
};

// Roots u, v of x^2 - f8 x + 16/f8 are f1^8 and f2^8; u is matched with f1^8
// by comparing against f1 evaluated at p. ap = f8 / u.
template <class Real>
CmValues<Real> cm_from_weber(Real f8, const UpperHalfPoint<Real>& p, Real tol) {
  if (!(f8 > 0)) throw Error(ErrorKind::InvalidArgument, "f^8 must be positive");
  Real disc = f8 * f8 - 64 / f8;
  const Real scale = std::max(Real(1), f8 * f8);
  CmValues<Real> out;
  if (disc < 0) {
    if (disc < -tol * scale)
      throw Error(ErrorKind::NegativeDiscriminant, "x^2 - f8 x + 16/f8 has no real roots");
    disc = 0;
  }
  const Real root = std::sqrt(disc);
  Real u = (f8 + root) / 2, v = (f8 - root) / 2;
  if (root <= tol * std::sqrt(scale)) {
    out.equal_roots = true;
    u = v = f8 / 2;
  } else {
    const Real direct = std::real(pow(weber_f1(p, tol), 8).value);
    const Real du = std::abs(u - direct), dv = std::abs(v - direct);
    if (std::abs(du - dv) <= tol * scale)
      throw Error(ErrorKind::Ambiguous, "cannot tell which root is f1^8");
    if (dv < du) std::swap(u, v);
  }
  out.f1_8 = u;
  out.f2_8 = v;
  out.ap = f8 / u;
  return out;
}

template <class Real>
struct IntegralityWitness {
  Real y = 0;  // 16 ap(sqrt(n))
  Real j = 0;  // j(i sqrt(n))
  Real residual = 0;  // |(y^2-16y+256)^3 - j y^2 (y-16)^2|
  Real scale = 0;     // |(y^2-16y+256)^3| + |j y^2 (y-16)^2|
  bool passed = false;
};

template <class Real>
IntegralityWitness<Real> integrality_witness(int n, Real tol) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  const Real t = std::sqrt(Real(n));
  const Real eval_tol = 1e-15;
  IntegralityWitness<Real> w;
  w.y = 16 * std::real(ap<Real>(t, eval_tol).value);
  auto jv = j_oracle(UpperHalfPoint<Real>(std::complex<Real>(0, t)), eval_tol);
  w.j = std::real(jv.value);
  const Real a = w.y * w.y - 16 * w.y + 256;
  const Real lhs = a * a * a;
  const Real rhs = w.j * w.y * w.y * (w.y - 16) * (w.y - 16);
  w.residual = std::abs(lhs - rhs);
  w.scale = std::abs(lhs) + std::abs(rhs);
  w.passed = w.residual <= tol * w.scale;
  return w;
}

// Residual of the monic relation satisfied by y = 16 lambda*(i sqrt(n)), relative to tol.
template <class Real>
bool integrality_check(int n, Real tol) {
  return integrality_witness<Real>(n, tol).passed;
}

}  // namespace dessinry
