#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "dessinry/braid.hpp"
#include "dessinry/error.hpp"
#include "dessinry/hurwitz.hpp"
#include "dessinry/origami.hpp"

using namespace dessinry;

TEST_CASE("f_s at random s") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Complex s(u(rng), u(rng));
    if (std::abs(s - 0.5) < 0.1) continue;
    auto f = hurwitz_fs(s);
    REQUIRE(f.size() == 5);
    const double tol = 1e-10 * (1 + std::abs(s) * std::abs(s) * std::abs(s) * std::abs(s));
    CHECK(std::abs(poly_eval(f, Complex(0))) < tol);
    CHECK(std::abs(poly_eval(f, Complex(1)) - 1.0) < tol);
    auto df = poly_derivative(f);
    for (Complex x : {Complex(0), Complex(1), s}) CHECK(std::abs(poly_eval(df, x)) < tol);
    CHECK(std::abs(poly_eval(f, s) - hurwitz_projection(s)) < tol);
    // p(s) = a exactly on the roots of the fiber polynomial
    auto a = hurwitz_projection(s);
    CHECK(std::abs(poly_eval(hurwitz_fiber_polynomial(a), s)) < 1e-8 * (1 + std::abs(a)) * (1 + std::pow(std::abs(s), 4)));
  }
}

TEST_CASE("projection") {
  CHECK(std::abs(hurwitz_projection(1.0) - 1.0) < 1e-15);
  CHECK_THROWS_AS(hurwitz_projection(0.5), Error);
  CHECK_THROWS_AS(hurwitz_fs(0.5), Error);
  CHECK(std::abs(hurwitz_projection(-1.5088444949) - 3.0) < 1e-8);
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), q = std::pow(3.0, 0.25);
  CHECK(std::abs(hurwitz_projection(Complex(1 + r3, r2 * q) / 2.0) - 2.0) < 1e-12);
}

TEST_CASE("classify lift") {
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), q = std::pow(3.0, 0.25);
  CHECK(classify_lift((1 - r2 * q - r3) / 2) == Lift::L3);
  CHECK(classify_lift((1 + r2 * q - r3) / 2) == Lift::L4);
  CHECK(classify_lift(0.5379312192) == Lift::L4);
  CHECK(classify_lift(Complex(1 + r3, r2 * q) / 2.0) == Lift::L1);
  CHECK(classify_lift(Complex(1 + r3, -r2 * q) / 2.0) == Lift::L2);
  CHECK_FALSE(classify_lift(0.25).has_value());  // p(0.25) < 0
  CHECK(std::string(to_string(Lift::L3)) == "L3");
  CHECK(parse_lift("L2") == Lift::L2);
  CHECK_THROWS_AS(parse_lift("L5"), Error);
}

TEST_CASE("fibers carry each label once") {
  for (double a : {2.0, 3.0, 5.0, 10.0}) {
    auto fiber = hurwitz_fiber(a);
    REQUIRE(fiber.size() == 4);
    std::multiset<Lift> labels;
    for (const auto& pt : fiber) {
      CHECK(std::abs(hurwitz_projection(pt.s) - a) < 1e-9 * a);
      REQUIRE(pt.lift.has_value());
      labels.insert(*pt.lift);
      CHECK(classify_lift(pt.s) == pt.lift);
    }
    CHECK(labels == std::multiset<Lift>{Lift::L1, Lift::L2, Lift::L3, Lift::L4});
  }
  CHECK_THROWS_AS(hurwitz_lift_point(0.5, Lift::L1), Error);
}

TEST_CASE("dessins over the lifts") {
  std::vector<MonodromyTuple> t;
  for (auto l : {Lift::L1, Lift::L2, Lift::L3, Lift::L4}) t.push_back(hurwitz_dessin(2.0, l));
  for (const auto& x : t) {
    CHECK(validate(x).ok);
    CHECK(x.degree() == 4);
    CHECK(to_string(cycle_profile(x)) == "(4),(2,1,1),(2,1,1),(2,1,1)");
    CHECK(genus(x) == 0);
    CHECK(canonical_form(x) == x);
  }
  CHECK_FALSE(isomorphic(t[2], t[3]));
  CHECK(isomorphic(t[0], orientation_reverse(t[1])));
  for (double a : {3.0, 5.0}) {
    CHECK(hurwitz_dessin(a, Lift::L3) == t[2]);
    CHECK(hurwitz_dessin(a, Lift::L4) == t[3]);
    CHECK(hurwitz_dessin(a, Lift::L1) == t[0]);
  }
  // one orbit under the gamma2 presets, and under the origami shears
  auto orbit = braid_orbit({t[0]}, preset_gamma2_generators());
  for (const auto& x : t) CHECK(std::binary_search(orbit.members.begin(), orbit.members.end(), x));
  auto oo = origami_orbit(dessin_to_origami(t[0]));
  for (const auto& x : t)
    CHECK(std::binary_search(oo.members.begin(), oo.members.end(), canonical_origami(dessin_to_origami(x))));
  // recorded outcome: four distinct classes
  CHECK(std::set<MonodromyTuple>(t.begin(), t.end()).size() == 4);
}
