#include <chrono>
#include <random>

#include "curvesing/parse.hpp"
#include "curvesing/rational_curve.hpp"
#include "doctest.h"

using namespace curvesing;

namespace {

Ideal ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<QPoly> g;
  for (const char* s : gens) g.push_back(parse_poly(s, r));
  return Ideal(r, std::move(g));
}

const char* kCenter = "a+g; 3f-b-d; 9e+c-d";

}  // namespace

TEST_CASE("rational normal curves") {
  auto conic = rnc_ideal(2);
  REQUIRE(conic.generators().size() == 1);
  CHECK(conic.generators()[0].str() == "a*c - b^2");
  CHECK_THROWS_AS(rnc_ideal(1), InputError);
  auto c6 = rnc_ideal(6);
  CHECK(c6.generators().size() == 15);
  const RingPtr& r = c6.ring();
  CHECK(c6.contains(parse_poly("a*c - b^2", r)));
  CHECK(c6.contains(parse_poly("e*g - f^2", r)));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    Rational t(int(rng() % 13) - 6, 1 + int(rng() % 4));
    std::vector<Rational> pt;
    for (int k = 0; k <= 6; ++k) pt.push_back(pow(t, k));
    for (const auto& g : c6.generators()) CHECK(g.evaluate(pt).is_zero());
  }
  // moment map identity, symbolically
  auto st = make_ring({"s", "t"});
  std::vector<QPoly> moment;
  for (int k = 0; k <= 6; ++k) moment.push_back(parse_poly(("s^" + std::to_string(6 - k) + "*t^" + std::to_string(k)).c_str(), st));
  for (const auto& g : c6.generators()) CHECK(compose(g, moment).is_zero());
}

TEST_CASE("osculating spaces") {
  const RingPtr r = projective_space_ring(6);
  std::array<Rational, 2> A{Rational(1), Rational(0)}, B{Rational(0), Rational(1)};
  CHECK(osculating_space_ideal(r, B, 2) == ideal(r, {"a", "b", "c", "d"}));
  CHECK(osculating_space_ideal(r, A, 2) == ideal(r, {"d", "e", "f", "g"}));
  CHECK(osculating_space_ideal(r, A, 0) == ideal(r, {"b", "c", "d", "e", "f", "g"}));
  CHECK_THROWS_AS(osculating_space_ideal(r, A, 6), InputError);
  std::array<Rational, 2> q{Rational(2), Rational(-1)};
  for (unsigned k = 0; k + 1 < 6; ++k) {
    Ideal small = osculating_space_ideal(r, q, k), big = osculating_space_ideal(r, q, k + 1);
    CHECK(small.contains(big));
    CHECK(!big.contains(small));
    CHECK(linear_forms_in(big).size() == 6 - (k + 1));
  }
}

TEST_CASE("parameterizations and implicit equations") {
  auto conic = PlaneParameterization::parse("s^2; s*t; t^2");
  CHECK(implicitize(conic).equation.str() == "x*z - y^2");
  CHECK(properness_check(conic).proper);
  auto cusp = PlaneParameterization::parse("s^3; s^2*t; t^3");
  QPoly F = implicitize(cusp).equation;
  CHECK((F == parse_poly("y^3 - x^2*z", plane_curve_ring()) || F == parse_poly("x^2*z - y^3", plane_curve_ring())));
  auto doubled = PlaneParameterization::parse("s^4; s^2*t^2; t^4");
  auto pc = properness_check(doubled);
  CHECK(!pc.proper);
  CHECK(pc.map_degree == 2);
  CHECK_THROWS_AS(PlaneParameterization::parse("s^2 - t^2; s*t - t^2; s^2 - s*t"), InputError);
  CHECK_THROWS_AS(PlaneParameterization::parse("s^2; t"), InputError);

  auto c2 = projective_space_ring(2);
  auto p = parameterization_from_center(2, LinearCenter::parse("a; b; c", c2));
  CHECK(p.str() == "s^2; s*t; t^2");
  CHECK_THROWS_AS(parameterization_from_center(2, LinearCenter::parse("a - b; b - c; a - c", c2)), InputError);
  CHECK_THROWS_AS(parameterization_from_center(3, LinearCenter::parse("a - b; b - c; c - d", projective_space_ring(3))),
                  MathError);
}

TEST_CASE("sextic with an oscnode: projections") {
  const RingPtr r = projective_space_ring(6);
  LinearCenter center = LinearCenter::parse(kCenter, r);
  auto p = parameterization_from_center(6, center);
  CHECK(p.str() == "s^6 + t^6; -s^5*t - s^3*t^3 + 3*s*t^5; s^4*t^2 - s^3*t^3 + 9*s^2*t^4");
  Implicitization imp = implicitize(p);
  CHECK(imp.equation.total_degree() == 6);
  CHECK(imp.map_degree == 1);
  CHECK(compose(imp.equation, {p.f[0], p.f[1], p.f[2]}).is_zero());

  auto start = std::chrono::steady_clock::now();
  Ideal line3 = power(ideal(r, {"b", "c", "d", "e", "f"}), 3);
  Ideal image3 = project_scheme(sum(line3, rnc_ideal(r)), center);
  auto uvw = image3.ring();
  CHECK(image3 == ideal(uvw, {"w^2", "v*w", "v^2 - u*w"}));
  Ideal line4 = power(ideal(r, {"b", "c", "d", "e", "f"}), 4);
  Ideal image4 = project_scheme(sum(line4, rnc_ideal(r)), center);
  CHECK(hilbert_function(image4).stable_value == 5);
  std::vector<Rational> P{Rational(1), Rational(0), Rational(0)};
  CHECK(!is_curvilinear_at(image4, P));
  CHECK(is_curvilinear_at(image3, P));
  CHECK(image4 == ideal(uvw, {"w^2", "v^2*w", "v^3 - u*v*w"}));

  Ideal R = ideal(r, {"a - b", "b - c", "c - d", "d - e", "e - f", "f - g"});
  Ideal imageR = project_scheme(R, center);
  CHECK(imageR == ideal(uvw, {"v - 1/9*w", "u - 2/9*w"}));

  ConeFiber fiber = cone_fiber_test(r, center, {Rational(2), Rational(1), Rational(9)});
  CHECK(fiber.length == 1);
  CHECK(fiber.fiber == ideal(r, {"a - g", "b - g", "c - g", "d - g", "e - g", "f - g"}));
  REQUIRE(fiber.point);
  CHECK(*fiber.point == std::vector<Rational>(7, Rational(1)));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  MESSAGE("projection checks took " << secs << " s");
}
