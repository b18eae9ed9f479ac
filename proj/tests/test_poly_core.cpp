#include <random>
#include <set>

#include "curvesing/parse.hpp"
#include "curvesing/poly_ops.hpp"
#include "doctest.h"

using namespace curvesing;

namespace {

QPoly random_poly(std::mt19937& rng, const RingPtr& ring, int terms, unsigned max_exp) {
  std::uniform_int_distribution<int> coeff(-5, 5), e(0, int(max_exp));
  std::vector<QPoly::Term> out;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    for (std::size_t v = 0; v < ring->size(); ++v) m.exp[v] = std::uint16_t(e(rng));
    out.push_back({m, Rational(coeff(rng))});
  }
  return QPoly(ring, std::move(out));
}

// Cofactor expansion along row `row`, recursing with plain expansion.
QPoly cofactor_det(const PolyMatrix<Rational>& m, std::size_t row) {
  std::size_t n = m.rows();
  if (n == 1) return m.at(0, 0);
  QPoly total(m.ring());
  for (std::size_t c = 0; c < n; ++c) {
    PolyMatrix<Rational> sub(m.ring(), n - 1, n - 1);
    for (std::size_t i = 0, si = 0; i < n; ++i) {
      if (i == row) continue;
      for (std::size_t j = 0, sj = 0; j < n; ++j) {
        if (j == c) continue;
        sub.set(si, sj++, m.at(i, j));
      }
      ++si;
    }
    QPoly term = m.at(row, c) * cofactor_det(sub, 0);
    if ((row + c) % 2) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("parse and print") {
  auto r = make_ring({"x", "y"});
  QPoly f = parse_poly("y^2 - 2*x^2*y + x^4 + x^2*y^2", r);
  CHECK(f.str() == "x^4 + x^2*y^2 - 2*x^2*y + y^2");
  CHECK(parse_poly(f.str(), r) == f);
  CHECK(parse_poly("0", r).is_zero());
  CHECK(parse_poly("(x+y)^2 - x^2 - 2*x*y - y^2", r).is_zero());
  CHECK(parse_poly("1/2*x - -3", r).str() == "1/2*x + 3");
  CHECK(parse_poly("3x - 2y", r).str() == "3*x - 2*y");
  CHECK_THROWS_AS(parse_poly("x*z", r), ParseError);
  CHECK_THROWS_AS(parse_poly("x y", r), ParseError);
  CHECK_THROWS_AS(parse_poly("x + ", r), ParseError);
  CHECK_THROWS_AS(parse_poly("x + 1.5", r), ParseError);
  try {
    parse_poly("x + q", r);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("ideal text format") {
  auto ideal = parse_ideal_text("# comment\nring: QQ[a,b,c]\n a*c - b^2\n\nb - c  # tail\n");
  REQUIRE(ideal.generators.size() == 2);
  CHECK(ideal.ring->size() == 3);
  CHECK(ideal.generators[0].str() == "a*c - b^2");
  CHECK(parse_ideal_text(format_ideal_text(ideal.ring, ideal.generators)).generators[1] == ideal.generators[1]);
  CHECK_THROWS_AS(parse_ideal_text("a + b\n"), ParseError);
}

TEST_CASE("arithmetic") {
  auto r = make_ring({"x", "y"});
  QPoly x = QPoly::variable(r, "x"), y = QPoly::variable(r, "y");
  CHECK((y - x * x) * (y + x * x) == y * y - pow(x, 4));
  CHECK((x * QPoly(r)).is_zero());
  auto other = make_ring({"s", "t"});
  CHECK_THROWS_AS(x + QPoly::variable(other, "s"), RingMismatch);
  auto r7 = make_ring({"a", "b", "c", "d", "e", "f", "g"});
  std::vector<QPoly> gens;
  for (const char* v : {"b", "c", "d", "e", "f"}) gens.push_back(QPoly::variable(r7, v));
  // products of three generators: 35 distinct monomials
  std::set<std::string> cubes;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i; j < 5; ++j)
      for (std::size_t k = j; k < 5; ++k) cubes.insert((gens[i] * gens[j] * gens[k]).str());
  CHECK(cubes.size() == 35);
  CHECK(cubes.count("b^3") == 1);
  CHECK(cubes.count("b^2*c") == 1);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(3);
  auto r = make_ring({"x", "y", "z"});
  for (int i = 0; i < 40; ++i) {
    QPoly a = random_poly(rng, r, 4, 3), b = random_poly(rng, r, 4, 3), c = random_poly(rng, r, 3, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("substitution") {
  auto r = make_ring({"x", "y"});
  QPoly x = QPoly::variable(r, "x");
  QPoly f = parse_poly("y^2 - x^5", r);
  CHECK(substitute(f, {{"y", QPoly(r)}}) == -pow(x, 5));
  QPoly q = parse_poly("y^2 - 2*x^2*y + x^4 + x^2*y^2", r);
  CHECK(substitute(q, {{"y", x * x}}) == pow(x, 6));
  CHECK(substitute(q, {{"x", x}, {"y", QPoly::variable(r, "y")}}) == q);

  std::mt19937 rng(5);
  for (int i = 0; i < 30; ++i) {
    QPoly a = random_poly(rng, r, 3, 3), b = random_poly(rng, r, 3, 3), img = random_poly(rng, r, 2, 2);
    std::map<std::string, QPoly> m{{"y", img}};
    CHECK(substitute(a * b, m) == substitute(a, m) * substitute(b, m));
    CHECK(substitute(a + b, m) == substitute(a, m) + substitute(b, m));
  }
}

TEST_CASE("linear change of coordinates") {
  auto r = make_ring({"x0", "x1", "x2"});
  QPoly f = parse_poly("x0^2*x2", r);
  DenseMatrix<Rational> swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  CHECK(linear_change(f, swap).str() == "x1^2*x2");
  CHECK(linear_change(f, DenseMatrix<Rational>::identity(3)) == f);
  DenseMatrix<Rational> singular{{1, 1, 0}, {1, 1, 0}, {0, 0, 1}};
  CHECK_THROWS_AS(linear_change(f, singular), MathError);

  std::mt19937 rng(9);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int i = 0; i < 20; ++i) {
    DenseMatrix<Rational> m(3, 3);
    do {
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) m.at(a, b) = Rational(c(rng));
    } while (determinant(m).is_zero());
    QPoly g = random_poly(rng, r, 5, 3);
    CHECK(linear_change(linear_change(g, m), inverse(m)) == g);
  }
}

TEST_CASE("order at zero") {
  auto r = make_ring({"x", "y"});
  CHECK(order_at_zero(parse_poly("-x^5 + x^7", r)) == Multiplicity(5));
  CHECK(order_at_zero(QPoly(r)).is_infinite());
  CHECK(order_at_zero(parse_poly("3", r)) == Multiplicity(0));
  CHECK_THROWS_AS(order_at_zero(parse_poly("x*y", r)), InputError);
  std::mt19937 rng(13);
  auto r1 = make_ring({"x"});
  for (int i = 0; i < 50; ++i) {
    QPoly u = random_poly(rng, r1, 3, 6), v = random_poly(rng, r1, 3, 6);
    CHECK(order_at_zero(u * v) == order_at_zero(u) + order_at_zero(v));
  }
}

TEST_CASE("resultants") {
  auto r = make_ring({"x", "y"});
  std::size_t y = r->index_of("y");
  CHECK(resultant(parse_poly("y - x", r), parse_poly("y + x", r), y).str() == "2*x");
  CHECK(resultant(parse_poly("y^2 - x", r), parse_poly("y^2 - x", r), y).is_zero());
  auto st = make_ring({"s", "t"});
  CHECK(resultant(parse_poly("s*t - 1", st), parse_poly("t^2", st), 1).str() == "1");
  CHECK_THROWS_AS(resultant(parse_poly("x", r), parse_poly("y", r), y), InputError);
}

TEST_CASE("gcd and square-free parts") {
  auto r = make_ring({"x"});
  CHECK(univariate_squarefree_part(parse_poly("(x-1)^2*(x+2)", r)) == parse_poly("(x-1)*(x+2)", r));
  CHECK(univariate_squarefree_part(parse_poly("x^3", r)).str() == "x");
  CHECK(univariate_squarefree_part(parse_poly("2*x^2 - 6", r)).str() == "x^2 - 3");
  CHECK_THROWS_AS(univariate_squarefree_part(QPoly(r)), MathError);

  auto r3 = make_ring({"x", "y", "z"});
  QPoly a = parse_poly("x^2 + y*z - 3", r3), b = parse_poly("x - y^2*z", r3), c = parse_poly("x*y + z + 1", r3);
  CHECK(poly_gcd(a * b, a * c) == make_monic(a));
  CHECK(poly_gcd(a * b * b, b * c) == make_monic(b));
  CHECK(squarefree_part(a * a * b) == make_monic(a * b));
  CHECK(poly_gcd(a, b).is_constant());
}

TEST_CASE("determinants and minors") {
  auto r = make_ring({"x", "y", "z", "w"});
  PolyMatrix<Rational> m(r, 2, 2);
  m.set(0, 0, QPoly::variable(r, "x"));
  m.set(0, 1, QPoly::variable(r, "y"));
  m.set(1, 0, QPoly::variable(r, "z"));
  m.set(1, 1, QPoly::variable(r, "w"));
  auto ms = minors(m, 2);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].str() == "x*w - y*z");
  CHECK(minors(m, 1).size() == 4);
  CHECK(minors(m, 1)[1].str() == "y");
  CHECK_THROWS_AS(minors(m, 3), InputError);

  std::mt19937 rng(17);
  auto r3 = make_ring({"x", "y", "z"});
  for (int trial = 0; trial < 5; ++trial) {
    PolyMatrix<Rational> a(r3, 4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a.set(i, j, random_poly(rng, r3, 2, 1));
    QPoly d = determinant_laplace(a);
    CHECK(d == determinant_bareiss(a));
    for (std::size_t row = 0; row < 4; ++row) CHECK(d == cofactor_det(a, row));
    CHECK(minors(a, 4).front() == d);
  }
}
