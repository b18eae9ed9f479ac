#include <functional>
#include <random>

#include "curvesing/groebner.hpp"
#include "curvesing/parse.hpp"
#include "doctest.h"

using namespace curvesing;

namespace {

Ideal ideal(const RingPtr& r, std::initializer_list<const char*> gens) {
  std::vector<QPoly> g;
  for (const char* s : gens) g.push_back(parse_poly(s, r));
  return Ideal(r, std::move(g));
}

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  Monomial m;
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t v, unsigned left) {
    if (v + 1 == n) {
      m.exp[v] = std::uint16_t(left);
      out.push_back(m);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m.exp[v] = std::uint16_t(e);
      rec(v + 1, left - e);
    }
  };
  rec(0, d);
  return out;
}

// Span of the degree-t products m*g, as a matrix over monomials of degree t.
DenseMatrix<Rational> slice_matrix(const Ideal& I, unsigned t) {
  std::size_t n = I.ring()->size();
  auto cols = monomials_of_degree(n, t);
  DenseMatrix<Rational> m(0, cols.size());
  for (const auto& g : I.generators()) {
    int d = g.total_degree();
    if (d > int(t)) continue;
    for (const auto& mult : monomials_of_degree(n, t - unsigned(d))) {
      std::vector<Rational> row(cols.size(), Rational(0));
      for (const auto& term : g.terms()) {
        Monomial p = term.mono * mult;
        row[std::size_t(std::find(cols.begin(), cols.end(), p) - cols.begin())] = term.coeff;
      }
      m.append_row(row);
    }
  }
  return m;
}

long long brute_hilbert(const Ideal& I, unsigned t) {
  auto m = slice_matrix(I, t);
  return (long long)(m.cols()) - (long long)(m.rows() ? rank(m) : 0);
}

// f lies in I with cofactors of degree <= bound (affine linear system).
bool has_cofactors(const Ideal& I, const QPoly& f, unsigned bound) {
  std::size_t n = I.ring()->size();
  std::vector<Monomial> mults;
  for (unsigned d = 0; d <= bound; ++d) {
    auto md = monomials_of_degree(n, d);
    mults.insert(mults.end(), md.begin(), md.end());
  }
  std::vector<Monomial> rows;
  auto row_of = [&](const Monomial& m) {
    auto it = std::find(rows.begin(), rows.end(), m);
    if (it != rows.end()) return std::size_t(it - rows.begin());
    rows.push_back(m);
    return rows.size() - 1;
  };
  std::vector<std::vector<std::pair<std::size_t, Rational>>> columns;
  for (const auto& g : I.generators()) {
    for (const auto& m : mults) {
      std::vector<std::pair<std::size_t, Rational>> col;
      for (const auto& t : g.terms()) col.push_back({row_of(t.mono * m), t.coeff});
      columns.push_back(std::move(col));
    }
  }
  std::vector<std::pair<std::size_t, Rational>> rhs;
  for (const auto& t : f.terms()) rhs.push_back({row_of(t.mono), t.coeff});
  DenseMatrix<Rational> a(rows.size(), columns.size()), ab(rows.size(), columns.size() + 1);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, v] : columns[c]) {
      a.at(r, c) = v;
      ab.at(r, c) = v;
    }
  }
  for (const auto& [r, v] : rhs) ab.at(r, columns.size()) = v;
  return rank(a) == rank(ab);
}

QPoly random_form(std::mt19937& rng, const RingPtr& r, unsigned degree, int terms) {
  auto monos = monomials_of_degree(r->size(), degree);
  std::vector<QPoly::Term> out;
  for (int k = 0; k < terms; ++k) out.push_back({monos[rng() % monos.size()], Rational(int(rng() % 7) - 3)});
  return QPoly(r, std::move(out));
}

}  // namespace

TEST_CASE("term orders") {
  auto r = make_ring({"x", "y", "z"});
  Monomial xz2, y3, x2;
  xz2.exp[0] = 1;
  xz2.exp[2] = 2;
  y3.exp[1] = 3;
  x2.exp[0] = 2;
  auto grevlex = TermOrder::grevlex(3), lex = TermOrder::lex(3);
  CHECK(grevlex.compare(y3, xz2) > 0);
  CHECK(lex.compare(xz2, y3) > 0);
  CHECK(lex.compare(x2, y3) > 0);
  CHECK(grevlex.compare(x2, y3) < 0);
  auto elim = TermOrder::elimination(3, {2});
  CHECK(elim.compare(xz2, y3) > 0);
  CHECK_THROWS_AS(TermOrder::grevlex(std::vector<std::size_t>{0, 0, 1}), InputError);
}

TEST_CASE("small bases") {
  auto r = make_ring({"x", "y"});
  auto gb = buchberger(r, {parse_poly("x - y", r), parse_poly("x + y", r)}, TermOrder::lex(2));
  REQUIRE(gb.size() == 2);
  CHECK(gb.polynomials()[0].str() == "y");
  CHECK(gb.polynomials()[1].str() == "x");

  auto r3 = make_ring({"x", "y", "z"});
  Ideal cubic = ideal(r3, {"y - x^2", "z - x^3"});
  const auto& lex = cubic.groebner(TermOrder::lex(3));
  for (const auto& p : lex.polynomials()) {
    CHECK(substitute(p, {{"y", parse_poly("x^2", r3)}, {"z", parse_poly("x^3", r3)}}).is_zero());
  }
  CHECK(eliminate(cubic, {"x"}) == ideal(r3, {"y^3 - z^2"}));
  CHECK(eliminate(cubic, {}) == cubic);
  CHECK(Ideal::unit(r3).is_unit());
  CHECK(ideal(r3, {"x", "y*z"}).groebner().normal_form(parse_poly("1", r3)).str() == "1");
  CHECK(ideal(r3, {"x", "y*z"}).contains(parse_poly("x*z + 3*y*z", r3)));
}

TEST_CASE("normal forms against (y - x^r, x^l)") {
  auto r = make_ring({"x", "y"});
  QPoly x = QPoly::variable(r, 0), y = QPoly::variable(r, 1);
  for (unsigned k = 1; k <= 4; ++k) {
    for (unsigned l = 1; l <= 9; ++l) {
      Ideal I(r, {y - pow(x, k), pow(x, l)});
      CHECK(I.contains(y * y - pow(x, 2 * k)));
    }
  }
}

TEST_CASE("catalecticant quadrics of the sextic normal curve") {
  auto r = make_ring({"a", "b", "c", "d", "e", "f", "g"});
  std::vector<QPoly> gens;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      QPoly m = QPoly::variable(r, i) * QPoly::variable(r, j + 1) - QPoly::variable(r, j) * QPoly::variable(r, i + 1);
      if (!m.is_zero()) gens.push_back(m);
    }
  }
  CHECK(gens.size() == 15);
  Ideal I(r, gens);
  const auto& gb = I.groebner();
  CHECK(gb.size() == 15);
  for (const auto& m : gb.leading_monomials()) CHECK(m.degree() == 2);
  CHECK(I.contains(parse_poly("b*d - c^2", r)));
  CHECK(I.contains(parse_poly("a*g - b*f", r)));
  auto h = hilbert_function(I);
  CHECK(h.stable_value == std::nullopt);
  CHECK(h.krull_dimension == 2);
  for (unsigned t = 0; t < 6; ++t) CHECK(h.at(t) == 6 * t + 1);
  CHECK(power(ideal(r, {"b", "c", "d", "e", "f"}), 3).generators().size() == 35);
}

TEST_CASE("Hilbert functions") {
  auto r = make_ring({"x", "y", "z"});
  auto h = hilbert_function(power(ideal(r, {"x", "y"}), 2));
  CHECK(h.values[0] == 1);
  CHECK(h.values[1] == 3);
  CHECK(h.values[2] == 3);
  CHECK(h.values[5] == 3);
  CHECK(h.stable_value == 3);
  CHECK(h.stable_from == 1);
  auto empty = hilbert_function(ideal(r, {"x^2", "y^2", "z^2"}));
  CHECK(empty.values == std::vector<long long>{1, 3, 3, 1, 0, 0, 0});
  CHECK(empty.stable_from == 4);
  CHECK(empty.krull_dimension == 0);
  CHECK_THROWS_AS(hilbert_function(ideal(r, {"x - 1"})), InputError);
  CHECK(hilbert_function(Ideal::unit(r)).values[0] == 0);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<QPoly> g;
    int count = 2 + int(rng() % 3);
    for (int k = 0; k < count; ++k) g.push_back(random_form(rng, r, 2 + unsigned(rng() % 2), 3));
    Ideal I(r, g);
    auto hg = hilbert_function(I);
    auto hl = hilbert_function(I, TermOrder::lex(3));
    for (unsigned t = 0; t <= 6; ++t) {
      CHECK(hg.at(t) == brute_hilbert(I, t));
      CHECK(hl.at(t) == hg.at(t));
    }
  }
}

TEST_CASE("bases are unique and sound") {
  auto r = make_ring({"x", "y", "z"});
  std::mt19937 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<QPoly> g;
    for (int k = 0; k < 3; ++k) g.push_back(random_form(rng, r, 2, 3) + random_form(rng, r, 1, 1));
    auto a = buchberger(r, g, TermOrder::grevlex(3));
    std::reverse(g.begin(), g.end());
    auto b = buchberger(r, g, TermOrder::grevlex(3));
    CHECK(a.polynomials() == b.polynomials());
    Ideal I(r, g);
    for (const auto& p : a.polynomials()) {
      if (p.total_degree() <= 3) CHECK(has_cofactors(I, p, 3));
    }
    QPoly probe = random_form(rng, r, 2, 2) * g[0] + random_form(rng, r, 1, 2) * g[1];
    CHECK(a.contains(probe));
  }
}

TEST_CASE("sums, products and intersections") {
  auto r = make_ring({"x", "y", "z"});
  CHECK(intersection(ideal(r, {"x"}), ideal(r, {"y"})) == ideal(r, {"x*y"}));
  CHECK(sum(ideal(r, {"x*y"}), Ideal::zero(r)) == ideal(r, {"x*y"}));
  CHECK(product(ideal(r, {"x", "y"}), ideal(r, {"z"})) == ideal(r, {"x*z", "y*z"}));
  Ideal a = ideal(r, {"x^2", "y"}), b = ideal(r, {"x", "y^3"});
  Ideal both = intersection(a, b);
  CHECK(a.contains(both));
  CHECK(b.contains(both));
  CHECK(both == ideal(r, {"x^2", "x*y", "y^3"}));
  CHECK_THROWS_AS(sum(a, ideal(make_ring({"s"}), {"s"})), RingMismatch);
}

TEST_CASE("saturation") {
  auto r2 = make_ring({"x", "y"});
  CHECK(saturate(ideal(r2, {"x^2*y"}), parse_poly("x", r2)) == ideal(r2, {"y"}));
  CHECK(saturate(ideal(r2, {"x^2*y"}), parse_poly("x^2", r2)) == ideal(r2, {"y"}));
  CHECK(saturate(ideal(r2, {"x^2*y - x^2"}), parse_poly("x", r2)) == ideal(r2, {"y - 1"}));

  auto r = make_ring({"x", "y", "z"});
  Ideal m = Ideal::maximal_homogeneous(r);
  Ideal line = ideal(r, {"y"});
  Ideal embedded = intersection(line, power(m, 3));
  CHECK(!(embedded == line));
  CHECK(saturate(embedded, m) == line);
  CHECK(saturate(embedded, ideal(r, {"x^2", "y^2", "z^2"})) == line);
  CHECK(saturate(line, m) == line);

  std::mt19937 rng(29);
  for (int trial = 0; trial < 6; ++trial) {
    QPoly h = random_form(rng, r, 1, 2);
    if (h.is_zero()) continue;
    Ideal I(r, {random_form(rng, r, 2, 3) * h, random_form(rng, r, 3, 3) * h * h, random_form(rng, r, 2, 2)});
    Ideal fast = saturate(I, h);
    Ideal slow = saturate(I, h * h);
    CHECK(fast == slow);
    CHECK(saturate(fast, h) == fast);
    CHECK(saturate(saturate(I, m), m) == saturate(I, m));
  }
}

TEST_CASE("radicals of point schemes") {
  auto r = make_ring({"x", "y", "z"});
  CHECK(zero_dim_radical(ideal(r, {"x^2", "y"})) == ideal(r, {"x", "y"}));
  Ideal p1 = ideal(r, {"x", "y"}), p2 = ideal(r, {"x - z", "y"}), p3 = ideal(r, {"x + y", "z - 2*y"});
  Ideal fat = intersection(intersection(power(p1, 2), p2), power(p3, 3));
  CHECK(hilbert_function(fat).stable_value == 3 + 1 + 6);
  Ideal rad = zero_dim_radical(fat);
  CHECK(rad == intersection(intersection(p1, p2), p3));
  CHECK(hilbert_function(rad).stable_value == 3);
  CHECK(zero_dim_radical(rad) == rad);
  CHECK(rad.contains(fat));
  CHECK(zero_dim_radical(ideal(r, {"x^2", "y^2", "z^2"})) == Ideal::maximal_homogeneous(r));
  CHECK_THROWS_AS(zero_dim_radical(ideal(r, {"x*y"})), MathError);
}

TEST_CASE("linear forms and local structure") {
  auto r2 = make_ring({"x", "y"});
  CHECK(linear_forms_in(ideal(r2, {"y - x^2", "x^3"})).empty());
  CHECK(linear_forms_in(ideal(r2, {"y - x^2", "x^2"})).size() == 1);
  CHECK(affine_colength(ideal(r2, {"y - x^2", "x^3"})) == std::size_t(3));
  CHECK(affine_colength(ideal(r2, {"y"})) == std::nullopt);

  auto uvw = make_ring({"u", "v", "w"});
  std::vector<Rational> p{Rational(1), Rational(0), Rational(0)};
  Ideal conic = ideal(uvw, {"w^2", "v*w", "v^2 - u*w"});
  CHECK(hilbert_function(conic).stable_value == 3);
  CHECK(is_curvilinear_at(conic, p));
  Ideal five = ideal(uvw, {"w^2", "v^2*w", "v^3 - u*v*w"});
  CHECK(hilbert_function(five).stable_value == 5);
  CHECK(embedding_dimension_at(five, p) == 2);
  CHECK_THROWS_AS(embedding_dimension_at(five, {Rational(0), Rational(1), Rational(0)}), InputError);
}
