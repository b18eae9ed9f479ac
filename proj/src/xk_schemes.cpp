#include "curvesing/xk_schemes.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <random>

namespace curvesing {

RingPtr xk_ring(unsigned k) {
  if (k == 2) return make_ring({"x", "y", "z"});
  std::vector<std::string> names;
  for (unsigned j = 0; j <= k; ++j) names.push_back("x" + std::to_string(j));
  return make_ring(std::move(names));
}

MkMatrix build_Mk(const PlaneParameterization& p, unsigned k) {
  unsigned n = p.degree();
  if (k < 2 || k + 1 > n) {
    throw InputError("k must satisfy 2 <= k <= n-1 (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  RingPtr ring = xk_ring(k);
  unsigned bands = n - k + 1;
  PolyMatrix<Rational> m(ring, bands + 3, n + 1);
  for (unsigned i = 0; i < bands; ++i) {
    for (unsigned j = 0; j <= k; ++j) m.set(i, i + j, QPoly::variable(ring, j));
  }
  for (unsigned j = 0; j < 3; ++j) {
    for (unsigned c = 0; c <= n; ++c) m.set(bands + j, c, QPoly::constant(ring, p.coefficient(j, c)));
  }
  return MkMatrix{k, n, std::move(m)};
}

Ideal xk_ideal(const PlaneParameterization& p, unsigned k) {
  MkMatrix mk = build_Mk(p, k);
  return Ideal(mk.matrix.ring(), minors(mk.matrix, mk.n - k + 3));
}

bool xk_is_empty(const PlaneParameterization& p, unsigned k) {
  HilbertData h = hilbert_function(xk_ideal(p, k));
  return h.stable_value && *h.stable_value == 0;
}

namespace {

// Dense univariate polynomials over Q, coefficient of t^i at index i.
using UPoly = std::vector<Rational>;

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int udeg(const UPoly& a) { return int(a.size()) - 1; }

// a = q*b + r.
void udivmod(UPoly a, const UPoly& b, UPoly& q, UPoly& r) {
  trim(a);
  if (b.empty()) throw DivisionByZero();
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  Rational lead_inv = b.back().inverse();
  while (udeg(a) >= udeg(b)) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

UPoly umod(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  udivmod(a, b, q, r);
  return r;
}

UPoly umonic(UPoly a) {
  trim(a);
  if (a.empty()) return a;
  Rational inv = a.back().inverse();
  for (auto& c : a) c *= inv;
  return a;
}

UPoly ugcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(a);
}

template <class K>
K ueval(const UPoly& a, const K& x) {
  K v(0);
  for (std::size_t i = a.size(); i-- > 0;) v = v * x + K(a[i]);
  return v;
}

UPoly to_upoly(const QPoly& p, std::size_t var) {
  UPoly a(std::size_t(std::max(p.total_degree(), 0)) + 1, Rational(0));
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < p.ring()->size(); ++i) {
      if (i != var && t.mono.exp[i] != 0) throw MathError("expected a univariate polynomial");
    }
    a[t.mono.exp[var]] += t.coeff;
  }
  trim(a);
  return a;
}

QPoly from_upoly(const UPoly& a, const RingPtr& ring, std::size_t var) {
  std::vector<QPoly::Term> terms;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) terms.push_back({Monomial::variable(var, unsigned(i)), a[i]});
  }
  return QPoly(ring, std::move(terms));
}

// sum a_i Y1^i Y2^(e-i) in the three-variable ring.
QPoly homogenize(const UPoly& a, const RingPtr& ring, unsigned e) {
  std::vector<QPoly::Term> terms;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    Monomial m = Monomial::variable(1, unsigned(i));
    m.exp[2] = static_cast<std::uint16_t>(e - i);
    terms.push_back({m, a[i]});
  }
  return QPoly(ring, std::move(terms));
}

std::vector<std::complex<double>> numeric_roots(const UPoly& a) {
  int d = udeg(a);
  if (d < 1) return {};
  std::vector<double> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] / a.back()).get().get_d();
  if (d == 1) return {std::complex<double>(-c[0], 0.0)};
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -c[i];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < d; ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}

// Convergents of the continued fraction of x.
std::vector<Rational> convergents(double x) {
  std::vector<Rational> out;
  if (!std::isfinite(x) || std::abs(x) > 1e15) return out;
  mpz_class h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  double r = x;
  for (int it = 0; it < 40; ++it) {
    double fl = std::floor(r);
    mpz_class a(fl);
    mpz_class h = a * h0 + h1, k = a * k0 + k1;
    out.emplace_back(h, k);
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    double frac = r - fl;
    if (frac < 1e-13 || k0 > mpz_class("1000000000000")) break;
    r = 1.0 / frac;
  }
  return out;
}

std::optional<Rational> exact_root_near(const UPoly& g, double x) {
  for (const auto& c : convergents(x)) {
    if (ueval(g, c).is_zero()) return c;
  }
  return std::nullopt;
}

// Splits a square-free g into rational roots, quadratic factors and a rest.
struct Splitting {
  std::vector<Rational> roots;
  std::vector<UPoly> quadratics;
  UPoly rest;
};

Splitting split_factors(const UPoly& g) {
  Splitting out;
  out.rest = umonic(g);
  if (udeg(out.rest) < 1) {
    out.rest.clear();
    return out;
  }
  auto roots = numeric_roots(out.rest);
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (std::abs(roots[i].imag()) > 1e-6 * std::max(1.0, std::abs(roots[i]))) continue;
    auto r = exact_root_near(out.rest, roots[i].real());
    if (!r) continue;
    if (std::find(out.roots.begin(), out.roots.end(), *r) != out.roots.end()) continue;
    out.roots.push_back(*r);
    used[i] = true;
    UPoly q, rem;
    udivmod(out.rest, UPoly{-*r, Rational(1)}, q, rem);
    out.rest = q;
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size() && !used[i]; ++j) {
      if (used[j] || udeg(out.rest) < 2) continue;
      std::complex<double> s = roots[i] + roots[j], pr = roots[i] * roots[j];
      if (std::abs(s.imag()) > 1e-6 * std::max(1.0, std::abs(s))) continue;
      if (std::abs(pr.imag()) > 1e-6 * std::max(1.0, std::abs(pr))) continue;
      bool found = false;
      for (const auto& sc : convergents(s.real())) {
        for (const auto& pc : convergents(pr.real())) {
          UPoly quad{pc, -sc, Rational(1)};
          UPoly q, rem;
          udivmod(out.rest, quad, q, rem);
          if (!rem.empty()) continue;
          out.quadratics.push_back(quad);
          out.rest = q;
          used[i] = used[j] = true;
          found = true;
          break;
        }
        if (found) break;
      }
    }
  }
  if (udeg(out.rest) < 1) out.rest.clear();
  return out;
}

struct ShapeChart {
  DenseMatrix<Rational> N, Ninv;
  UPoly g, h;
};

DenseMatrix<Rational> chart_matrix(const std::array<Rational, 3>& sigma, const std::array<Rational, 3>& ell) {
  for (std::size_t r = 0; r < 3; ++r) {
    DenseMatrix<Rational> m(3, 3);
    m.at(0, r) = Rational(1);
    for (std::size_t c = 0; c < 3; ++c) {
      m.at(1, c) = sigma[c];
      m.at(2, c) = ell[c];
    }
    if (!determinant(m).is_zero()) return m;
  }
  return {};
}

QPoly linear_form(const RingPtr& ring, const std::array<Rational, 3>& c) {
  QPoly f(ring);
  for (std::size_t i = 0; i < 3; ++i) f += QPoly::constant(ring, c[i]) * QPoly::variable(ring, i);
  return f;
}

// Coordinates y = N x with y2 = ell nowhere zero on the support and y1 = sigma
// separating it, so the affine radical is {y0 - h(y1), g(y1)}.
ShapeChart find_shape_chart(const Ideal& radical, long long npts) {
  const RingPtr& ring = radical.ring();
  std::mt19937 rng(4099u);
  std::uniform_int_distribution<int> dist(-7, 7);
  std::vector<std::array<Rational, 3>> fixed = {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {1, 0, 1}, {0, 1, 1}};
  auto candidate = [&](std::size_t i) -> std::array<Rational, 3> {
    if (i < fixed.size()) return fixed[i];
    return {dist(rng), dist(rng), dist(rng)};
  };
  RingPtr aff = make_ring({"Y0", "Y1"});
  QPoly Y0 = QPoly::variable(aff, 0), Y1 = QPoly::variable(aff, 1), one = QPoly::constant(aff, Rational(1));
  std::size_t ell_tries = 0;
  for (std::size_t li = 0; ell_tries < 12 && li < 40; ++li) {
    auto ell = candidate(li);
    if (ell[0].is_zero() && ell[1].is_zero() && ell[2].is_zero()) continue;
    HilbertData hd = hilbert_function(sum(radical, Ideal(ring, {linear_form(ring, ell)})));
    if (!hd.stable_value || *hd.stable_value != 0) continue;
    ++ell_tries;
    for (std::size_t si = 0; si < 30; ++si) {
      auto sigma = candidate(si == 0 ? 1 : si + 1);
      DenseMatrix<Rational> N = chart_matrix(sigma, ell);
      if (N.rows() == 0) continue;
      DenseMatrix<Rational> Ninv = inverse(N);
      std::vector<QPoly> gens;
      for (const auto& q : radical.generators()) gens.push_back(compose(linear_change(q, Ninv), {Y0, Y1, one}));
      Ideal affine(aff, gens);
      const GroebnerBasis& gb = affine.groebner(TermOrder::lex(2));
      if (gb.size() != 2) continue;
      const QPoly& elim = gb.polynomials()[0];
      if (elim.involves(0) || elim.total_degree() != int(npts)) continue;
      QPoly rest = gb.polynomials()[1] - Y0;
      if (rest.involves(0)) continue;
      return ShapeChart{N, Ninv, to_upoly(elim, 1), to_upoly(-rest, 1)};
    }
  }
  throw MathError("no separating coordinates found for the support of X_2");
}

std::array<QuadExt, 3> normalized_point(std::array<QuadExt, 3> p) {
  for (std::size_t i = 3; i-- > 0;) {
    if (!p[i].is_zero()) {
      QuadExt inv = p[i].inverse();
      for (auto& c : p) c *= inv;
      return p;
    }
  }
  throw MathError("zero vector is not a projective point");
}

std::array<QuadExt, 3> point_from_root(const ShapeChart& ch, const QuadExt& tau) {
  std::array<QuadExt, 3> y{ueval(ch.h, tau), tau, QuadExt(1)};
  std::array<QuadExt, 3> x{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) x[i] += QuadExt(ch.Ninv.at(i, j)) * y[j];
  }
  return normalized_point(x);
}

// Fiber of the parameterization over the point of X_2 given by the quadric
// x s^2 + y s t + z t^2, and the common image point.
void attach_image(const PlaneParameterization& p, CensusPoint& cp) {
  const auto& c = *cp.coords;
  if (!c[0].is_rational() || !c[1].is_rational() || !c[2].is_rational()) return;
  Rational x = c[0].a(), y = c[1].a(), z = c[2].a();
  std::vector<std::array<QuadExt, 2>> roots;
  if (!x.is_zero()) {
    Rational disc = y * y - Rational(4) * x * z;
    QuadExt sq = QuadExt::sqrt(disc);
    QuadExt two_x(Rational(2) * x);
    roots.push_back({(QuadExt(-y) - sq) / two_x, QuadExt(1)});
    if (!disc.is_zero()) roots.push_back({(QuadExt(-y) + sq) / two_x, QuadExt(1)});
  } else {
    roots.push_back({QuadExt(1), QuadExt(0)});
    if (!y.is_zero()) roots.push_back({QuadExt(-z / y), QuadExt(1)});
  }
  std::optional<std::array<QuadExt, 3>> image;
  for (const auto& r : roots) {
    auto v = normalized_point(p.evaluate(r[0], r[1]));
    if (image && !(*image == v)) throw MathError("fiber of X_2 point does not map to a single point");
    image = v;
  }
  cp.fiber = roots;
  if (!(*image)[0].is_rational() || !(*image)[1].is_rational() || !(*image)[2].is_rational()) return;
  cp.image = ProjectivePoint{{(*image)[0].a(), (*image)[1].a(), (*image)[2].a()}};
}

long long binomial2(unsigned m) { return (long long)m * (m - 1) / 2; }

}  // namespace

std::vector<Rational> rational_roots(const QPoly& g) {
  auto var = univariate_variable(g);
  if (!var) return {};
  UPoly u = to_upoly(g, *var);
  UPoly du;
  for (std::size_t i = 1; i < u.size(); ++i) du.push_back(u[i] * Rational(int(i)));
  UPoly sqf, rem;
  udivmod(u, ugcd(u, du), sqf, rem);
  auto roots = split_factors(sqf).roots;
  std::sort(roots.begin(), roots.end());
  return roots;
}

SingularityCensus x2_census(const PlaneParameterization& p, const CensusOptions& options) {
  unsigned n = p.degree();
  if (n < 3) throw InputError("the census needs a parameterization of degree at least 3");
  if (!properness_check(p).proper) throw InputError("parameterization is not proper");
  SingularityCensus census;
  census.n = n;
  census.expected_length = binomial2(n - 1);

  Ideal ix2 = xk_ideal(p, 2);
  HilbertData hd = hilbert_function(ix2);
  if (!hd.stable_value) throw MathError("X_2 is not zero-dimensional");
  census.x2_length = *hd.stable_value;
  if (census.x2_length != census.expected_length) {
    throw MathError("length of X_2 is " + std::to_string(census.x2_length) + ", expected " +
                    std::to_string(census.expected_length));
  }
  if (n >= 4) {
    census.x3_empty = xk_is_empty(p, 3);
    if (!census.x3_empty && options.require_double_points) {
      throw MathError("the curve has a point of multiplicity >= 3");
    }
  }
  if (census.x2_length == 0) return census;

  const RingPtr& ring = ix2.ring();
  Ideal radical = zero_dim_radical(ix2);
  census.support_size = *hilbert_function(radical).stable_value;
  ShapeChart ch = find_shape_chart(radical, census.support_size);

  // Cusp points: those on y^2 - 4xz.
  RingPtr aff = make_ring({"Y0", "Y1"});
  QPoly x = QPoly::variable(ring, 0), y = QPoly::variable(ring, 1), z = QPoly::variable(ring, 2);
  QPoly conic = y * y - QPoly::constant(ring, Rational(4)) * x * z;
  QPoly conic_aff = compose(linear_change(conic, ch.Ninv),
                            {from_upoly(ch.h, aff, 1), QPoly::variable(aff, 1), QPoly::constant(aff, Rational(1))});
  UPoly on_conic = umod(to_upoly(conic_aff, 1), ch.g);
  UPoly cusp_part = on_conic.empty() ? umonic(ch.g) : ugcd(ch.g, on_conic);
  UPoly node_part, rem;
  udivmod(umonic(ch.g), cusp_part, node_part, rem);

  QPoly sigma = QPoly(ring);
  QPoly ell = QPoly(ring);
  for (std::size_t j = 0; j < 3; ++j) {
    sigma += QPoly::constant(ring, ch.N.at(1, j)) * QPoly::variable(ring, j);
    ell += QPoly::constant(ring, ch.N.at(2, j)) * QPoly::variable(ring, j);
  }

  // Length of X_2 along the points r(sigma/ell) = 0.
  auto length_along = [&](const UPoly& r) {
    UPoly hr = umod(ch.h, r);
    unsigned e = hr.empty() ? 0 : unsigned(udeg(hr));
    QPoly first = homogenize(r, ring, unsigned(udeg(r)));
    Monomial m0 = Monomial::variable(0);
    m0.exp[2] = static_cast<std::uint16_t>(e);
    QPoly second = QPoly::monomial(ring, m0, Rational(1)) - homogenize(hr, ring, e + 1);
    Ideal J(ring, {linear_change(first, ch.N), linear_change(second, ch.N)});
    HilbertData away = hilbert_function(saturate(ix2, J));
    return census.x2_length - *away.stable_value;
  };

  long long accounted = 0;
  for (int part = 0; part < 2; ++part) {
    const UPoly& factor = part == 0 ? node_part : cusp_part;
    if (udeg(factor) < 1) continue;
    bool cusp = part == 1;
    Splitting sp = split_factors(factor);
    for (const auto& tau : sp.roots) {
      CensusPoint cp;
      cp.coords = point_from_root(ch, QuadExt(tau));
      cp.sigma = sigma;
      cp.ell = ell;
      cp.cusp = cusp;
      cp.length = cp.delta = length_along(UPoly{-tau, Rational(1)});
      accounted += cp.length;
      attach_image(p, cp);
      census.points.push_back(std::move(cp));
    }
    for (const auto& quad : sp.quadratics) {
      long long len = length_along(quad);
      accounted += len;
      Rational disc = quad[1] * quad[1] - Rational(4) * quad[0];
      QuadExt sq = QuadExt::sqrt(disc);
      for (int sign : {-1, 1}) {
        CensusPoint cp;
        QuadExt tau = (QuadExt(-quad[1]) + QuadExt(Rational(sign)) * sq) / QuadExt(Rational(2));
        cp.coords = point_from_root(ch, tau);
        cp.sigma = sigma;
        cp.ell = ell;
        cp.cusp = cusp;
        cp.length = len / 2;
        cp.delta = len / 2;
        census.points.push_back(std::move(cp));
      }
    }
    if (!sp.rest.empty()) {
      CensusPoint cp;
      RingPtr tr = make_ring({"T"});
      cp.cluster_eliminant = from_upoly(sp.rest, tr, 0);
      cp.sigma = sigma;
      cp.ell = ell;
      cp.cusp = cusp;
      cp.points = unsigned(udeg(sp.rest));
      cp.length = length_along(sp.rest);
      if (cp.length == (long long)cp.points) cp.delta = 1;
      accounted += cp.length;
      census.points.push_back(std::move(cp));
    }
  }
  if (accounted != census.x2_length) {
    throw MathError("local lengths of X_2 sum to " + std::to_string(accounted) + ", not " +
                    std::to_string(census.x2_length));
  }
  return census;
}

SingularityCensus classify_all_singularities(const PlaneParameterization& p) {
  CensusOptions opts;
  opts.require_double_points = false;
  SingularityCensus census = x2_census(p, opts);
  Implicitization imp = implicitize(p);
  census.implicit_equation = imp.equation;
  ClassifyOptions copts;
  copts.assume_reduced = true;
  for (auto& cp : census.points) {
    if (cp.image) {
      Verdict v = classify_double_point(imp.equation, *cp.image, copts);
      cp.label_source = "classifier";
      if (v.kind == VerdictKind::DoublePoint) {
        cp.s = v.s;
        if (cp.delta != (long long)(v.s + 1) / 2) census.delta_consistent = false;
        if (cp.cusp != (v.s % 2 == 0)) census.delta_consistent = false;
      } else {
        cp.unclassified = true;
        if (v.kind == VerdictKind::Smooth) census.delta_consistent = false;
      }
    } else if (cp.delta == 1) {
      cp.s = cp.cusp ? 2u : 1u;
      cp.label_source = "census";
    } else {
      cp.unclassified = true;
      cp.label_source = "none";
    }
  }
  return census;
}

}  // namespace curvesing
