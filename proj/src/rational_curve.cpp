#include "curvesing/rational_curve.hpp"

#include "curvesing/parse.hpp"

namespace curvesing {

RingPtr projective_space_ring(unsigned n) {
  std::vector<std::string> names;
  for (unsigned i = 0; i <= n; ++i) {
    names.push_back(n <= 19 ? std::string(1, char('a' + i)) : "z" + std::to_string(i));
  }
  return make_ring(std::move(names));
}

Ideal rnc_ideal(const RingPtr& ring) {
  if (ring->size() < 3) throw InputError("a rational normal curve needs n >= 2");
  std::size_t n = ring->size() - 1;
  std::vector<QPoly> gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      gens.push_back(QPoly::variable(ring, i) * QPoly::variable(ring, j + 1) -
                     QPoly::variable(ring, i + 1) * QPoly::variable(ring, j));
    }
  }
  return Ideal(ring, std::move(gens));
}

Ideal rnc_ideal(unsigned n) {
  if (n < 2) throw InputError("a rational normal curve needs n >= 2");
  return rnc_ideal(projective_space_ring(n));
}

namespace {

Rational falling(unsigned k, unsigned d) {
  Rational r(1);
  for (unsigned i = 0; i < d; ++i) r *= Rational(int(k - i));
  return r;
}

std::vector<QPoly> forms_from_kernel(const RingPtr& ring, const DenseMatrix<Rational>& m) {
  std::vector<QPoly> out;
  for (const auto& v : kernel(m)) {
    std::vector<QPoly::Term> terms;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) terms.push_back({Monomial::variable(i), v[i]});
    }
    out.push_back(QPoly(ring, std::move(terms)));
  }
  return out;
}

DenseMatrix<Rational> linear_coefficients(const std::vector<QPoly>& forms, std::size_t nvars) {
  DenseMatrix<Rational> m(forms.size(), nvars);
  for (std::size_t r = 0; r < forms.size(); ++r) {
    for (const auto& t : forms[r].terms()) {
      for (std::size_t i = 0; i < nvars; ++i) {
        if (t.mono.exp[i]) m.at(r, i) = t.coeff;
      }
    }
  }
  return m;
}

}  // namespace

Ideal osculating_space_ideal(const RingPtr& ring, const std::array<Rational, 2>& q, unsigned r) {
  unsigned n = unsigned(ring->size()) - 1;
  if (n < 2) throw InputError("a rational normal curve needs n >= 2");
  if (r > n - 1) throw InputError("osculating order must lie in 0 .. n-1");
  if (q[0].is_zero() && q[1].is_zero()) throw InputError("(0:0) is not a point of P^1");
  DenseMatrix<Rational> m(r + 1, n + 1);
  for (unsigned d = 0; d <= r; ++d) {
    for (unsigned k = 0; k <= n; ++k) {
      // derivatives of (1, tau, ..., tau^n) at tau = t0/s0, or of
      // (sigma^n, ..., 1) at sigma = s0/t0 = 0
      if (!q[0].is_zero()) {
        Rational tau = q[1] / q[0];
        m.at(d, k) = k >= d ? falling(k, d) * pow(tau, int(k - d)) : Rational(0);
      } else {
        unsigned e = n - k;
        m.at(d, k) = e == d ? falling(e, d) : Rational(0);
      }
    }
  }
  return Ideal(ring, forms_from_kernel(ring, m)).reduced();
}

LinearCenter LinearCenter::parse(const std::string& text, const RingPtr& ring) {
  LinearCenter c{parse_poly_list(text, ring)};
  validate_center(c);
  return c;
}

void validate_center(const LinearCenter& c) {
  if (c.forms.empty()) throw InputError("a center needs at least one linear form");
  for (const auto& f : c.forms) {
    if (f.is_zero() || !f.is_homogeneous() || f.total_degree() != 1) {
      throw InputError("center form is not a non-zero linear form: " + f.str());
    }
    require_same_ring(c.forms.front().ring(), f.ring());
  }
  if (rank(linear_coefficients(c.forms, c.ring()->size())) != c.forms.size()) {
    throw InputError("center forms are linearly dependent");
  }
}

Ideal project_scheme(const Ideal& scheme, const LinearCenter& center, const std::vector<std::string>& targets) {
  validate_center(center);
  require_same_ring(scheme.ring(), center.ring());
  if (targets.size() != center.forms.size()) throw InputError("need one target variable per center form");
  const RingPtr& ambient = scheme.ring();
  for (const auto& t : targets) {
    if (ambient->has(t)) throw InputError("target variable " + t + " clashes with the ambient ring");
  }
  RingPtr big = extend_ring(ambient, targets);
  std::vector<QPoly> gens;
  for (const auto& g : scheme.generators()) gens.push_back(g.in_ring(big));
  for (std::size_t i = 0; i < targets.size(); ++i) {
    gens.push_back(QPoly::variable(big, ambient->size() + i) - center.forms[i].in_ring(big));
  }
  std::vector<QPoly> amb;
  for (std::size_t i = 0; i < ambient->size(); ++i) amb.push_back(QPoly::variable(big, i));
  Ideal saturated = saturate(Ideal(big, gens), Ideal(big, amb));
  Ideal image = eliminate(saturated, ambient->variables());
  RingPtr target = make_ring(targets);
  Ideal out = restrict_to(image, target).reduced();
  if (out.is_unit()) throw MathError("the center meets the scheme; projection undefined");
  return out;
}

namespace {

const RingPtr& st_ring() {
  static const RingPtr r = make_ring({"s", "t"});
  return r;
}

}  // namespace

const RingPtr& plane_curve_ring() {
  static const RingPtr r = make_ring({"x", "y", "z"});
  return r;
}

PlaneParameterization PlaneParameterization::from_forms(std::array<QPoly, 3> forms) {
  const RingPtr& st = forms[0].ring();
  if (st->size() != 2) throw InputError("parameterization forms must be binary forms in two variables");
  int n = -1;
  for (const auto& f : forms) {
    require_same_ring(st, f.ring());
    if (!f.is_homogeneous()) throw InputError("parameterization form is not homogeneous: " + f.str());
    if (f.is_zero()) continue;
    if (n >= 0 && f.total_degree() != n) throw InputError("parameterization forms have different degrees");
    n = f.total_degree();
  }
  if (n < 1) throw InputError("parameterization needs forms of positive degree");
  for (const auto& f : forms) {
    if (f.is_zero()) throw InputError("a zero coordinate maps the curve into a line");
  }
  QPoly g = poly_gcd(poly_gcd(forms[0], forms[1]), forms[2]);
  if (!g.is_constant()) throw InputError("parameterization forms share the factor " + g.str());
  PlaneParameterization p;
  p.ring = st;
  p.f = std::move(forms);
  return p;
}

PlaneParameterization PlaneParameterization::parse(const std::string& text) {
  auto forms = parse_poly_list(text, st_ring());
  if (forms.size() != 3) throw InputError("a plane parameterization needs exactly three forms");
  return from_forms({forms[0], forms[1], forms[2]});
}

Rational PlaneParameterization::coefficient(std::size_t j, unsigned k) const {
  Monomial m;
  m.exp[0] = std::uint16_t(degree() - k);
  m.exp[1] = std::uint16_t(k);
  return f.at(j).coefficient(m);
}

std::array<Rational, 3> PlaneParameterization::evaluate(const Rational& s, const Rational& t) const {
  std::array<Rational, 2> at{s, t};
  return {f[0].evaluate(at), f[1].evaluate(at), f[2].evaluate(at)};
}

std::array<QuadExt, 3> PlaneParameterization::evaluate(const QuadExt& s, const QuadExt& t) const {
  std::array<QuadExt, 2> at{s, t};
  std::array<QuadExt, 3> out;
  for (std::size_t j = 0; j < 3; ++j) out[j] = f[j].convert<QuadExt>().evaluate(at);
  return out;
}

std::string PlaneParameterization::str() const { return f[0].str() + "; " + f[1].str() + "; " + f[2].str(); }

PlaneParameterization parameterization_from_center(unsigned n, const LinearCenter& center) {
  validate_center(center);
  if (center.forms.size() != 3) throw InputError("a plane projection needs exactly three center forms");
  if (center.ring()->size() != n + 1) throw InputError("center ring does not match P^n");
  const RingPtr& st = st_ring();
  std::vector<QPoly> moment;
  for (unsigned k = 0; k <= n; ++k) {
    Monomial m;
    m.exp[0] = std::uint16_t(n - k);
    m.exp[1] = std::uint16_t(k);
    moment.push_back(QPoly(st, {{m, Rational(1)}}));
  }
  std::array<QPoly, 3> forms{compose(center.forms[0], moment), compose(center.forms[1], moment),
                             compose(center.forms[2], moment)};
  for (const auto& f : forms) {
    if (f.is_zero()) throw MathError("the center contains the whole curve in a hyperplane image");
  }
  QPoly g = poly_gcd(poly_gcd(forms[0], forms[1]), forms[2]);
  if (!g.is_constant()) throw MathError("the center meets the curve");
  return PlaneParameterization::from_forms(std::move(forms));
}

Implicitization implicitize(const PlaneParameterization& p) {
  const RingPtr& xyz = plane_curve_ring();
  RingPtr big = make_ring({"x", "y", "z", "t"});
  unsigned n = p.degree();
  std::array<QPoly, 3> g;
  for (std::size_t j = 0; j < 3; ++j) {
    g[j] = compose(p.f[j], {QPoly::constant(big, Rational(1)), QPoly::variable(big, 3)});
  }
  const std::array<std::array<std::size_t, 3>, 3> orders{{{0, 1, 2}, {1, 0, 2}, {2, 0, 1}}};
  for (const auto& o : orders) {
    QPoly X0 = QPoly::variable(big, o[0]), X1 = QPoly::variable(big, o[1]), X2 = QPoly::variable(big, o[2]);
    QPoly a = X1 * g[o[0]] - X0 * g[o[1]];
    QPoly b = X2 * g[o[0]] - X0 * g[o[2]];
    QPoly res = resultant(a, b, 3, n, n);
    if (res.is_zero()) continue;
    unsigned k = ~0u;
    for (const auto& t : res.terms()) k = std::min<unsigned>(k, t.mono.exp[o[0]]);
    std::vector<QPoly::Term> stripped;
    for (auto t : res.terms()) {
      t.mono.exp[o[0]] = std::uint16_t(t.mono.exp[o[0]] - k);
      stripped.push_back(std::move(t));
    }
    QPoly F = primitive(squarefree_part(QPoly(big, std::move(stripped)))).in_ring(xyz);
    if (F.is_constant()) continue;
    std::vector<QPoly> images{p.f[0], p.f[1], p.f[2]};
    if (!compose(F, images).is_zero()) continue;
    unsigned d = unsigned(F.total_degree());
    if (n % d != 0) throw MathError("implicit degree does not divide the parameter degree");
    return {F, n / d};
  }
  throw MathError("parameterization not birational onto a curve of that presentation");
}

Properness properness_check(const PlaneParameterization& p) {
  Implicitization imp = implicitize(p);
  return {imp.map_degree == 1, imp.map_degree};
}

ConeFiber cone_fiber_test(const RingPtr& ambient, const LinearCenter& center, const std::array<Rational, 3>& vertex) {
  validate_center(center);
  require_same_ring(ambient, center.ring());
  if (center.forms.size() != 3) throw InputError("a plane projection needs exactly three center forms");
  std::size_t k = 3;
  for (std::size_t i = 3; i-- > 0;) {
    if (!vertex[i].is_zero()) {
      k = i;
      break;
    }
  }
  if (k == 3) throw InputError("[0,0,0] is not a point");
  std::vector<QPoly> cone;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == k) continue;
    cone.push_back(center.forms[i].scaled(vertex[k]) - center.forms[k].scaled(vertex[i]));
  }
  Ideal I = sum(rnc_ideal(ambient), Ideal(ambient, cone));
  ConeFiber out{saturate(I, Ideal::maximal_homogeneous(ambient)).reduced(), 0, std::nullopt};
  HilbertData h = hilbert_function(out.fiber);
  if (!h.stable_value) throw MathError("the cone meets the curve in a positive-dimensional set");
  out.length = *h.stable_value;
  if (out.length == 1) {
    auto forms = linear_forms_in(out.fiber);
    DenseMatrix<Rational> m = linear_coefficients(forms, ambient->size());
    auto ker = kernel(m);
    if (ker.size() == 1) {
      Rational scale;
      for (std::size_t i = ker[0].size(); i-- > 0;) {
        if (!ker[0][i].is_zero()) {
          scale = ker[0][i].inverse();
          break;
        }
      }
      for (auto& c : ker[0]) c *= scale;
      out.point = ker[0];
    }
  }
  return out;
}

}  // namespace curvesing
