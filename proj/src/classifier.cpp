#include "curvesing/classifier.hpp"

#include <random>

namespace curvesing {

namespace {

const RingPtr& plane_ring() {
  static const RingPtr ring = make_ring({"x", "y"});
  return ring;
}

const RingPtr& probe_ring() {
  static const RingPtr ring = make_ring({"x", "l"});
  return ring;
}

QPoly dehomogenize_last(const QPoly& F) {
  const RingPtr& r2 = plane_ring();
  return compose(F, {QPoly::variable(r2, 0), QPoly::variable(r2, 1), QPoly::constant(r2, Rational(1))});
}

DenseMatrix<QuadExt> to_quad(const DenseMatrix<Rational>& m) {
  DenseMatrix<QuadExt> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = QuadExt(m.at(i, j));
  }
  return out;
}

void require_plane_curve(const QPoly& F) {
  if (F.ring()->size() != 3) throw InputError("a plane curve needs exactly three homogeneous coordinates");
  if (F.is_zero()) throw InputError("the zero polynomial does not define a curve");
  if (!F.is_homogeneous()) throw InputError("curve equation is not homogeneous: " + F.str());
  if (F.is_constant()) throw InputError("constant polynomial does not define a curve");
}

// Homogeneous equation of y = c1 x + ... + ct x^t in coordinates (x0, x1, x2)
// with x = x0/x2, y = x1/x2.
EPoly homogeneous_graph(const GraphCurve<QuadExt>& g, const RingPtr& ring) {
  unsigned t = std::max<unsigned>(1, unsigned(g.coeffs.size()));
  std::vector<EPoly::Term> terms;
  Monomial lead;
  lead.exp[1] = 1;
  lead.exp[2] = std::uint16_t(t - 1);
  terms.push_back({lead, QuadExt(1)});
  for (std::size_t i = 0; i < g.coeffs.size(); ++i) {
    if (g.coeffs[i].is_zero()) continue;
    Monomial m;
    m.exp[0] = std::uint16_t(i + 1);
    m.exp[2] = std::uint16_t(t - i - 1);
    terms.push_back({m, -g.coeffs[i]});
  }
  return EPoly(ring, std::move(terms));
}

}  // namespace

ProjectivePoint ProjectivePoint::parse(std::string_view text) {
  ProjectivePoint p;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    std::size_t comma = text.find(',', start);
    if ((i < 2) != (comma != std::string_view::npos)) throw ParseError("a point needs three coordinates", start);
    std::string_view piece = text.substr(start, i < 2 ? comma - start : text.npos);
    try {
      p.coords[i] = Rational::parse(piece);
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), start + e.position());
    }
    start = comma + 1;
  }
  if (p.coords[0].is_zero() && p.coords[1].is_zero() && p.coords[2].is_zero()) {
    throw InputError("[0,0,0] is not a projective point");
  }
  return p;
}

ProjectivePoint ProjectivePoint::normalized() const {
  ProjectivePoint q = *this;
  for (std::size_t i = 3; i-- > 0;) {
    if (!coords[i].is_zero()) {
      Rational s = coords[i].inverse();
      for (auto& c : q.coords) c *= s;
      break;
    }
  }
  return q;
}

std::string ProjectivePoint::str() const {
  return "[" + coords[0].str() + ":" + coords[1].str() + ":" + coords[2].str() + "]";
}

bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
  return a.normalized().coords == b.normalized().coords;
}

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::A: return "a";
    case Branch::B1: return "b1";
    case Branch::B2: return "b2";
  }
  return "?";
}

std::string kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Smooth: return "smooth";
    case VerdictKind::MultiplicityAtLeast3: return "multiplicity>=3";
    case VerdictKind::DoublePoint: return "double_point";
  }
  return "?";
}

NormalizedCurve normalize_at_point(const QPoly& F, const ProjectivePoint& p) {
  require_plane_curve(F);
  if (!F.evaluate(p.coords).is_zero()) throw InputError("point " + p.str() + " is not on the curve");

  std::size_t pivot = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!p.coords[i].is_zero()) pivot = i;
  }
  DenseMatrix<Rational> t0(3, 3);
  std::size_t col = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == pivot) continue;
    t0.at(i, col++) = Rational(1);
  }
  for (std::size_t i = 0; i < 3; ++i) t0.at(i, 2) = p.coords[i];

  NormalizedCurve n;
  n.original = F;
  n.transform = t0;
  n.affine = dehomogenize_last(linear_change(F, t0));

  const RingPtr& r2 = plane_ring();
  QPoly quad = n.affine.homogeneous_part(2);
  bool linear_vanishes = n.affine.homogeneous_part(1).is_zero();
  if (linear_vanishes && !quad.is_zero()) {
    Monomial x2, xy, y2;
    x2.exp[0] = 2;
    xy.exp[0] = xy.exp[1] = 1;
    y2.exp[1] = 2;
    if (quad.coefficient(y2).is_zero()) {
      DenseMatrix<Rational> s(3, 3);
      if (!quad.coefficient(x2).is_zero()) {
        s = DenseMatrix<Rational>{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
        n.step1_change = "swap";
      } else {
        // x -> x + y turns a11*x*y into a11*x*y + a11*y^2
        s = DenseMatrix<Rational>{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
        n.step1_change = "shear";
      }
      n.transform = t0 * s;
      n.affine = dehomogenize_last(linear_change(F, n.transform));
    }
    n.a02_fixed = !n.affine.coefficient(y2).is_zero();
  }
  (void)r2;
  return n;
}

unsigned multiplicity_at_origin(const QPoly& f) {
  if (f.is_zero()) throw MathError("the zero polynomial has no multiplicity (non-reduced input)");
  if (!f.constant_term().is_zero()) throw InputError("curve does not pass through the origin");
  return unsigned(f.low_degree());
}

bool is_reduced(const QPoly& F) {
  if (F.is_zero()) return false;
  if (F.is_constant()) return true;
  const std::size_t nv = F.ring()->size();
  std::vector<QPoly> partials;
  for (std::size_t j = 0; j < nv; ++j) partials.push_back(F.derivative(j));

  // Restricting to a line L keeps any repeated factor G of F as a common
  // factor of F|L and its partials unless L lies inside G = 0, in which case
  // F|L vanishes. A constant gcd on a line where F|L != 0 certifies F reduced.
  if (F.is_homogeneous()) {
    static const RingPtr st = make_ring({"s", "t"});
    std::mt19937 rng(20240601u);
    for (int attempt = 0; attempt < 3; ++attempt) {
      std::vector<QPoly> images;
      for (std::size_t j = 0; j < nv; ++j) {
        int a = int(rng() % 19) - 9, b = int(rng() % 19) - 9;
        images.push_back(QPoly(st, {{Monomial::variable(0), Rational(a)}, {Monomial::variable(1), Rational(b)}}));
      }
      QPoly fl = compose(F, images);
      if (fl.is_zero()) continue;
      for (const auto& d : partials) {
        if (d.is_zero()) continue;
        QPoly dl = compose(d, images);
        if (dl.is_zero()) continue;
        if (poly_gcd(fl, dl).is_constant()) return true;
      }
    }
  }
  QPoly g = F;
  for (const auto& d : partials) {
    if (!d.is_zero()) g = poly_gcd(g, d);
    if (g.is_constant()) return true;
  }
  return g.is_constant();
}

Verdict witnesses_in_original_coordinates(Verdict v, const NormalizedCurve& n) {
  DenseMatrix<QuadExt> back = to_quad(inverse(n.transform));
  for (auto& w : v.witnesses) {
    w.original_curve = linear_change(homogeneous_graph(w.graph, n.original.ring()), back);
  }
  return v;
}

Verdict classify_double_point(const QPoly& F, const ProjectivePoint& p, const ClassifyOptions& options) {
  NormalizedCurve n;
  return classify_double_point(F, p, options, n);
}

Verdict classify_double_point(const QPoly& F, const ProjectivePoint& p, const ClassifyOptions& options,
                              NormalizedCurve& n) {
  require_plane_curve(F);
  if (!F.evaluate(p.coords).is_zero()) throw InputError("point " + p.str() + " is not on the curve");
  if (!options.assume_reduced && !is_reduced(F)) {
    throw MathError("curve is not reduced (it has a repeated factor); classification refused");
  }
  n = normalize_at_point(F, p);
  const QPoly& f = n.affine;
  const RingPtr& ring3 = F.ring();
  DenseMatrix<Rational> back = inverse(n.transform);

  Verdict v;
  unsigned m = multiplicity_at_origin(f);
  if (m == 1) {
    std::vector<QPoly::Term> terms;
    for (std::size_t i = 0; i < 3; ++i) {
      Rational c = F.derivative(i).evaluate(p.coords);
      if (!c.is_zero()) terms.push_back({Monomial::variable(i), c});
    }
    v.kind = VerdictKind::Smooth;
    v.tangent = primitive(QPoly(ring3, std::move(terms)));
    return v;
  }
  if (m >= 3) {
    v.kind = VerdictKind::MultiplicityAtLeast3;
    return v;
  }

  v.kind = VerdictKind::DoublePoint;
  {
    QPoly cone = f.homogeneous_part(2).in_ring(ring3);
    v.tangent = primitive(linear_change(cone, back));
  }

  Monomial y2;
  y2.exp[1] = 2;
  const Rational a02 = f.coefficient(y2);
  unsigned degree = unsigned(F.total_degree());
  unsigned cap = options.cap ? *options.cap : degree * degree + 2;

  const RingPtr& rl = probe_ring();
  const QPoly fx = QPoly::variable(rl, 0);
  const QPoly fl = QPoly::variable(rl, 1);
  std::vector<Rational> lambdas;

  auto known_series = [&](const RingPtr& ring) {
    std::vector<QPoly::Term> terms;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      if (!lambdas[i].is_zero()) terms.push_back({Monomial::variable(0, unsigned(i + 1)), lambdas[i]});
    }
    return QPoly(ring, std::move(terms));
  };

  auto make_witness = [&](GraphCurve<QuadExt> g) {
    Witness w;
    w.multiplicity = graph_intersection_multiplicity(f.convert<QuadExt>(), g);
    w.graph = std::move(g);
    return w;
  };

  for (unsigned r = 1; r <= cap; ++r) {
    QPoly probe = known_series(rl) + fl * pow(fx, r);
    QPoly R = compose(f, {fx, probe});
    StepRecord step;
    step.r = r;
    for (const auto& t : R.terms()) {
      unsigned ex = t.mono.exp[0], el = t.mono.exp[1];
      if (ex < 2 * r) throw MathError("internal error: probe meets the curve with multiplicity below 2r");
      if (ex != 2 * r) continue;
      if (el == 2) step.A = t.coeff;
      else if (el == 1) step.B = t.coeff;
      else if (el == 0) step.C = t.coeff;
      else throw MathError("internal error: step equation is not quadratic");
    }
    if (!(step.A == a02)) throw MathError("internal error: step quadratic lost its leading coefficient");
    step.delta = step.B * step.B - Rational(4) * step.A * step.C;

    if (!step.delta.is_zero()) {
      step.branch = Branch::A;
      v.trace.push_back(step);
      v.s = 2 * r - 1;
      Rational root;
      QuadExt sq = rational_sqrt(step.delta, root) ? QuadExt(root) : QuadExt::sqrt(step.delta);
      if (!sq.is_rational()) v.field_d = sq.d();
      QuadExt two_a = QuadExt(Rational(2) * step.A);
      for (int sign : {-1, 1}) {
        GraphCurve<QuadExt> g;
        for (const auto& l : lambdas) g.coeffs.push_back(QuadExt(l));
        QuadExt root_j = (QuadExt(-step.B) + (sign < 0 ? -sq : sq)) / two_a;
        g.coeffs.push_back(root_j);
        v.witnesses.push_back(make_witness(std::move(g)));
      }
      break;
    }

    Rational lb = -step.B / (Rational(2) * step.A);
    step.lambda_bar = lb;
    lambdas.push_back(lb);
    GraphCurve<Rational> gr{lambdas};
    Multiplicity i = graph_intersection_multiplicity(f, gr);
    step.multiplicity = i;
    if (i.is_finite() && i.value() == 2 * r + 1) {
      step.branch = Branch::B1;
      v.trace.push_back(step);
      v.s = 2 * r;
      GraphCurve<QuadExt> g;
      for (const auto& l : lambdas) g.coeffs.push_back(QuadExt(l));
      v.witnesses.push_back(make_witness(std::move(g)));
      break;
    }
    if (!i.at_least(2 * r + 2)) throw MathError("internal error: unique parabola meets the curve too little");
    step.branch = Branch::B2;
    v.trace.push_back(step);
    if (r == cap) throw CapExceeded(cap, v.trace);
  }

  if (v.s >= 2) {
    QPoly line = QPoly(ring3, {{Monomial::variable(1), Rational(1)}, {Monomial::variable(0), -lambdas.front()}});
    v.tangent_line = primitive(linear_change(line, back));
  }
  return witnesses_in_original_coordinates(std::move(v), n);
}

}  // namespace curvesing
