#include "curvesing/cli.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "curvesing/classifier.hpp"
#include "curvesing/parse.hpp"
#include "curvesing/xk_schemes.hpp"

namespace curvesing::cli {

using nlohmann::json;

namespace {

const std::string kSextic = "s^6 + t^6; -s^5*t - s^3*t^3 + 3*s*t^5; s^4*t^2 - s^3*t^3 + 9*s^2*t^4";
const std::string kSexticCenter = "a+g; 3f-b-d; 9e+c-d";
const std::string kOscnodeQuartic = "y^2*z^2 - 2*x^2*y*z + x^4 + x^2*y^2";

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string label(unsigned s) { return "A" + std::to_string(s); }

std::string opt(const JobSpec& job, const std::string& name, const std::string& fallback = "") {
  auto it = job.options.find(name);
  return it == job.options.end() ? fallback : it->second;
}

std::string need(const JobSpec& job, const std::string& name) {
  auto it = job.options.find(name);
  if (it == job.options.end() || it->second.empty()) throw InputError("missing --" + name);
  return it->second;
}

unsigned parse_unsigned(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError(what + " must be a non-negative integer, got '" + text + "'");
  }
  return unsigned(std::stoul(text));
}

std::string read_file_or_text(const std::string& value) {
  std::ifstream in(value);
  if (!in) return value;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ------------------------------------------------------------------ json

json quad_json(const QuadExt& v) { return v.str(); }

json ideal_json(const Ideal& I) {
  json gens = json::array();
  Ideal red = I.reduced();
  for (const auto& g : red.generators()) gens.push_back(g.str());
  return {{"ring", I.ring()->variables()}, {"generators", gens}, {"ideal", I.str()}};
}

std::string hilbert_text(const HilbertData& h) {
  std::vector<std::string> parts;
  if (h.stable_value) {
    for (unsigned t = 0; t < h.stable_from; ++t) parts.push_back(std::to_string(h.at(t)));
    parts.push_back(std::to_string(*h.stable_value) + " for t >= " + std::to_string(h.stable_from));
  } else {
    for (long long v : h.values) parts.push_back(std::to_string(v));
    parts.push_back("...");
  }
  return join(parts, ", ");
}

json hilbert_json(const HilbertData& h) {
  json j{{"values", h.values}, {"krull_dimension", h.krull_dimension}, {"numerator", h.numerator},
         {"text", hilbert_text(h)}};
  if (h.stable_value) {
    j["stable_value"] = *h.stable_value;
    j["stable_from"] = h.stable_from;
  }
  return j;
}

std::string field_text(const Rational& d) { return d.is_zero() ? "Q" : "Q(sqrt(" + d.str() + "))"; }

json verdict_json(const Verdict& v, bool trace) {
  json j{{"kind", kind_name(v.kind)}};
  if (v.kind == VerdictKind::DoublePoint) {
    j["s"] = v.s;
    j["label"] = label(v.s);
  }
  if (v.tangent) j["tangent"] = v.tangent->str();
  if (v.tangent_line) j["tangent_line"] = v.tangent_line->str();
  json ws = json::array();
  for (const auto& w : v.witnesses) {
    json coeffs = json::array();
    for (const auto& c : w.graph.coeffs) coeffs.push_back(quad_json(c));
    json field = v.field_d.is_zero() ? json{{"base", true}} : json{{"quadext", v.field_d.str()}};
    ws.push_back({{"graph", w.graph.str()},
                  {"coeffs", coeffs},
                  {"field", field},
                  {"curve", w.original_curve.str()},
                  {"i", w.multiplicity.str()}});
  }
  j["witnesses"] = ws;
  if (trace) {
    json steps = json::array();
    for (const auto& s : v.trace) {
      json step{{"r", s.r},
                {"quad", {s.A.str(), s.B.str(), s.C.str()}},
                {"delta", s.delta.str()},
                {"branch", branch_name(s.branch)}};
      if (s.lambda_bar) step["lambda_bar"] = s.lambda_bar->str();
      if (s.multiplicity) step["i"] = s.multiplicity->str();
      steps.push_back(step);
    }
    j["trace"] = steps;
  }
  return j;
}

std::string verdict_text(const Verdict& v, bool trace) {
  std::ostringstream os;
  switch (v.kind) {
    case VerdictKind::Smooth:
      os << "smooth point, tangent " << v.tangent->str() << " = 0\n";
      break;
    case VerdictKind::MultiplicityAtLeast3:
      os << "point of multiplicity >= 3\n";
      break;
    case VerdictKind::DoublePoint:
      os << label(v.s) << " double point\n";
      if (v.tangent) os << "tangent cone: " << v.tangent->str() << "\n";
      if (v.tangent_line) os << "tangent line: " << v.tangent_line->str() << " = 0\n";
      for (const auto& w : v.witnesses) {
        os << "witness " << w.graph.str() << "  (i = " << w.multiplicity.str() << ", curve " << w.original_curve.str()
           << ")\n";
      }
      if (!v.witnesses.empty()) os << "field: " << field_text(v.field_d) << "\n";
      break;
  }
  if (trace) {
    for (const auto& s : v.trace) {
      os << "step " << s.r << ": " << s.A << "*l^2 + " << s.B << "*l + " << s.C << ", delta " << s.delta << ", branch "
         << branch_name(s.branch);
      if (s.lambda_bar) os << ", lambda " << *s.lambda_bar;
      if (s.multiplicity) os << ", i = " << s.multiplicity->str();
      os << "\n";
    }
  }
  return os.str();
}

std::string coords_text(const std::array<QuadExt, 3>& c) {
  return "[" + c[0].str() + " : " + c[1].str() + " : " + c[2].str() + "]";
}

json census_json(const SingularityCensus& c) {
  json pts = json::array();
  for (const auto& p : c.points) {
    json j{{"delta", p.delta}, {"length", p.length}, {"points", p.points}, {"cusp", p.cusp}};
    if (p.coords) {
      j["coords"] = {quad_json((*p.coords)[0]), quad_json((*p.coords)[1]), quad_json((*p.coords)[2])};
    }
    if (p.cluster_eliminant) {
      j["cluster_eliminant"] = p.cluster_eliminant->str();
      j["sigma"] = p.sigma.str();
      j["ell"] = p.ell.str();
    }
    if (p.image) j["image"] = p.image->normalized().str();
    if (!p.fiber.empty()) {
      json fiber = json::array();
      for (const auto& r : p.fiber) fiber.push_back({quad_json(r[0]), quad_json(r[1])});
      j["fiber"] = fiber;
    }
    if (p.s) j["s"] = *p.s;
    if (!p.label_source.empty()) j["label_source"] = p.label_source;
    if (p.unclassified) j["unclassified"] = true;
    pts.push_back(j);
  }
  json j{{"n", c.n},
         {"x2_length", c.x2_length},
         {"expected_length", c.expected_length},
         {"support_size", c.support_size},
         {"x3_empty", c.x3_empty},
         {"points", pts}};
  if (c.implicit_equation) {
    j["implicit_equation"] = c.implicit_equation->str();
    j["delta_consistent"] = c.delta_consistent;
  }
  return j;
}

std::string census_text(const SingularityCensus& c) {
  std::ostringstream os;
  os << "degree " << c.n << ", length X_2 = " << c.x2_length << " (expected " << c.expected_length << "), "
     << c.support_size << " support points\n";
  if (c.implicit_equation) os << "implicit equation: " << c.implicit_equation->str() << " = 0\n";
  for (const auto& p : c.points) {
    if (p.coords) {
      os << coords_text(*p.coords);
    } else {
      os << p.points << " conjugate points " << p.cluster_eliminant->str() << " = 0 at T = (" << p.sigma.str() << ")/("
         << p.ell.str() << ")";
    }
    os << "  delta " << (p.delta ? std::to_string(p.delta) : "?") << (p.cusp ? ", cusp" : "");
    if (p.image) os << ", image " << p.image->normalized().str();
    if (p.s) os << ", " << label(*p.s) << " (" << p.label_source << ")";
    if (p.unclassified) os << ", unclassified";
    os << "\n";
  }
  return os.str();
}

// ------------------------------------------------------------------ inputs

std::set<std::string> identifiers(const std::string& text) {
  static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
  std::set<std::string> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), ident); it != std::sregex_iterator(); ++it) {
    out.insert(it->str());
  }
  return out;
}

RingPtr plane_ring_for(const JobSpec& job, const std::string& curve) {
  std::string vars = opt(job, "vars");
  if (!vars.empty()) return make_ring(parse_variable_list(vars));
  auto ids = identifiers(curve);
  auto subset = [&](std::set<std::string> allowed) {
    for (const auto& id : ids) {
      if (!allowed.count(id)) return false;
    }
    return true;
  };
  if (subset({"x", "y", "z"})) return make_ring({"x", "y", "z"});
  if (subset({"x0", "x1", "x2"})) return make_ring({"x0", "x1", "x2"});
  throw InputError("cannot infer the coordinates of '" + curve + "'; pass --vars");
}

// Affine input in the first two coordinates is homogenized with the third.
QPoly plane_curve(const std::string& text, const RingPtr& ring) {
  QPoly F = parse_poly(text, ring);
  if (F.is_homogeneous() || F.involves(2)) return F;
  unsigned d = unsigned(F.total_degree());
  std::vector<QPoly::Term> terms;
  for (auto t : F.terms()) {
    t.mono.exp[2] = static_cast<std::uint16_t>(d - t.mono.degree());
    terms.push_back(t);
  }
  return QPoly(ring, std::move(terms));
}

Ideal ideal_input(const JobSpec& job) {
  std::string file = opt(job, "ideal-file");
  if (!file.empty()) {
    IdealText it = parse_ideal_text(read_file_or_text(file));
    return Ideal(it.ring, it.generators);
  }
  RingPtr ring = make_ring(parse_variable_list(need(job, "vars")));
  return Ideal(ring, parse_poly_list(need(job, "ideal"), ring));
}

TermOrder order_input(const JobSpec& job, std::size_t nvars) {
  std::string o = opt(job, "order", "grevlex");
  if (o == "grevlex") return TermOrder::grevlex(nvars);
  if (o == "lex") return TermOrder::lex(nvars);
  throw InputError("unknown order '" + o + "' (grevlex or lex)");
}

JobResult finish(json doc, std::string text) {
  JobResult r;
  r.document = std::move(doc);
  r.text = std::move(text);
  return r;
}

// ------------------------------------------------------------------ commands

JobResult cmd_classify(const JobSpec& job) {
  std::string curve_text = need(job, "curve");
  RingPtr ring = plane_ring_for(job, curve_text);
  QPoly F = plane_curve(curve_text, ring);
  ProjectivePoint p = ProjectivePoint::parse(opt(job, "point", "0,0,1"));
  ClassifyOptions o;
  std::string cap = opt(job, "cap");
  if (!cap.empty()) o.cap = parse_unsigned(cap, "--cap");
  Verdict v = classify_double_point(F, p, o);
  json doc = verdict_json(v, job.trace);
  doc["curve"] = F.str();
  doc["point"] = p.str();
  return finish(doc, verdict_text(v, job.trace));
}

JobResult cmd_implicitize(const JobSpec& job) {
  auto p = PlaneParameterization::parse(need(job, "param"));
  Implicitization imp = implicitize(p);
  json doc{{"param", p.str()},
           {"equation", imp.equation.str()},
           {"degree", imp.equation.total_degree()},
           {"map_degree", imp.map_degree},
           {"proper", imp.map_degree == 1}};
  std::ostringstream os;
  os << imp.equation.str() << " = 0\n"
     << "degree " << imp.equation.total_degree() << ", map degree " << imp.map_degree
     << (imp.map_degree == 1 ? " (proper)" : " (not proper)") << "\n";
  return finish(doc, os.str());
}

JobResult cmd_analyze(const JobSpec& job) {
  auto p = PlaneParameterization::parse(need(job, "param"));
  SingularityCensus c = job.classify ? classify_all_singularities(p) : x2_census(p);
  return finish(census_json(c), census_text(c));
}

JobResult cmd_project(const JobSpec& job) {
  unsigned n = parse_unsigned(need(job, "n"), "--n");
  RingPtr ambient = projective_space_ring(n);
  LinearCenter center = LinearCenter::parse(need(job, "center"), ambient);
  std::string scheme_text = read_file_or_text(need(job, "scheme"));
  Ideal scheme = [&] {
    if (scheme_text.find("ring:") != std::string::npos) {
      IdealText it = parse_ideal_text(scheme_text);
      return restrict_to(Ideal(it.ring, it.generators), ambient);
    }
    return Ideal(ambient, parse_poly_list(scheme_text, ambient));
  }();
  std::vector<std::string> targets = parse_variable_list(opt(job, "targets", "u,v,w"));
  Ideal image = project_scheme(scheme, center, targets);
  HilbertData h = hilbert_function(image);
  json doc = ideal_json(image);
  doc["hilbert"] = hilbert_json(h);
  if (h.stable_value) doc["length"] = *h.stable_value;
  std::ostringstream os;
  os << image.str() << "\nHilbert: " << hilbert_text(h) << "\n";
  return finish(doc, os.str());
}

JobResult cmd_gb(const JobSpec& job) {
  Ideal I = ideal_input(job);
  TermOrder order = order_input(job, I.ring()->size());
  const GroebnerBasis& gb = I.groebner(order);
  json polys = json::array();
  std::string text;
  for (const auto& g : gb.polynomials()) {
    polys.push_back(g.str());
    text += g.str() + "\n";
  }
  return finish({{"ring", I.ring()->variables()}, {"order", order.key()}, {"basis", polys}}, text);
}

JobResult cmd_hilbert(const JobSpec& job) {
  Ideal I = ideal_input(job);
  unsigned upto = parse_unsigned(opt(job, "upto", "0"), "--upto");
  HilbertData h = hilbert_function(I, upto);
  std::ostringstream os;
  for (unsigned t = 0; t < h.values.size(); ++t) os << "H(" << t << ") = " << h.values[t] << "\n";
  if (h.stable_value) os << "H(t) = " << *h.stable_value << " for t >= " << h.stable_from << "\n";
  os << "Krull dimension " << h.krull_dimension << "\n";
  return finish(hilbert_json(h), os.str());
}

JobResult cmd_eliminate(const JobSpec& job) {
  Ideal I = ideal_input(job);
  Ideal E = eliminate(I, parse_variable_list(need(job, "drop"))).reduced();
  return finish(ideal_json(E), E.str() + "\n");
}

JobResult cmd_saturate(const JobSpec& job) {
  Ideal I = ideal_input(job);
  Ideal J(I.ring(), parse_poly_list(need(job, "by"), I.ring()));
  Ideal S = saturate(I, J).reduced();
  return finish(ideal_json(S), S.str() + "\n");
}

JobResult cmd_radical(const JobSpec& job) {
  Ideal I = ideal_input(job);
  Ideal R = zero_dim_radical(I);
  json doc = ideal_json(R);
  doc["hilbert"] = hilbert_json(hilbert_function(R));
  return finish(doc, R.str() + "\n");
}

JobResult cmd_repro(const JobSpec& job) {
  if (job.list || job.positional.empty()) {
    json cases = json::array();
    std::string text;
    for (const auto& c : repro_manifest()) {
      json expected = json::object();
      for (const auto& [k, v] : c.expected) expected[k] = v;
      cases.push_back({{"id", c.id}, {"description", c.description}, {"expected", expected}});
      text += c.id + "  " + c.description + "\n";
    }
    return finish({{"cases", cases}}, text);
  }
  json reports = json::array();
  std::ostringstream os;
  bool all = true;
  for (const auto& id : job.positional) {
    for (const auto& r : run_repro(id)) {
      json checks = json::array();
      os << "== " << r.id << "\n";
      for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
        os << (c.pass ? "ok    " : "DIFF  ") << c.name << ": " << c.actual;
        if (!c.pass) os << "   (expected " << c.expected << ")";
        os << "\n";
      }
      os << (r.pass() ? "PASS " : "FAIL ") << r.id << "\n";
      all = all && r.pass();
      reports.push_back({{"case", r.id}, {"pass", r.pass()}, {"checks", checks}});
    }
  }
  JobResult res = finish({{"reports", reports}, {"pass", all}}, os.str());
  res.exit_code = all ? 0 : 1;
  return res;
}

// ------------------------------------------------------------------ repro

using Actual = std::vector<std::pair<std::string, std::string>>;

std::string canonical(const RingPtr& ring, const std::string& gens) {
  return Ideal(ring, parse_poly_list(gens, ring)).str();
}

Actual classify_case(const std::string& curve, bool details) {
  const RingPtr& ring = plane_curve_ring();
  Verdict v = classify_double_point(parse_poly(curve, ring), ProjectivePoint{{0, 0, 1}});
  Actual a{{"verdict", v.kind == VerdictKind::DoublePoint ? label(v.s) : kind_name(v.kind)},
           {"steps", std::to_string(v.trace.size())}};
  if (!details) return a;
  std::vector<std::string> branches, probes, mults;
  GraphCurve<QuadExt> probe;
  for (const auto& s : v.trace) {
    branches.push_back(branch_name(s.branch));
    if (s.lambda_bar) {
      probe.coeffs.push_back(QuadExt(*s.lambda_bar));
      probes.push_back(probe.str());
    }
    mults.push_back(s.multiplicity ? s.multiplicity->str() : "-");
  }
  a.push_back({"branches", join(branches, ", ")});
  a.push_back({"osculating curves", join(probes, "; ")});
  a.push_back({"multiplicities", join(mults, ", ")});
  return a;
}

Actual example_4_1() {
  const RingPtr& ring = plane_curve_ring();
  QPoly F = parse_poly(kOscnodeQuartic, ring);
  ProjectivePoint origin{{0, 0, 1}};
  Verdict v = classify_double_point(F, origin);
  Actual a{{"verdict", label(v.s)}, {"tangent", v.tangent_line ? v.tangent_line->str() + " = 0" : "-"}};
  GraphCurve<QuadExt> conic;
  for (std::size_t k = 0; k < 2 && k < v.trace.size(); ++k) conic.coeffs.push_back(QuadExt(*v.trace[k].lambda_bar));
  a.push_back({"osculating conic", conic.str()});
  std::vector<std::string> cubics;
  for (const auto& w : v.witnesses) cubics.push_back(w.graph.str());
  a.push_back({"osculating cubics", join(cubics, "; ")});
  a.push_back({"field", field_text(v.field_d)});

  // Local equations at the origin in (x, y).
  RingPtr xy = make_ring({"x", "y"});
  auto local = [&](const EPoly& G) {
    return compose(G, {EPoly::variable(xy, 0), EPoly::variable(xy, 1), EPoly::constant(xy, QuadExt(1))});
  };
  EPoly f = local(F.convert<QuadExt>());
  std::vector<std::string> graph_i, oracle_i;
  for (const auto& w : v.witnesses) {
    graph_i.push_back(graph_intersection_multiplicity(f, w.graph).str());
    oracle_i.push_back(truncated_local_multiplicity(f, local(w.original_curve)).value.str());
  }
  a.push_back({"i(C,D_j,O) by substitution", join(graph_i, ", ")});
  a.push_back({"i(C,D_j,O) by local quotients", join(oracle_i, ", ")});
  if (v.witnesses.size() == 2) {
    a.push_back({"i(D_1,D_2,O) by substitution", branch_separation(v.witnesses[0].graph, v.witnesses[1].graph).str()});
    a.push_back({"i(D_1,D_2,O) by local quotients",
                 truncated_local_multiplicity(local(v.witnesses[0].original_curve), local(v.witnesses[1].original_curve))
                     .value.str()});
    // D_1 and D_2 are conjugate: their intersection is cut by the rational
    // and irrational parts of one of them.
    QPoly re = QPoly::variable(xy, 1), im(xy);
    const auto& c = v.witnesses[0].graph.coeffs;
    for (std::size_t i = 0; i < c.size(); ++i) {
      re -= QPoly::monomial(xy, Monomial::variable(0, unsigned(i + 1)), c[i].a());
      im += QPoly::monomial(xy, Monomial::variable(0, unsigned(i + 1)), c[i].b());
    }
    Ideal X(xy, {re, im});
    a.push_back({"ideal of D_1 and D_2", X.str()});
    a.push_back({"length of D_1 and D_2", std::to_string(affine_colength(X).value_or(0))});
    a.push_back({"linear forms in that ideal", std::to_string(linear_forms_in(X).size())});
  }
  return a;
}

Actual example_6_1_part1() {
  const RingPtr r = projective_space_ring(6);
  LinearCenter center = LinearCenter::parse(kSexticCenter, r);
  Actual a;
  a.push_back({"parameterization", parameterization_from_center(6, center).str()});
  Ideal line(r, parse_poly_list("b; c; d; e; f", r));
  Ideal image3 = project_scheme(sum(power(line, 3), rnc_ideal(r)), center);
  const RingPtr& uvw = image3.ring();
  std::vector<Rational> P{Rational(1), Rational(0), Rational(0)};
  a.push_back({"image of 3A+3B", image3.str()});
  a.push_back({"Hilbert of 3A+3B image", hilbert_text(hilbert_function(image3))});
  a.push_back({"3A+3B image curvilinear", is_curvilinear_at(image3, P) ? "yes" : "no"});
  Ideal image4 = project_scheme(sum(power(line, 4), rnc_ideal(r)), center);
  a.push_back({"image of 4A+4B", image4.str()});
  a.push_back({"Hilbert of 4A+4B image", hilbert_text(hilbert_function(image4))});
  a.push_back({"4A+4B image curvilinear", is_curvilinear_at(image4, P) ? "yes" : "no"});
  Ideal R(r, parse_poly_list("a-b; b-c; c-d; d-e; e-f; f-g", r));
  Ideal imageR = project_scheme(R, center);
  a.push_back({"image of R", imageR.str()});
  std::vector<Rational> ones(7, Rational(1));
  std::array<Rational, 3> vertex;
  for (std::size_t k = 0; k < 3; ++k) vertex[k] = center.forms[k].evaluate(ones);
  a.push_back({"R projects to", ProjectivePoint{vertex}.str()});
  for (const auto& g : imageR.generators()) {
    if (!g.evaluate(std::vector<Rational>(vertex.begin(), vertex.end())).is_zero()) {
      a.back().second += " (not on the image ideal)";
      break;
    }
  }
  ConeFiber fiber = cone_fiber_test(r, center, vertex);
  a.push_back({"cone fiber", fiber.fiber.str()});
  a.push_back({"cone fiber length", std::to_string(fiber.length)});
  (void)uvw;
  return a;
}

Actual example_6_1_part2() {
  auto p = PlaneParameterization::parse(kSextic);
  Actual a;
  MkMatrix m2 = build_Mk(p, 2);
  std::vector<std::string> rows;
  for (std::size_t i = m2.matrix.rows() - 3; i < m2.matrix.rows(); ++i) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < m2.matrix.cols(); ++c) row.push_back(m2.matrix.at(i, c).str());
    rows.push_back("[" + join(row, ",") + "]");
  }
  a.push_back({"M_2 size", std::to_string(m2.matrix.rows()) + "x" + std::to_string(m2.matrix.cols())});
  a.push_back({"M_2 coefficient rows", join(rows, " ")});
  Ideal ix2 = xk_ideal(p, 2);
  a.push_back({"Hilbert of IX2", hilbert_text(hilbert_function(ix2))});
  a.push_back({"Hilbert of IZ2", hilbert_text(hilbert_function(zero_dim_radical(ix2)))});
  const RingPtr& r = ix2.ring();
  Ideal cusp = sum(ix2, Ideal(r, {parse_poly("y^2 - 4*x*z", r)}));
  a.push_back({"Hilbert of ICUSP", hilbert_text(hilbert_function(cusp))});
  SingularityCensus c = classify_all_singularities(p);
  std::map<long long, long long> deltas;
  std::map<unsigned, long long> labels;
  long long cusps = 0;
  std::string big;
  for (const auto& cp : c.points) {
    deltas[cp.delta] += cp.points;
    if (cp.s) labels[*cp.s] += cp.points;
    if (cp.cusp) cusps += cp.points;
    if (cp.delta > 1 && cp.coords && cp.image) big = coords_text(*cp.coords) + " -> " + cp.image->normalized().str();
  }
  std::vector<std::string> dparts, lparts;
  for (auto it = deltas.rbegin(); it != deltas.rend(); ++it) {
    dparts.push_back(std::to_string(it->second) + " x delta " + std::to_string(it->first));
  }
  for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
    lparts.push_back(std::to_string(it->second) + " x " + label(it->first));
  }
  a.push_back({"support points", std::to_string(c.support_size)});
  a.push_back({"census", join(dparts, " + ")});
  a.push_back({"cusps", std::to_string(cusps)});
  a.push_back({"non-ordinary point", big});
  a.push_back({"labels", join(lparts, " + ")});
  a.push_back({"delta = ceil(s/2) everywhere", c.delta_consistent ? "yes" : "no"});
  return a;
}

std::string normal_form(unsigned s) {
  return "y^2*z^" + std::to_string(s - 1) + " - x^" + std::to_string(s + 1);
}

Actual compute_case(const std::string& id) {
  if (id == "example-4.1") return example_4_1();
  if (id == "example-6.1-part1") return example_6_1_part1();
  if (id == "example-6.1-part2") return example_6_1_part2();
  if (id == "remark-3.2") return classify_case("y^2*z^3 - x^5", true);
  if (id == "remark-3.3") return classify_case("y^2*z - x^2*y", true);
  if (id.rfind("normal-forms-", 0) == 0) {
    unsigned s = parse_unsigned(id.substr(13), "normal form index");
    return classify_case(normal_form(s), false);
  }
  throw InputError("unknown reproduction case '" + id + "'");
}

}  // namespace

bool ReproReport::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return !checks.empty();
}

std::vector<ReproCase> repro_manifest() {
  const RingPtr& xy = make_ring({"x", "y"});
  const RingPtr uvw = make_ring({"u", "v", "w"});
  const RingPtr ag = projective_space_ring(6);
  std::vector<ReproCase> cases;
  cases.push_back({"example-4.1",
                   "quartic y^2 - 2x^2y + x^4 + x^2y^2 at the origin: oscnode with conjugate osculating cubics",
                   {{"verdict", "A5"},
                    {"tangent", "y = 0"},
                    {"osculating conic", "y = x^2"},
                    {"osculating cubics", "y = x^2 - sqrt(-1)*x^3; y = x^2 + sqrt(-1)*x^3"},
                    {"field", "Q(sqrt(-1))"},
                    {"i(C,D_j,O) by substitution", "7, 7"},
                    {"i(C,D_j,O) by local quotients", "7, 7"},
                    {"i(D_1,D_2,O) by substitution", "3"},
                    {"i(D_1,D_2,O) by local quotients", "3"},
                    {"ideal of D_1 and D_2", canonical(xy, "y - x^2; x^3")},
                    {"length of D_1 and D_2", "3"},
                    {"linear forms in that ideal", "0"}}});
  cases.push_back({"example-6.1-part1",
                   "sextic from the rational normal curve in P^6: fat-point images, the image of R and the cone fiber",
                   {{"parameterization", kSextic},
                    {"image of 3A+3B", canonical(uvw, "w^2; v*w; v^2 - u*w")},
                    {"Hilbert of 3A+3B image", "1, 3 for t >= 1"},
                    {"3A+3B image curvilinear", "yes"},
                    {"image of 4A+4B", canonical(uvw, "w^2; 9/28*v^2*w; 9/28*v^3 - 9/28*u*v*w")},
                    {"Hilbert of 4A+4B image", "1, 3, 5 for t >= 2"},
                    {"4A+4B image curvilinear", "no"},
                    {"image of R", canonical(uvw, "v - 1/9*w; u - 2/9*w")},
                    {"R projects to", "[2:1:9]"},
                    {"cone fiber", canonical(ag, "a - g; b - g; c - g; d - g; e - g; f - g")},
                    {"cone fiber length", "1"}}});
  cases.push_back({"example-6.1-part2",
                   "singularities of the sextic from X_2: one oscnode and seven nodes",
                   {{"M_2 size", "8x7"},
                    {"M_2 coefficient rows", "[1,0,0,0,0,0,1] [0,-1,0,-1,0,3,0] [0,0,1,-1,9,0,0]"},
                    {"Hilbert of IX2", "1, 3, 6, 10 for t >= 3"},
                    {"Hilbert of IZ2", "1, 3, 6, 8 for t >= 3"},
                    {"Hilbert of ICUSP", "1, 3, 5, 7, 4, 0 for t >= 5"},
                    {"support points", "8"},
                    {"census", "1 x delta 3 + 7 x delta 1"},
                    {"cusps", "0"},
                    {"non-ordinary point", "[0 : 1 : 0] -> [1:0:0]"},
                    {"labels", "1 x A5 + 7 x A1"},
                    {"delta = ceil(s/2) everywhere", "yes"}}});
  cases.push_back({"remark-3.2",
                   "y^2 = x^5: the first two osculating curves are both y = 0",
                   {{"verdict", "A4"},
                    {"steps", "2"},
                    {"branches", "b2, b1"},
                    {"osculating curves", "y = 0; y = 0"},
                    {"multiplicities", "5, 5"}}});
  cases.push_back({"remark-3.3",
                   "y(y - x^2): the osculating conic is a component",
                   {{"verdict", "A3"},
                    {"steps", "2"},
                    {"branches", "b2, a"},
                    {"osculating curves", "y = 0"},
                    {"multiplicities", "inf, -"}}});
  for (unsigned s = 1; s <= 12; ++s) {
    cases.push_back({"normal-forms-" + std::to_string(s),
                     "normal form " + normal_form(s) + " at [0:0:1]",
                     {{"verdict", label(s)}, {"steps", std::to_string((s + 1) / 2)}}});
  }
  return cases;
}

std::vector<ReproReport> run_repro(const std::string& id) {
  if (id == "example-6.1") {
    auto a = run_repro("example-6.1-part1");
    auto b = run_repro("example-6.1-part2");
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
  auto manifest = repro_manifest();
  auto it = std::find_if(manifest.begin(), manifest.end(), [&](const ReproCase& c) { return c.id == id; });
  if (it == manifest.end()) throw InputError("unknown reproduction case '" + id + "'");
  Actual actual = compute_case(id);
  ReproReport report{id, {}};
  for (const auto& [name, expected] : it->expected) {
    ReproCheck c{name, expected, "(missing)", false};
    for (const auto& [k, v] : actual) {
      if (k == name) c.actual = v;
    }
    c.pass = c.actual == c.expected;
    report.checks.push_back(c);
  }
  return {report};
}

JobResult run(const JobSpec& job) {
  try {
    static const std::map<std::string, JobResult (*)(const JobSpec&)> commands = {
        {"classify", cmd_classify}, {"implicitize", cmd_implicitize}, {"analyze-param", cmd_analyze},
        {"project", cmd_project},   {"gb", cmd_gb},                   {"hilbert", cmd_hilbert},
        {"eliminate", cmd_eliminate}, {"saturate", cmd_saturate},     {"radical", cmd_radical},
        {"repro", cmd_repro}};
    auto it = commands.find(job.command);
    if (it == commands.end()) throw InputError("unknown command '" + job.command + "'");
    return it->second(job);
  } catch (const InputError& e) {
    JobResult r;
    r.exit_code = 2;
    r.document = {{"error", e.what()}, {"kind", "input"}};
    r.text = std::string("error: ") + e.what() + "\n";
    return r;
  } catch (const MathError& e) {
    JobResult r;
    r.exit_code = 1;
    r.document = {{"error", e.what()}, {"kind", "math"}};
    r.text = std::string("refused: ") + e.what() + "\n";
    return r;
  }
}

}  // namespace curvesing::cli
