#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "curvesing/groebner.hpp"

namespace curvesing {

/// Coordinate ring of P^n: a, b, c, ... (n <= 19) or z0, ..., zn.
RingPtr projective_space_ring(unsigned n);

/// 2x2 minors of [[z0 .. z(n-1)], [z1 .. zn]].
Ideal rnc_ideal(unsigned n);
Ideal rnc_ideal(const RingPtr& ring);

/// Linear forms cutting the r-th osculating space of the rational normal curve
/// at the parameter point (s0 : t0), i.e. the span of the scheme (r+1)Q.
Ideal osculating_space_ideal(const RingPtr& ring, const std::array<Rational, 2>& q, unsigned r);

/// Independent linear forms in the ambient ring of P^n; the projection center.
struct LinearCenter {
  std::vector<QPoly> forms;

  /// ';'-separated linear forms, e.g. "a+g;3f-b-d;9e+c-d".
  static LinearCenter parse(const std::string& text, const RingPtr& ring);
  const RingPtr& ring() const { return forms.front().ring(); }
};

void validate_center(const LinearCenter& c);

/// Image of a scheme of P^n under the projection x -> (l0(x) : l1(x) : l2(x)),
/// as an ideal in the target variables.
Ideal project_scheme(const Ideal& scheme, const LinearCenter& center,
                     const std::vector<std::string>& targets = {"u", "v", "w"});

struct PlaneParameterization {
  RingPtr ring;  // (s, t)
  std::array<QPoly, 3> f;
  std::optional<bool> proper;

  /// "f0; f1; f2" binary forms in s, t of equal degree without common zeros.
  static PlaneParameterization parse(const std::string& text);
  static PlaneParameterization from_forms(std::array<QPoly, 3> forms);

  unsigned degree() const { return unsigned(f[0].total_degree()); }
  /// a_{jk}: coefficient of s^(n-k) t^k in f_j.
  Rational coefficient(std::size_t j, unsigned k) const;
  std::array<Rational, 3> evaluate(const Rational& s, const Rational& t) const;
  std::array<QuadExt, 3> evaluate(const QuadExt& s, const QuadExt& t) const;
  std::string str() const;
};

/// f_j = l_j(s^n, s^(n-1) t, ..., t^n).
PlaneParameterization parameterization_from_center(unsigned n, const LinearCenter& center);

/// Ring (x, y, z) used for plane curves.
const RingPtr& plane_curve_ring();

struct Implicitization {
  /// Primitive, square-free equation of the image curve in (x, y, z).
  QPoly equation;
  /// Degree of the map onto its image: n / deg F.
  unsigned map_degree = 1;
};

Implicitization implicitize(const PlaneParameterization& p);

struct Properness {
  bool proper = false;
  unsigned map_degree = 1;
};

Properness properness_check(const PlaneParameterization& p);

struct ConeFiber {
  /// Ideal of C_n meeting the cone over the center with the given vertex,
  /// saturated by the irrelevant ideal.
  Ideal fiber;
  /// Length of the fiber scheme.
  long long length = 0;
  /// The unique point when the fiber is a single reduced point.
  std::optional<std::vector<Rational>> point;
};

/// Fiber of the projection of C_n over the image point `vertex`.
ConeFiber cone_fiber_test(const RingPtr& ambient, const LinearCenter& center, const std::array<Rational, 3>& vertex);

}  // namespace curvesing
