#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "curvesing/classifier.hpp"
#include "curvesing/rational_curve.hpp"

namespace curvesing {

struct MkMatrix {
  unsigned k = 0;
  unsigned n = 0;
  /// (n-k+4) x (n+1): n-k+1 shifted bands of x0..xk, then three coefficient rows.
  PolyMatrix<Rational> matrix;
};

/// Variables of P^k: x, y, z for k = 2, otherwise x0, ..., xk.
RingPtr xk_ring(unsigned k);

MkMatrix build_Mk(const PlaneParameterization& p, unsigned k);

/// Ideal of the (n-k+3)-minors of M_k.
Ideal xk_ideal(const PlaneParameterization& p, unsigned k);

/// True when X_k is empty, i.e. C has no point of multiplicity >= k.
bool xk_is_empty(const PlaneParameterization& p, unsigned k);

struct CensusPoint {
  /// Support point of X_2 (coordinates of the binary quadric x s^2 + y s t + z t^2);
  /// absent for a cluster.
  std::optional<std::array<QuadExt, 3>> coords;
  /// Cluster of conjugate points: e(sigma/ell) = 0 on the radical of X_2.
  std::optional<QPoly> cluster_eliminant;
  QPoly sigma, ell;
  /// Number of points represented (1, or the cluster size).
  unsigned points = 1;
  /// Length of X_2 over all represented points.
  long long length = 0;
  /// Length at each represented point (delta of the singular point); 0 when
  /// a cluster's total does not determine it.
  long long delta = 0;
  bool cusp = false;
  /// Singular point of C, when it is defined over Q.
  std::optional<ProjectivePoint> image;
  /// Fiber over the image point: two parameter values, or one for a cusp.
  std::vector<std::array<QuadExt, 2>> fiber;
  /// A_s label, from the classifier or from (delta, cusp) when no rational
  /// image point is available.
  std::optional<unsigned> s;
  std::string label_source;
  bool unclassified = false;
};

struct SingularityCensus {
  unsigned n = 0;
  long long x2_length = 0;
  long long expected_length = 0;
  /// Number of distinct support points of X_2.
  long long support_size = 0;
  bool x3_empty = true;
  std::vector<CensusPoint> points;
  /// Implicit equation, filled by classify_all_singularities.
  std::optional<QPoly> implicit_equation;
  /// Every classified point satisfies delta = ceil(s/2).
  bool delta_consistent = true;
};

struct CensusOptions {
  /// Abort when X_3 is non-empty (a point of multiplicity >= 3).
  bool require_double_points = true;
};

SingularityCensus x2_census(const PlaneParameterization& p, const CensusOptions& options = {});

/// Census plus the implicit-side classifier at every rational singular point.
SingularityCensus classify_all_singularities(const PlaneParameterization& p);

/// Rational roots of a univariate polynomial, found numerically and checked exactly.
std::vector<Rational> rational_roots(const QPoly& g);

}  // namespace curvesing
