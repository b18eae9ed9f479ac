#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "curvesing/local_intersection.hpp"

namespace curvesing {

struct ProjectivePoint {
  std::array<Rational, 3> coords;

  /// "a,b,c" with rational entries, not all zero.
  static ProjectivePoint parse(std::string_view text);
  /// Scaled so the last non-zero coordinate is 1.
  ProjectivePoint normalized() const;
  std::string str() const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b);
};

/// The curve moved so the query point is [0,0,1], dehomogenized there, and
/// arranged to have a non-zero y^2 coefficient when the point is double.
struct NormalizedCurve {
  QPoly original;
  /// Original coordinates = transform * normalized coordinates.
  DenseMatrix<Rational> transform;
  /// f(x, y) in the ring (x, y) with f(0, 0) = 0.
  QPoly affine;
  /// True when the quadratic part exists and has a non-zero y^2 coefficient.
  bool a02_fixed = false;
  /// "none", "swap" or "shear": the change made to reach a02 != 0.
  std::string step1_change = "none";
};

NormalizedCurve normalize_at_point(const QPoly& F, const ProjectivePoint& p);

/// Lowest degree of a non-vanishing homogeneous part of f at the origin.
unsigned multiplicity_at_origin(const QPoly& f);

enum class Branch { A, B1, B2 };
std::string branch_name(Branch b);

struct StepRecord {
  unsigned r = 0;
  /// Coefficient of x^(2r) as A*l^2 + B*l + C in the unknown l = lambda_r.
  Rational A, B, C;
  Rational delta;
  Branch branch = Branch::A;
  std::optional<Rational> lambda_bar;
  /// Observed i(C, Gamma, O) for the unique parabola of a b-branch.
  std::optional<Multiplicity> multiplicity;
};

struct Witness {
  GraphCurve<QuadExt> graph;
  /// Homogeneous equation of the graph in the original coordinates.
  EPoly original_curve;
  /// i(f, graph, O) in normalized coordinates.
  Multiplicity multiplicity;
};

enum class VerdictKind { Smooth, MultiplicityAtLeast3, DoublePoint };
std::string kind_name(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Smooth;
  unsigned s = 0;
  /// Smooth: the tangent line. Double point: the tangent cone (a square of
  /// the unique tangent when s >= 2). Original coordinates.
  std::optional<QPoly> tangent;
  /// Unique tangent line of a non-ordinary double point.
  std::optional<QPoly> tangent_line;
  std::vector<Witness> witnesses;
  /// Radicand of the extension holding the witnesses; 0 for the base field.
  Rational field_d;
  std::vector<StepRecord> trace;
};

/// Raised when the step cap is exhausted; carries the partial trace.
class CapExceeded : public MathError {
 public:
  CapExceeded(unsigned cap, std::vector<StepRecord> trace)
      : MathError("classification did not finish within " + std::to_string(cap) + " steps"),
        trace_(std::move(trace)) {}
  const std::vector<StepRecord>& trace() const { return trace_; }

 private:
  std::vector<StepRecord> trace_;
};

/// True when F has no repeated factor.
bool is_reduced(const QPoly& F);

struct ClassifyOptions {
  /// Maximum number of steps; default deg(F)^2 + 2.
  std::optional<unsigned> cap;
  /// Skip the repeated-factor check (the caller already knows F is reduced).
  bool assume_reduced = false;
};

/// Decides whether p is smooth, of multiplicity >= 3, or an A_s double point
/// of the curve F = 0 by probing with osculating parabolas.
Verdict classify_double_point(const QPoly& F, const ProjectivePoint& p, const ClassifyOptions& options = {});

/// Same as classify_double_point, also returning the normalization used.
Verdict classify_double_point(const QPoly& F, const ProjectivePoint& p, const ClassifyOptions& options,
                              NormalizedCurve& normalized);

/// Recomputes the original-coordinate equations of the witnesses of v.
Verdict witnesses_in_original_coordinates(Verdict v, const NormalizedCurve& n);

}  // namespace curvesing
