#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvesing/poly_ops.hpp"

namespace curvesing {

/// The plane curve y = c1*x + c2*x^2 + ... + ct*x^t through the origin.
template <class K>
struct GraphCurve {
  std::vector<K> coeffs;

  /// c1*x + ... + ct*x^t as a polynomial in variable `var` of `ring`.
  Polynomial<K> series(const RingPtr& ring, std::size_t var) const {
    std::vector<typename Polynomial<K>::Term> terms;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (!coeffs[i].is_zero()) terms.push_back({Monomial::variable(var, unsigned(i + 1)), coeffs[i]});
    }
    return Polynomial<K>(ring, std::move(terms));
  }

  /// "y = x^2 - sqrt(-1)*x^3" style text.
  std::string str() const {
    static const RingPtr ring = make_ring({"x"});
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i].is_zero()) continue;
      std::string t = Polynomial<K>(ring, {{Monomial::variable(0, unsigned(i + 1)), coeffs[i]}}).str();
      if (out.empty()) {
        out = t;
      } else if (t[0] == '-') {
        out += " - " + t.substr(1);
      } else {
        out += " + " + t;
      }
    }
    return "y = " + (out.empty() ? std::string("0") : out);
  }

  friend bool operator==(const GraphCurve&, const GraphCurve&) = default;
};

/// i(f, graph, O): order at x = 0 of f(x, g(x)). f lives in a two-variable
/// ring whose variables play the roles of x and y.
template <class K>
Multiplicity graph_intersection_multiplicity(const Polynomial<K>& f, const GraphCurve<K>& g);

struct TruncatedMultiplicity {
  Multiplicity value;
  bool cap_reached = false;
  unsigned stabilized_at = 0;  // N with d_N == d_{N+1}; 0 when capped
};

/// Local intersection number at the origin from the dimensions
/// d_N = dim K[x,y] / ((f, g) + (x, y)^N), stopping once d_N == d_{N+1}.
/// Default cap is 2*deg f*deg g + 4.
template <class K>
TruncatedMultiplicity truncated_local_multiplicity(const Polynomial<K>& f, const Polynomial<K>& g,
                                                   std::optional<unsigned> cap = std::nullopt);

/// Order of g1 - g2 at the origin: the intersection number of two graphs.
template <class K>
Multiplicity branch_separation(const GraphCurve<K>& g1, const GraphCurve<K>& g2);

}  // namespace curvesing
