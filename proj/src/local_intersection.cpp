#include "curvesing/local_intersection.hpp"

#include <unordered_map>

namespace curvesing {

namespace {

template <class K>
void require_plane_ring(const Polynomial<K>& f) {
  if (f.ring()->size() != 2) throw InputError("expected a polynomial in two variables");
}

template <class K>
void require_vanishing_at_origin(const Polynomial<K>& f) {
  if (!f.constant_term().is_zero()) throw InputError("curve does not pass through the origin: " + f.str());
}

// Index of x^i y^j among monomials of degree < n, ordered by degree.
std::size_t monomial_index(unsigned i, unsigned j) {
  unsigned d = i + j;
  return d * (d + 1) / 2 + j;
}

}  // namespace

template <class K>
Multiplicity graph_intersection_multiplicity(const Polynomial<K>& f, const GraphCurve<K>& g) {
  require_plane_ring(f);
  require_vanishing_at_origin(f);
  const RingPtr& ring = f.ring();
  std::vector<Polynomial<K>> images{Polynomial<K>::variable(ring, 0), g.series(ring, 0)};
  return order_at_zero(compose(f, images));
}

template <class K>
TruncatedMultiplicity truncated_local_multiplicity(const Polynomial<K>& f, const Polynomial<K>& g,
                                                   std::optional<unsigned> cap) {
  require_plane_ring(f);
  require_same_ring(f.ring(), g.ring());
  require_vanishing_at_origin(f);
  require_vanishing_at_origin(g);
  unsigned limit = cap ? *cap
                       : 2u * unsigned(std::max(f.total_degree(), 0)) * unsigned(std::max(g.total_degree(), 0)) + 4u;
  if (f.is_zero() || g.is_zero()) return {Multiplicity::infinite(), true, 0};

  auto dimension = [&](unsigned n) -> std::size_t {
    std::size_t columns = n * (n + 1) / 2;
    DenseMatrix<K> rows(0, columns);
    for (const auto* h : {&f, &g}) {
      int low = h->low_degree();
      for (unsigned d = 0; d + unsigned(low) < n; ++d) {
        for (unsigned j = 0; j <= d; ++j) {
          std::vector<K> row(columns, K(0));
          bool nonzero = false;
          for (const auto& t : h->terms()) {
            unsigned i2 = t.mono.exp[0] + (d - j), j2 = t.mono.exp[1] + j;
            if (i2 + j2 >= n) continue;
            row[monomial_index(i2, j2)] += t.coeff;
            nonzero = true;
          }
          if (nonzero) rows.append_row(row);
        }
      }
    }
    return columns - (rows.rows() ? rank(rows) : 0);
  };

  std::size_t prev = dimension(1);
  for (unsigned n = 1; n < limit; ++n) {
    std::size_t next = dimension(n + 1);
    if (next == prev) return {Multiplicity(unsigned(prev)), false, n};
    prev = next;
  }
  return {Multiplicity::infinite(), true, 0};
}

template <class K>
Multiplicity branch_separation(const GraphCurve<K>& g1, const GraphCurve<K>& g2) {
  std::size_t n = std::max(g1.coeffs.size(), g2.coeffs.size());
  for (std::size_t i = 0; i < n; ++i) {
    K a = i < g1.coeffs.size() ? g1.coeffs[i] : K(0);
    K b = i < g2.coeffs.size() ? g2.coeffs[i] : K(0);
    if (!(a == b)) return Multiplicity(unsigned(i + 1));
  }
  return Multiplicity::infinite();
}

template Multiplicity graph_intersection_multiplicity(const Polynomial<Rational>&, const GraphCurve<Rational>&);
template Multiplicity graph_intersection_multiplicity(const Polynomial<QuadExt>&, const GraphCurve<QuadExt>&);
template TruncatedMultiplicity truncated_local_multiplicity(const Polynomial<Rational>&, const Polynomial<Rational>&,
                                                            std::optional<unsigned>);
template TruncatedMultiplicity truncated_local_multiplicity(const Polynomial<QuadExt>&, const Polynomial<QuadExt>&,
                                                            std::optional<unsigned>);
template Multiplicity branch_separation(const GraphCurve<Rational>&, const GraphCurve<Rational>&);
template Multiplicity branch_separation(const GraphCurve<QuadExt>&, const GraphCurve<QuadExt>&);

}  // namespace curvesing
