#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "curvesing/poly_ops.hpp"

namespace curvesing {

/// Monomial order over a ranking of the ring's variables (largest first).
class TermOrder {
 public:
  enum class Kind { Grevlex, Lex, Block };

  static TermOrder grevlex(std::size_t nvars);
  static TermOrder lex(std::size_t nvars);
  /// Grevlex with the given variable ranking.
  static TermOrder grevlex(std::vector<std::size_t> ranking);
  static TermOrder lex(std::vector<std::size_t> ranking);
  /// Block order: `first` (grevlex) before the remaining variables (grevlex).
  /// Eliminates the variables in `first`.
  static TermOrder elimination(std::size_t nvars, const std::vector<std::size_t>& first);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& ranking() const { return rank_; }
  std::size_t block_size() const { return block_; }
  std::size_t size() const { return rank_.size(); }

  /// -1, 0 or 1 as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Stable text key, also used for caching.
  std::string key() const;

 private:
  TermOrder(Kind kind, std::vector<std::size_t> ranking, std::size_t block);
  int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const;

  Kind kind_;
  std::vector<std::size_t> rank_;
  std::size_t block_;
};

namespace detail {
struct GbData;
}

/// Reduced Groebner basis, monic, sorted by increasing leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr ring, TermOrder order, std::vector<QPoly> polys);

  const RingPtr& ring() const { return ring_; }
  const TermOrder& order() const { return order_; }
  const std::vector<QPoly>& polynomials() const { return polys_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  std::size_t size() const { return polys_.size(); }

  QPoly leading_term_poly(std::size_t i) const;
  /// Remainder of f on division by the basis; unique for a reduced basis.
  QPoly normal_form(const QPoly& f) const;
  bool contains(const QPoly& f) const { return normal_form(f).is_zero(); }
  bool is_unit() const;
  unsigned max_degree() const;

 private:
  RingPtr ring_;
  TermOrder order_;
  std::vector<QPoly> polys_;
  std::vector<Monomial> leads_;
  std::shared_ptr<const detail::GbData> data_;
};

struct BuchbergerStats {
  std::size_t pairs = 0;
  std::size_t zero_reductions = 0;
  std::size_t chain_skips = 0;
};

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<QPoly>& generators, const TermOrder& order,
                         BuchbergerStats* stats = nullptr);

/// Leading term of p with respect to `order`.
QPoly::Term leading_term(const QPoly& p, const TermOrder& order);

struct HilbertData {
  /// H(0), ..., H(T).
  std::vector<long long> values;
  /// Krull dimension of R/I (projective dimension + 1).
  int krull_dimension = 0;
  /// Eventual constant value; absent when the scheme has dimension >= 1.
  std::optional<long long> stable_value;
  /// First t with H(t') = stable_value for all t' >= t.
  unsigned stable_from = 0;
  /// Coefficients of the Hilbert series numerator over (1 - t)^n.
  std::vector<long long> numerator;
  std::size_t nvars = 0;

  long long at(unsigned t) const;
};

/// Hilbert function of a monomial ideal's quotient in n variables.
HilbertData hilbert_of_monomials(const std::vector<Monomial>& gens, std::size_t nvars, unsigned upto);

class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<QPoly> generators);
  static Ideal unit(RingPtr ring);
  static Ideal zero(RingPtr ring);
  /// Ideal generated by all the variables.
  static Ideal maximal_homogeneous(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<QPoly>& generators() const { return gens_; }
  bool is_homogeneous() const;
  bool is_zero() const { return gens_.empty(); }

  /// Cached reduced basis for `order`.
  const GroebnerBasis& groebner(const TermOrder& order) const;
  const GroebnerBasis& groebner() const;

  /// The reduced grevlex basis as a new presentation.
  Ideal reduced() const;
  bool contains(const QPoly& f) const { return groebner().contains(f); }
  bool contains(const Ideal& other) const;
  bool is_unit() const { return groebner().is_unit(); }

  /// "(g1, g2, ...)" using the reduced grevlex basis.
  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<QPoly> gens_;
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::unique_ptr<GroebnerBasis>> bases;
  };
  std::shared_ptr<Cache> cache_;
};

bool operator==(const Ideal& a, const Ideal& b);

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, unsigned e);
Ideal intersection(const Ideal& a, const Ideal& b);

/// Hilbert function of R/I for homogeneous I; values at least up to `upto`.
HilbertData hilbert_function(const Ideal& I, unsigned upto = 0);
HilbertData hilbert_function(const Ideal& I, const TermOrder& order, unsigned upto = 0);

/// I intersected with the subring of the remaining variables, in the same ring.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop);
/// Re-expresses I in `target` by variable name; every used variable must exist there.
Ideal restrict_to(const Ideal& I, const RingPtr& target);
QPoly move_to_ring(const QPoly& p, const RingPtr& target);
/// Ring with extra variables appended, renamed with a suffix on collision.
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra);

/// I : h^infinity.
Ideal saturate(const Ideal& I, const QPoly& h);
/// I : J^infinity.
Ideal saturate(const Ideal& I, const Ideal& J);

/// Radical of a homogeneous ideal in three variables defining finitely many
/// points of the projective plane.
Ideal zero_dim_radical(const Ideal& I);

/// Basis of the linear forms (no constant term) lying in I.
std::vector<QPoly> linear_forms_in(const Ideal& I);

/// dim m_P / (m_P^2 + I) for a homogeneous I at a projective point P.
std::size_t embedding_dimension_at(const Ideal& I, const std::vector<Rational>& point);
/// The scheme is curvilinear at P when its embedding dimension there is <= 1.
bool is_curvilinear_at(const Ideal& I, const std::vector<Rational>& point);

/// dim_K K[vars]/I for a zero-dimensional affine ideal; nullopt if infinite.
std::optional<std::size_t> affine_colength(const Ideal& I);

}  // namespace curvesing
