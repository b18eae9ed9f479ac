#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "curvesing/linalg.hpp"
#include "curvesing/polynomial.hpp"

namespace curvesing {

/// Natural number or infinity; infinity absorbs addition.
class Multiplicity {
 public:
  Multiplicity() = default;
  explicit Multiplicity(unsigned v) : value_(v) {}
  static Multiplicity infinite() { return Multiplicity(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  /// Requires is_finite().
  unsigned value() const {
    if (!value_) throw MathError("infinite multiplicity has no finite value");
    return *value_;
  }
  std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

  friend Multiplicity operator+(const Multiplicity& a, const Multiplicity& b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return Multiplicity(*a.value_ + *b.value_);
  }
  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
  /// Finite values compare numerically; infinity is larger than every value.
  friend bool operator<(const Multiplicity& a, const Multiplicity& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.value_ < *b.value_;
  }
  bool at_least(unsigned v) const { return is_infinite() || *value_ >= v; }

 private:
  std::optional<unsigned> value_;
};

/// Index of the single variable a polynomial involves, nullopt for constants.
/// Throws InputError when more than one variable occurs.
template <class K>
std::optional<std::size_t> univariate_variable(const Polynomial<K>& u);

/// Lowest exponent with a non-zero coefficient; infinite for 0.
template <class K>
Multiplicity order_at_zero(const Polynomial<K>& u);

/// Replaces variable i of f's ring by images[i]; all images share one ring.
template <class K>
Polynomial<K> compose(const Polynomial<K>& f, const std::vector<Polynomial<K>>& images);

/// Substitution by variable name. Values must share a ring; variables of f
/// that are not assigned map to the same-named variable of that ring.
template <class K>
Polynomial<K> substitute(const Polynomial<K>& f, const std::map<std::string, Polynomial<K>>& assignments);

/// f(M x): variable i is replaced by sum_j M(i,j) x_j. M must be invertible.
template <class K>
Polynomial<K> linear_change(const Polynomial<K>& f, const DenseMatrix<K>& m);

/// Coefficients of f as a polynomial in one variable, indexed by power.
template <class K>
std::vector<Polynomial<K>> coefficients_in(const Polynomial<K>& f, std::size_t var);

/// Sylvester matrix in var. A formal degree of 0 means the actual degree;
/// larger formal degrees pad with zero leading coefficients.
template <class K>
PolyMatrix<K> sylvester_matrix(const Polynomial<K>& a, const Polynomial<K>& b, std::size_t var,
                               unsigned formal_deg_a = 0, unsigned formal_deg_b = 0);

/// Determinant of the Sylvester matrix of a and b with respect to var.
template <class K>
Polynomial<K> resultant(const Polynomial<K>& a, const Polynomial<K>& b, std::size_t var,
                        unsigned formal_deg_a = 0, unsigned formal_deg_b = 0);

/// Cofactor expansion along columns, memoized on row subsets.
template <class K>
Polynomial<K> determinant_laplace(const PolyMatrix<K>& m);

/// Fraction-free elimination with exact polynomial division.
template <class K>
Polynomial<K> determinant_bareiss(const PolyMatrix<K>& m);

template <class K>
Polynomial<K> determinant(const PolyMatrix<K>& m);

/// All size x size minors, ordered by row subset then column subset, both
/// lexicographically.
template <class K>
std::vector<Polynomial<K>> minors(const PolyMatrix<K>& m, std::size_t size);

/// Quotient a / b; nullopt when b does not divide a.
template <class K>
std::optional<Polynomial<K>> try_divide(const Polynomial<K>& a, const Polynomial<K>& b);

/// Quotient a / b; throws MathError when the division is not exact.
template <class K>
Polynomial<K> divide_exact(const Polynomial<K>& a, const Polynomial<K>& b);

/// Divides by the leading coefficient (graded-lex); zero stays zero.
template <class K>
Polynomial<K> make_monic(const Polynomial<K>& p);

/// Greatest common divisor, monic in graded-lex.
template <class K>
Polynomial<K> poly_gcd(const Polynomial<K>& a, const Polynomial<K>& b);

/// Product of the distinct irreducible factors, monic. Throws on zero input.
template <class K>
Polynomial<K> squarefree_part(const Polynomial<K>& f);

/// Scales to coprime integer coefficients with positive leading coefficient.
QPoly primitive(const QPoly& p);

/// Univariate squarefree part u / gcd(u, u'), made primitive.
QPoly univariate_squarefree_part(const QPoly& u);

}  // namespace curvesing
