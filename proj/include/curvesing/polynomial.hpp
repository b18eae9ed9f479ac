#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "curvesing/errors.hpp"
#include "curvesing/quadext.hpp"
#include "curvesing/rational.hpp"

namespace curvesing {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector. Slots past the ring's variable count stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exp) d += e;
    return d;
  }

  static Monomial variable(std::size_t index, unsigned power = 1) {
    Monomial m;
    m.exp[index] = static_cast<std::uint16_t>(power);
    return m;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(exp[i]) + o.exp[i];
      if (s > 0xFFFFu) throw MathError("exponent overflow");
      r.exp[i] = static_cast<std::uint16_t>(s);
    }
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exp[i] > o.exp[i]) return false;
    }
    return true;
  }

  /// o / *this; requires divides(o).
  Monomial cofactor_in(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = o.exp[i] - exp[i];
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = std::max(exp[i], o.exp[i]);
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exp[i] != 0 && o.exp[i] != 0) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exp) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Graded lexicographic comparison with variable 0 largest: <0, 0, >0.
inline int compare_grlex(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
  }
  return 0;
}

/// Ordered list of distinct variable names.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> variables);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  const std::string& name(std::size_t i) const { return vars_.at(i); }
  /// Index of a variable, or size() when absent.
  std::size_t index_of(const std::string& name) const;
  bool has(const std::string& name) const { return index_of(name) < vars_.size(); }

  std::string monomial_str(const Monomial& m) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) { return a.vars_ == b.vars_; }

 private:
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> variables);

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || *a == *b; }

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw RingMismatch();
}

namespace detail {

// Coefficient printing: returns the text of |c| (or c itself when no sign
// can be split off) and reports whether a leading minus was split.
inline std::string coefficient_body(const Rational& c, bool& negative) {
  negative = c.sign() < 0;
  return abs(c).str();
}

inline std::string coefficient_body(const QuadExt& c, bool& negative) {
  if (c.is_rational()) return coefficient_body(c.a(), negative);
  if (c.a().is_zero()) {
    negative = c.b().sign() < 0;
    return negative ? (-c).str() : c.str();
  }
  negative = false;
  return "(" + c.str() + ")";
}

inline bool body_is_one(const std::string& body) { return body == "1"; }

}  // namespace detail

/// Sparse multivariate polynomial over K (Rational or QuadExt). Terms are kept
/// sorted by graded-lex descending with no zero coefficients.
template <class K>
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    K coeff;
  };

  /// Placeholder zero without a ring; assign before use.
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    canonicalize();
  }

  static Polynomial constant(RingPtr ring, const K& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({Monomial{}, c});
    return p;
  }
  static Polynomial variable(RingPtr ring, std::size_t index) {
    if (index >= ring->size()) throw InputError("variable index out of range");
    Polynomial p(std::move(ring));
    p.terms_.push_back({Monomial::variable(index), K(1)});
    return p;
  }
  static Polynomial variable(const RingPtr& ring, const std::string& name) {
    std::size_t i = ring->index_of(name);
    if (i >= ring->size()) throw InputError("unknown variable '" + name + "'");
    return variable(ring, i);
  }
  static Polynomial monomial(RingPtr ring, const Monomial& m, const K& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.degree() == 0); }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const { return terms_.empty() ? -1 : int(terms_.front().mono.degree()); }

  /// Smallest total degree of a term; -1 for zero.
  int low_degree() const {
    if (terms_.empty()) return -1;
    return int(terms_.back().mono.degree());
  }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max<unsigned>(d, t.mono.exp[var]);
    return d;
  }

  bool involves(std::size_t var) const {
    for (const auto& t : terms_) {
      if (t.mono.exp[var] != 0) return true;
    }
    return false;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.front().mono.degree();
    for (const auto& t : terms_) {
      if (t.mono.degree() != d) return false;
    }
    return true;
  }

  Polynomial homogeneous_part(unsigned d) const {
    Polynomial p(ring_);
    for (const auto& t : terms_) {
      if (t.mono.degree() == d) p.terms_.push_back(t);
    }
    return p;
  }

  /// Leading term under graded lex; requires non-zero.
  const Term& leading_term() const {
    if (terms_.empty()) throw MathError("leading term of zero polynomial");
    return terms_.front();
  }

  K coefficient(const Monomial& m) const {
    for (const auto& t : terms_) {
      if (t.mono == m) return t.coeff;
    }
    return K(0);
  }

  K constant_term() const { return coefficient(Monomial{}); }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_ring(ring_, o.ring_);
    terms_ = merge(terms_, o.terms_, K(1));
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same_ring(ring_, o.ring_);
    terms_ = merge(terms_, o.terms_, K(-1));
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    if (a.terms_.size() == 1) return b.times_term(a.terms_[0].mono, a.terms_[0].coeff);
    if (b.terms_.size() == 1) return a.times_term(b.terms_[0].mono, b.terms_[0].coeff);
    std::unordered_map<Monomial, K, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        auto [it, inserted] = acc.try_emplace(s.mono * t.mono, s.coeff);
        if (inserted) {
          it->second *= t.coeff;
        } else {
          it->second += s.coeff * t.coeff;
        }
      }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (!c.is_zero()) out.push_back({m, std::move(c)});
    }
    Polynomial p(a.ring_);
    p.terms_ = std::move(out);
    p.sort_terms();
    return p;
  }

  Polynomial scaled(const K& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
  }

  Polynomial times_term(const Monomial& m, const K& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
    return p;  // multiplication by a monomial preserves grlex order
  }

  K evaluate(std::span<const K> point) const {
    if (point.size() != ring_->size()) throw InputError("point has wrong number of coordinates");
    K total(0);
    for (const auto& t : terms_) {
      K v = t.coeff;
      for (std::size_t i = 0; i < ring_->size(); ++i) {
        for (unsigned e = 0; e < t.mono.exp[i]; ++e) v *= point[i];
      }
      total += v;
    }
    return total;
  }

  Polynomial derivative(std::size_t var) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      if (t.mono.exp[var] == 0) continue;
      Term d = t;
      d.coeff *= K(int(t.mono.exp[var]));
      d.mono.exp[var] -= 1;
      out.push_back(std::move(d));
    }
    return Polynomial(ring_, std::move(out));
  }

  /// Same terms in another ring with the same number of variables or more.
  Polynomial in_ring(RingPtr target) const {
    Polynomial p(std::move(target));
    p.terms_ = terms_;
    return p;
  }

  template <class K2>
  Polynomial<K2> convert() const {
    std::vector<typename Polynomial<K2>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mono, K2(t.coeff)});
    return Polynomial<K2>(ring_, std::move(out));
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
      bool negative = false;
      std::string body = detail::coefficient_body(t.coeff, negative);
      std::string mono = ring_->monomial_str(t.mono);
      std::string piece;
      if (mono.empty()) {
        piece = body;
      } else if (detail::body_is_one(body)) {
        piece = mono;
      } else {
        piece = body + "*" + mono;
      }
      if (first) {
        s = negative ? "-" + piece : piece;
        first = false;
      } else {
        s += negative ? " - " : " + ";
        s += piece;
      }
    }
    return s;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    }
    return true;
  }

 private:
  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, const K& sign) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      int c = compare_grlex(a[i].mono, b[j].mono);
      if (c > 0) {
        out.push_back(a[i++]);
      } else if (c < 0) {
        out.push_back({b[j].mono, b[j].coeff * sign});
        ++j;
      } else {
        K v = a[i].coeff + b[j].coeff * sign;
        if (!v.is_zero()) out.push_back({a[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back({b[j].mono, b[j].coeff * sign});
    return out;
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return compare_grlex(x.mono, y.mono) > 0; });
  }

  void canonicalize() {
    for (const auto& t : terms_) {
      for (std::size_t i = ring_->size(); i < kMaxVars; ++i) {
        if (t.mono.exp[i] != 0) throw InputError("monomial uses a variable outside the ring");
      }
    }
    sort_terms();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff += t.coeff;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
    terms_ = std::move(out);
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

template <class K>
Polynomial<K> pow(const Polynomial<K>& base, unsigned exponent) {
  Polynomial<K> result = Polynomial<K>::constant(base.ring(), K(1));
  Polynomial<K> b = base;
  while (exponent > 0) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

template <class K>
std::ostream& operator<<(std::ostream& os, const Polynomial<K>& p) {
  return os << p.str();
}

using QPoly = Polynomial<Rational>;
using EPoly = Polynomial<QuadExt>;

extern template class Polynomial<Rational>;
extern template class Polynomial<QuadExt>;

/// Matrix of polynomials over one shared ring, row-major.
template <class K>
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial<K>(ring_)) {
    if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive");
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial<K>& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }
  void set(std::size_t r, std::size_t c, Polynomial<K> p) {
    require_same_ring(ring_, p.ring());
    entries_.at(r * cols_ + c) = std::move(p);
  }

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial<K>> entries_;
};

}  // namespace curvesing
