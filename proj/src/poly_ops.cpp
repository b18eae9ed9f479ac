#include "curvesing/poly_ops.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

namespace curvesing {

template <class K>
std::optional<std::size_t> univariate_variable(const Polynomial<K>& u) {
  std::optional<std::size_t> var;
  for (std::size_t i = 0; i < u.ring()->size(); ++i) {
    if (!u.involves(i)) continue;
    if (var) throw InputError("expected a univariate polynomial, got " + u.str());
    var = i;
  }
  return var;
}

template <class K>
Multiplicity order_at_zero(const Polynomial<K>& u) {
  univariate_variable(u);
  if (u.is_zero()) return Multiplicity::infinite();
  return Multiplicity(static_cast<unsigned>(u.low_degree()));
}

template <class K>
Polynomial<K> compose(const Polynomial<K>& f, const std::vector<Polynomial<K>>& images) {
  if (images.size() != f.ring()->size()) throw InputError("compose needs one image per variable");
  if (images.empty()) throw InputError("compose into an empty ring");
  const RingPtr& target = images.front().ring();
  for (const auto& img : images) require_same_ring(target, img.ring());

  std::vector<std::vector<Polynomial<K>>> powers(images.size());
  auto power_of = [&](std::size_t var, unsigned e) -> const Polynomial<K>& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial<K>::constant(target, K(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[var]);
    return cache[e];
  };

  std::unordered_map<Monomial, K, MonomialHash> acc;
  for (const auto& t : f.terms()) {
    Polynomial<K> prod = Polynomial<K>::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size() && !prod.is_zero(); ++i) {
      if (t.mono.exp[i] != 0) prod = prod * power_of(i, t.mono.exp[i]);
    }
    for (const auto& pt : prod.terms()) {
      auto [it, inserted] = acc.try_emplace(pt.mono, pt.coeff);
      if (!inserted) it->second += pt.coeff;
    }
  }
  std::vector<typename Polynomial<K>::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  }
  return Polynomial<K>(target, std::move(terms));
}

template <class K>
Polynomial<K> substitute(const Polynomial<K>& f, const std::map<std::string, Polynomial<K>>& assignments) {
  if (assignments.empty()) return f;
  const RingPtr& target = assignments.begin()->second.ring();
  std::vector<Polynomial<K>> images;
  images.reserve(f.ring()->size());
  for (const auto& name : f.ring()->variables()) {
    auto it = assignments.find(name);
    if (it != assignments.end()) {
      require_same_ring(target, it->second.ring());
      images.push_back(it->second);
    } else if (f.involves(f.ring()->index_of(name)) || target->has(name)) {
      if (!target->has(name)) throw InputError("no image for variable '" + name + "'");
      images.push_back(Polynomial<K>::variable(target, name));
    } else {
      images.push_back(Polynomial<K>(target));
    }
  }
  for (const auto& [name, _] : assignments) {
    if (!f.ring()->has(name)) throw InputError("unknown variable '" + name + "' in substitution");
  }
  return compose(f, images);
}

template <class K>
Polynomial<K> linear_change(const Polynomial<K>& f, const DenseMatrix<K>& m) {
  std::size_t n = f.ring()->size();
  if (m.rows() != n || m.cols() != n) throw InputError("coordinate change has the wrong size");
  if (determinant(m).is_zero()) throw MathError("coordinate change matrix is singular");
  std::vector<Polynomial<K>> images;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<typename Polynomial<K>::Term> terms;
    for (std::size_t j = 0; j < n; ++j) {
      if (!m.at(i, j).is_zero()) terms.push_back({Monomial::variable(j), m.at(i, j)});
    }
    images.emplace_back(f.ring(), std::move(terms));
  }
  return compose(f, images);
}

template <class K>
std::vector<Polynomial<K>> coefficients_in(const Polynomial<K>& f, std::size_t var) {
  std::vector<std::vector<typename Polynomial<K>::Term>> buckets(f.degree_in(var) + 1);
  for (const auto& t : f.terms()) {
    auto term = t;
    unsigned e = term.mono.exp[var];
    term.mono.exp[var] = 0;
    buckets[e].push_back(std::move(term));
  }
  std::vector<Polynomial<K>> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(f.ring(), std::move(b));
  return out;
}

template <class K>
PolyMatrix<K> sylvester_matrix(const Polynomial<K>& a, const Polynomial<K>& b, std::size_t var,
                               unsigned formal_deg_a, unsigned formal_deg_b) {
  require_same_ring(a.ring(), b.ring());
  unsigned da = a.degree_in(var), db = b.degree_in(var);
  if (a.is_zero() || b.is_zero() || da == 0 || db == 0) {
    throw InputError("resultant needs both polynomials of positive degree in " + a.ring()->name(var));
  }
  if (formal_deg_a != 0) {
    if (formal_deg_a < da) throw InputError("formal degree below actual degree");
    da = formal_deg_a;
  }
  if (formal_deg_b != 0) {
    if (formal_deg_b < db) throw InputError("formal degree below actual degree");
    db = formal_deg_b;
  }
  auto ca = coefficients_in(a, var);
  auto cb = coefficients_in(b, var);
  auto coeff = [](const std::vector<Polynomial<K>>& c, unsigned power) {
    return power < c.size() ? c[power] : Polynomial<K>(c.front().ring());
  };
  std::size_t size = da + db;
  PolyMatrix<K> m(a.ring(), size, size);
  for (unsigned i = 0; i < db; ++i) {
    for (unsigned j = 0; j <= da; ++j) m.set(i, i + j, coeff(ca, da - j));
  }
  for (unsigned i = 0; i < da; ++i) {
    for (unsigned j = 0; j <= db; ++j) m.set(db + i, i + j, coeff(cb, db - j));
  }
  return m;
}

template <class K>
Polynomial<K> resultant(const Polynomial<K>& a, const Polynomial<K>& b, std::size_t var, unsigned formal_deg_a,
                        unsigned formal_deg_b) {
  return determinant(sylvester_matrix(a, b, var, formal_deg_a, formal_deg_b));
}

namespace {

// Determinant of the submatrix on the given rows (bitmask) and the last
// popcount(rows) entries of cols, expanding along the first of those columns.
template <class K>
const Polynomial<K>& laplace_rec(const PolyMatrix<K>& m, const std::vector<std::size_t>& cols, std::uint64_t rows,
                                 std::unordered_map<std::uint64_t, Polynomial<K>>& memo) {
  if (auto it = memo.find(rows); it != memo.end()) return it->second;
  int k = std::popcount(rows);
  Polynomial<K> total(m.ring());
  if (k == 0) {
    total = Polynomial<K>::constant(m.ring(), K(1));
  } else {
    std::size_t col = cols[cols.size() - k];
    int position = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (!(rows >> r & 1u)) continue;
      const auto& entry = m.at(r, col);
      if (!entry.is_zero()) {
        const auto& sub = laplace_rec(m, cols, rows & ~(std::uint64_t{1} << r), memo);
        if (!sub.is_zero()) {
          if (position % 2 == 0) {
            total += entry * sub;
          } else {
            total -= entry * sub;
          }
        }
      }
      ++position;
    }
  }
  return memo.emplace(rows, std::move(total)).first->second;
}

void next_subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

template <class K>
Polynomial<K> determinant_laplace(const PolyMatrix<K>& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  if (m.rows() > 63) throw InputError("matrix too large for cofactor expansion");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  std::unordered_map<std::uint64_t, Polynomial<K>> memo;
  std::uint64_t all = (std::uint64_t{1} << m.rows()) - 1;
  return laplace_rec(m, cols, all, memo);
}

template <class K>
Polynomial<K> determinant_bareiss(const PolyMatrix<K>& in) {
  if (in.rows() != in.cols()) throw InputError("determinant of a non-square matrix");
  std::size_t n = in.rows();
  std::vector<std::vector<Polynomial<K>>> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(in.at(i, j));
  }
  bool negate = false;
  Polynomial<K> prev = Polynomial<K>::constant(in.ring(), K(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return Polynomial<K>(in.ring());
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial<K> num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = divide_exact(num, prev);
      }
      a[i][k] = Polynomial<K>(in.ring());
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

template <class K>
Polynomial<K> determinant(const PolyMatrix<K>& m) {
  return m.rows() <= 16 ? determinant_laplace(m) : determinant_bareiss(m);
}

template <class K>
std::vector<Polynomial<K>> minors(const PolyMatrix<K>& m, std::size_t size) {
  if (size == 0 || size > m.rows() || size > m.cols()) throw InputError("minor size out of range");
  if (m.rows() > 63) throw InputError("matrix too large for minors");
  std::vector<std::vector<std::size_t>> row_sets, col_sets;
  next_subsets(m.rows(), size, row_sets);
  next_subsets(m.cols(), size, col_sets);
  std::vector<std::vector<Polynomial<K>>> table(row_sets.size());
  for (const auto& cols : col_sets) {
    std::unordered_map<std::uint64_t, Polynomial<K>> memo;
    for (std::size_t r = 0; r < row_sets.size(); ++r) {
      std::uint64_t mask = 0;
      for (auto i : row_sets[r]) mask |= std::uint64_t{1} << i;
      table[r].push_back(laplace_rec(m, cols, mask, memo));
    }
  }
  std::vector<Polynomial<K>> out;
  for (auto& row : table) {
    for (auto& p : row) out.push_back(std::move(p));
  }
  return out;
}

template <class K>
std::optional<Polynomial<K>> try_divide(const Polynomial<K>& a, const Polynomial<K>& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw DivisionByZero();
  const auto& lt = b.leading_term();
  K inv = K(1) / lt.coeff;
  Polynomial<K> r = a;
  std::vector<typename Polynomial<K>::Term> quotient;
  while (!r.is_zero()) {
    const auto& head = r.leading_term();
    if (!lt.mono.divides(head.mono)) return std::nullopt;
    Monomial m = lt.mono.cofactor_in(head.mono);
    K c = head.coeff * inv;
    r -= b.times_term(m, c);
    quotient.push_back({m, std::move(c)});
  }
  return Polynomial<K>(a.ring(), std::move(quotient));
}

template <class K>
Polynomial<K> divide_exact(const Polynomial<K>& a, const Polynomial<K>& b) {
  auto q = try_divide(a, b);
  if (!q) throw MathError("inexact polynomial division");
  return *q;
}

template <class K>
Polynomial<K> make_monic(const Polynomial<K>& p) {
  if (p.is_zero()) return p;
  return p.scaled(K(1) / p.leading_term().coeff);
}

namespace {

template <class K>
std::optional<std::size_t> main_variable(const Polynomial<K>& a, const Polynomial<K>& b) {
  for (std::size_t i = a.ring()->size(); i-- > 0;) {
    if (a.involves(i) || b.involves(i)) return i;
  }
  return std::nullopt;
}

template <class K>
Polynomial<K> pseudo_remainder(Polynomial<K> r, const Polynomial<K>& b, std::size_t var) {
  unsigned db = b.degree_in(var);
  Polynomial<K> lb = coefficients_in(b, var).back();
  while (!r.is_zero() && r.degree_in(var) >= db) {
    unsigned dr = r.degree_in(var);
    Polynomial<K> lr = coefficients_in(r, var).back();
    r = lb * r - (lr * b).times_term(Monomial::variable(var, dr - db), K(1));
  }
  return r;
}

template <class K>
Polynomial<K> gcd_rec(const Polynomial<K>& a, const Polynomial<K>& b);

template <class K>
Polynomial<K> content_in(const Polynomial<K>& a, std::size_t var) {
  Polynomial<K> g(a.ring());
  for (const auto& c : coefficients_in(a, var)) {
    if (c.is_zero()) continue;
    g = gcd_rec(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

template <class K>
Polynomial<K> gcd_rec(const Polynomial<K>& a, const Polynomial<K>& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.is_constant() || b.is_constant()) return Polynomial<K>::constant(a.ring(), K(1));
  std::size_t v = *main_variable(a, b);
  if (!a.involves(v)) return gcd_rec(a, content_in(b, v));
  if (!b.involves(v)) return gcd_rec(content_in(a, v), b);
  Polynomial<K> ca = content_in(a, v), cb = content_in(b, v);
  Polynomial<K> pa = divide_exact(a, ca), pb = divide_exact(b, cb);
  Polynomial<K> g = gcd_rec(ca, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  for (;;) {
    Polynomial<K> r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (!r.involves(v)) {
      pb = Polynomial<K>::constant(a.ring(), K(1));
      break;
    }
    pa = std::move(pb);
    pb = make_monic(divide_exact(r, content_in(r, v)));
  }
  return make_monic(g * pb);
}

}  // namespace

template <class K>
Polynomial<K> poly_gcd(const Polynomial<K>& a, const Polynomial<K>& b) {
  require_same_ring(a.ring(), b.ring());
  return gcd_rec(a, b);
}

template <class K>
Polynomial<K> squarefree_part(const Polynomial<K>& f) {
  if (f.is_zero()) throw MathError("square-free part of the zero polynomial");
  if (f.is_constant()) return Polynomial<K>::constant(f.ring(), K(1));
  Polynomial<K> g = f;
  for (std::size_t i = 0; i < f.ring()->size() && !g.is_constant(); ++i) {
    Polynomial<K> d = f.derivative(i);
    if (!d.is_zero()) g = poly_gcd(g, d);
  }
  return make_monic(divide_exact(f, g));
}

QPoly primitive(const QPoly& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get().get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get().get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  if (p.leading_term().coeff.sign() < 0) scale = -scale;
  return p.scaled(scale);
}

QPoly univariate_squarefree_part(const QPoly& u) {
  univariate_variable(u);
  return primitive(squarefree_part(u));
}

#define CURVESING_INSTANTIATE(K)                                                                           \
  template std::optional<std::size_t> univariate_variable(const Polynomial<K>&);                           \
  template Multiplicity order_at_zero(const Polynomial<K>&);                                               \
  template Polynomial<K> compose(const Polynomial<K>&, const std::vector<Polynomial<K>>&);                 \
  template Polynomial<K> substitute(const Polynomial<K>&, const std::map<std::string, Polynomial<K>>&);    \
  template Polynomial<K> linear_change(const Polynomial<K>&, const DenseMatrix<K>&);                       \
  template std::vector<Polynomial<K>> coefficients_in(const Polynomial<K>&, std::size_t);                  \
  template PolyMatrix<K> sylvester_matrix(const Polynomial<K>&, const Polynomial<K>&, std::size_t,         \
                                          unsigned, unsigned);                                             \
  template Polynomial<K> resultant(const Polynomial<K>&, const Polynomial<K>&, std::size_t, unsigned,      \
                                   unsigned);                                                              \
  template Polynomial<K> determinant_laplace(const PolyMatrix<K>&);                                        \
  template Polynomial<K> determinant_bareiss(const PolyMatrix<K>&);                                        \
  template Polynomial<K> determinant(const PolyMatrix<K>&);                                                \
  template std::vector<Polynomial<K>> minors(const PolyMatrix<K>&, std::size_t);                           \
  template std::optional<Polynomial<K>> try_divide(const Polynomial<K>&, const Polynomial<K>&);            \
  template Polynomial<K> divide_exact(const Polynomial<K>&, const Polynomial<K>&);                         \
  template Polynomial<K> make_monic(const Polynomial<K>&);                                                 \
  template Polynomial<K> poly_gcd(const Polynomial<K>&, const Polynomial<K>&);                             \
  template Polynomial<K> squarefree_part(const Polynomial<K>&);

CURVESING_INSTANTIATE(Rational)
CURVESING_INSTANTIATE(QuadExt)

#undef CURVESING_INSTANTIATE

}  // namespace curvesing
