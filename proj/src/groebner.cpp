#include "curvesing/groebner.hpp"

#include <numeric>
#include <random>
#include <set>

namespace curvesing {

// ---------------------------------------------------------------- orders

TermOrder::TermOrder(Kind kind, std::vector<std::size_t> ranking, std::size_t block)
    : kind_(kind), rank_(std::move(ranking)), block_(block) {
  std::vector<bool> seen(rank_.size(), false);
  for (auto v : rank_) {
    if (v >= rank_.size() || seen[v]) throw InputError("term order ranking is not a permutation");
    seen[v] = true;
  }
}

static std::vector<std::size_t> identity_ranking(std::size_t n) {
  std::vector<std::size_t> r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

TermOrder TermOrder::grevlex(std::size_t nvars) { return TermOrder(Kind::Grevlex, identity_ranking(nvars), 0); }
TermOrder TermOrder::lex(std::size_t nvars) { return TermOrder(Kind::Lex, identity_ranking(nvars), 0); }
TermOrder TermOrder::grevlex(std::vector<std::size_t> ranking) { return TermOrder(Kind::Grevlex, std::move(ranking), 0); }
TermOrder TermOrder::lex(std::vector<std::size_t> ranking) { return TermOrder(Kind::Lex, std::move(ranking), 0); }

TermOrder TermOrder::elimination(std::size_t nvars, const std::vector<std::size_t>& first) {
  std::vector<std::size_t> ranking = first;
  for (std::size_t v = 0; v < nvars; ++v) {
    if (std::find(first.begin(), first.end(), v) == first.end()) ranking.push_back(v);
  }
  return TermOrder(Kind::Block, std::move(ranking), first.size());
}

int TermOrder::grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
  unsigned da = 0, db = 0;
  for (std::size_t k = lo; k < hi; ++k) {
    da += a.exp[rank_[k]];
    db += b.exp[rank_[k]];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t k = hi; k-- > lo;) {
    auto ea = a.exp[rank_[k]], eb = b.exp[rank_[k]];
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (auto v : rank_) {
        if (a.exp[v] != b.exp[v]) return a.exp[v] > b.exp[v] ? 1 : -1;
      }
      return 0;
    case Kind::Grevlex:
      return grevlex_range(a, b, 0, rank_.size());
    case Kind::Block: {
      int c = grevlex_range(a, b, 0, block_);
      return c ? c : grevlex_range(a, b, block_, rank_.size());
    }
  }
  return 0;
}

std::string TermOrder::key() const {
  std::string k = kind_ == Kind::Lex ? "lex" : kind_ == Kind::Grevlex ? "grevlex" : "block" + std::to_string(block_);
  for (auto v : rank_) k += ":" + std::to_string(v);
  return k;
}

// ---------------------------------------------------------------- engine

namespace detail {

struct GTerm {
  Monomial m;
  Rational c;
};

struct GPoly {
  std::vector<GTerm> t;  // decreasing in the order
  unsigned sugar = 0;
  std::uint32_t mask = 0;
};

std::uint32_t divmask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (m.exp[i] > 0) mask |= 1u << i;
    if (m.exp[i] > 1) mask |= 1u << (i + 16);
  }
  return mask;
}

struct Engine {
  const TermOrder& ord;

  GPoly from_poly(const QPoly& p) const {
    GPoly g;
    g.t.reserve(p.size());
    for (const auto& t : p.terms()) g.t.push_back({t.mono, t.coeff});
    std::sort(g.t.begin(), g.t.end(), [&](const GTerm& a, const GTerm& b) { return ord.greater(a.m, b.m); });
    g.sugar = p.is_zero() ? 0 : unsigned(p.total_degree());
    finish(g);
    return g;
  }

  static void finish(GPoly& g) { g.mask = g.t.empty() ? 0 : divmask(g.t.front().m); }

  static void make_monic(GPoly& g) {
    if (g.t.empty() || g.t.front().c.is_one()) return;
    Rational inv = g.t.front().c.inverse();
    for (auto& t : g.t) t.c *= inv;
  }

  // a[from..] - c * m * b[1..], assuming c*m*lt(b) cancelled a[from - 1]'s term.
  std::vector<GTerm> sub_mul(const std::vector<GTerm>& a, std::size_t from, const Rational& c, const Monomial& m,
                             const std::vector<GTerm>& b) const {
    std::vector<GTerm> out;
    out.reserve(a.size() - from + b.size());
    std::size_t i = from, j = 1;
    Monomial mj;
    bool have = false;
    while (i < a.size() || j < b.size()) {
      if (j < b.size() && !have) {
        mj = m * b[j].m;
        have = true;
      }
      int cmp = i >= a.size() ? -1 : j >= b.size() ? 1 : ord.compare(a[i].m, mj);
      if (cmp > 0) {
        out.push_back(a[i++]);
      } else if (cmp < 0) {
        out.push_back({mj, -(c * b[j].c)});
        ++j;
        have = false;
      } else {
        Rational v = a[i].c - c * b[j].c;
        if (!v.is_zero()) out.push_back({mj, std::move(v)});
        ++i;
        ++j;
        have = false;
      }
    }
    return out;
  }

  const GPoly* find_divisor(const Monomial& m, const std::vector<const GPoly*>& basis) const {
    std::uint32_t mask = divmask(m);
    for (const GPoly* g : basis) {
      if ((g->mask & ~mask) != 0) continue;
      if (g->t.front().m.divides(m)) return g;
    }
    return nullptr;
  }

  // Full reduction. Updates sugar when given.
  std::vector<GTerm> reduce(std::vector<GTerm> p, const std::vector<const GPoly*>& basis, unsigned* sugar) const {
    std::vector<GTerm> rem;
    std::size_t pos = 0;
    while (pos < p.size()) {
      const GPoly* g = find_divisor(p[pos].m, basis);
      if (!g) {
        rem.push_back(std::move(p[pos]));
        ++pos;
        continue;
      }
      const GTerm& lead = g->t.front();
      Monomial q = lead.m.cofactor_in(p[pos].m);
      Rational c = lead.c.is_one() ? p[pos].c : p[pos].c / lead.c;
      if (sugar) *sugar = std::max(*sugar, g->sugar + q.degree());
      p = sub_mul(p, pos + 1, c, q, g->t);
      pos = 0;
    }
    return rem;
  }

  std::vector<GTerm> times(const GPoly& g, const Monomial& m) const {
    std::vector<GTerm> out;
    out.reserve(g.t.size());
    for (const auto& t : g.t) out.push_back({m * t.m, t.c});
    return out;
  }
};

struct GbData {
  TermOrder order;
  std::vector<GPoly> polys;
};

}  // namespace detail

using detail::Engine;
using detail::GPoly;
using detail::GTerm;

namespace {

QPoly to_poly(const RingPtr& ring, const std::vector<GTerm>& t) {
  std::vector<QPoly::Term> terms;
  terms.reserve(t.size());
  for (const auto& x : t) terms.push_back({x.m, x.c});
  return QPoly(ring, std::move(terms));
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

}  // namespace

QPoly::Term leading_term(const QPoly& p, const TermOrder& order) {
  if (p.is_zero()) throw MathError("zero polynomial has no leading term");
  const QPoly::Term* best = &p.terms().front();
  for (const auto& t : p.terms()) {
    if (order.greater(t.mono, best->mono)) best = &t;
  }
  return *best;
}

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<QPoly>& generators, const TermOrder& order,
                         BuchbergerStats* stats) {
  if (order.size() != ring->size()) throw InputError("term order does not match the ring");
  Engine eng{order};
  std::vector<GPoly> G;
  std::vector<bool> alive;
  std::vector<Pair> pairs;
  BuchbergerStats local;

  auto basis_view = [&] {
    std::vector<const GPoly*> view;
    for (std::size_t k = 0; k < G.size(); ++k) {
      if (alive[k]) view.push_back(&G[k]);
    }
    return view;
  };

  auto update = [&](std::size_t h) {
    const Monomial& lh = G[h].t.front().m;
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> C;
    for (std::size_t g = 0; g < h; ++g) {
      if (!alive[g]) continue;
      const Monomial& lg = G[g].t.front().m;
      C.push_back({g, lg.lcm(lh), lg.coprime(lh)});
    }
    std::vector<Cand> D;
    for (std::size_t k = 0; k < C.size(); ++k) {
      const Cand& c = C[k];
      bool keep = c.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < C.size() && keep; ++l) {
          if (C[l].lcm.divides(c.lcm)) keep = false;
        }
        for (const auto& d : D) {
          if (!keep) break;
          if (d.lcm.divides(c.lcm)) keep = false;
        }
      }
      if (keep) D.push_back(c);
    }
    std::vector<Pair> kept;
    for (auto& p : pairs) {
      bool drop = lh.divides(p.lcm) && !(G[p.i].t.front().m.lcm(lh) == p.lcm) &&
                  !(G[p.j].t.front().m.lcm(lh) == p.lcm);
      if (drop) {
        ++local.chain_skips;
      } else {
        kept.push_back(std::move(p));
      }
    }
    pairs = std::move(kept);
    for (const auto& d : D) {
      if (d.coprime) {
        ++local.chain_skips;
        continue;
      }
      const GPoly& a = G[d.g];
      const GPoly& b = G[h];
      unsigned sa = a.sugar + d.lcm.degree() - a.t.front().m.degree();
      unsigned sb = b.sugar + d.lcm.degree() - b.t.front().m.degree();
      pairs.push_back({d.g, h, d.lcm, std::max(sa, sb)});
    }
    for (std::size_t g = 0; g < h; ++g) {
      if (alive[g] && lh.divides(G[g].t.front().m)) alive[g] = false;
    }
  };

  auto insert = [&](std::vector<GTerm> t, unsigned sugar) {
    GPoly g;
    g.t = std::move(t);
    g.sugar = sugar;
    Engine::make_monic(g);
    Engine::finish(g);
    G.push_back(std::move(g));
    alive.push_back(true);
    update(G.size() - 1);
  };

  std::vector<GPoly> inputs;
  for (const auto& f : generators) {
    require_same_ring(ring, f.ring());
    if (!f.is_zero()) inputs.push_back(eng.from_poly(f));
  }
  std::stable_sort(inputs.begin(), inputs.end(), [&](const GPoly& a, const GPoly& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    return order.compare(a.t.front().m, b.t.front().m) < 0;
  });
  for (auto& in : inputs) {
    unsigned sugar = in.sugar;
    auto r = eng.reduce(std::move(in.t), basis_view(), &sugar);
    if (!r.empty()) insert(std::move(r), sugar);
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      if (a.sugar != b.sugar ? a.sugar < b.sugar : order.compare(a.lcm, b.lcm) < 0) best = k;
    }
    Pair p = pairs[best];
    pairs[best] = pairs.back();
    pairs.pop_back();
    ++local.pairs;

    const GPoly& a = G[p.i];
    const GPoly& b = G[p.j];
    Monomial qa = a.t.front().m.cofactor_in(p.lcm), qb = b.t.front().m.cofactor_in(p.lcm);
    std::vector<GTerm> s = eng.sub_mul(eng.times(a, qa), 1, Rational(1), qb, b.t);
    unsigned sugar = p.sugar;
    auto r = eng.reduce(std::move(s), basis_view(), &sugar);
    if (r.empty()) {
      ++local.zero_reductions;
      continue;
    }
    insert(std::move(r), sugar);
  }

  // Inter-reduce the minimal basis.
  std::vector<GPoly> final;
  auto view = basis_view();
  for (std::size_t k = 0; k < view.size(); ++k) {
    std::vector<const GPoly*> others;
    for (std::size_t l = 0; l < view.size(); ++l) {
      if (l != k) others.push_back(view[l]);
    }
    GPoly g;
    g.t = eng.reduce(view[k]->t, others, nullptr);
    g.sugar = view[k]->sugar;
    Engine::make_monic(g);
    Engine::finish(g);
    final.push_back(std::move(g));
  }
  std::sort(final.begin(), final.end(),
            [&](const GPoly& x, const GPoly& y) { return order.compare(x.t.front().m, y.t.front().m) < 0; });
  if (stats) *stats = local;

  std::vector<QPoly> polys;
  for (const auto& g : final) polys.push_back(to_poly(ring, g.t));
  return GroebnerBasis(ring, order, std::move(polys));
}

// ---------------------------------------------------------------- basis

GroebnerBasis::GroebnerBasis(RingPtr ring, TermOrder order, std::vector<QPoly> polys)
    : ring_(std::move(ring)), order_(std::move(order)), polys_(std::move(polys)) {
  auto data = std::make_shared<detail::GbData>(detail::GbData{order_, {}});
  Engine eng{data->order};
  for (const auto& p : polys_) {
    GPoly g = eng.from_poly(p);
    leads_.push_back(g.t.front().m);
    data->polys.push_back(std::move(g));
  }
  data_ = std::move(data);
}

QPoly GroebnerBasis::leading_term_poly(std::size_t i) const {
  return QPoly(ring_, {{leads_.at(i), data_->polys.at(i).t.front().c}});
}

QPoly GroebnerBasis::normal_form(const QPoly& f) const {
  require_same_ring(ring_, f.ring());
  Engine eng{data_->order};
  std::vector<const GPoly*> view;
  for (const auto& g : data_->polys) view.push_back(&g);
  return to_poly(ring_, eng.reduce(eng.from_poly(f).t, view, nullptr));
}

bool GroebnerBasis::is_unit() const {
  return std::any_of(leads_.begin(), leads_.end(), [](const Monomial& m) { return m.degree() == 0; });
}

unsigned GroebnerBasis::max_degree() const {
  unsigned d = 0;
  for (const auto& p : polys_) d = std::max(d, unsigned(p.total_degree()));
  return d;
}

// ---------------------------------------------------------------- Hilbert

namespace {

using Series = std::vector<long long>;

void add_shifted(Series& a, const Series& b, unsigned shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

void trim(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out) {
      if (o.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

// Numerator N(t) of the Hilbert series N(t) / (1 - t)^n of R / (gens).
Series hilbert_numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().degree() == 0) return {};
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!gens[i].coprime(gens[j])) {
        coprime = false;
        break;
      }
    }
  }
  if (coprime) {
    Series s{1};
    for (const auto& g : gens) {
      Series next = s;
      Series shifted(g.degree() + s.size(), 0);
      for (std::size_t i = 0; i < s.size(); ++i) shifted[i + g.degree()] = -s[i];
      add_shifted(next, shifted, 0);
      s = std::move(next);
    }
    trim(s);
    return s;
  }
  auto support = [](const Monomial& m) {
    int c = 0;
    for (auto e : m.exp) c += e > 0;
    return c;
  };
  const Monomial* mixed = nullptr;
  for (const auto& g : gens) {
    if (support(g) >= 2) {
      mixed = &g;
      break;
    }
  }
  std::size_t var = 0;
  int best = -1;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (mixed->exp[v] == 0) continue;
    int count = 0;
    for (const auto& g : gens) count += g.exp[v] > 0;
    if (count > best) {
      best = count;
      var = v;
    }
  }
  unsigned e = mixed->exp[var];
  for (const auto& g : gens) {
    if (g.exp[var] > 0 && support(g) >= 2) e = std::min<unsigned>(e, g.exp[var]);
  }
  Monomial pivot = Monomial::variable(var, e);
  std::vector<Monomial> with = gens;
  with.push_back(pivot);
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial q = g;
    q.exp[var] = std::uint16_t(q.exp[var] > e ? q.exp[var] - e : 0);
    colon.push_back(q);
  }
  Series s = hilbert_numerator(std::move(with));
  add_shifted(s, hilbert_numerator(std::move(colon)), e);
  trim(s);
  return s;
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

long long HilbertData::at(unsigned t) const {
  if (t < values.size()) return values[t];
  long long h = 0;
  for (std::size_t k = 0; k < numerator.size() && k <= t; ++k) {
    h += numerator[k] * binomial(static_cast<long long>(t - k + nvars) - 1, static_cast<long long>(nvars) - 1);
  }
  return h;
}

HilbertData hilbert_of_monomials(const std::vector<Monomial>& gens, std::size_t nvars, unsigned upto) {
  HilbertData h;
  h.nvars = nvars;
  h.numerator = hilbert_numerator(gens);
  Series q = h.numerator;
  std::size_t c = 0;
  if (q.empty()) {
    h.krull_dimension = 0;
  } else {
    while (c < nvars) {
      long long total = std::accumulate(q.begin(), q.end(), 0LL);
      if (total != 0) break;
      Series next(q.size() - 1);
      long long run = 0;
      for (std::size_t k = 0; k + 1 < q.size(); ++k) next[k] = run += q[k];
      q = std::move(next);
      trim(q);
      ++c;
    }
    h.krull_dimension = int(nvars - c);
  }
  if (h.krull_dimension == 0) {
    h.stable_value = 0;
    h.stable_from = unsigned(q.size());
  } else if (h.krull_dimension == 1) {
    h.stable_value = std::accumulate(q.begin(), q.end(), 0LL);
    h.stable_from = q.empty() ? 0 : unsigned(q.size() - 1);
  }
  unsigned last = std::max(upto, h.stable_from + 2);
  for (unsigned t = 0; t <= last; ++t) h.values.push_back(h.at(t));
  return h;
}

// ---------------------------------------------------------------- ideals

Ideal::Ideal(RingPtr ring, std::vector<QPoly> generators) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  QPoly one = QPoly::constant(ring, Rational(1));
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal Ideal::maximal_homogeneous(RingPtr ring) {
  std::vector<QPoly> vars;
  for (std::size_t i = 0; i < ring->size(); ++i) vars.push_back(QPoly::variable(ring, i));
  return Ideal(std::move(ring), std::move(vars));
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const QPoly& g) { return g.is_homogeneous(); });
}

const GroebnerBasis& Ideal::groebner(const TermOrder& order) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto& slot = cache_->bases[order.key()];
  if (!slot) slot = std::make_unique<GroebnerBasis>(buchberger(ring_, gens_, order));
  return *slot;
}

const GroebnerBasis& Ideal::groebner() const { return groebner(TermOrder::grevlex(ring_->size())); }

Ideal Ideal::reduced() const {
  const GroebnerBasis& gb = groebner();
  Ideal out(ring_, gb.polynomials());
  out.cache_->bases[gb.order().key()] = std::make_unique<GroebnerBasis>(gb);
  return out;
}

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(ring_, other.ring());
  const GroebnerBasis& gb = groebner();
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](const QPoly& g) { return gb.contains(g); });
}

std::string Ideal::str() const {
  std::string s = "(";
  bool first = true;
  for (const auto& p : groebner().polynomials()) {
    if (!first) s += ", ";
    s += p.str();
    first = false;
  }
  return s + ")";
}

bool operator==(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  return a.groebner().polynomials() == b.groebner().polynomials();
}

Ideal sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<QPoly> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(g));
}

Ideal product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<QPoly> g;
  std::set<std::string> seen;
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) {
      QPoly p = x * y;
      if (seen.insert(p.str()).second) g.push_back(std::move(p));
    }
  }
  return Ideal(a.ring(), std::move(g));
}

Ideal power(const Ideal& a, unsigned e) {
  Ideal r = Ideal::unit(a.ring());
  for (unsigned k = 0; k < e; ++k) r = product(r, a);
  return r;
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra) {
  std::vector<std::string> names = ring->variables();
  for (auto name : extra) {
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "_";
    names.push_back(name);
  }
  return make_ring(std::move(names));
}

QPoly move_to_ring(const QPoly& p, const RingPtr& target) {
  const RingPtr& src = p.ring();
  std::vector<std::size_t> where(src->size(), target->size());
  for (std::size_t i = 0; i < src->size(); ++i) where[i] = target->index_of(src->name(i));
  std::vector<QPoly::Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < src->size(); ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (where[i] >= target->size()) throw InputError("variable " + src->name(i) + " is not in the target ring");
      m.exp[where[i]] = t.mono.exp[i];
    }
    terms.push_back({m, t.coeff});
  }
  return QPoly(target, std::move(terms));
}

Ideal restrict_to(const Ideal& I, const RingPtr& target) {
  std::vector<QPoly> g;
  for (const auto& p : I.generators()) g.push_back(move_to_ring(p, target));
  return Ideal(target, std::move(g));
}

namespace {

std::vector<QPoly> eliminate_indices(const RingPtr& ring, const std::vector<QPoly>& gens,
                                     const std::vector<std::size_t>& drop) {
  if (drop.empty()) return gens;
  GroebnerBasis gb = buchberger(ring, gens, TermOrder::elimination(ring->size(), drop));
  std::vector<QPoly> out;
  for (const auto& p : gb.polynomials()) {
    bool clean = std::none_of(drop.begin(), drop.end(), [&](std::size_t v) { return p.involves(v); });
    if (clean) out.push_back(p);
  }
  return out;
}

// Eliminates the trailing auxiliary variables of an extended ring.
Ideal eliminate_auxiliary(const RingPtr& ring, const RingPtr& big, const std::vector<QPoly>& gens) {
  std::vector<std::size_t> drop;
  for (std::size_t v = ring->size(); v < big->size(); ++v) drop.push_back(v);
  std::vector<QPoly> kept;
  for (const auto& p : eliminate_indices(big, gens, drop)) kept.push_back(p.in_ring(ring));
  return Ideal(ring, std::move(kept));
}

}  // namespace

Ideal intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  RingPtr big = extend_ring(a.ring(), {"t"});
  QPoly t = QPoly::variable(big, a.ring()->size());
  QPoly one_minus_t = QPoly::constant(big, Rational(1)) - t;
  std::vector<QPoly> g;
  for (const auto& p : a.generators()) g.push_back(t * p.in_ring(big));
  for (const auto& p : b.generators()) g.push_back(one_minus_t * p.in_ring(big));
  return eliminate_auxiliary(a.ring(), big, g);
}

HilbertData hilbert_function(const Ideal& I, const TermOrder& order, unsigned upto) {
  if (!I.is_homogeneous()) throw InputError("Hilbert function needs a homogeneous ideal");
  const GroebnerBasis& gb = I.groebner(order);
  return hilbert_of_monomials(gb.leading_monomials(), I.ring()->size(), std::max(upto, gb.max_degree() + 3));
}

HilbertData hilbert_function(const Ideal& I, unsigned upto) {
  return hilbert_function(I, TermOrder::grevlex(I.ring()->size()), upto);
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop) {
  std::vector<std::size_t> idx;
  for (const auto& name : drop) {
    std::size_t i = I.ring()->index_of(name);
    if (i >= I.ring()->size()) throw InputError("unknown variable " + name);
    idx.push_back(i);
  }
  return Ideal(I.ring(), eliminate_indices(I.ring(), I.generators(), idx));
}

// ---------------------------------------------------------------- saturation

namespace {

// Coordinates y with y_j = h(x) and y_i = x_i otherwise: x = M * y.
struct LinearChart {
  std::size_t j;
  DenseMatrix<Rational> to_x;    // M
  DenseMatrix<Rational> to_y;    // M^-1
};

LinearChart chart_for(const QPoly& h) {
  std::size_t n = h.ring()->size();
  std::vector<Rational> c(n, Rational(0));
  for (const auto& t : h.terms()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (t.mono.exp[i]) c[i] = t.coeff;
    }
  }
  std::size_t j = n;
  for (std::size_t i = n; i-- > 0;) {
    if (!c[i].is_zero()) {
      j = i;
      break;
    }
  }
  if (j == n) throw MathError("expected a non-zero linear form");
  LinearChart ch{j, DenseMatrix<Rational>::identity(n), DenseMatrix<Rational>::identity(n)};
  Rational inv = c[j].inverse();
  for (std::size_t i = 0; i < n; ++i) {
    ch.to_y.at(j, i) = c[i];
    ch.to_x.at(j, i) = i == j ? inv : -c[i] * inv;
  }
  return ch;
}

bool is_identity(const DenseMatrix<Rational>& m) { return m == DenseMatrix<Rational>::identity(m.rows()); }

QPoly change(const QPoly& p, const DenseMatrix<Rational>& m) { return is_identity(m) ? p : linear_change(p, m); }

// Homogeneous I, linear h: reduced basis with h last in grevlex, divided by h.
Ideal saturate_linear(const Ideal& I, const QPoly& h) {
  const RingPtr& ring = I.ring();
  LinearChart ch = chart_for(h);
  std::vector<QPoly> gens;
  for (const auto& g : I.generators()) gens.push_back(change(g, ch.to_x));
  std::vector<std::size_t> ranking;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    if (i != ch.j) ranking.push_back(i);
  }
  ranking.push_back(ch.j);
  GroebnerBasis gb = buchberger(ring, gens, TermOrder::grevlex(ranking));
  std::vector<QPoly> out;
  for (const auto& p : gb.polynomials()) {
    unsigned k = ~0u;
    for (const auto& t : p.terms()) k = std::min<unsigned>(k, t.mono.exp[ch.j]);
    QPoly q = p;
    if (k > 0) {
      std::vector<QPoly::Term> terms;
      for (auto t : p.terms()) {
        t.mono.exp[ch.j] = std::uint16_t(t.mono.exp[ch.j] - k);
        terms.push_back(std::move(t));
      }
      q = QPoly(ring, std::move(terms));
    }
    out.push_back(change(q, ch.to_y));
  }
  return Ideal(ring, std::move(out));
}

bool empty_projective_scheme(const Ideal& I) { return hilbert_function(I).krull_dimension == 0; }

}  // namespace

Ideal saturate(const Ideal& I, const QPoly& h) {
  require_same_ring(I.ring(), h.ring());
  if (h.is_zero()) return Ideal::unit(I.ring());
  if (h.is_constant() || I.is_zero()) return I;
  if (I.is_homogeneous() && h.is_homogeneous() && h.total_degree() == 1) return saturate_linear(I, h);
  RingPtr big = extend_ring(I.ring(), {"t"});
  QPoly t = QPoly::variable(big, I.ring()->size());
  std::vector<QPoly> g;
  for (const auto& p : I.generators()) g.push_back(p.in_ring(big));
  g.push_back(QPoly::constant(big, Rational(1)) - t * h.in_ring(big));
  return eliminate_auxiliary(I.ring(), big, g);
}

Ideal saturate(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring());
  if (J.is_zero()) return Ideal::unit(I.ring());
  if (J.generators().size() == 1) return saturate(I, J.generators().front());
  if (I.is_zero()) return I;
  if (I.is_homogeneous() && J.is_homogeneous()) {
    // A linear h in J with V(I + h) empty gives I : h^oo = I : m^oo = I : J^oo.
    std::vector<QPoly> forms = linear_forms_in(J);
    if (!forms.empty()) {
      std::vector<QPoly> candidates;
      QPoly total(I.ring());
      for (const auto& f : forms) total += f;
      candidates.push_back(total);
      candidates.insert(candidates.end(), forms.begin(), forms.end());
      std::mt19937 rng(1009u);
      for (int k = 0; k < 3; ++k) {
        QPoly r(I.ring());
        for (const auto& f : forms) r += f.scaled(Rational(int(rng() % 19) - 9));
        candidates.push_back(r);
      }
      for (const auto& h : candidates) {
        if (h.is_zero()) continue;
        if (empty_projective_scheme(sum(I, Ideal(I.ring(), {h})))) return saturate(I, h);
      }
    }
  }
  Ideal result = saturate(I, J.generators().front());
  for (std::size_t k = 1; k < J.generators().size(); ++k) {
    result = intersection(result, saturate(I, J.generators()[k]));
  }
  return result;
}

// ---------------------------------------------------------------- radical

std::vector<QPoly> linear_forms_in(const Ideal& I) {
  const RingPtr& ring = I.ring();
  const GroebnerBasis& gb = I.groebner();
  std::size_t n = ring->size();
  std::vector<QPoly> nf;
  std::vector<Monomial> monos;
  for (std::size_t i = 0; i < n; ++i) {
    nf.push_back(gb.normal_form(QPoly::variable(ring, i)));
    for (const auto& t : nf.back().terms()) {
      if (std::find(monos.begin(), monos.end(), t.mono) == monos.end()) monos.push_back(t.mono);
    }
  }
  DenseMatrix<Rational> m(monos.size(), n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& t : nf[i].terms()) {
      std::size_t row = std::size_t(std::find(monos.begin(), monos.end(), t.mono) - monos.begin());
      m.at(row, i) = t.coeff;
    }
  }
  std::vector<QPoly> out;
  for (const auto& v : kernel(m)) {
    std::vector<QPoly::Term> terms;
    for (std::size_t i = 0; i < n; ++i) {
      if (!v[i].is_zero()) terms.push_back({Monomial::variable(i), v[i]});
    }
    out.push_back(QPoly(ring, std::move(terms)));
  }
  return out;
}

namespace {

// Monic generator of I ∩ K[x_var] for a zero-dimensional affine ideal, from the
// first linear dependency among the normal forms of 1, x, x^2, ...
QPoly minimal_polynomial(const GroebnerBasis& gb, std::size_t var) {
  const RingPtr& ring = gb.ring();
  QPoly x = QPoly::variable(ring, var);
  std::vector<QPoly> powers{gb.normal_form(QPoly::constant(ring, Rational(1)))};
  for (unsigned k = 1; k < 4096; ++k) {
    powers.push_back(gb.normal_form(x * powers.back()));
    std::vector<Monomial> monos;
    for (const auto& p : powers) {
      for (const auto& t : p.terms()) {
        if (std::find(monos.begin(), monos.end(), t.mono) == monos.end()) monos.push_back(t.mono);
      }
    }
    DenseMatrix<Rational> m(std::max<std::size_t>(monos.size(), 1), powers.size());
    for (std::size_t c = 0; c < powers.size(); ++c) {
      for (const auto& t : powers[c].terms()) {
        m.at(std::size_t(std::find(monos.begin(), monos.end(), t.mono) - monos.begin()), c) = t.coeff;
      }
    }
    auto ker = kernel(m);
    if (ker.empty()) continue;
    const auto& v = ker.front();
    std::vector<QPoly::Term> terms;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) terms.push_back({Monomial::variable(var, unsigned(i)), v[i]});
    }
    return make_monic(QPoly(ring, std::move(terms)));
  }
  throw MathError("affine chart ideal is not zero-dimensional");
}

}  // namespace

Ideal zero_dim_radical(const Ideal& I) {
  const RingPtr& ring = I.ring();
  if (ring->size() != 3) throw InputError("zero-dimensional radical expects three homogeneous variables");
  if (!I.is_homogeneous()) throw InputError("zero-dimensional radical expects a homogeneous ideal");
  HilbertData h = hilbert_function(I);
  if (h.krull_dimension == 0) return Ideal::maximal_homogeneous(ring);
  if (h.krull_dimension > 1) throw MathError("ideal is not zero-dimensional in the projective plane");

  std::mt19937 rng(77u);
  for (int attempt = 0; attempt < 5; ++attempt) {
    QPoly ell(ring);
    if (attempt == 0) {
      ell = QPoly::variable(ring, 2);
    } else {
      for (std::size_t i = 0; i < 3; ++i) {
        ell += QPoly::variable(ring, i).scaled(Rational(int(rng() % 11) - 5));
      }
    }
    if (ell.is_zero() || !empty_projective_scheme(sum(I, Ideal(ring, {ell})))) continue;

    LinearChart ch = chart_for(ell);
    std::vector<std::string> names;
    std::vector<std::size_t> slot;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i == ch.j) continue;
      names.push_back(ring->name(i));
      slot.push_back(i);
    }
    RingPtr aff = make_ring(names);
    std::vector<QPoly> images(3, QPoly(aff));
    images[slot[0]] = QPoly::variable(aff, 0);
    images[slot[1]] = QPoly::variable(aff, 1);
    images[ch.j] = QPoly::constant(aff, Rational(1));
    // A homogeneous grevlex basis with ell last dehomogenizes to an affine basis.
    std::vector<QPoly> moved;
    for (const auto& g : I.generators()) moved.push_back(change(g, ch.to_x));
    GroebnerBasis hom_gb = buchberger(ring, moved, TermOrder::grevlex(std::vector<std::size_t>{slot[0], slot[1], ch.j}));
    std::vector<QPoly> gens;
    for (const auto& g : hom_gb.polynomials()) gens.push_back(compose(g, images));

    GroebnerBasis chart_gb = buchberger(aff, gens, TermOrder::grevlex(2));
    for (std::size_t v = 0; v < 2; ++v) gens.push_back(univariate_squarefree_part(minimal_polynomial(chart_gb, v)));

    GroebnerBasis affine_gb = buchberger(aff, gens, TermOrder::grevlex(2));
    std::vector<QPoly> out;
    for (const auto& p : affine_gb.polynomials()) {
      unsigned d = unsigned(p.total_degree());
      std::vector<QPoly::Term> terms;
      for (const auto& t : p.terms()) {
        Monomial m;
        m.exp[slot[0]] = t.mono.exp[0];
        m.exp[slot[1]] = t.mono.exp[1];
        m.exp[ch.j] = std::uint16_t(d - t.mono.degree());
        terms.push_back({m, t.coeff});
      }
      out.push_back(change(QPoly(ring, std::move(terms)), ch.to_y));
    }
    return Ideal(ring, std::move(out)).reduced();
  }
  throw MathError("no suitable chart found for the radical computation");
}

// ---------------------------------------------------------------- local data

std::optional<std::size_t> affine_colength(const Ideal& I) {
  const GroebnerBasis& gb = I.groebner();
  if (gb.is_unit()) return 0;
  std::size_t n = I.ring()->size();
  std::vector<unsigned> bound(n, 0);
  for (const auto& m : gb.leading_monomials()) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m.exp[i]) {
        ++support;
        var = i;
      }
    }
    if (support == 1 && (bound[var] == 0 || m.exp[var] < bound[var])) bound[var] = m.exp[var];
  }
  for (auto b : bound) {
    if (b == 0) return std::nullopt;
  }
  std::size_t count = 0;
  Monomial m;
  // odometer over the box of pure-power bounds
  while (true) {
    bool standard = std::none_of(gb.leading_monomials().begin(), gb.leading_monomials().end(),
                                 [&](const Monomial& l) { return l.divides(m); });
    count += standard;
    std::size_t i = 0;
    while (i < n && ++m.exp[i] == bound[i]) m.exp[i++] = 0;
    if (i == n) break;
  }
  return count;
}

std::size_t embedding_dimension_at(const Ideal& I, const std::vector<Rational>& point) {
  const RingPtr& ring = I.ring();
  std::size_t n = ring->size();
  if (point.size() != n) throw InputError("point has the wrong number of coordinates");
  std::size_t k = n;
  for (std::size_t i = n; i-- > 0;) {
    if (!point[i].is_zero()) {
      k = i;
      break;
    }
  }
  if (k == n) throw InputError("the zero vector is not a projective point");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != k) names.push_back(ring->name(i));
  }
  RingPtr aff = make_ring(names);
  std::vector<QPoly> images;
  for (std::size_t i = 0, a = 0; i < n; ++i) {
    if (i == k) {
      images.push_back(QPoly::constant(aff, Rational(1)));
    } else {
      images.push_back(QPoly::variable(aff, a++) + QPoly::constant(aff, point[i] / point[k]));
    }
  }
  std::vector<QPoly> gens;
  for (const auto& g : I.generators()) gens.push_back(compose(g, images));
  for (std::size_t a = 0; a < aff->size(); ++a) {
    for (std::size_t b = a; b < aff->size(); ++b) gens.push_back(QPoly::variable(aff, a) * QPoly::variable(aff, b));
  }
  std::size_t colength = *affine_colength(Ideal(aff, gens));
  if (colength == 0) throw InputError("point does not lie on the scheme");
  return colength - 1;
}

bool is_curvilinear_at(const Ideal& I, const std::vector<Rational>& point) {
  return embedding_dimension_at(I, point) <= 1;
}

}  // namespace curvesing
