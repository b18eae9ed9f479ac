#include "curvesing/polynomial.hpp"

#include <set>

namespace curvesing {

PolyRing::PolyRing(std::vector<std::string> variables) : vars_(std::move(variables)) {
  if (vars_.size() > kMaxVars) {
    throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.empty()) throw InputError("empty variable name");
    if (!seen.insert(v).second) throw InputError("duplicate variable '" + v + "'");
  }
}

std::size_t PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return vars_.size();
}

std::string PolyRing::monomial_str(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars_[i];
    if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
  }
  return s;
}

RingPtr make_ring(std::vector<std::string> variables) {
  return std::make_shared<const PolyRing>(std::move(variables));
}

template class Polynomial<Rational>;
template class Polynomial<QuadExt>;

}  // namespace curvesing
