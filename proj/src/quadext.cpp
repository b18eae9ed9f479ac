#include "curvesing/quadext.hpp"

#include <cctype>

namespace curvesing {

namespace {

constexpr unsigned long kTrialDivisionBound = 100000;

// Splits n > 0 as k^2 * m with m square-free as far as trial division and a
// final perfect-square test can tell.
void split_square(mpz_class n, mpz_class& k, mpz_class& m) {
  k = 1;
  for (unsigned long p = 2; p <= kTrialDivisionBound; ++p) {
    mpz_class pp = mpz_class(p) * p;
    if (pp > n) break;
    while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
      n /= pp;
      k *= p;
    }
  }
  if (n > 1 && mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    k *= r;
    n = 1;
  }
  m = n;
}

}  // namespace

Rational squarefree_radicand(const Rational& d, Rational& representative) {
  // d = p/q = p*q / q^2
  mpz_class pq = d.numerator() * d.denominator();
  int sign = sgn(pq);
  if (sign == 0) {
    representative = Rational(0);
    return Rational(0);
  }
  mpz_class k, m;
  mpz_class mag = abs(pq);
  split_square(mag, k, m);
  representative = Rational(sign < 0 ? mpz_class(-m) : m);
  return Rational(k, d.denominator());
}

QuadExt::QuadExt(const Rational& a, const Rational& b, const Rational& d) : a_(a) {
  if (b.is_zero() || d.is_zero()) return;
  Rational rep;
  Rational scale = squarefree_radicand(d, rep);
  if (rep.is_one()) {
    a_ += b * scale;
    return;
  }
  b_ = b * scale;
  d_ = rep;
}

QuadExt QuadExt::sqrt(const Rational& d) { return QuadExt(Rational(0), Rational(1), d); }

Rational QuadExt::common_radicand(const QuadExt& x, const QuadExt& y) {
  if (x.d_.is_zero()) return y.d_;
  if (y.d_.is_zero() || x.d_ == y.d_) return x.d_;
  throw ExtensionError("mismatched quadratic extensions sqrt(" + x.d_.str() + ") and sqrt(" +
                       y.d_.str() + ")");
}

void QuadExt::drop_tag_if_rational() {
  if (b_.is_zero()) d_ = Rational(0);
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = common_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  drop_tag_if_rational();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = common_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  drop_tag_if_rational();
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  Rational d = common_radicand(*this, o);
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
    return *this;
  }
  Rational na = a_ * o.a_ + d * b_ * o.b_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  d_ = d;
  drop_tag_if_rational();
  return *this;
}

QuadExt operator-(const QuadExt& x) {
  QuadExt r = x;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadExt QuadExt::conjugate() const {
  QuadExt r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational QuadExt::norm() const { return a_ * a_ - d_ * b_ * b_; }

QuadExt QuadExt::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw DivisionByZero();
  QuadExt c = conjugate();
  c.a_ /= n;
  c.b_ /= n;
  return c;
}

std::string QuadExt::str() const {
  if (b_.is_zero()) return a_.str();
  std::string radical = "sqrt(" + d_.str() + ")";
  Rational mag = abs(b_);
  std::string bpart = mag.is_one() ? radical : mag.str() + "*" + radical;
  if (a_.is_zero()) return b_.sign() < 0 ? "-" + bpart : bpart;
  return a_.str() + (b_.sign() < 0 ? " - " : " + ") + bpart;
}

QuadExt QuadExt::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty field element", 0);
  auto pos = s.find("sqrt(");
  if (pos == std::string::npos) return QuadExt(Rational::parse(s));
  auto close = s.find(')', pos);
  if (close == std::string::npos || close + 1 != s.size()) {
    throw ParseError("expected ')' closing sqrt", pos);
  }
  Rational d = Rational::parse(s.substr(pos + 5, close - pos - 5));
  // Everything before "sqrt(" is "[a](+|-)[b*]" or "[-][b*]".
  std::string head = s.substr(0, pos);
  Rational a(0), b(1);
  if (!head.empty() && head.back() == '*') {
    head.pop_back();
    // split off the coefficient of the radical: the last sign not at front
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
      if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
        split = i;
        break;
      }
    }
    if (split == std::string::npos) {
      b = Rational::parse(head);
    } else {
      a = Rational::parse(head.substr(0, split));
      b = Rational::parse(head.substr(split));
    }
  } else if (head.empty() || head == "+") {
    b = Rational(1);
  } else if (head == "-") {
    b = Rational(-1);
  } else {
    char sign = head.back();
    if (sign != '+' && sign != '-') throw ParseError("malformed field element", pos);
    head.pop_back();
    a = Rational::parse(head);
    b = Rational(sign == '-' ? -1 : 1);
  }
  return QuadExt(a, b, d);
}

}  // namespace curvesing
