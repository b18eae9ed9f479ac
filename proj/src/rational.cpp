#include "curvesing/rational.hpp"

#include <cctype>

namespace curvesing {

namespace {

mpz_class parse_integer(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("expected digits", offset + i);
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("unexpected character in integer", offset + j);
    }
  }
  mpz_class v(std::string(text.substr(i)), 10);
  return negative ? mpz_class(-v) : v;
}

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw DivisionByZero();
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::size_t offset = 0;
  text = trim(text, offset);
  if (text.empty()) throw ParseError("empty rational literal", offset);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, offset));
  std::size_t den_offset = offset + slash + 1;
  auto num_text = text.substr(0, slash);
  auto den_text = text.substr(slash + 1);
  std::size_t n_off = offset;
  num_text = trim(num_text, n_off);
  den_text = trim(den_text, den_offset);
  mpz_class num = parse_integer(num_text, n_off);
  mpz_class den = parse_integer(den_text, den_offset);
  if (den == 0) throw DivisionByZero();
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational r;
  mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
  return r;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }

mpz_class floor(const Rational& v) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), v.get().get_num_mpz_t(), v.get().get_den_mpz_t());
  return r;
}

bool rational_sqrt(const Rational& v, Rational& root) {
  if (v.sign() < 0) return false;
  mpz_class n = v.numerator(), d = v.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  return true;
}

}  // namespace curvesing
