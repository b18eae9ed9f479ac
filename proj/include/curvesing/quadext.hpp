#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "curvesing/rational.hpp"

namespace curvesing {

/// Element a + b*sqrt(d) of a quadratic extension of Q.
///
/// The radicand d is normalized to a square-free integer. Elements with
/// b == 0 are plain rationals and carry d == 0; they combine with any
/// extension. Two irrational elements must share d, otherwise the
/// operation throws ExtensionError.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(int v) : a_(v) {}
  QuadExt(const Rational& a) : a_(a) {}
  QuadExt(const Rational& a, const Rational& b, const Rational& d);

  /// sqrt(d); a plain rational when d is a rational square.
  static QuadExt sqrt(const Rational& d);

  /// Parses the textual form produced by str(): "a", "a + b*sqrt(d)",
  /// "b*sqrt(d)", "-sqrt(d)", ...
  static QuadExt parse(std::string_view text);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return b_.is_zero() && a_.is_one(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadExt conjugate() const;
  /// a^2 - d*b^2, multiplicative.
  Rational norm() const;
  QuadExt inverse() const;

  std::string str() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o) { return *this *= o.inverse(); }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator-(const QuadExt& x);

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }

 private:
  static Rational common_radicand(const QuadExt& x, const QuadExt& y);
  void drop_tag_if_rational();

  Rational a_;
  Rational b_;
  Rational d_;
};

/// Square-free integer representative s of d with d = c^2 * s; returns c.
Rational squarefree_radicand(const Rational& d, Rational& representative);

inline std::ostream& operator<<(std::ostream& os, const QuadExt& v) { return os << v.str(); }

}  // namespace curvesing
