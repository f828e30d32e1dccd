#pragma once

#include <string>

#include "drackn/number_theory.hpp"

namespace drackn {

/**
 * Real number a + b*sqrt(d) with a, b rational and d a squarefree positive
 * integer. Rationals carry d = 1 and b = 0. Arithmetic between two irrational
 * values requires the same radicand.
 */
class QuadSurd {
 public:
  QuadSurd() : QuadSurd(Rational(0)) {}
  QuadSurd(const Rational& value);  // NOLINT(google-explicit-constructor)
  QuadSurd(long value) : QuadSurd(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  /// a + b*sqrt(radicand); the radicand is reduced to its squarefree part.
  QuadSurd(const Rational& a, const Rational& b, const Integer& radicand);

  /// sqrt(value) for a non-negative rational.
  static QuadSurd sqrt(const Rational& value);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coeff() const { return b_; }
  const Integer& radicand() const { return d_; }

  bool is_rational() const { return sgn(b_) == 0; }
  bool is_integer() const { return is_rational() && drackn::is_integer(a_); }
  Rational as_rational() const;
  Integer as_integer() const;

  /// Exact sign, decided by comparing squares.
  int sign() const;
  double approx() const;

  QuadSurd conjugate() const;
  QuadSurd operator-() const;
  QuadSurd& operator+=(const QuadSurd& o);
  QuadSurd& operator-=(const QuadSurd& o);
  QuadSurd& operator*=(const QuadSurd& o);
  QuadSurd& operator/=(const QuadSurd& o);

  friend QuadSurd operator+(QuadSurd x, const QuadSurd& y) { return x += y; }
  friend QuadSurd operator-(QuadSurd x, const QuadSurd& y) { return x -= y; }
  friend QuadSurd operator*(QuadSurd x, const QuadSurd& y) { return x *= y; }
  friend QuadSurd operator/(QuadSurd x, const QuadSurd& y) { return x /= y; }

  friend bool operator==(const QuadSurd& x, const QuadSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const QuadSurd& x, const QuadSurd& y) { return !(x == y); }
  friend bool operator<(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() < 0; }
  friend bool operator<=(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() <= 0; }
  friend bool operator>(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() > 0; }
  friend bool operator>=(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() >= 0; }

  /// "7", "-1/2", "sqrt(5)", "-2*sqrt(5)", "1/2+1/2*sqrt(21)".
  std::string to_string() const;

 private:
  void normalize();
  void unify(const QuadSurd& o);

  Rational a_;
  Rational b_;
  Integer d_;
};

std::string format_rational(const Rational& value);

}  // namespace drackn
