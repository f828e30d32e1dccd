#include "drackn/quadratic.hpp"

#include <cmath>
#include <stdexcept>

namespace drackn {

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

QuadSurd::QuadSurd(const Rational& value) : a_(value), b_(0), d_(1) { a_.canonicalize(); }

QuadSurd::QuadSurd(const Rational& a, const Rational& b, const Integer& radicand) : a_(a), b_(b), d_(radicand) {
  if (sgn(d_) < 0) throw std::domain_error("QuadSurd: negative radicand");
  a_.canonicalize();
  b_.canonicalize();
  normalize();
}

QuadSurd QuadSurd::sqrt(const Rational& value) {
  if (sgn(value) < 0) throw std::domain_error("QuadSurd::sqrt: negative argument");
  // sqrt(p/q) = sqrt(p q) / q
  Integer pq = value.get_num() * value.get_den();
  return QuadSurd(Rational(0), Rational(1, 1) / Rational(value.get_den()), pq);
}

void QuadSurd::normalize() {
  if (sgn(d_) == 0 || sgn(b_) == 0) {
    b_ = 0;
    d_ = 1;
    return;
  }
  auto [outside, inside] = square_free_split(d_);
  b_ *= Rational(outside);
  d_ = inside;
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
  }
}

void QuadSurd::unify(const QuadSurd& o) {
  if (o.is_rational() || d_ == o.d_) return;
  if (is_rational()) {
    d_ = o.d_;
    return;
  }
  throw std::domain_error("QuadSurd: mixed radicands sqrt(" + d_.get_str() + ") and sqrt(" + o.d_.get_str() + ")");
}

Rational QuadSurd::as_rational() const {
  if (!is_rational()) throw std::domain_error("QuadSurd: value " + to_string() + " is irrational");
  return a_;
}

Integer QuadSurd::as_integer() const { return to_integer(as_rational()); }

int QuadSurd::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // a and b*sqrt(d) have opposite signs; the larger magnitude wins.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * Rational(d_);
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

double QuadSurd::approx() const { return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d()); }

QuadSurd QuadSurd::conjugate() const {
  QuadSurd out = *this;
  out.b_ = -out.b_;
  return out;
}

QuadSurd QuadSurd::operator-() const {
  QuadSurd out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

QuadSurd& QuadSurd::operator+=(const QuadSurd& o) {
  unify(o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QuadSurd& QuadSurd::operator-=(const QuadSurd& o) { return *this += -o; }

QuadSurd& QuadSurd::operator*=(const QuadSurd& o) {
  unify(o);
  Integer d = is_rational() ? o.d_ : d_;
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize();
  return *this;
}

QuadSurd& QuadSurd::operator/=(const QuadSurd& o) {
  Rational n = o.a_ * o.a_ - o.b_ * o.b_ * Rational(o.d_);
  if (sgn(n) == 0) throw std::domain_error("QuadSurd: division by zero");
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  normalize();
  return *this;
}

std::string QuadSurd::to_string() const {
  if (is_rational()) return format_rational(a_);
  std::string root = "sqrt(" + d_.get_str() + ")";
  std::string surd;
  if (b_ == 1) {
    surd = root;
  } else if (b_ == -1) {
    surd = "-" + root;
  } else {
    surd = format_rational(b_) + "*" + root;
  }
  if (sgn(a_) == 0) return surd;
  return format_rational(a_) + (sgn(b_) > 0 ? "+" : "") + surd;
}

}  // namespace drackn
