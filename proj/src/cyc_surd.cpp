#include "drackn/cyc_surd.hpp"

#include <stdexcept>

namespace drackn {

CycSurd::CycSurd(CycNum x) : x_(std::move(x)), y_(x_.root_order()), d_(1) {}

CycSurd::CycSurd(CycNum x, CycNum y, Integer radicand) : x_(std::move(x)), y_(std::move(y)), d_(std::move(radicand)) {
  if (x_.root_order() != y_.root_order()) throw std::invalid_argument("CycSurd: mismatched root orders");
  if (sgn(d_) <= 0) throw std::invalid_argument("CycSurd: radicand must be positive");
  if (y_.is_zero()) {
    d_ = 1;
    return;
  }
  auto [outside, inside] = square_free_split(d_);
  y_ *= Rational(outside);
  d_ = inside;
  const int r = x_.root_order();
  if (d_ == 1) {
    x_ += y_;
    y_ = CycNum(r);
  } else if (r % 4 == 1 && d_ == r) {
    // sqrt(r) is the quadratic Gauss sum when r = 1 mod 4
    x_ += y_ * CycNum::gauss_sum(r);
    y_ = CycNum(r);
    d_ = 1;
  }
}

CycSurd CycSurd::embed(int root_order, const QuadSurd& value) {
  return CycSurd(CycNum(root_order, value.rational_part()), CycNum(root_order, value.surd_coeff()),
                 value.radicand());
}

void CycSurd::unify(const CycSurd& o) {
  if (o.in_base_field() || d_ == o.d_) return;
  if (in_base_field()) {
    d_ = o.d_;
    return;
  }
  throw std::domain_error("CycSurd: mixed radicands");
}

CycSurd CycSurd::conj() const {
  // sqrt(d) is real, so complex conjugation acts on the coefficients only
  CycSurd out = *this;
  out.x_ = x_.conj();
  out.y_ = y_.conj();
  return out;
}

CycSurd CycSurd::inverse() const {
  if (is_zero()) throw std::domain_error("CycSurd::inverse: division by zero");
  if (in_base_field()) return CycSurd(x_.inverse());
  // (x + y s)^-1 = (x - y s) / (x^2 - d y^2)
  CycNum n = x_ * x_ - y_ * y_ * Rational(d_);
  CycNum inv = n.inverse();
  CycSurd out = *this;
  out.x_ = x_ * inv;
  out.y_ = -(y_ * inv);
  return out;
}

CycSurd CycSurd::operator-() const {
  CycSurd out = *this;
  out.x_ = -x_;
  out.y_ = -y_;
  return out;
}

CycSurd& CycSurd::operator+=(const CycSurd& o) {
  unify(o);
  x_ += o.x_;
  y_ += o.y_;
  if (y_.is_zero()) d_ = 1;
  return *this;
}

CycSurd& CycSurd::operator-=(const CycSurd& o) { return *this += -o; }

CycSurd& CycSurd::operator*=(const CycSurd& o) {
  unify(o);
  Integer d = in_base_field() ? o.d_ : d_;
  CycNum x = x_ * o.x_;
  if (!y_.is_zero() && !o.y_.is_zero()) x += y_ * o.y_ * Rational(d);
  CycNum y = x_ * o.y_ + y_ * o.x_;
  x_ = std::move(x);
  y_ = std::move(y);
  d_ = y_.is_zero() ? Integer(1) : d;
  return *this;
}

bool operator==(const CycSurd& a, const CycSurd& b) {
  if (a.x_ != b.x_ || a.y_ != b.y_) return false;
  return a.y_.is_zero() || a.d_ == b.d_;
}

std::string CycSurd::to_string() const {
  if (in_base_field()) return x_.to_string();
  return x_.to_string() + " | " + y_.to_string();
}

}  // namespace drackn
