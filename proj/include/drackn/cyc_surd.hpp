#pragma once

#include <string>

#include "drackn/cyclotomic.hpp"
#include "drackn/quadratic.hpp"

namespace drackn {

/**
 * Element x + y*sqrt(d) of Q(zeta_r)(sqrt(d)).
 *
 * The radicand is squarefree and sqrt(d) is never an element of Q(zeta_r); when
 * it would be (d = 1, or d = r for r = 1 mod 4) the value is folded into x and
 * the radicand is 1. This keeps the structure a field, so exact elimination
 * works unchanged.
 */
class CycSurd {
 public:
  explicit CycSurd(CycNum x);
  CycSurd(CycNum x, CycNum y, Integer radicand);

  /// Embeds a real quadratic number into Q(zeta_r)(sqrt(d)).
  static CycSurd embed(int root_order, const QuadSurd& value);

  int root_order() const { return x_.root_order(); }
  const CycNum& base() const { return x_; }
  const CycNum& surd() const { return y_; }
  const Integer& radicand() const { return d_; }

  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  bool in_base_field() const { return y_.is_zero(); }

  CycSurd conj() const;
  CycSurd inverse() const;

  CycSurd operator-() const;
  CycSurd& operator+=(const CycSurd& o);
  CycSurd& operator-=(const CycSurd& o);
  CycSurd& operator*=(const CycSurd& o);
  CycSurd& operator/=(const CycSurd& o) { return *this *= o.inverse(); }

  friend CycSurd operator+(CycSurd a, const CycSurd& b) { return a += b; }
  friend CycSurd operator-(CycSurd a, const CycSurd& b) { return a -= b; }
  friend CycSurd operator*(CycSurd a, const CycSurd& b) { return a *= b; }
  friend CycSurd operator/(CycSurd a, const CycSurd& b) { return a /= b; }

  friend bool operator==(const CycSurd& a, const CycSurd& b);
  friend bool operator!=(const CycSurd& a, const CycSurd& b) { return !(a == b); }

  /// "x-coeffs" or "x-coeffs | y-coeffs" when an extension part is present.
  std::string to_string() const;

 private:
  void unify(const CycSurd& o);

  CycNum x_;
  CycNum y_;
  Integer d_;
};

}  // namespace drackn
