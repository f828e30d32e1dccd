#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drackn/number_theory.hpp"

namespace drackn {

/**
 * Exact element of the cyclotomic field Q(zeta) for zeta = exp(2 pi i / r), r prime.
 *
 * Stored in the basis {1, zeta, ..., zeta^(r-2)}: the relation
 * zeta^(r-1) = -(1 + zeta + ... + zeta^(r-2)) is applied eagerly, so two values
 * are equal exactly when their coefficient vectors are equal. For r = 2 the
 * field is Q itself and zeta = -1.
 */
class CycNum {
 public:
  /// Zero of Q(zeta_r).
  explicit CycNum(int root_order);
  CycNum(int root_order, const Rational& value);
  CycNum(int root_order, std::vector<Rational> coeffs);

  /// zeta_r^k for any integer k.
  static CycNum zeta_power(int root_order, long k);

  /// Quadratic Gauss sum sum_k (k|r) zeta^k; squares to (-1)^((r-1)/2) r. Odd r only.
  static CycNum gauss_sum(int root_order);

  int root_order() const { return root_order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  /// k in [0, r) with *this == zeta^k, if any.
  std::optional<int> root_of_unity_exponent() const;

  CycNum conj() const;
  /// Galois automorphism zeta -> zeta^k, gcd(k, r) = 1.
  CycNum galois(long k) const;
  /// Field norm down to Q: product of all Galois conjugates.
  Rational norm() const;
  CycNum inverse() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);
  CycNum& operator*=(const Rational& scalar);
  CycNum& operator/=(const CycNum& other) { return *this *= other.inverse(); }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator*(CycNum a, const Rational& s) { return a *= s; }
  friend CycNum operator*(const Rational& s, CycNum a) { return a *= s; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Coefficients as space-separated "a/b" tokens.
  std::string to_string() const;

 private:
  void check_same_field(const CycNum& other) const;
  /// Reduces a length-r vector indexed by exponent mod r into the canonical basis.
  static std::vector<Rational> reduce(std::vector<Rational> by_exponent);
  std::vector<Rational> by_exponent() const;

  int root_order_;
  std::vector<Rational> coeffs_;
};

}  // namespace drackn
