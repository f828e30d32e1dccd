#include "drackn/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

namespace drackn {

namespace {

void require_prime_order(int root_order) {
  if (!is_prime(root_order))
    throw std::invalid_argument("CycNum: root order " + std::to_string(root_order) + " is not prime");
}

}  // namespace

CycNum::CycNum(int root_order) : root_order_(root_order) {
  require_prime_order(root_order);
  coeffs_.assign(static_cast<std::size_t>(root_order - 1), Rational(0));
}

CycNum::CycNum(int root_order, const Rational& value) : CycNum(root_order) {
  coeffs_[0] = value;
}

CycNum::CycNum(int root_order, std::vector<Rational> coeffs)
    : root_order_(root_order), coeffs_(std::move(coeffs)) {
  require_prime_order(root_order);
  if (coeffs_.size() != static_cast<std::size_t>(root_order - 1))
    throw std::invalid_argument("CycNum: expected " + std::to_string(root_order - 1) +
                                " coefficients, got " + std::to_string(coeffs_.size()));
  for (auto& c : coeffs_) c.canonicalize();
}

CycNum CycNum::zeta_power(int root_order, long k) {
  CycNum out(root_order);
  auto e = static_cast<int>(mod_floor(k, root_order));
  if (e < root_order - 1) {
    out.coeffs_[static_cast<std::size_t>(e)] = 1;
  } else {
    for (auto& c : out.coeffs_) c = -1;
  }
  return out;
}

CycNum CycNum::gauss_sum(int root_order) {
  if (root_order == 2) throw std::invalid_argument("gauss_sum: root order must be odd");
  CycNum out(root_order);
  for (int k = 1; k < root_order; ++k)
    out += CycNum::zeta_power(root_order, k) * Rational(legendre(k, root_order));
  return out;
}

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

std::optional<Rational> CycNum::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

std::optional<int> CycNum::root_of_unity_exponent() const {
  for (int k = 0; k < root_order_; ++k)
    if (*this == zeta_power(root_order_, k)) return k;
  return std::nullopt;
}

std::vector<Rational> CycNum::by_exponent() const {
  std::vector<Rational> out(static_cast<std::size_t>(root_order_), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i];
  return out;
}

std::vector<Rational> CycNum::reduce(std::vector<Rational> by_exponent) {
  // zeta^(r-1) = -(1 + ... + zeta^(r-2))
  const auto& top = by_exponent.back();
  std::vector<Rational> out(by_exponent.size() - 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = by_exponent[i] - top;
  return out;
}

CycNum CycNum::conj() const { return galois(-1); }

CycNum CycNum::galois(long k) const {
  if (mod_floor(k, root_order_) == 0) throw std::invalid_argument("galois: exponent divisible by root order");
  std::vector<Rational> moved(static_cast<std::size_t>(root_order_), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    moved[static_cast<std::size_t>(mod_floor(static_cast<long>(i) * k, root_order_))] += coeffs_[i];
  CycNum out(root_order_);
  out.coeffs_ = reduce(std::move(moved));
  return out;
}

Rational CycNum::norm() const {
  CycNum product(root_order_, Rational(1));
  for (int k = 1; k < root_order_; ++k) product *= galois(k);
  auto value = product.as_rational();
  if (!value) throw std::logic_error("CycNum::norm: product of conjugates is not rational");
  return *value;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycNum::inverse: division by zero");
  // a^-1 = (prod_{k>=2} sigma_k(a)) / N(a)
  CycNum others(root_order_, Rational(1));
  for (int k = 2; k < root_order_; ++k) others *= galois(k);
  auto n = (others * *this).as_rational();
  if (!n) throw std::logic_error("CycNum::inverse: norm is not rational");
  return others * Rational(1 / *n);
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

void CycNum::check_same_field(const CycNum& other) const {
  if (root_order_ != other.root_order_)
    throw std::invalid_argument("CycNum: mismatched root orders " + std::to_string(root_order_) +
                                " and " + std::to_string(other.root_order_));
}

CycNum& CycNum::operator+=(const CycNum& other) {
  check_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) {
  check_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& other) {
  check_same_field(other);
  const auto r = static_cast<std::size_t>(root_order_);
  std::vector<Rational> acc(r, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (sgn(other.coeffs_[j]) == 0) continue;
      acc[(i + j) % r] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = reduce(std::move(acc));
  return *this;
}

CycNum& CycNum::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

bool operator==(const CycNum& a, const CycNum& b) {
  return a.root_order_ == b.root_order_ && a.coeffs_ == b.coeffs_;
}

std::string CycNum::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ' ';
    out << coeffs_[i].get_num() << '/' << coeffs_[i].get_den();
  }
  return out.str();
}

}  // namespace drackn
