#include "drackn/number_theory.hpp"

#include <stdexcept>

namespace drackn {

bool is_prime(std::int64_t value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::int64_t d = 3; d * d <= value; d += 2)
    if (value % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t value) {
  if (value < 1) throw std::invalid_argument("prime_factors: value must be positive");
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= value; ++d) {
    if (value % d != 0) continue;
    out.push_back(d);
    while (value % d == 0) value /= d;
  }
  if (value > 1) out.push_back(value);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t value) {
  if (value < 1) throw std::invalid_argument("divisors: value must be positive");
  std::vector<std::int64_t> low, high;
  for (std::int64_t d = 1; d * d <= value; ++d) {
    if (value % d != 0) continue;
    low.push_back(d);
    if (d != value / d) high.push_back(value / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

bool is_perfect_square(const Integer& value) {
  return sgn(value) >= 0 && mpz_perfect_square_p(value.get_mpz_t()) != 0;
}

Integer exact_sqrt(const Integer& value) {
  if (!is_perfect_square(value)) throw std::domain_error("exact_sqrt: not a perfect square");
  Integer root;
  mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
  return root;
}

std::pair<Integer, Integer> square_free_split(const Integer& value) {
  if (sgn(value) <= 0) throw std::domain_error("square_free_split: value must be positive");
  Integer rest = value;
  Integer outside = 1;
  Integer inside = 1;
  for (Integer d = 2; d * d <= rest; ++d) {
    while (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) {
      rest /= d;
      if (mpz_divisible_p(rest.get_mpz_t(), d.get_mpz_t())) {
        rest /= d;
        outside *= d;
      } else {
        inside *= d;
      }
    }
  }
  inside *= rest;
  return {outside, inside};
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer to_integer(const Rational& value) {
  if (!is_integer(value)) throw std::domain_error("to_integer: value is not an integer");
  return value.get_num();
}

int legendre(std::int64_t a, std::int64_t p) {
  a = mod_floor(a, p);
  if (a == 0) return 0;
  // Euler's criterion
  std::int64_t result = 1;
  std::int64_t base = a;
  std::int64_t exp = (p - 1) / 2;
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::int64_t>((__int128)result * base % p);
    base = static_cast<std::int64_t>((__int128)base * base % p);
    exp >>= 1;
  }
  return result == 1 ? 1 : -1;
}

}  // namespace drackn
