#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace drackn {

using Integer = mpz_class;
using Rational = mpq_class;

bool is_prime(std::int64_t value);

/// Distinct prime factors in increasing order. Requires value >= 1.
std::vector<std::int64_t> prime_factors(std::int64_t value);

/// All positive divisors in increasing order.
std::vector<std::int64_t> divisors(std::int64_t value);

bool is_perfect_square(const Integer& value);

/// Exact square root of a perfect square; throws otherwise.
Integer exact_sqrt(const Integer& value);

/// Writes a positive integer as k^2 * w with w squarefree; returns {k, w}.
std::pair<Integer, Integer> square_free_split(const Integer& value);

bool is_integer(const Rational& value);

Integer to_integer(const Rational& value);

/// Non-negative residue of value mod modulus.
inline std::int64_t mod_floor(std::int64_t value, std::int64_t modulus) {
  auto r = value % modulus;
  return r < 0 ? r + modulus : r;
}

/// Legendre symbol (a | p) for an odd prime p.
int legendre(std::int64_t a, std::int64_t p);

}  // namespace drackn
