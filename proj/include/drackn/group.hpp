#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drackn/cyclotomic.hpp"

namespace drackn {

using GroupElement = std::vector<int>;

/**
 * Finite abelian group Z/d_1 x ... x Z/d_k in additive notation.
 *
 * Elements are exponent tuples; each also has an integer index given by
 * mixed-radix encoding with the first coordinate most significant, so index
 * order is lexicographic tuple order. The empty factor list is the trivial group.
 */
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<int> orders);

  static AbelianGroup cyclic(int r) { return AbelianGroup({r}); }
  static AbelianGroup elementary(int p, int s) { return AbelianGroup(std::vector<int>(static_cast<std::size_t>(s), p)); }

  const std::vector<int>& orders() const { return orders_; }
  int rank() const { return static_cast<int>(orders_.size()); }
  int order() const { return order_; }

  /// The common prime p when every factor is Z/p; nullopt otherwise (and for the trivial group).
  std::optional<int> prime_exponent() const;

  int index(const GroupElement& g) const;
  GroupElement element(int index) const;
  bool contains(const GroupElement& g) const;
  GroupElement reduce(GroupElement g) const;

  int identity() const { return 0; }
  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.orders_ == b.orders_; }
  friend bool operator!=(const AbelianGroup& a, const AbelianGroup& b) { return !(a == b); }

  /// Comma-joined factor orders, "1" for the trivial group.
  std::string to_string() const;

 private:
  std::vector<int> orders_;
  int order_ = 1;
};

/// Linear character chi(g) = prod_i exp(2 pi i k_i g_i / d_i).
struct Character {
  AbelianGroup group;
  std::vector<int> exponents;

  bool is_trivial() const;
  /// chi(g) as a fraction of a full turn, in [0, 1).
  Rational phase(int element) const;
  /// chi(g) as a CycNum; requires a prime-exponent group.
  CycNum value(int element) const;
  /// k with chi(g) = zeta_p^k for a prime-exponent group.
  int exponent_of(int element) const;
};

/// All |G| characters; the first is trivial. Ordered by exponent tuple.
std::vector<Character> characters_of(const AbelianGroup& group);

/// Element of the integral group ring Z[G]; counts indexed by element index.
struct GroupRingElement {
  AbelianGroup group;
  std::vector<long> counts;

  explicit GroupRingElement(AbelianGroup g);
  static GroupRingElement single(const AbelianGroup& g, int element, long count = 1);
  /// The full group sum.
  static GroupRingElement group_sum(const AbelianGroup& g, long multiple = 1);

  GroupRingElement& operator+=(const GroupRingElement& o);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.group == b.group && a.counts == b.counts;
  }
};

GroupRingElement gring_mul(const GroupRingElement& x, const GroupRingElement& y);

}  // namespace drackn
