#include "drackn/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace drackn {

AbelianGroup::AbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  std::int64_t order = 1;
  for (int d : orders_) {
    if (d < 2) throw std::invalid_argument("AbelianGroup: cyclic factor order must be at least 2");
    order *= d;
    if (order > (1 << 24)) throw std::invalid_argument("AbelianGroup: group too large");
  }
  order_ = static_cast<int>(order);
}

std::optional<int> AbelianGroup::prime_exponent() const {
  if (orders_.empty()) return std::nullopt;
  for (int d : orders_)
    if (d != orders_.front()) return std::nullopt;
  if (!is_prime(orders_.front())) return std::nullopt;
  return orders_.front();
}

int AbelianGroup::index(const GroupElement& g) const {
  if (g.size() != orders_.size())
    throw std::invalid_argument("AbelianGroup: element has " + std::to_string(g.size()) + " coordinates, expected " +
                                std::to_string(orders_.size()));
  int out = 0;
  for (std::size_t i = 0; i < g.size(); ++i) out = out * orders_[i] + static_cast<int>(mod_floor(g[i], orders_[i]));
  return out;
}

GroupElement AbelianGroup::element(int index) const {
  if (index < 0 || index >= order_) throw std::out_of_range("AbelianGroup: element index out of range");
  GroupElement g(orders_.size());
  for (std::size_t i = orders_.size(); i-- > 0;) {
    g[i] = index % orders_[i];
    index /= orders_[i];
  }
  return g;
}

bool AbelianGroup::contains(const GroupElement& g) const {
  if (g.size() != orders_.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] < 0 || g[i] >= orders_[i]) return false;
  return true;
}

GroupElement AbelianGroup::reduce(GroupElement g) const {
  if (g.size() != orders_.size()) throw std::invalid_argument("AbelianGroup: coordinate count mismatch");
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = static_cast<int>(mod_floor(g[i], orders_[i]));
  return g;
}

int AbelianGroup::add(int a, int b) const {
  int out = 0;
  int scale = 1;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    const int d = orders_[i];
    out += ((a % d + b % d) % d) * scale;
    a /= d;
    b /= d;
    scale *= d;
  }
  return out;
}

int AbelianGroup::neg(int a) const {
  int out = 0;
  int scale = 1;
  for (std::size_t i = orders_.size(); i-- > 0;) {
    const int d = orders_[i];
    out += ((d - a % d) % d) * scale;
    a /= d;
    scale *= d;
  }
  return out;
}

int AbelianGroup::sub(int a, int b) const { return add(a, neg(b)); }

std::string AbelianGroup::to_string() const {
  if (orders_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(orders_[i]);
  }
  return out;
}

bool Character::is_trivial() const {
  for (int k : exponents)
    if (k != 0) return false;
  return true;
}

Rational Character::phase(int element) const {
  auto g = group.element(element);
  Rational turn(0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    Rational term(static_cast<long>(exponents[i]) * g[i], group.orders()[i]);
    term.canonicalize();
    turn += term;
  }
  // reduce into [0, 1)
  Integer whole = turn.get_num() / turn.get_den();
  turn -= Rational(whole);
  return turn;
}

int Character::exponent_of(int element) const {
  auto p = group.prime_exponent();
  if (!p) throw std::invalid_argument("Character: group " + group.to_string() + " does not have prime exponent");
  auto g = group.element(element);
  long k = 0;
  for (std::size_t i = 0; i < g.size(); ++i) k += static_cast<long>(exponents[i]) * g[i];
  return static_cast<int>(mod_floor(k, *p));
}

CycNum Character::value(int element) const {
  return CycNum::zeta_power(*group.prime_exponent(), exponent_of(element));
}

std::vector<Character> characters_of(const AbelianGroup& group) {
  // the dual group is isomorphic to the group itself; reuse its enumeration
  std::vector<Character> out;
  out.reserve(static_cast<std::size_t>(group.order()));
  for (int i = 0; i < group.order(); ++i) out.push_back(Character{group, group.element(i)});
  return out;
}

GroupRingElement::GroupRingElement(AbelianGroup g)
    : group(std::move(g)), counts(static_cast<std::size_t>(group.order()), 0) {}

GroupRingElement GroupRingElement::single(const AbelianGroup& g, int element, long count) {
  GroupRingElement out(g);
  out.counts.at(static_cast<std::size_t>(element)) = count;
  return out;
}

GroupRingElement GroupRingElement::group_sum(const AbelianGroup& g, long multiple) {
  GroupRingElement out(g);
  std::fill(out.counts.begin(), out.counts.end(), multiple);
  return out;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  if (group != o.group) throw std::invalid_argument("GroupRingElement: group mismatch");
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
  return *this;
}

GroupRingElement gring_mul(const GroupRingElement& x, const GroupRingElement& y) {
  if (x.group != y.group) throw std::invalid_argument("gring_mul: group mismatch");
  GroupRingElement out(x.group);
  const auto r = static_cast<int>(x.counts.size());
  for (int a = 0; a < r; ++a) {
    if (x.counts[static_cast<std::size_t>(a)] == 0) continue;
    for (int b = 0; b < r; ++b) {
      if (y.counts[static_cast<std::size_t>(b)] == 0) continue;
      out.counts[static_cast<std::size_t>(x.group.add(a, b))] +=
          x.counts[static_cast<std::size_t>(a)] * y.counts[static_cast<std::size_t>(b)];
    }
  }
  return out;
}

}  // namespace drackn
