#include "drackn/finite_field.hpp"

#include <stdexcept>
#include <string>

#include "drackn/number_theory.hpp"

namespace drackn {

namespace {

constexpr std::uint64_t kMaxFieldSize = 1u << 24;

// Remainder of a by a monic divisor over GF(p); coefficients low to high.
std::vector<int> poly_mod(std::vector<int> a, std::span<const int> divisor, int p) {
  const std::size_t dd = divisor.size() - 1;
  while (a.size() > dd) {
    int lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - 1 - dd;
      for (std::size_t i = 0; i <= dd; ++i)
        a[shift + i] = static_cast<int>(mod_floor(a[shift + i] - static_cast<long>(lead) * divisor[i], p));
    }
    a.pop_back();
  }
  return a;
}

}  // namespace

FiniteField::FiniteField(int p, int t) : FiniteField(p, t, default_modulus(p, t)) {}

FiniteField::FiniteField(int p, int t, std::vector<int> modulus) : p_(p), t_(t), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw std::invalid_argument("FiniteField: characteristic " + std::to_string(p) + " is not prime");
  if (t < 1) throw std::invalid_argument("FiniteField: extension degree must be positive");
  std::uint64_t size = 1;
  for (int i = 0; i < t; ++i) {
    size *= static_cast<std::uint64_t>(p);
    if (size > kMaxFieldSize) throw std::invalid_argument("FiniteField: field too large");
  }
  size_ = static_cast<Code>(size);
  if (modulus_.size() != static_cast<std::size_t>(t + 1))
    throw std::invalid_argument("FiniteField: modulus must have degree " + std::to_string(t));
  for (auto& c : modulus_) c = static_cast<int>(mod_floor(c, p));
  if (modulus_.back() != 1) throw std::invalid_argument("FiniteField: modulus must be monic");
  if (!is_irreducible(p, modulus_)) throw std::invalid_argument("FiniteField: modulus is reducible");
  build_tables();
}

std::vector<int> FiniteField::default_modulus(int p, int t) {
  if (t == 1) return {0, 1};
  if (p == 2) {
    switch (t) {
      case 2: return {1, 1, 1};
      case 3: return {1, 1, 0, 1};
      case 4: return {1, 1, 0, 0, 1};
      case 5: return {1, 0, 1, 0, 0, 1};
      case 6: return {1, 1, 0, 0, 0, 0, 1};
      case 7: return {1, 1, 0, 0, 0, 0, 0, 1};
      case 8: return {1, 1, 0, 1, 1, 0, 0, 0, 1};
      default: break;
    }
  }
  std::uint64_t count = 1;
  for (int i = 0; i < t; ++i) count *= static_cast<std::uint64_t>(p);
  std::vector<int> poly(static_cast<std::size_t>(t + 1), 0);
  poly.back() = 1;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t rest = code;
    for (int i = t - 1; i >= 0; --i) {
      poly[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(p));
      rest /= static_cast<std::uint64_t>(p);
    }
    if (is_irreducible(p, poly)) return poly;
  }
  throw std::logic_error("default_modulus: no irreducible polynomial found");
}

bool FiniteField::is_irreducible(int p, std::span<const int> poly) {
  const int t = static_cast<int>(poly.size()) - 1;
  if (t < 1) return false;
  if (t == 1) return true;
  // trial division by every monic polynomial of degree 1..t/2
  for (int deg = 1; deg <= t / 2; ++deg) {
    std::uint64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= static_cast<std::uint64_t>(p);
    std::vector<int> divisor(static_cast<std::size_t>(deg + 1), 0);
    divisor.back() = 1;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t rest = code;
      for (int i = 0; i < deg; ++i) {
        divisor[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(p));
        rest /= static_cast<std::uint64_t>(p);
      }
      std::vector<int> a(poly.begin(), poly.end());
      for (auto& c : a) c = static_cast<int>(mod_floor(c, p));
      auto rem = poly_mod(std::move(a), divisor, p);
      bool zero = true;
      for (int c : rem) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

std::vector<int> FiniteField::coefficients(Code a) const {
  if (a >= size_) throw std::out_of_range("FiniteField: element code out of range");
  std::vector<int> out(static_cast<std::size_t>(t_));
  for (int i = 0; i < t_; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(a % static_cast<Code>(p_));
    a /= static_cast<Code>(p_);
  }
  return out;
}

FiniteField::Code FiniteField::encode(std::span<const int> coeffs) const {
  if (coeffs.size() != static_cast<std::size_t>(t_))
    throw std::invalid_argument("FiniteField: expected " + std::to_string(t_) + " coefficients");
  Code out = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;)
    out = out * static_cast<Code>(p_) + static_cast<Code>(mod_floor(coeffs[i], p_));
  return out;
}

FiniteField::Code FiniteField::add(Code a, Code b) const {
  if (p_ == 2) return a ^ b;
  auto x = coefficients(a);
  auto y = coefficients(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % p_;
  return encode(x);
}

FiniteField::Code FiniteField::neg(Code a) const {
  if (p_ == 2) return a;
  auto x = coefficients(a);
  for (auto& c : x) c = (p_ - c) % p_;
  return encode(x);
}

FiniteField::Code FiniteField::sub(Code a, Code b) const { return add(a, neg(b)); }

FiniteField::Code FiniteField::slow_mul(Code a, Code b) const {
  auto x = coefficients(a);
  auto y = coefficients(b);
  std::vector<int> prod(static_cast<std::size_t>(2 * t_ - 1), 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      prod[i + j] = static_cast<int>((prod[i + j] + static_cast<long>(x[i]) * y[j]) % p_);
  auto rem = poly_mod(std::move(prod), modulus_, p_);
  rem.resize(static_cast<std::size_t>(t_), 0);
  return encode(rem);
}

void FiniteField::build_tables() {
  const std::uint64_t order = size_ - 1;
  const auto factors = prime_factors(static_cast<std::int64_t>(order));
  auto slow_pow = [&](Code g, std::uint64_t e) {
    Code result = 1;
    while (e > 0) {
      if (e & 1) result = slow_mul(result, g);
      g = slow_mul(g, g);
      e >>= 1;
    }
    return result;
  };
  Code generator = 0;
  for (Code g = 1; g < size_ && generator == 0; ++g) {
    bool primitive = true;
    for (auto q : factors)
      if (order > 1 && slow_pow(g, order / static_cast<std::uint64_t>(q)) == 1) primitive = false;
    if (primitive) generator = g;
  }
  if (generator == 0) throw std::logic_error("FiniteField: no primitive element");
  exp_.resize(static_cast<std::size_t>(order));
  log_.assign(size_, 0);
  Code x = 1;
  for (std::uint64_t k = 0; k < order; ++k) {
    exp_[k] = x;
    log_[x] = static_cast<std::uint32_t>(k);
    x = slow_mul(x, generator);
  }
}

FiniteField::Code FiniteField::mul(Code a, Code b) const {
  if (a >= size_ || b >= size_) throw std::out_of_range("FiniteField: element code out of range");
  if (a == 0 || b == 0) return 0;
  const std::uint64_t order = size_ - 1;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % order];
}

FiniteField::Code FiniteField::inv(Code a) const {
  if (a == 0) throw std::domain_error("FiniteField: inverse of zero");
  if (a >= size_) throw std::out_of_range("FiniteField: element code out of range");
  const std::uint64_t order = size_ - 1;
  return exp_[(order - log_[a]) % order];
}

FiniteField::Code FiniteField::pow(Code a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = size_ - 1;
  return exp_[static_cast<std::uint64_t>(log_[a]) * (e % order) % order];
}

FiniteField::Code FiniteField::from_int(long c) const {
  std::vector<int> coeffs(static_cast<std::size_t>(t_), 0);
  coeffs[0] = static_cast<int>(mod_floor(c, p_));
  return encode(coeffs);
}

std::vector<FiniteField::Code> FiniteField::roots(std::span<const int> poly) const {
  std::vector<Code> out;
  for (Code x = 0; x < size_; ++x) {
    Code acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = add(mul(acc, x), from_int(poly[i]));
    if (acc == 0) out.push_back(x);
  }
  return out;
}

FFElement::FFElement(std::shared_ptr<const FiniteField> f, std::vector<int> coeffs)
    : field(std::move(f)), value(std::move(coeffs)) {
  if (!field) throw std::invalid_argument("FFElement: null field");
  if (value.size() != static_cast<std::size_t>(field->degree()))
    throw std::invalid_argument("FFElement: wrong number of coefficients");
  for (auto& c : value) c = static_cast<int>(mod_floor(c, field->characteristic()));
}

FFElement ff_arith(const FFElement& x, const FFElement& y, FFOp op) {
  const auto& field = *x.field;
  if (op != FFOp::inv && !(field == *y.field)) throw std::invalid_argument("ff_arith: elements from different fields");
  FiniteField::Code result = 0;
  switch (op) {
    case FFOp::add: result = field.add(x.code(), y.code()); break;
    case FFOp::mul: result = field.mul(x.code(), y.code()); break;
    case FFOp::inv: result = field.inv(x.code()); break;
  }
  return FFElement(x.field, field.coefficients(result));
}

std::size_t rank_mod_p(std::vector<std::vector<long>> rows, int p) {
  if (!is_prime(p)) throw std::invalid_argument("rank_mod_p: modulus is not prime");
  for (auto& row : rows)
    for (auto& v : row) v = mod_floor(v, p);
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    // inverse by Fermat
    long inv = 1;
    long base = rows[rank][col];
    for (long e = p - 2; e > 0; e >>= 1) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
    }
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      long factor = rows[i][col] * inv % p;
      if (factor == 0) continue;
      for (std::size_t j = col; j < cols; ++j) rows[i][j] = mod_floor(rows[i][j] - factor * rows[rank][j], p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace drackn
