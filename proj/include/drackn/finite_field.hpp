#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace drackn {

/**
 * GF(p^t) with elements encoded as integers: the code of
 * c_0 + c_1 x + ... + c_{t-1} x^{t-1} is sum c_k p^k. Multiplication goes
 * through exp/log tables built at construction.
 */
class FiniteField {
 public:
  using Code = std::uint32_t;

  /// Uses the pinned default modulus (table for p = 2, t <= 8; otherwise the
  /// lexicographically first monic irreducible).
  FiniteField(int p, int t);
  /// Modulus coefficients low to high, monic of degree t; must be irreducible.
  FiniteField(int p, int t, std::vector<int> modulus);

  static std::vector<int> default_modulus(int p, int t);
  static bool is_irreducible(int p, std::span<const int> poly);

  int characteristic() const { return p_; }
  int degree() const { return t_; }
  Code size() const { return size_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code pow(Code a, std::uint64_t e) const;
  /// The element c * 1 for an integer c.
  Code from_int(long c) const;

  std::vector<int> coefficients(Code a) const;
  Code encode(std::span<const int> coeffs) const;

  /// Roots of a polynomial with coefficients in the prime field, low to high.
  std::vector<Code> roots(std::span<const int> poly) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    return a.p_ == b.p_ && a.t_ == b.t_ && a.modulus_ == b.modulus_;
  }

 private:
  Code slow_mul(Code a, Code b) const;
  void build_tables();

  int p_;
  int t_;
  Code size_;
  std::vector<int> modulus_;
  std::vector<Code> exp_;
  std::vector<std::uint32_t> log_;
};

/// A field element carrying its field; arithmetic checks the fields agree.
struct FFElement {
  std::shared_ptr<const FiniteField> field;
  std::vector<int> value;

  FFElement(std::shared_ptr<const FiniteField> f, std::vector<int> coeffs);
  FiniteField::Code code() const { return field->encode(value); }
  friend bool operator==(const FFElement& a, const FFElement& b) {
    return *a.field == *b.field && a.value == b.value;
  }
};

enum class FFOp { add, mul, inv };

/// Field operation on elements of the same field; `y` is ignored for inv.
FFElement ff_arith(const FFElement& x, const FFElement& y, FFOp op);

/// Rank of an integer matrix reduced mod a prime p (rows given row-major).
std::size_t rank_mod_p(std::vector<std::vector<long>> rows, int p);

}  // namespace drackn
