#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "drackn/arc_matrix.hpp"
#include "drackn/finite_field.hpp"

namespace drackn {

/// B(v, w) = (v M_1 w^T, ..., v M_s w^T) over GF(p), for v, w in GF(p)^m.
struct AlternatingForm {
  int p = 2;
  int m = 0;
  int s = 0;
  std::vector<std::vector<std::vector<int>>> matrices;  // s matrices, m x m

  /// The standard symplectic form sum_i (v_{2i} w_{2i+1} - v_{2i+1} w_{2i}); m even, s = 1.
  static AlternatingForm standard(int p, int m);

  /// Skewness, zero diagonal, and surjectivity of every B_a, a != 0.
  /// Throws VerificationError naming the offending matrix or vector a.
  void validate() const;

  GroupElement evaluate(const GroupElement& v, const GroupElement& w) const;
};

/**
 * A GF(2)-bilinear product on V = GF(2^(td)), given by its values
 * e_i * e_j on the bit basis (e_i is the code 1 << i).
 */
class SkewProduct {
 public:
  SkewProduct(int t, int d, std::vector<std::vector<FiniteField::Code>> basis_products);

  /// x * y = x * y^(2^t) in the field V.
  static SkewProduct standard(int t, int d);

  int t() const { return t_; }
  int d() const { return d_; }
  const FiniteField& field() const { return *field_; }
  const std::vector<std::vector<FiniteField::Code>>& basis_products() const { return basis_; }

  FiniteField::Code operator()(FiniteField::Code x, FiniteField::Code y) const;

  /// Image of a GF(2^t) element (code of the default field) inside V.
  FiniteField::Code embed_scalar(FiniteField::Code lambda) const;

  /// x -> x*x bijective; GF(2^t)-bilinearity on the basis; and, when
  /// |V| <= 2^10, x*y = y*x exactly for dependent pairs. Throws VerificationError.
  void validate() const;

 private:
  int t_;
  int d_;
  std::shared_ptr<const FiniteField> field_;
  std::shared_ptr<const FiniteField> scalars_;
  FiniteField::Code scalar_root_ = 0;
  std::vector<std::vector<FiniteField::Code>> basis_;
  std::vector<std::vector<FiniteField::Code>> left_;  // left_[i][y] = e_i * y
};

/// Symmetric latin square over GF(2^t), entries as field codes.
struct LatinSquare {
  int t = 1;
  std::vector<std::vector<FiniteField::Code>> entries;

  /// s_ij = i + j.
  static LatinSquare standard(int t);
  void validate() const;
};

/// Square matrix over an abelian group; every cell holds an element index.
struct GHMatrix {
  AbelianGroup group;
  int n = 0;
  std::vector<int> entries;

  GHMatrix(AbelianGroup g, int order);
  int at(int u, int v) const { return entries[static_cast<std::size_t>(u * n + v)]; }
  void set(int u, int v, int g) { entries[static_cast<std::size_t>(u * n + v)] = g; }
  friend bool operator==(const GHMatrix& a, const GHMatrix& b) {
    return a.group == b.group && a.n == b.n && a.entries == b.entries;
  }
};

struct GHValidation {
  bool ok = false;
  int row = -1;
  int col = -1;
  std::string detail;
};

/// Fibres indexed by GF(p)^m in lexicographic order; f(v, w) = B(v, w).
ArcMatrix thas_somma(int p, int m, int s, const std::optional<AlternatingForm>& form = std::nullopt);

/// Fibres (a, i) with a in V, i in GF(2^t), index a * 2^t + i. The group
/// (Z/2)^(td) is identified with V so that group index equals the V code.
ArcMatrix dcff(int t, int d, const std::optional<SkewProduct>& skew = std::nullopt,
               const std::optional<LatinSquare>& latin = std::nullopt);

/// H = A(K_n)^f + eI. Verifies f and requires delta = -2.
GHMatrix cover_to_gh(const ArcMatrix& f, int jobs = 1);

/// H H* = nI + (n/r) G(J - I) in the group ring, cell by cell.
GHValidation gh_validate(const GHMatrix& h);

/// Shifts by the constant diagonal g0 and reads off the arc function.
ArcMatrix gh_to_cover(const GHMatrix& h);

}  // namespace drackn
