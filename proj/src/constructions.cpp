#include "drackn/constructions.hpp"

#include <bit>
#include <stdexcept>

#include "drackn/cover.hpp"
#include "drackn/number_theory.hpp"

namespace drackn {

namespace {

using Code = FiniteField::Code;

std::string tuple_string(const std::vector<int>& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + std::to_string(g[i]);
  return out;
}

int checked_power(int base, int exponent, int limit) {
  long out = 1;
  for (int i = 0; i < exponent; ++i) {
    out *= base;
    if (out > limit) throw std::invalid_argument("construction too large: " + std::to_string(base) + "^" + std::to_string(exponent));
  }
  return static_cast<int>(out);
}

}  // namespace

AlternatingForm AlternatingForm::standard(int p, int m) {
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("standard symplectic form needs even m >= 2, got m=" + std::to_string(m));
  AlternatingForm form{p, m, 1, {std::vector<std::vector<int>>(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0))}};
  auto& mat = form.matrices[0];
  for (int i = 0; i + 1 < m; i += 2) {
    mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 1;
    mat[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = p - 1;
  }
  return form;
}

void AlternatingForm::validate() const {
  if (!is_prime(p)) throw std::invalid_argument("alternating form: p=" + std::to_string(p) + " is not prime");
  if (s < 1 || m < s) throw std::invalid_argument("alternating form: need m >= s >= 1");
  if (matrices.size() != static_cast<std::size_t>(s)) throw std::invalid_argument("alternating form: expected s matrices");
  for (int k = 0; k < s; ++k) {
    const auto& mat = matrices[static_cast<std::size_t>(k)];
    if (mat.size() != static_cast<std::size_t>(m)) throw std::invalid_argument("alternating form: matrix is not m x m");
    for (int i = 0; i < m; ++i) {
      if (mat[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("alternating form: matrix is not m x m");
      if (mod_floor(mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)], p) != 0)
        throw VerificationError("form-not-alternating", "matrix-" + std::to_string(k) + "-diagonal-" + std::to_string(i));
      for (int j = 0; j < m; ++j)
        if (mod_floor(mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] + mat[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)], p) != 0)
          throw VerificationError("form-not-alternating", "matrix-" + std::to_string(k) + "-cell-(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  const AbelianGroup v_space = AbelianGroup::elementary(p, m);
  for (int idx = 1; idx < v_space.order(); ++idx) {
    const auto a = v_space.element(idx);
    std::vector<std::vector<long>> rows;
    for (const auto& mat : matrices) {
      std::vector<long> row(static_cast<std::size_t>(m), 0);
      for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) row[static_cast<std::size_t>(j)] += static_cast<long>(a[static_cast<std::size_t>(i)]) * mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      rows.push_back(std::move(row));
    }
    if (rank_mod_p(rows, p) != static_cast<std::size_t>(s)) throw VerificationError("form-not-surjective", "a=" + tuple_string(a));
  }
}

GroupElement AlternatingForm::evaluate(const GroupElement& v, const GroupElement& w) const {
  GroupElement out(static_cast<std::size_t>(s), 0);
  for (int k = 0; k < s; ++k) {
    long acc = 0;
    const auto& mat = matrices[static_cast<std::size_t>(k)];
    for (int i = 0; i < m; ++i) {
      if (v[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j < m; ++j)
        acc += static_cast<long>(v[static_cast<std::size_t>(i)]) * mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(j)];
    }
    out[static_cast<std::size_t>(k)] = static_cast<int>(mod_floor(acc, p));
  }
  return out;
}

SkewProduct::SkewProduct(int t, int d, std::vector<std::vector<Code>> basis_products)
    : t_(t), d_(d), basis_(std::move(basis_products)) {
  if (t < 1 || d < 1) throw std::invalid_argument("skew product: t and d must be positive");
  if (d % 2 == 0) throw std::invalid_argument("skew product: no skew product exists for even d=" + std::to_string(d));
  const int dim = t * d;
  if (dim > 16) throw std::invalid_argument("skew product: td=" + std::to_string(dim) + " exceeds 16");
  field_ = std::make_shared<const FiniteField>(2, dim);
  scalars_ = std::make_shared<const FiniteField>(2, t);
  if (basis_.size() != static_cast<std::size_t>(dim)) throw std::invalid_argument("skew product: expected td rows of basis products");
  for (const auto& row : basis_) {
    if (row.size() != static_cast<std::size_t>(dim)) throw std::invalid_argument("skew product: expected td basis products per row");
    for (auto c : row)
      if (c >= field_->size()) throw std::invalid_argument("skew product: basis product code out of range");
  }
  // the scalar field sits inside V through the smallest root of its modulus
  if (t > 1) scalar_root_ = field_->roots(scalars_->modulus()).front();
  const Code size = field_->size();
  left_.assign(static_cast<std::size_t>(dim), std::vector<Code>(size, 0));
  for (int i = 0; i < dim; ++i)
    for (Code y = 1; y < size; ++y) {
      const int low = std::countr_zero(y);
      left_[static_cast<std::size_t>(i)][y] = left_[static_cast<std::size_t>(i)][y & (y - 1)] ^ basis_[static_cast<std::size_t>(i)][static_cast<std::size_t>(low)];
    }
}

SkewProduct SkewProduct::standard(int t, int d) {
  if (d % 2 == 0) throw std::invalid_argument("skew product: no skew product exists for even d=" + std::to_string(d));
  const int dim = t * d;
  if (dim > 16) throw std::invalid_argument("skew product: td=" + std::to_string(dim) + " exceeds 16");
  const FiniteField v(2, dim);
  const std::uint64_t frob = std::uint64_t{1} << t;
  std::vector<std::vector<Code>> basis(static_cast<std::size_t>(dim), std::vector<Code>(static_cast<std::size_t>(dim)));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v.mul(Code{1} << i, v.pow(Code{1} << j, frob));
  return SkewProduct(t, d, std::move(basis));
}

Code SkewProduct::operator()(Code x, Code y) const {
  Code out = 0;
  for (; x != 0; x &= x - 1) out ^= left_[static_cast<std::size_t>(std::countr_zero(x))][y];
  return out;
}

Code SkewProduct::embed_scalar(Code lambda) const {
  if (lambda >= scalars_->size()) throw std::out_of_range("skew product: scalar code out of range");
  const auto coeffs = scalars_->coefficients(lambda);
  Code out = 0;
  Code power = 1;
  for (int c : coeffs) {
    if (c) out ^= power;
    power = field_->mul(power, scalar_root_);
  }
  return out;
}

void SkewProduct::validate() const {
  const Code size = field_->size();
  const int dim = t_ * d_;
  std::vector<char> hit(size, 0);
  for (Code x = 0; x < size; ++x) {
    const Code sq = (*this)(x, x);
    if (hit[sq]) throw VerificationError("skew-not-bijective", "x*x=" + std::to_string(sq) + "-twice");
    hit[sq] = 1;
  }
  if (t_ > 1) {
    const Code lambda = scalar_root_;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const Code ei = Code{1} << i;
        const Code ej = Code{1} << j;
        const Code scaled = field_->mul(lambda, (*this)(ei, ej));
        if ((*this)(field_->mul(lambda, ei), ej) != scaled || (*this)(ei, field_->mul(lambda, ej)) != scaled)
          throw VerificationError("skew-not-bilinear", "basis-pair-(" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
  }
  if (size <= (Code{1} << 10)) {
    std::vector<char> in_scalars(size, 0);
    for (Code l = 0; l < scalars_->size(); ++l) in_scalars[embed_scalar(l)] = 1;
    for (Code x = 1; x < size; ++x) {
      const Code x_inv = field_->inv(x);
      for (Code y = 1; y < size; ++y) {
        const bool dependent = in_scalars[field_->mul(y, x_inv)];
        const bool commute = (*this)(x, y) == (*this)(y, x);
        if (dependent != commute)
          throw VerificationError("skew-commutation", "x=" + std::to_string(x) + ",y=" + std::to_string(y));
      }
    }
  }
}

LatinSquare LatinSquare::standard(int t) {
  const int q = checked_power(2, t, 1 << 16);
  LatinSquare sq{t, std::vector<std::vector<Code>>(static_cast<std::size_t>(q), std::vector<Code>(static_cast<std::size_t>(q)))};
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) sq.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<Code>(i ^ j);
  return sq;
}

void LatinSquare::validate() const {
  const auto q = static_cast<std::size_t>(checked_power(2, t, 1 << 16));
  if (entries.size() != q) throw std::invalid_argument("latin square: expected " + std::to_string(q) + " rows");
  for (std::size_t i = 0; i < q; ++i) {
    if (entries[i].size() != q) throw std::invalid_argument("latin square: row " + std::to_string(i) + " has the wrong length");
    std::vector<char> seen(q, 0);
    for (std::size_t j = 0; j < q; ++j) {
      const Code v = entries[i][j];
      if (v >= q || seen[v]) throw VerificationError("latin-row", "row-" + std::to_string(i));
      seen[v] = 1;
      if (entries[j].size() == q && entries[j][i] != v)
        throw VerificationError("latin-not-symmetric", "cell-(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
}

GHMatrix::GHMatrix(AbelianGroup g, int order)
    : group(std::move(g)), n(order), entries(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0) {}

ArcMatrix thas_somma(int p, int m, int s, const std::optional<AlternatingForm>& form) {
  if (!is_prime(p)) throw std::invalid_argument("thas-somma: p=" + std::to_string(p) + " is not prime");
  if (s < 1 || m < s) throw std::invalid_argument("thas-somma: need m >= s >= 1");
  AlternatingForm b;
  if (form) {
    if (form->p != p || form->m != m || form->s != s) throw std::invalid_argument("thas-somma: form parameters do not match p, m, s");
    b = *form;
  } else {
    if (s != 1) throw std::invalid_argument("thas-somma: s > 1 needs a user-supplied form");
    b = AlternatingForm::standard(p, m);
  }
  b.validate();
  const int n = checked_power(p, m, 1 << 14);
  const AbelianGroup fibres = AbelianGroup::elementary(p, m);
  ArcMatrix f(n, AbelianGroup::elementary(p, s));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) f.set_pair(u, v, f.group().index(b.evaluate(fibres.element(u), fibres.element(v))));
  return f;
}

ArcMatrix dcff(int t, int d, const std::optional<SkewProduct>& skew, const std::optional<LatinSquare>& latin) {
  if (t < 1 || d < 1) throw std::invalid_argument("dcff: t and d must be positive");
  if (d % 2 == 0) throw std::invalid_argument("dcff: d=" + std::to_string(d) + " is even; skew products exist only for odd d");
  const SkewProduct star = skew ? *skew : SkewProduct::standard(t, d);
  if (star.t() != t || star.d() != d) throw std::invalid_argument("dcff: skew product parameters do not match t, d");
  star.validate();
  const LatinSquare square = latin ? *latin : LatinSquare::standard(t);
  if (square.t != t) throw std::invalid_argument("dcff: latin square order does not match t");
  square.validate();

  const int q = 1 << t;
  const int dim = t * d;
  const auto size = static_cast<Code>(1u << dim);
  const int n = checked_power(2, t * (d + 1), 1 << 14);
  ArcMatrix f(n, AbelianGroup::elementary(2, dim));
  const auto& v = star.field();
  std::vector<Code> scalar(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) scalar[static_cast<std::size_t>(i)] = star.embed_scalar(static_cast<Code>(i));
  for (Code a = 0; a < size; ++a) {
    const Code aa = star(a, a);
    for (Code b = a; b < size; ++b) {
      const Code cross = star(a, b) ^ star(b, a);
      const Code squares = aa ^ star(b, b);
      for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
          const int u = static_cast<int>(a) * q + i;
          const int w = static_cast<int>(b) * q + j;
          if (u >= w) continue;
          const Code s_ij = scalar[square.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]];
          f.set_pair(u, w, static_cast<int>(cross ^ v.mul(s_ij, squares)));
        }
    }
  }
  return f;
}

GHMatrix cover_to_gh(const ArcMatrix& f, int jobs) {
  const auto cert = drackn_verify(f, jobs);
  if (cert.params.delta != -2)
    throw VerificationError("delta", "delta=" + std::to_string(cert.params.delta) + "-but-a-GH-matrix-needs-delta=-2");
  GHMatrix h(f.group(), f.n());
  for (int u = 0; u < f.n(); ++u)
    for (int v = 0; v < f.n(); ++v) h.set(u, v, u == v ? f.group().identity() : f.at(u, v));
  return h;
}

GHValidation gh_validate(const GHMatrix& h) {
  const int n = h.n;
  const int r = h.group.order();
  GHValidation out;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      GroupRingElement cell(h.group);
      for (int w = 0; w < n; ++w) ++cell.counts[static_cast<std::size_t>(h.group.sub(h.at(u, w), h.at(v, w)))];
      bool ok = false;
      if (u == v) {
        ok = cell == GroupRingElement::single(h.group, h.group.identity(), n);
      } else {
        ok = n % r == 0 && cell == GroupRingElement::group_sum(h.group, n / r);
      }
      if (!ok) {
        out.row = u;
        out.col = v;
        std::string counts;
        for (std::size_t g = 0; g < cell.counts.size(); ++g) counts += (g ? "," : "") + std::to_string(cell.counts[g]);
        out.detail = "cell-(" + std::to_string(u) + "," + std::to_string(v) + ")-counts-" + counts;
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

ArcMatrix gh_to_cover(const GHMatrix& h) {
  if (h.n < 1) throw std::invalid_argument("gh-to-cover: empty matrix");
  const int g0 = h.at(0, 0);
  for (int u = 1; u < h.n; ++u)
    if (h.at(u, u) != g0) throw VerificationError("diagonal-not-constant", "cell-(" + std::to_string(u) + "," + std::to_string(u) + ")");
  const auto check = gh_validate(h);
  if (!check.ok) throw VerificationError("gh-identity", check.detail);
  ArcMatrix f(h.n, h.group);
  for (int u = 0; u < h.n; ++u)
    for (int v = u + 1; v < h.n; ++v) {
      const int x = h.group.sub(h.at(u, v), g0);
      const int y = h.group.sub(h.at(v, u), g0);
      if (y != h.group.neg(x))
        throw VerificationError("not-self-adjoint", "cells-(" + std::to_string(u) + "," + std::to_string(v) + ")-and-(" +
                                                        std::to_string(v) + "," + std::to_string(u) + ")");
      f.set_pair(u, v, x);
    }
  return f;
}

}  // namespace drackn
