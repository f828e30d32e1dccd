#include "drackn/arc_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace drackn {

ArcMatrix::ArcMatrix(int n, AbelianGroup group)
    : n_(n), group_(std::move(group)), entries_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
  if (n < 1) throw std::invalid_argument("ArcMatrix: n must be positive");
  for (int u = 0; u < n; ++u) set(u, u, kDiagonal);
}

void ArcMatrix::set_pair(int u, int v, int g) {
  if (u == v) throw std::invalid_argument("ArcMatrix: diagonal cells carry no group element");
  set(u, v, g);
  set(v, u, group_.neg(g));
}

Adjacency::Adjacency(std::size_t vertices)
    : n_(vertices), words_((vertices + 63) / 64), rows_(vertices * ((vertices + 63) / 64), 0) {}

void Adjacency::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("Adjacency: vertex out of range");
  rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t Adjacency::degree(std::size_t u) const {
  std::size_t out = 0;
  for (std::size_t w = 0; w < words_; ++w) out += static_cast<std::size_t>(std::popcount(rows_[u * words_ + w]));
  return out;
}

std::size_t Adjacency::common_neighbours(std::size_t u, std::size_t v) const {
  std::size_t out = 0;
  for (std::size_t w = 0; w < words_; ++w)
    out += static_cast<std::size_t>(std::popcount(rows_[u * words_ + w] & rows_[v * words_ + w]));
  return out;
}

std::vector<std::size_t> Adjacency::neighbours(std::size_t u) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n_; ++v)
    if (has_edge(u, v)) out.push_back(v);
  return out;
}

bool Adjacency::is_symmetric() const {
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (has_edge(u, v) != has_edge(v, u)) return false;
  return true;
}

Matrix<CycNum> char_apply(const ArcMatrix& f, const Character& chi) {
  if (chi.group != f.group()) throw std::invalid_argument("char_apply: character and arc matrix use different groups");
  int root = 2;
  if (f.group().order() > 1) {
    auto p = f.group().prime_exponent();
    if (!p) throw std::invalid_argument("char_apply: group " + f.group().to_string() + " does not have prime exponent");
    root = *p;
  }
  const auto n = static_cast<std::size_t>(f.n());
  Matrix<CycNum> out(n, n, CycNum(root));
  for (int u = 0; u < f.n(); ++u)
    for (int v = 0; v < f.n(); ++v)
      if (u != v)
        out(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) =
            f.group().order() > 1 ? chi.value(f.at(u, v)) : CycNum(root, Rational(1));
  return out;
}

Adjacency regular_expand(const ArcMatrix& f) {
  const int r = f.r();
  Adjacency adj(static_cast<std::size_t>(f.n() * r));
  for (int u = 0; u < f.n(); ++u)
    for (int v = u + 1; v < f.n(); ++v)
      for (int g = 0; g < r; ++g)
        adj.add_edge(static_cast<std::size_t>(u * r + g), static_cast<std::size_t>(v * r + f.group().add(g, f.at(u, v))));
  return adj;
}

}  // namespace drackn
