#pragma once

#include <cstdint>
#include <vector>

#include "drackn/group.hpp"
#include "drackn/matrix.hpp"

namespace drackn {

/**
 * Arc function of a cover of K_n over an abelian group, stored as element
 * indices of the group. Diagonal cells hold kDiagonal. Fibres are numbered
 * from 0, so the normalizing star is centred at fibre 0.
 */
class ArcMatrix {
 public:
  static constexpr int kDiagonal = -1;

  /// The arc function that is the identity on every arc.
  ArcMatrix(int n, AbelianGroup group);

  int n() const { return n_; }
  const AbelianGroup& group() const { return group_; }
  int r() const { return group_.order(); }

  int at(int u, int v) const { return entries_[static_cast<std::size_t>(u * n_ + v)]; }
  GroupElement element(int u, int v) const { return group_.element(at(u, v)); }

  /// Raw write of one cell; does not touch the mirrored cell.
  void set(int u, int v, int g) { entries_[static_cast<std::size_t>(u * n_ + v)] = g; }
  /// Sets f(u,v) = g and f(v,u) = -g.
  void set_pair(int u, int v, int g);

  friend bool operator==(const ArcMatrix& a, const ArcMatrix& b) {
    return a.n_ == b.n_ && a.group_ == b.group_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const ArcMatrix& a, const ArcMatrix& b) { return !(a == b); }

 private:
  int n_;
  AbelianGroup group_;
  std::vector<int> entries_;
};

/// Simple undirected graph with bitset rows.
class Adjacency {
 public:
  explicit Adjacency(std::size_t vertices);

  std::size_t size() const { return n_; }
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }
  std::size_t degree(std::size_t u) const;
  std::size_t common_neighbours(std::size_t u, std::size_t v) const;
  std::vector<std::size_t> neighbours(std::size_t u) const;
  bool is_symmetric() const;

  friend bool operator==(const Adjacency& a, const Adjacency& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

/// Replaces each entry by chi of it; zero diagonal. Needs a prime-exponent
/// group (or the trivial group, whose values are taken in Q).
Matrix<CycNum> char_apply(const ArcMatrix& f, const Character& chi);

/// The cover graph: vertex (u, g) has index u*r + g and is adjacent to
/// (v, h) iff h - g = f(u, v).
Adjacency regular_expand(const ArcMatrix& f);

}  // namespace drackn
