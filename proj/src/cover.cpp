#include "drackn/cover.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <queue>
#include <sstream>

#include "detail/parallel.hpp"
#include "drackn/number_theory.hpp"

namespace drackn {

namespace {

std::string tuple_string(const GroupElement& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) out += (i ? "," : "") + std::to_string(g[i]);
  return out.empty() ? "e" : out;
}

std::string vertex_name(const ArcMatrix& f, std::size_t x) {
  const auto r = static_cast<std::size_t>(f.r());
  return "(" + std::to_string(x / r) + "|" + tuple_string(f.group().element(static_cast<int>(x % r))) + ")";
}

std::string pair_name(int u, int v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

struct CombinatorialResult {
  std::int64_t c = 0;
  std::int64_t a1 = 0;
};

// Route A: BFS connectivity and common-neighbour counts on the expanded graph.
CombinatorialResult combinatorial_route(const ArcMatrix& f, int jobs) {
  const Adjacency adj = regular_expand(f);
  const std::size_t total = adj.size();
  const auto r = static_cast<std::size_t>(f.r());

  std::vector<char> seen(total, 0);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const auto x = frontier.front();
    frontier.pop();
    for (auto y : adj.neighbours(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        frontier.push(y);
      }
    }
  }
  if (reached != total)
    throw VerificationError("not-connected", "component-of-" + vertex_name(f, 0) + "-has-" + std::to_string(reached) +
                                                 "-of-" + std::to_string(total) + "-vertices");

  std::vector<std::vector<std::uint32_t>> counts(total);
  detail::parallel_for(total, jobs, [&](std::size_t x) {
    auto& row = counts[x];
    row.resize(total - x - 1);
    for (std::size_t y = x + 1; y < total; ++y) row[y - x - 1] = static_cast<std::uint32_t>(adj.common_neighbours(x, y));
  });

  std::optional<std::int64_t> c;
  std::optional<std::int64_t> a1;
  std::size_t c_x = 0, c_y = 0;
  for (std::size_t x = 0; x < total; ++x) {
    for (std::size_t y = x + 1; y < total; ++y) {
      const std::int64_t k = counts[x][y - x - 1];
      const auto pair = vertex_name(f, x) + "," + vertex_name(f, y);
      if (x / r == y / r) {
        if (k != 0)
          throw VerificationError("not-distance-regular", "fibre-mates-" + pair + "-have-" + std::to_string(k) + "-common-neighbours");
      } else if (adj.has_edge(x, y)) {
        if (!a1) a1 = k;
        if (*a1 != k)
          throw VerificationError("not-distance-regular", "adjacent-" + pair + "-have-" + std::to_string(k) + "-common-neighbours-not-" + std::to_string(*a1));
      } else {
        if (k == 0) throw VerificationError("not-distance-regular", "distance-2-pair-" + pair + "-has-no-common-neighbour");
        if (!c) {
          c = k;
          c_x = x;
          c_y = y;
        }
        if (*c != k)
          throw VerificationError("not-distance-regular", "pair-" + pair + "-has-" + std::to_string(k) + "-common-neighbours-but-" +
                                                              vertex_name(f, c_x) + "," + vertex_name(f, c_y) + "-has-" + std::to_string(*c));
      }
    }
  }
  if (!c) throw VerificationError("not-distance-regular", "no-pair-at-distance-2");
  return CombinatorialResult{*c, a1.value_or(0)};
}

struct AlgebraicResult {
  bool ok = false;
  std::int64_t c = 0;
  std::string witness;
};

// Route B: every nontrivial character block must satisfy S^2 = aI + bS with
// a = n-1 and one common integer b = delta.
AlgebraicResult algebraic_route(const ArcMatrix& f, int jobs) {
  const auto chars = characters_of(f.group());
  const auto n = static_cast<std::size_t>(f.n());
  struct Block {
    std::optional<Rational> delta;
    std::string witness;
  };
  std::vector<Block> blocks(chars.size());
  detail::parallel_for(chars.size() - 1, jobs, [&](std::size_t i) {
    const auto& chi = chars[i + 1];
    auto& block = blocks[i + 1];
    const auto s = char_apply(f, chi);
    const auto s2 = s * s;
    const auto a = s2(0, 0).as_rational();
    const auto b = (s2(0, 1) / s(0, 1)).as_rational();
    const std::string name = "character-" + tuple_string(chi.exponents);
    if (!a || !b) {
      block.witness = name + "-square-not-in-span(I,S)";
      return;
    }
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        const CycNum expected = u == v ? CycNum(s(0, 0).root_order(), *a) : s(u, v) * *b;
        if (s2(u, v) != expected) {
          block.witness = name + "-square-not-in-span(I,S)-at-" + pair_name(static_cast<int>(u), static_cast<int>(v));
          return;
        }
      }
    }
    if (*a != Rational(f.n() - 1)) {
      block.witness = name + "-diagonal-of-square-" + a->get_str() + "-not-n-1";
      return;
    }
    block.delta = *b;
  });

  AlgebraicResult out;
  std::optional<Rational> delta;
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    if (!blocks[i].delta) {
      out.witness = blocks[i].witness;
      return out;
    }
    if (!delta) delta = blocks[i].delta;
    if (*delta != *blocks[i].delta) {
      out.witness = "character-" + tuple_string(chars[i].exponents) + "-has-delta-" + blocks[i].delta->get_str() +
                    "-not-" + delta->get_str();
      return out;
    }
  }
  if (!delta) {
    out.witness = "no-nontrivial-character";
    return out;
  }
  const Rational rc = Rational(f.n() - 2) - *delta;
  const Rational c = rc / f.r();
  if (!is_integer(c) || sgn(c) <= 0) {
    out.witness = "delta-" + delta->get_str() + "-gives-c=" + c.get_str();
    return out;
  }
  out.ok = true;
  out.c = to_integer(c).get_si();
  return out;
}

}  // namespace

std::string CoverCertificate::summary_line() const {
  std::ostringstream out;
  out << "DRACKN n=" << params.n << " r=" << params.r << " c=" << params.c << " delta=" << params.delta
      << " theta=" << params.theta.to_string() << " tau=" << params.tau.to_string();
  return out.str();
}

std::string CoverCertificate::spectrum_line() const {
  std::string out = "spectrum";
  for (const auto& e : spectrum) out += " " + e.eigenvalue.to_string() + "^" + std::to_string(e.multiplicity);
  return out;
}

void validate_cover(const ArcMatrix& f) {
  const int n = f.n();
  for (int u = 0; u < n; ++u) {
    if (f.at(u, u) != ArcMatrix::kDiagonal) throw VerificationError("diagonal", "cell-" + pair_name(u, u) + "-is-not-the-diagonal-marker");
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const int g = f.at(u, v);
      if (g < 0 || g >= f.r()) throw VerificationError("entry-range", "cell-" + pair_name(u, v));
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (f.at(v, u) != f.group().neg(f.at(u, v)))
        throw VerificationError("inverse-pair", "f" + pair_name(v, u) + "=" + tuple_string(f.element(v, u)) + "-is-not-minus-f" +
                                                    pair_name(u, v) + "=" + tuple_string(f.element(u, v)));
}

void validate_cover(const Adjacency& graph, int n, int r) {
  if (n < 1 || r < 1) throw std::invalid_argument("validate_cover: n and r must be positive");
  const auto nr = static_cast<std::size_t>(n) * static_cast<std::size_t>(r);
  if (graph.size() != nr)
    throw VerificationError("vertex-count", std::to_string(graph.size()) + "-vertices-but-n*r=" + std::to_string(nr));
  const auto rr = static_cast<std::size_t>(r);
  for (std::size_t u = 0; u < static_cast<std::size_t>(n); ++u) {
    for (std::size_t i = 0; i < rr; ++i)
      for (std::size_t j = i; j < rr; ++j)
        if (graph.has_edge(u * rr + i, u * rr + j))
          throw VerificationError("fibre-edge", "fibre-" + std::to_string(u) + "-vertices-" + std::to_string(u * rr + i) + "," +
                                                    std::to_string(u * rr + j));
    for (std::size_t v = 0; v < static_cast<std::size_t>(n); ++v) {
      if (u == v) continue;
      for (std::size_t i = 0; i < rr; ++i) {
        std::size_t hits = 0;
        for (std::size_t j = 0; j < rr; ++j) hits += graph.has_edge(u * rr + i, v * rr + j);
        if (hits != 1)
          throw VerificationError("not-matching", "vertex-" + std::to_string(u * rr + i) + "-has-" + std::to_string(hits) +
                                                      "-neighbours-in-fibre-" + std::to_string(v));
      }
    }
  }
}

CoverCertificate drackn_verify(const ArcMatrix& f, int jobs) {
  validate_cover(f);
  if (f.n() < 2) throw VerificationError("degenerate", "n=" + std::to_string(f.n()));
  if (f.r() < 2) throw VerificationError("degenerate", "r=1");

  const auto a = combinatorial_route(f, jobs);
  const auto b = algebraic_route(f, jobs);
  if (!b.ok) throw VerificationError("routes-disagree", "combinatorial=pass algebraic=fail:" + b.witness);
  if (a.c != b.c)
    throw VerificationError("routes-disagree", "combinatorial-c=" + std::to_string(a.c) + "-algebraic-c=" + std::to_string(b.c));

  CoverCertificate cert;
  cert.params = spectral_params(f.n(), f.r(), a.c);
  const auto& p = cert.params;
  if (a.a1 != p.delta + p.c)
    throw VerificationError("routes-disagree", "a1=" + std::to_string(a.a1) + "-not-delta+c=" + std::to_string(p.delta + p.c));
  if (!p.multiplicities_integral())
    throw VerificationError("routes-disagree", "multiplicities-not-integral-m_theta=" + p.m_theta.to_string());
  cert.spectrum = {
      {QuadSurd(p.n - 1), 1},
      {p.theta, p.m_theta.as_integer().get_si()},
      {QuadSurd(-1), p.n - 1},
      {p.tau, p.m_tau.as_integer().get_si()},
  };
  cert.checks_passed = {"cover-axioms", "connected", "fibre-mates-at-distance-3", "constant-c", "constant-a1",
                        "character-minimal-polynomials", "routes-agree"};
  return cert;
}

ArcMatrix arc_matrix_from_cover_graph(const Adjacency& graph, int n, int r) {
  if (!is_prime(r)) throw std::invalid_argument("arc_matrix_from_cover_graph: fibre size " + std::to_string(r) + " is not prime");
  validate_cover(graph, n, r);
  const auto rr = static_cast<std::size_t>(r);
  using Perm = std::vector<int>;
  auto matching = [&](int u, int v) {
    Perm m(rr);
    for (std::size_t i = 0; i < rr; ++i)
      for (std::size_t j = 0; j < rr; ++j)
        if (graph.has_edge(static_cast<std::size_t>(u) * rr + i, static_cast<std::size_t>(v) * rr + j)) m[i] = static_cast<int>(j);
    return m;
  };

  // relabel each fibre so that the matchings from fibre 0 become the identity
  std::vector<Perm> old_of(static_cast<std::size_t>(n));
  std::vector<Perm> label_of(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    Perm q(rr);
    std::iota(q.begin(), q.end(), 0);
    if (u > 0) q = matching(0, u);
    Perm inv(rr);
    for (std::size_t i = 0; i < rr; ++i) inv[static_cast<std::size_t>(q[i])] = static_cast<int>(i);
    old_of[static_cast<std::size_t>(u)] = q;
    label_of[static_cast<std::size_t>(u)] = inv;
  }
  std::vector<std::vector<Perm>> normalized(static_cast<std::size_t>(n), std::vector<Perm>(static_cast<std::size_t>(n)));
  std::optional<Perm> sigma;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const Perm m = matching(u, v);
      Perm out(rr);
      for (std::size_t i = 0; i < rr; ++i)
        out[i] = label_of[static_cast<std::size_t>(v)][static_cast<std::size_t>(m[static_cast<std::size_t>(old_of[static_cast<std::size_t>(u)][i])])];
      bool identity = true;
      for (std::size_t i = 0; i < rr; ++i) identity = identity && out[i] == static_cast<int>(i);
      if (!identity && !sigma) sigma = out;
      normalized[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = std::move(out);
    }
  }

  ArcMatrix f(n, AbelianGroup::cyclic(r));
  if (!sigma) return f;

  // sigma must be an r-cycle; label vertex sigma^k(0) by k
  std::vector<int> power(rr), position(rr, -1);
  int x = 0;
  for (std::size_t k = 0; k < rr; ++k) {
    if (position[static_cast<std::size_t>(x)] != -1)
      throw VerificationError("not-cyclic", "matching-permutation-is-not-an-r-cycle");
    power[k] = x;
    position[static_cast<std::size_t>(x)] = static_cast<int>(k);
    x = (*sigma)[static_cast<std::size_t>(x)];
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const auto& m = normalized[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      const int shift = position[static_cast<std::size_t>(m[static_cast<std::size_t>(power[0])])];
      for (std::size_t a = 0; a < rr; ++a) {
        const int image = position[static_cast<std::size_t>(m[static_cast<std::size_t>(power[a])])];
        if (image != static_cast<int>((a + static_cast<std::size_t>(shift)) % rr))
          throw VerificationError("not-cyclic", "matching-between-fibres-" + pair_name(u, v) + "-is-not-a-power-of-the-generator");
      }
      f.set_pair(u, v, shift);
    }
  }
  return f;
}

CoverCertificate verify_cover_graph(const Adjacency& graph, int n, int r, int jobs) {
  return drackn_verify(arc_matrix_from_cover_graph(graph, n, r), jobs);
}

QuotientMap quotient_map(const AbelianGroup& group, const std::vector<GroupElement>& generators) {
  for (const auto& g : generators)
    if (!group.contains(g))
      throw std::invalid_argument("quotient: generator (" + tuple_string(g) + ") is not an element of group " + group.to_string());

  QuotientMap map;
  map.source = group;
  map.image.resize(static_cast<std::size_t>(group.order()));
  if (group.order() == 1) {
    map.target = group;
    return map;
  }

  if (auto p = group.prime_exponent()) {
    const int s = group.rank();
    // reduced row echelon form of the generator rows over GF(p)
    std::vector<std::vector<long>> rows;
    for (const auto& g : generators) rows.emplace_back(g.begin(), g.end());
    std::vector<int> pivots;
    std::size_t rank = 0;
    for (int col = 0; col < s && rank < rows.size(); ++col) {
      std::size_t piv = rank;
      while (piv < rows.size() && rows[piv][static_cast<std::size_t>(col)] == 0) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      long inv = 1;
      for (long e = *p - 2, base = rows[rank][static_cast<std::size_t>(col)]; e > 0; e >>= 1, base = base * base % *p)
        if (e & 1) inv = inv * base % *p;
      for (auto& v : rows[rank]) v = v * inv % *p;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == rank) continue;
        const long factor = rows[i][static_cast<std::size_t>(col)];
        if (factor == 0) continue;
        for (int j = 0; j < s; ++j)
          rows[i][static_cast<std::size_t>(j)] = mod_floor(rows[i][static_cast<std::size_t>(j)] - factor * rows[rank][static_cast<std::size_t>(j)], *p);
      }
      pivots.push_back(col);
      ++rank;
    }
    std::vector<int> free_cols;
    for (int j = 0; j < s; ++j)
      if (std::find(pivots.begin(), pivots.end(), j) == pivots.end()) free_cols.push_back(j);
    map.target = free_cols.empty() ? AbelianGroup() : AbelianGroup::elementary(*p, static_cast<int>(free_cols.size()));
    for (int idx = 0; idx < group.order(); ++idx) {
      auto g = group.element(idx);
      std::vector<long> v(g.begin(), g.end());
      for (std::size_t i = 0; i < rank; ++i) {
        const long coef = v[static_cast<std::size_t>(pivots[i])];
        if (coef == 0) continue;
        for (int j = 0; j < s; ++j)
          v[static_cast<std::size_t>(j)] = mod_floor(v[static_cast<std::size_t>(j)] - coef * rows[i][static_cast<std::size_t>(j)], *p);
      }
      GroupElement image;
      for (int j : free_cols) image.push_back(static_cast<int>(v[static_cast<std::size_t>(j)]));
      map.image[static_cast<std::size_t>(idx)] = map.target.index(image);
    }
    return map;
  }

  if (group.rank() == 1) {
    const int m = group.orders()[0];
    int h = m;
    for (const auto& g : generators) h = std::gcd(h, g[0]);
    map.target = h == 1 ? AbelianGroup() : AbelianGroup::cyclic(h);
    for (int idx = 0; idx < m; ++idx) map.image[static_cast<std::size_t>(idx)] = h == 1 ? 0 : idx % h;
    return map;
  }
  throw std::invalid_argument("quotient: only elementary abelian and cyclic groups are supported, got " + group.to_string());
}

ArcMatrix quotient(const ArcMatrix& f, const std::vector<GroupElement>& generators) {
  const auto map = quotient_map(f.group(), generators);
  ArcMatrix out(f.n(), map.target);
  for (int u = 0; u < f.n(); ++u)
    for (int v = 0; v < f.n(); ++v)
      if (u != v) out.set(u, v, map(f.at(u, v)));
  return out;
}

ArcMatrix normalize(const ArcMatrix& f) {
  const auto& g = f.group();
  ArcMatrix out(f.n(), g);
  auto star = [&](int u) { return u == 0 ? g.identity() : f.at(0, u); };
  for (int u = 0; u < f.n(); ++u)
    for (int v = 0; v < f.n(); ++v)
      if (u != v) out.set(u, v, g.add(g.sub(f.at(u, v), star(v)), star(u)));
  return out;
}

}  // namespace drackn
