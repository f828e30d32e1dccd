#include "drackn/lines.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "drackn/number_theory.hpp"

namespace drackn {

namespace {

std::string cell(std::size_t u, std::size_t v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

}  // namespace

void SeidelMatrix::validate() const {
  const std::size_t n = entries.rows();
  if (n == 0 || !entries.is_square()) throw VerificationError("not-seidel", "matrix-must-be-square-and-non-empty");
  const int q = field();
  const CycNum one(q, Rational(1));
  for (std::size_t u = 0; u < n; ++u) {
    if (!entries(u, u).is_zero()) throw VerificationError("not-seidel", "nonzero-diagonal-at-" + cell(u, u));
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      const CycNum& x = entries(u, v);
      if (x != entries(v, u).conj()) throw VerificationError("not-seidel", "not-hermitian-at-" + cell(u, v));
      if (x * x.conj() != one) throw VerificationError("not-seidel", "entry-at-" + cell(u, v) + "-is-not-unimodular");
      if (root_order) {
        const auto k = x.root_of_unity_exponent();
        if (q != *root_order || !k)
          throw VerificationError("not-seidel", "entry-at-" + cell(u, v) + "-is-not-a-power-of-zeta_" + std::to_string(*root_order));
      }
    }
  }
}

SeidelMatrix SeidelMatrix::negated() const {
  SeidelMatrix out{entries.map([](const CycNum& x) { return -x; }), std::nullopt};
  if (root_order && *root_order == 2) out.root_order = 2;
  return out;
}

Rational relative_bound(std::int64_t n, std::int64_t d) {
  if (d < 1 || d > n) throw std::invalid_argument("relative_bound: need 1 <= d <= n");
  if (n == 1) return Rational(0);
  Rational bound(n - d, (n - 1) * d);
  bound.canonicalize();
  return bound;
}

std::int64_t absolute_bound(std::int64_t d, LineField field) {
  if (d < 1) throw std::invalid_argument("absolute_bound: d must be positive");
  return field == LineField::complex ? d * d : d * (d + 1) / 2;
}

bool tight_frame_check(const LineSet& lines) {
  const auto& g = lines.gram;
  const CycSurd ratio = CycSurd::embed(g(0, 0).root_order(), QuadSurd(Rational(static_cast<long>(lines.n), static_cast<long>(lines.d))));
  return g * g == scaled(g, ratio);
}

std::optional<std::pair<Rational, Rational>> quadratic_annihilator(const Matrix<CycNum>& s) {
  if (!s.is_square() || s.rows() < 2) throw std::invalid_argument("quadratic_annihilator: need a square matrix of order >= 2");
  const auto s2 = s * s;
  const auto a = s2(0, 0).as_rational();
  if (s(0, 1).is_zero()) return std::nullopt;
  const auto b = (s2(0, 1) / s(0, 1)).as_rational();
  if (!a || !b) return std::nullopt;
  const int q = s(0, 0).root_order();
  for (std::size_t u = 0; u < s.rows(); ++u)
    for (std::size_t v = 0; v < s.cols(); ++v) {
      const CycNum expected = u == v ? CycNum(q, *a) + s(u, v) * *b : s(u, v) * *b;
      if (s2(u, v) != expected) return std::nullopt;
    }
  return std::pair(*a, *b);
}

SeidelSpectrum seidel_spectrum(const SeidelMatrix& s) {
  const auto ann = quadratic_annihilator(s.entries);
  if (!ann) throw VerificationError("more-than-two-eigenvalues", "S^2-is-not-in-span(I,S)-over-Q");
  const auto& [a, b] = *ann;
  const QuadSurd root = QuadSurd::sqrt(b * b + 4 * a);
  const QuadSurd half(Rational(1, 2));
  SeidelSpectrum out;
  out.theta = half * (QuadSurd(b) + root);
  out.tau = half * (QuadSurd(b) - root);
  const QuadSurd n(static_cast<long>(s.n()));
  const QuadSurd m_tau = n * out.theta / root;
  const QuadSurd m_theta = -n * out.tau / root;
  if (!m_tau.is_integer() || !m_theta.is_integer() || out.theta.sign() <= 0 || out.tau.sign() >= 0)
    throw VerificationError("seidel-spectrum", "multiplicities-" + m_theta.to_string() + "," + m_tau.to_string());
  out.m_theta = m_theta.as_integer().get_si();
  out.m_tau = m_tau.as_integer().get_si();
  return out;
}

LineSet lineset_from_seidel(const SeidelMatrix& s, const QuadSurd& lambda, std::size_t expected_dimension) {
  const std::size_t n = s.n();
  const int q = s.field();
  const QuadSurd inverse = QuadSurd(1) / lambda;
  const CycSurd factor = CycSurd::embed(q, -inverse);
  Matrix<CycSurd> g(n, n, CycSurd(CycNum(q)));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      g(u, v) = u == v ? CycSurd(CycNum(q, Rational(1))) : CycSurd(s.entries(u, v)) * factor;
  LineSet out{g, n, mat_rank_exact(g), inverse * inverse};
  if (out.d != expected_dimension)
    throw std::logic_error("lineset_from_seidel: Gram rank " + std::to_string(out.d) + " differs from n - m = " +
                           std::to_string(expected_dimension));
  return out;
}

LinesetPair seidel_to_linesets(const SeidelMatrix& s) {
  s.validate();
  LinesetPair out;
  out.spectrum = seidel_spectrum(s);
  const auto n = static_cast<std::int64_t>(s.n());
  out.tau_set = lineset_from_seidel(s, out.spectrum.tau, static_cast<std::size_t>(n - out.spectrum.m_tau));
  out.theta_set = lineset_from_seidel(s, out.spectrum.theta, static_cast<std::size_t>(n - out.spectrum.m_theta));
  return out;
}

CoverLines cover_to_lines(const ArcMatrix& f, std::size_t character_index, int jobs) {
  if (character_index == 0) throw std::invalid_argument("cover-to-lines: the trivial character gives A(K_n), not a Seidel matrix");
  const auto chars = characters_of(f.group());
  if (character_index >= chars.size())
    throw std::invalid_argument("cover-to-lines: character index " + std::to_string(character_index) + " out of range (group has " +
                                std::to_string(chars.size()) + " characters)");
  CoverLines out{drackn_verify(f, jobs), SeidelMatrix{char_apply(f, chars[character_index]), f.group().prime_exponent()},
                 LinesetPair{}};
  out.lines = seidel_to_linesets(out.seidel);
  const auto& p = out.certificate.params;
  if (out.lines.spectrum.theta != p.theta || out.lines.spectrum.tau != p.tau ||
      QuadSurd(out.lines.spectrum.m_theta) != p.mbar_theta || QuadSurd(out.lines.spectrum.m_tau) != p.mbar_tau)
    throw std::logic_error("cover-to-lines: character block spectrum disagrees with the cover certificate");
  return out;
}

LinesToCover lines_to_cover(const SeidelMatrix& s, int r, int jobs) {
  if (!is_prime(r)) throw std::invalid_argument("lines-to-cover: r=" + std::to_string(r) + " is not prime");
  s.validate();
  const auto spectrum = seidel_spectrum(s);
  const std::size_t n = s.n();
  const int q = s.field();

  ArcMatrix f(static_cast<int>(n), AbelianGroup::cyclic(r));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const CycNum& x = s.entries(u, v);
      std::optional<int> k;
      if (auto value = x.as_rational()) {
        if (*value == 1) k = 0;
        else if (*value == -1 && r == 2) k = 1;
      } else if (q == r) {
        k = x.root_of_unity_exponent();
      }
      if (!k) throw VerificationError("not-root-of-unity", "entry-" + cell(u, v) + "-is-not-a-power-of-zeta_" + std::to_string(r));
      f.set_pair(static_cast<int>(u), static_cast<int>(v), *k);
    }
  }

  const auto d = static_cast<std::int64_t>(n) - spectrum.m_tau;
  const QuadSurd nn(static_cast<long>(n));
  const QuadSurd c_formula = (nn - QuadSurd(2) + QuadSurd(2 * d - static_cast<long>(n)) * -spectrum.tau / QuadSurd(d)) / QuadSurd(r);
  if (!c_formula.is_integer() || c_formula.sign() <= 0) throw VerificationError("c-not-integer", "c=" + c_formula.to_string());

  auto cert = drackn_verify(f, jobs);
  if (QuadSurd(cert.params.c) != c_formula)
    throw VerificationError("routes-disagree", "verified-c=" + std::to_string(cert.params.c) + "-formula-c=" + c_formula.to_string());
  return LinesToCover{f, cert, c_formula, static_cast<std::size_t>(d), QuadSurd(1) / (spectrum.tau * spectrum.tau)};
}

Adjacency double_real(const SeidelMatrix& s) {
  const std::size_t n = s.n();
  Adjacency out(2 * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      const auto x = s.entries(u, v).as_rational();
      if (!x || (*x != 1 && *x != -1)) throw VerificationError("non-real-entry", "entry-" + cell(u, v));
      const std::size_t flip = *x == 1 ? 0 : 1;
      out.add_edge(2 * u, 2 * v + flip);
      out.add_edge(2 * u + 1, 2 * v + (1 - flip));
    }
  return out;
}

SeidelMatrix find_conference_seidel(std::size_t n, std::uint64_t seed, std::uint64_t max_attempts) {
  if (n < 2) throw std::invalid_argument("conference search: n must be at least 2");
  std::mt19937_64 rng(seed);
  std::vector<int> s(n * n, 0);
  for (std::uint64_t attempt = 0; attempt < max_attempts; ++attempt) {
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) {
        const int x = (rng() & 1) ? 1 : -1;
        s[u * n + v] = x;
        s[v * n + u] = x;
      }
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u + 1; v < n && ok; ++v) {
        int dot = 0;
        for (std::size_t w = 0; w < n; ++w) dot += s[u * n + w] * s[v * n + w];
        ok = dot == 0;
      }
    if (!ok) continue;
    Matrix<CycNum> m(n, n, CycNum(2));
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) m(u, v) = CycNum(2, Rational(s[u * n + v]));
    return SeidelMatrix{m, 2};
  }
  throw std::runtime_error("conference search: no matrix of order " + std::to_string(n) + " found in " +
                           std::to_string(max_attempts) + " attempts");
}

FloatGramReport float_gram_check(const std::vector<std::vector<std::complex<double>>>& gram, double tolerance) {
  FloatGramReport out;
  const std::size_t n = gram.size();
  if (n < 2) {
    out.reason = "need at least two lines";
    return out;
  }
  std::optional<double> alpha_sq;
  for (std::size_t u = 0; u < n; ++u) {
    if (gram[u].size() != n) {
      out.reason = "row " + std::to_string(u) + " has the wrong length";
      return out;
    }
    if (std::abs(gram[u][u] - 1.0) > tolerance) {
      out.reason = "diagonal entry " + std::to_string(u) + " is not 1";
      return out;
    }
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      if (std::abs(gram[u][v] - std::conj(gram[v][u])) > tolerance) {
        out.reason = "not Hermitian at " + cell(u, v);
        return out;
      }
      const double a = std::norm(gram[u][v]);
      if (!alpha_sq) alpha_sq = a;
      if (std::abs(a - *alpha_sq) > tolerance) {
        out.reason = "not equiangular at " + cell(u, v);
        return out;
      }
    }
  out.ok = true;
  out.alpha_sq = *alpha_sq;
  return out;
}

}  // namespace drackn
