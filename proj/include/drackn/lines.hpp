#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drackn/arc_matrix.hpp"
#include "drackn/cover.hpp"
#include "drackn/quadratic.hpp"

namespace drackn {

/**
 * Hermitian matrix with zero diagonal and unit-modulus off-diagonal entries.
 * When `root_order` is set every off-diagonal entry is a power of
 * zeta_root_order; otherwise entries are arbitrary exact values of the field.
 */
struct SeidelMatrix {
  Matrix<CycNum> entries;
  std::optional<int> root_order;

  std::size_t n() const { return entries.rows(); }
  int field() const { return entries(0, 0).root_order(); }
  /// Throws VerificationError if the defining properties fail.
  void validate() const;
  SeidelMatrix negated() const;
};

/// Gram matrix of n equiangular lines spanning dimension d.
struct LineSet {
  Matrix<CycSurd> gram;
  std::size_t n = 0;
  std::size_t d = 0;
  QuadSurd alpha_sq;
};

/// (n - d) / ((n - 1) d).
Rational relative_bound(std::int64_t n, std::int64_t d);

enum class LineField { real, complex };
/// d^2 over C, d(d+1)/2 over R.
std::int64_t absolute_bound(std::int64_t d, LineField field);

/// G^2 = (n/d) G exactly.
bool tight_frame_check(const LineSet& lines);

/// S^2 = a I + b S with rational a, b; nullopt when S has more than two eigenvalues
/// or the coefficients are not rational.
std::optional<std::pair<Rational, Rational>> quadratic_annihilator(const Matrix<CycNum>& s);

struct SeidelSpectrum {
  QuadSurd theta;  // positive eigenvalue
  QuadSurd tau;    // negative eigenvalue
  std::int64_t m_theta = 0;
  std::int64_t m_tau = 0;
};

/// Eigenvalues and multiplicities of a two-eigenvalue Seidel matrix.
SeidelSpectrum seidel_spectrum(const SeidelMatrix& s);

/// The Gram matrix I - S/lambda for an eigenvalue lambda of S.
LineSet lineset_from_seidel(const SeidelMatrix& s, const QuadSurd& lambda, std::size_t expected_dimension);

struct LinesetPair {
  SeidelSpectrum spectrum;
  LineSet tau_set;    // I - S/tau, dimension n - m_tau
  LineSet theta_set;  // I - S/theta, dimension n - m_theta
};

LinesetPair seidel_to_linesets(const SeidelMatrix& s);

struct CoverLines {
  CoverCertificate certificate;
  SeidelMatrix seidel;
  LinesetPair lines;
};

/// S = char_apply(f, chi) for chi = characters_of(group)[character_index], index >= 1.
CoverLines cover_to_lines(const ArcMatrix& f, std::size_t character_index, int jobs = 1);

struct LinesToCover {
  ArcMatrix cover;
  CoverCertificate certificate;
  /// c from (1/r)((n - 2) + (2d - n)/(alpha d)) on the I - S/tau line set.
  QuadSurd c_formula;
  std::size_t d = 0;
  QuadSurd alpha_sq;
};

/// Reads f(u,v) = k from S_uv = zeta_r^k and verifies the resulting cover.
LinesToCover lines_to_cover(const SeidelMatrix& s, int r, int jobs = 1);

/// +1 -> 2x2 identity block, -1 -> 2x2 swap; vertex (u, s) has index 2u + s.
Adjacency double_real(const SeidelMatrix& s);

/// Seeded random search for a symmetric +-1 Seidel matrix with S^2 = (n-1)I.
SeidelMatrix find_conference_seidel(std::size_t n, std::uint64_t seed = 0, std::uint64_t max_attempts = 2'000'000);

struct FloatGramReport {
  bool ok = false;
  double alpha_sq = 0;
  std::string reason;
};

/// Exploratory check of a floating-point Gram matrix: Hermitian, unit diagonal
/// and constant |G_uv|^2, all within `tolerance`. Never used for certification.
FloatGramReport float_gram_check(const std::vector<std::vector<std::complex<double>>>& gram, double tolerance = 1e-9);

}  // namespace drackn
