#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "drackn/arc_matrix.hpp"
#include "drackn/feasibility.hpp"

namespace drackn {

/// A structural or distance-regularity check failed. `condition` is a short
/// machine-readable name, `witness` locates the failure.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(std::string condition, std::string witness)
      : std::runtime_error(condition + " " + witness), condition_(std::move(condition)), witness_(std::move(witness)) {}

  const std::string& condition() const { return condition_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string condition_;
  std::string witness_;
};

struct SpectrumEntry {
  QuadSurd eigenvalue;
  std::int64_t multiplicity = 0;
};

struct CoverCertificate {
  ParameterSet params;
  /// Descending: n-1, theta, -1, tau.
  std::vector<SpectrumEntry> spectrum;
  std::vector<std::string> checks_passed;

  /// `DRACKN n=9 r=3 c=3 delta=-2 theta=2 tau=-4`
  std::string summary_line() const;
  /// `spectrum 8^1 2^12 -1^8 -4^6`
  std::string spectrum_line() const;
};

/// Diagonal markers, entry range and f(v,u) = -f(u,v).
void validate_cover(const ArcMatrix& f);

/// Fibres are the consecutive blocks {u*r, ..., u*r + r - 1}. Checks that no
/// fibre has an internal edge and that any two fibres are joined by a perfect matching.
void validate_cover(const Adjacency& graph, int n, int r);

/**
 * Certifies an (n, r, c) distance-regular antipodal cover by two independent
 * routes: common-neighbour counts on the expanded graph, and the quadratic
 * minimal polynomial of every nontrivial character block. Throws
 * VerificationError on the first failure.
 */
CoverCertificate drackn_verify(const ArcMatrix& f, int jobs = 1);

/// Recovers a cyclic arc function from a cover graph with prime fibre size r.
ArcMatrix arc_matrix_from_cover_graph(const Adjacency& graph, int n, int r);

/// validate_cover, then arc_matrix_from_cover_graph, then drackn_verify.
CoverCertificate verify_cover_graph(const Adjacency& graph, int n, int r, int jobs = 1);

/// Canonical projection G -> G/H on element indices.
struct QuotientMap {
  AbelianGroup source;
  AbelianGroup target;
  std::vector<int> image;

  int operator()(int g) const { return image.at(static_cast<std::size_t>(g)); }
};

/// G/H for H generated by `generators`. Supports elementary abelian and cyclic G.
QuotientMap quotient_map(const AbelianGroup& group, const std::vector<GroupElement>& generators);

ArcMatrix quotient(const ArcMatrix& f, const std::vector<GroupElement>& generators);

/// Gauge change making f(0, v) the identity for every v.
ArcMatrix normalize(const ArcMatrix& f);

}  // namespace drackn
