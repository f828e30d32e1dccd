#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "drackn/quadratic.hpp"

namespace drackn {

enum class EigenKind {
  integral,   // discriminant is a perfect square
  symbolic,   // delta = 0: theta = -tau = sqrt(n - 1)
  irrational  // neither; impossible for an actual cover
};

/// Parameters (n, r, c) of a putative cover with the derived spectral data.
struct ParameterSet {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t c = 0;
  std::int64_t delta = 0;
  EigenKind kind = EigenKind::integral;
  QuadSurd theta;
  QuadSurd tau;
  QuadSurd m_theta;
  QuadSurd m_tau;
  /// Per-character multiplicities m / (r - 1).
  QuadSurd mbar_theta;
  QuadSurd mbar_tau;

  bool multiplicities_integral() const { return m_theta.is_integer() && m_tau.is_integer(); }
};

/**
 * Eigenvalues theta, tau = (delta +- sqrt(delta^2 + 4(n-1))) / 2 with
 * delta = n - rc - 2, and multiplicities
 *   m_theta = n(r-1)(-tau)/(theta - tau),  m_tau = n(r-1) theta/(theta - tau).
 * Irrational values are represented exactly, never rejected.
 */
ParameterSet spectral_params(std::int64_t n, std::int64_t r, std::int64_t c);

enum class Verdict { pass, fail, not_applicable };

struct ConditionResult {
  std::string name;  // "a".."i" or "odd-prime"
  Verdict verdict = Verdict::not_applicable;
  std::string witness;
};

struct FeasibilityReport {
  ParameterSet params;
  std::vector<ConditionResult> conditions;
  bool pass = false;

  const ConditionResult& condition(const std::string& name) const;
  /// Failing conditions in battery order.
  std::vector<ConditionResult> failures() const;
};

/// Necessary conditions (a)-(i) for a distance-regular antipodal cover of K_n,
/// plus the odd-prime divisibility condition for abelian covers.
FeasibilityReport feasibility_battery(std::int64_t n, std::int64_t r, std::int64_t c);

enum class Parity { even, odd };

/// A bound of the form -sqrt(a + b*sqrt(s)).
struct NestedRadical {
  Rational a;
  Rational b;
  Integer s;

  /// Exact comparison of value^2 = x against a + b*sqrt(s): sign(x - (a + b sqrt s)).
  int compare_square(const Rational& x) const;
  double approx() const;
  std::string to_string() const;
};

struct TauBounds {
  NestedRadical lower;
  NestedRadical upper;
};

struct TauMembership {
  bool above_lower = false;
  bool below_upper = false;
  bool lower_tight = false;
  bool upper_tight = false;

  bool in_range() const { return above_lower && below_upper; }
  /// Absolute-bound equality: the eigenvalue sits on either end of the range.
  bool absolute_bound_attained() const { return lower_tight || upper_tight; }
};

/// Range for the negative eigenvalue tau of an abelian cover with r of the given parity.
TauBounds tau_bounds(std::int64_t n, Parity parity);

/// Membership of a negative tau (tau^2 must be rational) in the tau_bounds range.
TauMembership tau_membership(std::int64_t n, Parity parity, const QuadSurd& tau);

enum class FamilyCase { Ia, Ib, IIa, IIb };

std::string to_string(FamilyCase c);
std::optional<FamilyCase> parse_family_case(const std::string& text);

/// Closed-form columns of an absolute-bound-attaining parameter family.
struct FamilyRow {
  FamilyCase family = FamilyCase::Ia;
  QuadSurd t;
  QuadSurd n;
  QuadSurd rc;
  QuadSurd delta;
  QuadSurd theta;
  QuadSurd tau;
  QuadSurd mbar_theta;
  QuadSurd mbar_tau;
};

/// `t` is an integer >= 2, or sqrt(5) for case I.a.
FamilyRow family_params(FamilyCase family, const QuadSurd& t);

struct EnumeratedRow {
  FamilyCase family = FamilyCase::Ia;
  std::int64_t t = 0;  // 0 for the sqrt(5) sporadic row
  ParameterSet params;
  bool two_graph = false;    // r = 2
  bool unpublished = false;  // not among the known feasible tables
  bool sporadic = false;     // the t = sqrt(5) row of case I.a
};

/**
 * All parameter sets of one family with integer t <= t_max that pass the case
 * conditions and the full battery, sorted by (n, r). Rows with r = 2 and rows
 * outside the known tables are included and flagged; the caller filters.
 */
std::vector<EnumeratedRow> family_enumerate(FamilyCase family, std::int64_t t_max, int jobs = 1);

struct KnownRow {
  std::int64_t n, r, c, delta, theta, tau, m_theta, m_tau;
};

/// First ten feasible rows of case I.b (r >= 4).
const std::vector<KnownRow>& known_rows_case_Ib();
/// First ten feasible rows of case II.b.
const std::vector<KnownRow>& known_rows_case_IIb();

/// Tab-separated header `n r c delta theta tau m_theta m_tau`.
std::string tsv_header(bool with_flags);
std::string tsv_row(const EnumeratedRow& row, bool with_flags);
std::string flags_of(const EnumeratedRow& row);

}  // namespace drackn
