#include "drackn/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "detail/parallel.hpp"
#include "drackn/number_theory.hpp"

namespace drackn {

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

ConditionResult make(const char* name, Verdict v, std::string witness = {}) {
  return ConditionResult{name, v, std::move(witness)};
}

// Closed-form (1)-(5) conditions for case I.b with r even.
bool case_Ib_conditions(std::int64_t t, std::int64_t r, std::int64_t c) {
  if (t < 3 || t % 4 == 0) return false;
  if (c < 2) return false;
  if (2 * r <= t * t + 1 && (t - 1) % r != 0) return false;
  if (t % 2 == 1 && c % 2 != 0) return false;
  for (auto p : prime_factors(r))
    if (p != 2 && (t - 1) % p != 0) return false;
  return true;
}

bool case_IIb_conditions(std::int64_t t, std::int64_t r, std::int64_t c) {
  return t >= 3 && c >= 2 && r % 3 != 0 && (t - 1) % r == 0;
}

}  // namespace

ParameterSet spectral_params(std::int64_t n, std::int64_t r, std::int64_t c) {
  if (n < 2 || r < 2 || c < 1) throw std::invalid_argument("spectral_params: requires n >= 2, r >= 2, c >= 1");
  ParameterSet p;
  p.n = n;
  p.r = r;
  p.c = c;
  p.delta = n - r * c - 2;
  const Integer disc = Integer(p.delta) * p.delta + 4 * (Integer(n) - 1);
  p.theta = QuadSurd(Rational(p.delta, 2), Rational(1, 2), disc);
  p.tau = QuadSurd(Rational(p.delta, 2), Rational(-1, 2), disc);
  if (is_perfect_square(disc)) {
    p.kind = EigenKind::integral;
  } else if (p.delta == 0) {
    p.kind = EigenKind::symbolic;
  } else {
    p.kind = EigenKind::irrational;
  }
  const QuadSurd gap = p.theta - p.tau;
  const QuadSurd scale = QuadSurd(Rational(n * (r - 1)));
  p.m_theta = scale * -p.tau / gap;
  p.m_tau = scale * p.theta / gap;
  p.mbar_theta = p.m_theta / QuadSurd(r - 1);
  p.mbar_tau = p.m_tau / QuadSurd(r - 1);
  return p;
}

const ConditionResult& FeasibilityReport::condition(const std::string& name) const {
  for (const auto& c : conditions)
    if (c.name == name) return c;
  throw std::out_of_range("FeasibilityReport: no condition named " + name);
}

std::vector<ConditionResult> FeasibilityReport::failures() const {
  std::vector<ConditionResult> out;
  for (const auto& c : conditions)
    if (c.verdict == Verdict::fail) out.push_back(c);
  return out;
}

FeasibilityReport feasibility_battery(std::int64_t n, std::int64_t r, std::int64_t c) {
  FeasibilityReport report;
  report.params = spectral_params(n, r, c);
  const auto& p = report.params;
  auto& out = report.conditions;
  const QuadSurd n_minus_1(n - 1);

  // (a)
  {
    const std::int64_t lo = c * (r - 1);
    const std::int64_t hi = c * (2 * r - 1) - 2;
    if (lo < 1) {
      out.push_back(make("a", Verdict::fail, "c(r-1)=" + str(lo) + "<1"));
    } else if (lo > n - 2) {
      out.push_back(make("a", Verdict::fail, "c(r-1)=" + str(lo) + ">n-2=" + str(n - 2)));
    } else if (n - 2 > hi) {
      out.push_back(make("a", Verdict::fail, "n-2=" + str(n - 2) + ">c(2r-1)-2=" + str(hi)));
    } else {
      out.push_back(make("a", Verdict::pass));
    }
  }

  // (b)
  if (p.multiplicities_integral()) {
    out.push_back(make("b", Verdict::pass));
  } else {
    out.push_back(make("b", Verdict::fail, "m_theta=" + p.m_theta.to_string() + ",m_tau=" + p.m_tau.to_string()));
  }

  // (c)
  if (p.delta == 0) {
    out.push_back(make("c", Verdict::not_applicable));
  } else if (p.theta.is_integer() && p.tau.is_integer()) {
    out.push_back(make("c", Verdict::pass));
  } else {
    out.push_back(make("c", Verdict::fail, "eigenvalues-not-integral"));
  }

  // (d)
  if (p.delta != 0) {
    out.push_back(make("d", Verdict::not_applicable));
  } else if (p.theta == -p.tau && p.theta * p.theta == n_minus_1 && p.theta.sign() > 0) {
    out.push_back(make("d", Verdict::pass));
  } else {
    out.push_back(make("d", Verdict::fail, "theta=" + p.theta.to_string()));
  }

  // (e)
  if (n % 2 != 0) {
    out.push_back(make("e", Verdict::not_applicable));
  } else if (c % 2 == 0) {
    out.push_back(make("e", Verdict::pass));
  } else {
    out.push_back(make("e", Verdict::fail, "n-even-c-odd"));
  }

  // (f)
  if (c != 1) {
    out.push_back(make("f", Verdict::not_applicable));
  } else {
    const std::int64_t k = n - r;
    const Integer rn1 = Integer(r) * n * (n - 1);
    if (k <= 0) {
      out.push_back(make("f", Verdict::fail, "n-r=" + str(k) + "<=0"));
    } else if ((n - 1) % k != 0) {
      out.push_back(make("f", Verdict::fail, "n-r=" + str(k) + "-does-not-divide-n-1=" + str(n - 1)));
    } else if (rn1 % (Integer(k) * (k + 1)) != 0) {
      out.push_back(make("f", Verdict::fail, "(n-r)(n-r+1)-does-not-divide-rn(n-1)"));
    } else if (Integer(k) * k > n - 1) {
      out.push_back(make("f", Verdict::fail, "(n-r)^2=" + str(k * k) + ">n-1=" + str(n - 1)));
    } else {
      out.push_back(make("f", Verdict::pass));
    }
  }

  const QuadSurd theta_cubed = p.theta * p.theta * p.theta;

  // (g)
  if (r <= 2) {
    out.push_back(make("g", Verdict::not_applicable));
  } else if (theta_cubed >= n_minus_1) {
    out.push_back(make("g", Verdict::pass));
  } else {
    out.push_back(make("g", Verdict::fail, "theta^3=" + theta_cubed.to_string() + "<n-1=" + str(n - 1)));
  }

  // (h)
  if (p.theta == QuadSurd(1) || p.tau == QuadSurd(-1) || theta_cubed == n_minus_1) {
    out.push_back(make("h", Verdict::not_applicable));
  } else {
    const QuadSurd lhs = r > 2 ? QuadSurd(r * n) : QuadSurd(n);
    const QuadSurd half(Rational(1, 2));
    const QuadSurd bound_theta = half * p.m_theta * (p.m_theta + QuadSurd(1));
    const QuadSurd bound_tau = half * p.m_tau * (p.m_tau + QuadSurd(1));
    const std::string lhs_name = r > 2 ? "rn=" : "n=";
    if (lhs > bound_theta) {
      out.push_back(make("h", Verdict::fail, lhs_name + lhs.to_string() + ">m_theta(m_theta+1)/2=" + bound_theta.to_string()));
    } else if (lhs > bound_tau) {
      out.push_back(make("h", Verdict::fail, lhs_name + lhs.to_string() + ">m_tau(m_tau+1)/2=" + bound_tau.to_string()));
    } else {
      out.push_back(make("h", Verdict::pass));
    }
  }

  // (i)
  if (r <= 2) {
    out.push_back(make("i", Verdict::not_applicable));
  } else {
    ConditionResult res = make("i", Verdict::not_applicable);
    const std::pair<const char*, std::pair<const QuadSurd*, const QuadSurd*>> betas[] = {
        {"theta", {&p.theta, &p.m_theta}}, {"tau", {&p.tau, &p.m_tau}}};
    for (const auto& [label, pair] : betas) {
      const auto& [beta, mult] = pair;
      if (!beta->is_integer()) continue;
      if (!(QuadSurd(n) > *mult - QuadSurd(r - 3))) continue;
      const Integer divisor = beta->as_integer() + 1;
      if (divisor != 0 && Integer(c) % divisor == 0) {
        if (res.verdict != Verdict::fail) res.verdict = Verdict::pass;
      } else {
        res.verdict = Verdict::fail;
        res.witness = std::string(label) + "+1=" + divisor.get_str() + "-does-not-divide-c=" + str(c);
        break;
      }
    }
    out.push_back(res);
  }

  // odd primes dividing r must divide n
  {
    ConditionResult res = make("odd-prime", Verdict::pass);
    for (auto q : prime_factors(r)) {
      if (q != 2 && n % q != 0) {
        res.verdict = Verdict::fail;
        res.witness = str(q) + "-divides-r-not-n";
        break;
      }
    }
    out.push_back(res);
  }

  report.pass = std::none_of(out.begin(), out.end(), [](const auto& c) { return c.verdict == Verdict::fail; });
  return report;
}

int NestedRadical::compare_square(const Rational& x) const {
  return QuadSurd(x - a, -b, s).sign();
}

double NestedRadical::approx() const {
  return -std::sqrt(a.get_d() + b.get_d() * std::sqrt(s.get_d()));
}

std::string NestedRadical::to_string() const {
  return "-sqrt(" + QuadSurd(a, b, s).to_string() + ")";
}

TauBounds tau_bounds(std::int64_t n, Parity parity) {
  if (n < 2) throw std::invalid_argument("tau_bounds: n must be at least 2");
  const Rational m(n - 1);
  if (parity == Parity::even) {
    const Integer s = 8 * Integer(n) + 1;
    return TauBounds{NestedRadical{-3 * m / 4, m / 4, s}, NestedRadical{Rational(3, 2), Rational(1, 2), s}};
  }
  return TauBounds{NestedRadical{-m, m, Integer(n)}, NestedRadical{Rational(1), Rational(1), Integer(n)}};
}

TauMembership tau_membership(std::int64_t n, Parity parity, const QuadSurd& tau) {
  if (tau.sign() >= 0) throw std::invalid_argument("tau_membership: tau must be negative");
  const QuadSurd square = tau * tau;
  if (!square.is_rational()) throw std::invalid_argument("tau_membership: tau^2 must be rational");
  const auto bounds = tau_bounds(n, parity);
  const Rational x = square.as_rational();
  TauMembership m;
  // tau >= lower  <=>  tau^2 <= lower^2, both negative
  const int lo = bounds.lower.compare_square(x);
  const int hi = bounds.upper.compare_square(x);
  m.above_lower = lo <= 0;
  m.lower_tight = lo == 0;
  m.below_upper = hi >= 0;
  m.upper_tight = hi == 0;
  return m;
}

std::string to_string(FamilyCase c) {
  switch (c) {
    case FamilyCase::Ia: return "Ia";
    case FamilyCase::Ib: return "Ib";
    case FamilyCase::IIa: return "IIa";
    case FamilyCase::IIb: return "IIb";
  }
  return "?";
}

std::optional<FamilyCase> parse_family_case(const std::string& text) {
  if (text == "Ia" || text == "I.a") return FamilyCase::Ia;
  if (text == "Ib" || text == "I.b") return FamilyCase::Ib;
  if (text == "IIa" || text == "II.a") return FamilyCase::IIa;
  if (text == "IIb" || text == "II.b") return FamilyCase::IIb;
  return std::nullopt;
}

FamilyRow family_params(FamilyCase family, const QuadSurd& t) {
  const bool sqrt5 = t == QuadSurd::sqrt(Rational(5));
  if (sqrt5 && family != FamilyCase::Ia) throw std::invalid_argument("family_params: t = sqrt(5) only occurs in case Ia");
  if (!sqrt5 && !(t.is_integer() && t.as_integer() >= 2))
    throw std::invalid_argument("family_params: t must be an integer >= 2 (or sqrt(5) in case Ia), got " + t.to_string());

  const QuadSurd one(1);
  const QuadSurd two(2);
  const QuadSurd half(Rational(1, 2));
  const QuadSurd t2 = t * t;
  FamilyRow row;
  row.family = family;
  row.t = t;
  switch (family) {
    case FamilyCase::Ia:
    case FamilyCase::Ib: {
      row.n = half * (t2 - two) * (t2 - one);
      if (family == FamilyCase::Ia) {
        row.rc = half * (t + one) * (t + one) * (t + one) * (t - two);
        row.delta = -(half * t * (t2 - QuadSurd(5)));
        row.theta = t;
        row.tau = -(half * t * (t2 - QuadSurd(3)));
        row.mbar_theta = half * (t2 - two) * (t2 - QuadSurd(3));
        row.mbar_tau = t2 - two;
      } else {
        row.rc = half * (t - one) * (t - one) * (t - one) * (t + two);
        row.delta = half * t * (t2 - QuadSurd(5));
        row.theta = half * t * (t2 - QuadSurd(3));
        row.tau = -t;
        row.mbar_theta = t2 - two;
        row.mbar_tau = half * (t2 - two) * (t2 - QuadSurd(3));
      }
      break;
    }
    case FamilyCase::IIa:
    case FamilyCase::IIb: {
      row.n = (t2 - one) * (t2 - one);
      if (family == FamilyCase::IIa) {
        row.rc = (t + one) * (t + one) * (t2 - t - one);
        row.delta = -((t2 - QuadSurd(3)) * t);
        row.theta = t;
        row.tau = -((t2 - two) * t);
        row.mbar_theta = (t2 - two) * (t2 - one);
        row.mbar_tau = t2 - one;
      } else {
        row.rc = (t - one) * (t - one) * (t2 + t - one);
        row.delta = (t2 - QuadSurd(3)) * t;
        row.theta = (t2 - two) * t;
        row.tau = -t;
        row.mbar_theta = t2 - one;
        row.mbar_tau = (t2 - two) * (t2 - one);
      }
      break;
    }
  }
  if (row.delta != row.theta + row.tau || row.delta != row.n - row.rc - two ||
      row.theta * row.tau != -(row.n - one) || row.mbar_theta + row.mbar_tau != row.n)
    throw std::logic_error("family_params: closed forms are inconsistent for case " + to_string(family));
  return row;
}

const std::vector<KnownRow>& known_rows_case_Ib() {
  static const std::vector<KnownRow> rows = {
      {276, 4, 56, 50, 55, -5, 69, 759},
      {276, 16, 14, 50, 55, -5, 345, 3795},
      {1128, 6, 162, 154, 161, -7, 235, 5405},
      {1128, 54, 18, 154, 161, -7, 2491, 57293},
      {1128, 162, 6, 154, 161, -7, 7567, 174041},
      {1128, 486, 2, 154, 161, -7, 22795, 524285},
      {3160, 4, 704, 342, 351, -9, 237, 9243},
      {3160, 8, 352, 342, 351, -9, 553, 21567},
      {3160, 64, 44, 342, 351, -9, 4977, 194103},
      {3160, 128, 22, 342, 351, -9, 10033, 391287},
  };
  return rows;
}

const std::vector<KnownRow>& known_rows_case_IIb() {
  static const std::vector<KnownRow> rows = {
      {1225, 5, 205, 198, 204, -6, 140, 4760},
      {3969, 7, 497, 488, 496, -8, 378, 23436},
      {14400, 5, 2620, 1298, 1309, -11, 480, 57120},
      {20449, 11, 1705, 1692, 1704, -12, 1430, 203060},
      {38025, 13, 2717, 2702, 2716, -14, 2340, 453960},
      {50176, 7, 6692, 3330, 3345, -15, 1344, 299712},
      {65025, 5, 12195, 4048, 4064, -16, 1020, 259080},
      {104329, 17, 5797, 5778, 5796, -18, 5168, 1664096},
      {159201, 19, 7961, 7940, 7960, -20, 7182, 2858436},
      {193600, 5, 36880, 9198, 9219, -21, 1760, 772640},
  };
  return rows;
}

namespace {

bool in_known(const std::vector<KnownRow>& rows, std::int64_t n, std::int64_t r, std::int64_t c) {
  return std::any_of(rows.begin(), rows.end(), [&](const KnownRow& k) { return k.n == n && k.r == r && k.c == c; });
}

bool is_published(FamilyCase family, std::int64_t n, std::int64_t r, std::int64_t c) {
  switch (family) {
    case FamilyCase::Ia: return n == 28 && r == 4 && c == 8;
    case FamilyCase::IIa: return n == 9 && r == 3 && c == 3;
    case FamilyCase::Ib: return in_known(known_rows_case_Ib(), n, r, c);
    case FamilyCase::IIb: return in_known(known_rows_case_IIb(), n, r, c);
  }
  return false;
}

std::vector<EnumeratedRow> rows_for_t(FamilyCase family, std::int64_t t) {
  std::vector<EnumeratedRow> out;
  const FamilyRow closed = family_params(family, QuadSurd(t));
  if (closed.rc.sign() <= 0) return out;
  const std::int64_t n = closed.n.as_integer().get_si();
  const Integer rc_big = closed.rc.as_integer();
  if (!rc_big.fits_slong_p()) throw std::overflow_error("family_enumerate: rc too large");
  const std::int64_t rc = rc_big.get_si();
  const bool even_case = family == FamilyCase::Ia || family == FamilyCase::Ib;
  for (auto r : divisors(rc)) {
    if (r < 2 || (r % 2 == 0) != even_case) continue;
    const std::int64_t c = rc / r;
    if (family == FamilyCase::Ib && !case_Ib_conditions(t, r, c)) continue;
    if (family == FamilyCase::IIb && !case_IIb_conditions(t, r, c)) continue;
    auto report = feasibility_battery(n, r, c);
    if (!report.pass) continue;
    EnumeratedRow row;
    row.family = family;
    row.t = t;
    row.params = report.params;
    row.two_graph = r == 2;
    row.unpublished = !row.two_graph && !is_published(family, n, r, c);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::vector<EnumeratedRow> family_enumerate(FamilyCase family, std::int64_t t_max, int jobs) {
  if (t_max < 2) throw std::invalid_argument("family_enumerate: t_max must be at least 2");
  const std::int64_t t_min = 2;
  const auto count = static_cast<std::size_t>(t_max - t_min + 1);
  std::vector<std::vector<EnumeratedRow>> per_t(count);
  detail::parallel_for(count, jobs, [&](std::size_t i) {
    per_t[i] = rows_for_t(family, t_min + static_cast<std::int64_t>(i));
  });
  std::vector<EnumeratedRow> out;
  for (auto& chunk : per_t)
    for (auto& row : chunk) out.push_back(std::move(row));

  if (family == FamilyCase::Ia) {
    // t = sqrt(5): n = 6, rc = 4
    const FamilyRow closed = family_params(family, QuadSurd::sqrt(Rational(5)));
    const std::int64_t n = closed.n.as_integer().get_si();
    const std::int64_t rc = closed.rc.as_integer().get_si();
    for (auto r : divisors(rc)) {
      if (r % 2 != 0) continue;
      auto report = feasibility_battery(n, r, rc / r);
      if (!report.pass) continue;
      EnumeratedRow row;
      row.family = family;
      row.params = report.params;
      row.sporadic = true;
      row.two_graph = r == 2;
      row.unpublished = !row.two_graph;
      out.push_back(std::move(row));
    }
  }

  std::sort(out.begin(), out.end(), [](const EnumeratedRow& a, const EnumeratedRow& b) {
    return std::pair(a.params.n, a.params.r) < std::pair(b.params.n, b.params.r);
  });
  return out;
}

std::string flags_of(const EnumeratedRow& row) {
  std::vector<std::string> flags;
  if (row.two_graph) flags.emplace_back("two-graph");
  if (row.unpublished) flags.emplace_back("unpublished");
  if (row.sporadic) flags.emplace_back("sporadic");
  if (flags.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < flags.size(); ++i) out += (i ? "," : "") + flags[i];
  return out;
}

std::string tsv_header(bool with_flags) {
  std::string out = "n\tr\tc\tdelta\ttheta\ttau\tm_theta\tm_tau";
  if (with_flags) out += "\tflags";
  return out;
}

std::string tsv_row(const EnumeratedRow& row, bool with_flags) {
  const auto& p = row.params;
  std::ostringstream out;
  out << p.n << '\t' << p.r << '\t' << p.c << '\t' << p.delta << '\t' << p.theta.to_string() << '\t'
      << p.tau.to_string() << '\t' << p.m_theta.to_string() << '\t' << p.m_tau.to_string();
  if (with_flags) out << '\t' << flags_of(row);
  return out.str();
}

}  // namespace drackn
