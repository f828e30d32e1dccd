#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>
#include <tuple>

#include "drackn/feasibility.hpp"

using namespace drackn;

namespace {

using Row = std::array<std::int64_t, 8>;  // n r c delta theta tau m_theta m_tau

const std::vector<Row> kTable1 = {
    {276, 4, 56, 50, 55, -5, 69, 759},          {276, 16, 14, 50, 55, -5, 345, 3795},
    {1128, 6, 162, 154, 161, -7, 235, 5405},    {1128, 54, 18, 154, 161, -7, 2491, 57293},
    {1128, 162, 6, 154, 161, -7, 7567, 174041}, {1128, 486, 2, 154, 161, -7, 22795, 524285},
    {3160, 4, 704, 342, 351, -9, 237, 9243},    {3160, 8, 352, 342, 351, -9, 553, 21567},
    {3160, 64, 44, 342, 351, -9, 4977, 194103}, {3160, 128, 22, 342, 351, -9, 10033, 391287},
};

const std::vector<Row> kTable2 = {
    {1225, 5, 205, 198, 204, -6, 140, 4760},         {3969, 7, 497, 488, 496, -8, 378, 23436},
    {14400, 5, 2620, 1298, 1309, -11, 480, 57120},   {20449, 11, 1705, 1692, 1704, -12, 1430, 203060},
    {38025, 13, 2717, 2702, 2716, -14, 2340, 453960}, {50176, 7, 6692, 3330, 3345, -15, 1344, 299712},
    {65025, 5, 12195, 4048, 4064, -16, 1020, 259080}, {104329, 17, 5797, 5778, 5796, -18, 5168, 1664096},
    {159201, 19, 7961, 7940, 7960, -20, 7182, 2858436}, {193600, 5, 36880, 9198, 9219, -21, 1760, 772640},
};

Row as_row(const ParameterSet& p) {
  return {p.n, p.r, p.c, p.delta, p.theta.as_integer().get_si(), p.tau.as_integer().get_si(), p.m_theta.as_integer().get_si(),
          p.m_tau.as_integer().get_si()};
}

std::string verdicts(const FeasibilityReport& report) {
  std::string out;
  for (const auto& c : report.conditions)
    out += c.name + (c.verdict == Verdict::pass ? "+" : c.verdict == Verdict::fail ? "-" : "0") + " ";
  return out;
}

}  // namespace

TEST_CASE("spectral parameters") {
  const auto a = spectral_params(9, 3, 3);
  CHECK(a.delta == -2);
  CHECK(a.theta == QuadSurd(2));
  CHECK(a.tau == QuadSurd(-4));
  CHECK(a.m_theta == QuadSurd(12));
  CHECK(a.m_tau == QuadSurd(6));

  CHECK(as_row(spectral_params(276, 4, 56)) == kTable1.front());

  const auto b = spectral_params(6, 2, 2);
  CHECK(b.kind == EigenKind::symbolic);
  CHECK(b.theta == QuadSurd::sqrt(5));
  CHECK(b.tau == -QuadSurd::sqrt(5));
  CHECK(b.m_theta == QuadSurd(3));
  CHECK(b.m_tau == QuadSurd(3));

  CHECK_THROWS_AS(spectral_params(1, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(spectral_params(5, 2, 0), std::invalid_argument);
}

TEST_CASE("spectral identities") {
  for (std::int64_t n = 2; n <= 40; ++n)
    for (std::int64_t r = 2; r <= 8; ++r)
      for (std::int64_t c = 1; c <= 8; ++c) {
        const auto p = spectral_params(n, r, c);
        CHECK(p.theta + p.tau == QuadSurd(p.delta));
        CHECK(p.theta * p.tau == QuadSurd(-(n - 1)));
        CHECK(p.m_theta + p.m_tau == QuadSurd(n * (r - 1)));
        CHECK(p.theta > p.tau);
      }
}

TEST_CASE("feasibility battery") {
  const auto ok = feasibility_battery(276, 4, 56);
  CHECK(ok.pass);
  CHECK(ok.failures().empty());
  CHECK(feasibility_battery(45, 3, 12).pass);
  CHECK(feasibility_battery(144, 4, 36).pass);
  CHECK(feasibility_battery(9, 3, 3).pass);
  CHECK(feasibility_battery(28, 4, 8).pass);

  const auto bad = feasibility_battery(6, 3, 1);
  CHECK_FALSE(bad.pass);
  CHECK(bad.condition("c").verdict == Verdict::fail);
  CHECK(bad.condition("c").witness == "eigenvalues-not-integral");
  CHECK(bad.params.delta == 1);

  for (const auto& row : kTable1) CHECK(feasibility_battery(row[0], row[1], row[2]).pass);
  for (const auto& row : kTable2) CHECK(feasibility_battery(row[0], row[1], row[2]).pass);

  // Odd prime dividing r must divide n.
  CHECK(feasibility_battery(10, 3, 2).condition("odd-prime").verdict == Verdict::fail);
}

TEST_CASE("battery verdicts are stable") {
  std::vector<std::string> names;
  for (const auto& c : feasibility_battery(276, 4, 56).conditions) names.push_back(c.name);
  CHECK(names == std::vector<std::string>{"a", "b", "c", "d", "e", "f", "g", "h", "i", "odd-prime"});
  CHECK(verdicts(feasibility_battery(6, 3, 1)).find("c-") != std::string::npos);
}

TEST_CASE("tau bounds") {
  // Odd r, n = 81: range [-8 sqrt(10), -sqrt(10)]; tau = -4 lies inside (16 >= 10).
  const auto odd = tau_membership(81, Parity::odd, QuadSurd(-4));
  CHECK(odd.above_lower);
  CHECK(odd.below_upper);
  CHECK(tau_membership(81, Parity::odd, QuadSurd(-3)).below_upper == false);
  CHECK(tau_membership(81, Parity::odd, QuadSurd(-26)).above_lower == false);

  const auto sic = tau_membership(9, Parity::odd, QuadSurd(-4));
  CHECK(sic.in_range());
  CHECK(sic.lower_tight);
  CHECK(sic.absolute_bound_attained());

  const auto ico = tau_membership(6, Parity::even, -QuadSurd::sqrt(5));
  CHECK(ico.in_range());
  CHECK(ico.absolute_bound_attained());
  CHECK(tau_bounds(6, Parity::even).lower.compare_square(Rational(5)) == 0);
}

TEST_CASE("family closed forms") {
  const auto ia = family_params(FamilyCase::Ia, QuadSurd(3));
  CHECK(ia.n == QuadSurd(28));
  CHECK(ia.rc == QuadSurd(32));
  CHECK(ia.theta == QuadSurd(3));
  CHECK(ia.tau == QuadSurd(-9));

  const auto iia = family_params(FamilyCase::IIa, QuadSurd(2));
  CHECK(iia.n == QuadSurd(9));
  CHECK(iia.rc == QuadSurd(9));

  const auto iib = family_params(FamilyCase::IIb, QuadSurd(6));
  CHECK(iib.n == QuadSurd(1225));
  CHECK(iib.rc == QuadSurd(1025));
  CHECK(iib.theta == QuadSurd(204));
  CHECK(iib.tau == QuadSurd(-6));

  const auto s5 = family_params(FamilyCase::Ia, QuadSurd::sqrt(5));
  CHECK(s5.n == QuadSurd(6));

  for (long t = 2; t <= 40; ++t)
    for (auto family : {FamilyCase::Ib, FamilyCase::IIb}) {
      const auto row = family_params(family, QuadSurd(t));
      CHECK((row.theta + QuadSurd(1)) * QuadSurd(t - 1) == row.rc);
    }
  CHECK_THROWS_AS(family_params(FamilyCase::Ib, QuadSurd(1)), std::invalid_argument);
}

TEST_CASE("enumeration") {
  auto rows_of = [](FamilyCase family, std::int64_t t_max, bool keep_unpublished, bool keep_two_graph) {
    std::vector<Row> out;
    for (const auto& row : family_enumerate(family, t_max, 2)) {
      if ((row.unpublished && !keep_unpublished) || (row.two_graph && !keep_two_graph)) continue;
      out.push_back(as_row(row.params));
    }
    return out;
  };

  CHECK(rows_of(FamilyCase::IIb, 21, false, false) == kTable2);

  const auto ib = family_enumerate(FamilyCase::Ib, 9, 1);
  std::set<Row> seen;
  for (const auto& row : ib) {
    CHECK(feasibility_battery(row.params.n, row.params.r, row.params.c).pass);
    const Row as = as_row(row.params);
    const bool published = std::find(kTable1.begin(), kTable1.end(), as) != kTable1.end();
    CHECK(published != (row.unpublished || row.two_graph));
    seen.insert(as);
  }
  for (const auto& row : kTable1) CHECK(seen.count(row) == 1);
  CHECK(std::any_of(ib.begin(), ib.end(), [](const EnumeratedRow& r) {
    return r.params.n == 595 && r.params.r == 20 && r.params.c == 25 && r.unpublished;
  }));

  const auto ia = rows_of(FamilyCase::Ia, 100, true, false);
  REQUIRE(ia.size() == 1);
  CHECK(ia.front()[0] == 28);
  CHECK(ia.front()[1] == 4);
  CHECK(ia.front()[2] == 8);
  for (const auto& row : family_enumerate(FamilyCase::Ia, 100))
    if (row.params.r >= 4) CHECK(std::tie(row.params.n, row.params.r, row.params.c) == std::tuple<std::int64_t, std::int64_t, std::int64_t>{28, 4, 8});

  const auto iia = family_enumerate(FamilyCase::IIa, 100);
  REQUIRE(iia.size() == 1);
  CHECK(iia.front().params.n == 9);
  CHECK(iia.front().params.r == 3);
  CHECK(iia.front().params.c == 3);

  // Same output for any worker count.
  const auto one = family_enumerate(FamilyCase::IIb, 30, 1), many = family_enumerate(FamilyCase::IIb, 30, 4);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(tsv_row(one[i], true) == tsv_row(many[i], true));
}

TEST_CASE("emitted rows attain the absolute bound") {
  for (auto family : {FamilyCase::Ia, FamilyCase::Ib, FamilyCase::IIa, FamilyCase::IIb})
    for (const auto& row : family_enumerate(family, 12)) {
      const auto parity = row.params.r % 2 == 0 ? Parity::even : Parity::odd;
      CHECK(tau_membership(row.params.n, parity, row.params.tau).absolute_bound_attained());
    }
}

TEST_CASE("quotients keep delta, theta, tau and conditions (a)-(e)") {
  for (auto family : {FamilyCase::Ib, FamilyCase::IIb})
    for (const auto& row : family_enumerate(family, 9)) {
      const auto& p = row.params;
      for (std::int64_t t = 2; t < p.r; ++t) {
        if (p.r % t != 0) continue;
        const auto q = feasibility_battery(p.n, p.r / t, p.c * t);
        CHECK(q.params.delta == p.delta);
        CHECK(q.params.theta == p.theta);
        CHECK(q.params.tau == p.tau);
        for (const char* name : {"a", "b", "c", "d", "e"}) CHECK(q.condition(name).verdict != Verdict::fail);
      }
    }
}

TEST_CASE("tsv") {
  CHECK(tsv_header(false) == "n\tr\tc\tdelta\ttheta\ttau\tm_theta\tm_tau");
  CHECK(tsv_header(true) == "n\tr\tc\tdelta\ttheta\ttau\tm_theta\tm_tau\tflags");
  const auto rows = family_enumerate(FamilyCase::IIb, 6);
  REQUIRE(rows.size() == 1);
  CHECK(tsv_row(rows.front(), false) == "1225\t5\t205\t198\t204\t-6\t140\t4760");
  CHECK(flags_of(rows.front()) == "-");
}

TEST_CASE("even r: real absolute bound at parameter level") {
  std::size_t passing = 0;
  for (std::int64_t n = 3; n <= 400; ++n)
    for (std::int64_t r = 2; r <= 16; r += 2)
      for (std::int64_t c = 1; r * c <= n; ++c) {
        const auto report = feasibility_battery(n, r, c);
        if (!report.pass) continue;
        ++passing;
        const auto& p = report.params;
        const QuadSurd half(Rational(1, 2));
        CHECK((QuadSurd(n) <= half * p.mbar_tau * (p.mbar_tau + QuadSurd(1)) ||
               QuadSurd(n) <= half * p.mbar_theta * (p.mbar_theta + QuadSurd(1))));
      }
  CHECK(passing > 10);
}
