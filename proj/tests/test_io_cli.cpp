#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "drackn/cli.hpp"
#include "drackn/constructions.hpp"
#include "drackn/cover.hpp"
#include "drackn/io.hpp"
#include "drackn/lines.hpp"

using namespace drackn;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

template <class Parse>
auto reparse(const std::string& text, Parse parse) {
  std::istringstream in(text);
  return parse(in);
}

// Random gauge change: relabel fibre u by adding g_u.
ArcMatrix regauge(const ArcMatrix& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, f.r() - 1);
  std::vector<int> shift(static_cast<std::size_t>(f.n()));
  for (auto& s : shift) s = pick(rng);
  ArcMatrix out(f.n(), f.group());
  const auto& g = f.group();
  for (int u = 0; u < f.n(); ++u)
    for (int v = u + 1; v < f.n(); ++v)
      out.set_pair(u, v, g.add(g.sub(f.at(u, v), shift[static_cast<std::size_t>(u)]), shift[static_cast<std::size_t>(v)]));
  return out;
}

}  // namespace

TEST_CASE("cover files round trip") {
  std::mt19937 rng(11);
  const std::vector<ArcMatrix> covers{thas_somma(3, 2, 1), thas_somma(2, 2, 1), thas_somma(5, 2, 1), dcff(1, 3), dcff(2, 1),
                                      quotient(dcff(1, 3), {{1, 1, 0}}), ArcMatrix(3, AbelianGroup({2, 4}))};
  for (const auto& base : covers)
    for (int trial = 0; trial < 4; ++trial) {
      const auto f = trial == 0 ? base : regauge(base, rng);
      CHECK(reparse(emit_cover(f), parse_cover) == f);
    }
  const auto trivial = quotient(thas_somma(3, 2, 1), {{1}});
  CHECK(trivial.r() == 1);
  CHECK(reparse(emit_cover(trivial), parse_cover) == trivial);
}

TEST_CASE("seidel and gh files round trip") {
  const auto f = thas_somma(3, 2, 1);
  for (std::size_t k = 1; k < 3; ++k) {
    const SeidelMatrix s{char_apply(f, characters_of(f.group())[k]), 3};
    const auto back = reparse(emit_seidel(s), parse_seidel);
    CHECK(back.entries == s.entries);
    CHECK(back.root_order == s.root_order);
  }
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto s = find_conference_seidel(6, seed);
    CHECK(reparse(emit_seidel(s), parse_seidel).entries == s.entries);
  }

  Matrix<CycNum> m(2, 2, CycNum(5));
  m(0, 1) = -CycNum::zeta_power(5, 2);
  m(1, 0) = m(0, 1).conj();
  const SeidelMatrix generic{m, std::nullopt};
  const auto back = reparse(emit_seidel(generic), parse_seidel);
  CHECK(back.entries == generic.entries);
  CHECK_FALSE(back.root_order.has_value());

  for (const auto& cover : {f, thas_somma(2, 2, 1), dcff(2, 1)}) {
    const auto h = cover_to_gh(cover);
    CHECK(reparse(emit_gh(h), parse_gh) == h);
  }
}

TEST_CASE("auxiliary files round trip") {
  const auto form = AlternatingForm::standard(3, 4);
  const auto form2 = reparse(emit_form(form), parse_form);
  CHECK(form2.matrices == form.matrices);
  const auto star = SkewProduct::standard(1, 3);
  CHECK(reparse(emit_skew(star), parse_skew).basis_products() == star.basis_products());
  const auto square = LatinSquare::standard(2);
  CHECK(reparse(emit_latin(square), parse_latin).entries == square.entries);
}

TEST_CASE("malformed input") {
  auto throws_format = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(parse_cover(in), FormatError);
  };
  throws_format("");
  throws_format("DRACKN-COVER v2\nn=2 group=2\n. 0\n0 .\n");
  throws_format("DRACKN-COVER v1\nn=2\n. 0\n0 .\n");
  throws_format("DRACKN-COVER v1\nn=2 group=2\n. 0\n");
  throws_format("DRACKN-COVER v1\nn=2 group=2\n. 0\n0 .\n0 0\n");
  throws_format("DRACKN-COVER v1\nn=2 group=2\n. 5\n5 .\n");
  throws_format("DRACKN-COVER v1\nn=2 group=2\n. x\n0 .\n");
  throws_format("DRACKN-COVER v1\nn=2 group=2\n0 0\n0 .\n");

  std::istringstream comments("# a comment\nDRACKN-COVER v1\n\nn=2 group=2\n# rows\n. 1\n1 .\n");
  CHECK(parse_cover(comments).n() == 2);
}

TEST_CASE("cli: construct and verify") {
  const auto built = cli({"construct", "thas-somma", "-p", "3", "-m", "2", "-s", "1"});
  REQUIRE(built.code == kExitOk);
  const auto verified = cli({"verify"}, built.out);
  CHECK(verified.code == kExitOk);
  CHECK(verified.out ==
        "DRACKN n=9 r=3 c=3 delta=-2 theta=2 tau=-4\n"
        "spectrum 8^1 2^12 -1^8 -4^6\n"
        "routes combinatorial=pass algebraic=pass\n");
  CHECK(cli({"--jobs", "4", "verify", "-"}, built.out).out == verified.out);
  CHECK(cli({"verify", "--jobs", "3"}, built.out).out == verified.out);

  const auto flat = cli({"verify"}, emit_cover(ArcMatrix(3, AbelianGroup::cyclic(2))));
  CHECK(flat.code == kExitFail);
  CHECK(flat.out.starts_with("FAIL not-connected "));
}

TEST_CASE("cli: lines and back") {
  const auto built = cli({"construct", "thas-somma", "-p", "3", "-m", "2", "-s", "1"}).out;
  const auto lines = cli({"cover-to-lines", "--char", "1"}, built);
  REQUIRE(lines.code == kExitOk);
  CHECK(lines.out.starts_with("SEIDEL v1\nn=9 r=3\n"));
  CHECK(lines.out.find("# lines theta n=9 d=3 alpha^2=1/4 relative_bound=1/4 tight=yes absolute_bound(complex)=9 attained=yes") !=
        std::string::npos);
  CHECK(lines.out.find("# GRAM") == std::string::npos);
  CHECK(cli({"cover-to-lines", "--char", "1", "--full-gram", "--which", "theta"}, built).out.find("# GRAM theta 0:") != std::string::npos);

  const auto back = cli({"lines-to-cover", "--r", "3"}, lines.out);
  REQUIRE(back.code == kExitOk);
  CHECK(back.out.find("gives c=3") != std::string::npos);
  CHECK(cli({"verify"}, back.out).out.starts_with("DRACKN n=9 r=3 c=3 delta=-2 theta=2 tau=-4\n"));

  CHECK(cli({"cover-to-lines", "--char", "0"}, built).code == kExitFormat);
}

TEST_CASE("cli: gh, quotient, doubling") {
  const auto built = cli({"construct", "thas-somma", "-p", "3", "-m", "2", "-s", "1"}).out;
  const auto gh = cli({"cover-to-gh"}, built);
  REQUIRE(gh.code == kExitOk);
  CHECK(gh.out.find("# gh_validate pass") != std::string::npos);
  const auto back = cli({"gh-to-cover"}, gh.out);
  CHECK(back.code == kExitOk);
  CHECK(back.out.find("# DRACKN n=9 r=3 c=3 delta=-2") != std::string::npos);

  const auto big = cli({"construct", "dcff", "-t", "1", "-d", "3"}).out;
  const auto q = cli({"quotient", "--subgroup", "1,0,0"}, big);
  REQUIRE(q.code == kExitOk);
  CHECK(cli({"verify"}, q.out).out.starts_with("DRACKN n=16 r=4 c=4 "));
  CHECK(cli({"quotient", "--subgroup", "1,x"}, big).code == kExitFormat);

  const auto conf = cli({"construct", "conference", "-n", "6", "--seed", "0"});
  REQUIRE(conf.code == kExitOk);
  const auto dbl = cli({"double-real"}, conf.out);
  CHECK(dbl.code == kExitOk);
  CHECK(dbl.out.find("DRACKN n=6 r=2 c=2 delta=0 theta=sqrt(5) tau=-sqrt(5)") != std::string::npos);
  CHECK(cli({"cover-to-gh"}, cli({"lines-to-cover", "--r", "2"}, conf.out).out).out.starts_with("FAIL delta "));
}

TEST_CASE("cli: feasibility") {
  const auto bad = cli({"feasible", "6", "3", "1"});
  CHECK(bad.code == kExitFail);
  CHECK(bad.out.find("\nFAIL (c) eigenvalues-not-integral\n") != std::string::npos);
  const auto good = cli({"feasible", "276", "4", "56"});
  CHECK(good.code == kExitOk);
  CHECK(good.out.ends_with("FEASIBLE\n"));
  CHECK(cli({"feasible", "1", "3", "1"}).code == kExitFormat);

  const auto table = cli({"enumerate", "--case", "IIb", "--t-max", "21", "--tsv"});
  CHECK(table.code == kExitOk);
  CHECK(table.out.starts_with("n\tr\tc\tdelta\ttheta\ttau\tm_theta\tm_tau\n1225\t5\t205\t198\t204\t-6\t140\t4760\n"));
  CHECK(std::count(table.out.begin(), table.out.end(), '\n') == 11);
  CHECK(cli({"--jobs", "4", "enumerate", "--case", "IIb", "--t-max", "21", "--tsv"}).out == table.out);

  const auto ib = cli({"enumerate", "--case", "Ib", "--t-max", "9", "--tsv", "--include-unpublished"});
  CHECK(ib.out.find("595\t20\t25\t") != std::string::npos);
  CHECK(ib.out.find("unpublished") != std::string::npos);
}

TEST_CASE("cli: usage errors") {
  CHECK(cli({}).code == kExitFormat);
  CHECK(cli({"frobnicate"}).code == kExitFormat);
  CHECK(cli({"enumerate", "--case", "III", "--t-max", "3"}).code == kExitFormat);
  CHECK(cli({"verify"}, "not a cover").code == kExitFormat);
  CHECK(cli({"verify", "/nonexistent/file"}).code == kExitFormat);
  CHECK(cli({"construct", "dcff", "-t", "1", "-d", "2"}).code == kExitFormat);
  CHECK(cli({"--help"}).code == kExitOk);
}
