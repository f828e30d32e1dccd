#include <doctest.h>

#include <set>

#include "drackn/constructions.hpp"
#include "drackn/cover.hpp"
#include "drackn/lines.hpp"

using namespace drackn;

namespace {

std::string summary(const ArcMatrix& f) { return drackn_verify(f).summary_line(); }

// chi(H) chi(H)^* = n I for every nontrivial character: the character image of
// H H^* = n I + c G(J - I), since chi kills the group sum.
bool gh_by_characters(const GHMatrix& h) {
  const auto chars = characters_of(h.group);
  const int p = *h.group.prime_exponent();
  for (std::size_t k = 1; k < chars.size(); ++k) {
    Matrix<CycNum> m(static_cast<std::size_t>(h.n), static_cast<std::size_t>(h.n), CycNum(p));
    for (int u = 0; u < h.n; ++u)
      for (int v = 0; v < h.n; ++v) m(u, v) = chars[k].value(h.at(u, v));
    const auto prod = m * conjugate_transpose(m);
    if (!(prod == scaled(Matrix<CycNum>::identity(m.rows(), CycNum(p)), CycNum(p, Rational(h.n))))) return false;
  }
  return true;
}

GHMatrix gh22() {
  GHMatrix h(AbelianGroup::cyclic(2), 4);
  const int rows[4][4] = {{0, 0, 0, 0}, {0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}};
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) h.set(u, v, rows[u][v]);
  return h;
}

std::string condition_of(const auto& fn) {
  try {
    fn();
  } catch (const VerificationError& e) {
    return e.condition();
  }
  return "none";
}

}  // namespace

TEST_CASE("alternating forms") {
  CHECK_NOTHROW(AlternatingForm::standard(3, 2).validate());
  CHECK_NOTHROW(AlternatingForm::standard(2, 6).validate());
  CHECK_THROWS_AS(AlternatingForm::standard(3, 3), std::invalid_argument);

  AlternatingForm bad{3, 2, 1, {{{1, 0}, {0, 0}}}};
  CHECK(condition_of([&] { bad.validate(); }) == "form-not-alternating");
  AlternatingForm zero{3, 2, 1, {{{0, 0}, {0, 0}}}};
  CHECK(condition_of([&] { zero.validate(); }) == "form-not-surjective");

  const auto b = AlternatingForm::standard(5, 2);
  CHECK(b.evaluate({1, 0}, {0, 1}) == GroupElement{1});
  CHECK(b.evaluate({0, 1}, {1, 0}) == GroupElement{4});
}

TEST_CASE("symplectic covers") {
  CHECK(summary(thas_somma(3, 2, 1)) == "DRACKN n=9 r=3 c=3 delta=-2 theta=2 tau=-4");
  CHECK(summary(thas_somma(2, 2, 1)).starts_with("DRACKN n=4 r=2 c=2 "));
  CHECK(summary(thas_somma(5, 2, 1)).starts_with("DRACKN n=25 r=5 c=5 "));
  CHECK(summary(thas_somma(3, 4, 1)).starts_with("DRACKN n=81 r=3 c=27 "));
  CHECK(thas_somma(3, 2, 1).group() == AbelianGroup::elementary(3, 1));

  // The GF(4)-symplectic form on GF(4)^2 read over GF(2): both coordinates of v1 w2 - v2 w1.
  AlternatingForm two{2, 4, 2, {{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}},
                                {{0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 0, 0}, {1, 1, 0, 0}}}};
  CHECK_NOTHROW(two.validate());
  const auto f = thas_somma(2, 4, 2, two);
  CHECK(f.group() == AbelianGroup::elementary(2, 2));
  CHECK(summary(f).starts_with("DRACKN n=16 r=4 c=4 "));
  CHECK_THROWS_AS(thas_somma(2, 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(thas_somma(4, 2, 1), std::invalid_argument);
}

TEST_CASE("skew products") {
  for (auto [t, d] : {std::pair{1, 1}, {1, 3}, {2, 1}, {1, 5}, {2, 3}}) {
    const auto star = SkewProduct::standard(t, d);
    CHECK_NOTHROW(star.validate());
    const FiniteField::Code size = FiniteField::Code{1} << (t * d);
    std::set<FiniteField::Code> squares;
    for (FiniteField::Code x = 0; x < size; ++x) squares.insert(star(x, x));
    CHECK(squares.size() == size);
  }
  // x*y = y*x exactly when x and y are dependent over GF(2) (t = 1).
  const auto star = SkewProduct::standard(1, 3);
  for (FiniteField::Code x = 0; x < 8; ++x)
    for (FiniteField::Code y = 0; y < 8; ++y) CHECK((star(x, y) == star(y, x)) == (x == 0 || y == 0 || x == y));

  CHECK_THROWS_AS(SkewProduct::standard(1, 2), std::invalid_argument);

  // Symmetric products are rejected.
  std::vector<std::vector<FiniteField::Code>> sym{{1, 0, 0}, {0, 2, 0}, {0, 0, 4}};
  CHECK(condition_of([&] { SkewProduct(1, 3, sym).validate(); }) != "none");
}

TEST_CASE("latin squares") {
  CHECK_NOTHROW(LatinSquare::standard(2).validate());
  LatinSquare shifted{2, {{0, 1, 2, 3}, {2, 3, 0, 1}, {1, 0, 3, 2}, {3, 2, 1, 0}}};
  CHECK(condition_of([&] { shifted.validate(); }) == "latin-not-symmetric");
  LatinSquare repeat{1, {{0, 0}, {0, 1}}};
  CHECK(condition_of([&] { repeat.validate(); }) == "latin-row");
}

TEST_CASE("skew-product covers") {
  CHECK(summary(dcff(1, 1)).starts_with("DRACKN n=4 r=2 c=2 "));
  const auto big = dcff(1, 3);
  CHECK(big.group() == AbelianGroup::elementary(2, 3));
  CHECK(regular_expand(big).size() == 128);
  CHECK(summary(big).starts_with("DRACKN n=16 r=8 c=2 "));
  CHECK(summary(dcff(2, 1)).starts_with("DRACKN n=16 r=4 c=4 "));
  CHECK_THROWS_AS(dcff(1, 2), std::invalid_argument);

  LatinSquare other{1, {{1, 0}, {0, 1}}};
  CHECK(summary(dcff(1, 3, std::nullopt, other)).starts_with("DRACKN n=16 r=8 c=2 "));
}

TEST_CASE("generalized Hadamard matrices") {
  const auto f = thas_somma(3, 2, 1);
  const auto h = cover_to_gh(f);
  CHECK(h.n == 9);
  CHECK(h.group == AbelianGroup::cyclic(3));
  CHECK(gh_validate(h).ok);
  CHECK(gh_by_characters(h));
  CHECK(gh_to_cover(h) == f);

  const auto h4 = cover_to_gh(thas_somma(2, 2, 1));
  CHECK(h4.n == 4);
  CHECK(gh_validate(h4).ok);

  const auto ico = lines_to_cover(find_conference_seidel(6, 0), 2).cover;
  CHECK(condition_of([&] { cover_to_gh(ico); }) == "delta");

  CHECK(gh_validate(gh22()).ok);
  CHECK(gh_by_characters(gh22()));
  const auto cube = gh_to_cover(gh22());
  CHECK(summary(cube).starts_with("DRACKN n=4 r=2 c=2 "));
  CHECK(cover_to_gh(cube) == gh22());

  GHMatrix flat(AbelianGroup::cyclic(2), 2);
  CHECK_FALSE(gh_validate(flat).ok);
  CHECK(condition_of([&] { gh_to_cover(flat); }) == "gh-identity");

  // Constant non-identity diagonal: shift every entry of gh22 by the generator.
  GHMatrix shifted = gh22();
  for (auto& x : shifted.entries) x ^= 1;
  CHECK(gh_validate(shifted).ok);
  CHECK(gh_to_cover(shifted) == cube);

  GHMatrix ragged = gh22();
  ragged.set(3, 3, 1);
  CHECK(condition_of([&] { gh_to_cover(ragged); }) == "diagonal-not-constant");
}

TEST_CASE("gh round trips on every delta = -2 construction") {
  for (const auto& f : {thas_somma(2, 2, 1), thas_somma(3, 2, 1), thas_somma(5, 2, 1), dcff(2, 1), thas_somma(2, 4, 1)}) {
    REQUIRE(drackn_verify(f).params.delta == -2);
    const auto h = cover_to_gh(f);
    CHECK(gh_to_cover(h) == f);
    CHECK(cover_to_gh(gh_to_cover(h)) == h);
  }
}
