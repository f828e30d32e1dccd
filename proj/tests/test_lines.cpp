#include <doctest.h>

#include <complex>

#include "drackn/constructions.hpp"
#include "drackn/cover.hpp"
#include "drackn/lines.hpp"

using namespace drackn;

namespace {

CycSurd rat(int q, const Rational& x) { return CycSurd(CycNum(q, x)); }

// Gram matrix with unit diagonal and every off-diagonal entry equal to x.
LineSet constant_gram(std::size_t n, const Rational& x) {
  Matrix<CycSurd> g(n, n, rat(2, x));
  for (std::size_t i = 0; i < n; ++i) g(i, i) = rat(2, Rational(1));
  return LineSet{g, n, mat_rank_exact(g), QuadSurd(x * x)};
}

SeidelMatrix seidel_933() {
  const auto f = thas_somma(3, 2, 1);
  return SeidelMatrix{char_apply(f, characters_of(f.group())[1]), 3};
}

}  // namespace

TEST_CASE("relative and absolute bounds") {
  CHECK(relative_bound(9, 3) == Rational(1, 4));
  CHECK(relative_bound(6, 3) == Rational(1, 5));
  CHECK(relative_bound(9, 6) == Rational(1, 16));
  CHECK(relative_bound(5, 5) == 0);
  CHECK(absolute_bound(3, LineField::complex) == 9);
  CHECK(absolute_bound(7, LineField::real) == 28);
  CHECK(absolute_bound(1, LineField::real) == 1);
}

TEST_CASE("tight frames") {
  // Orthonormal basis.
  CHECK(tight_frame_check(constant_gram(4, Rational(0))));
  // Three lines at 120 degrees in the plane: rank 2, alpha^2 = 1/4 = relative_bound(3, 2).
  const auto plane = constant_gram(3, Rational(-1, 2));
  CHECK(plane.d == 2);
  CHECK(tight_frame_check(plane));
  CHECK(plane.alpha_sq == QuadSurd(relative_bound(3, 2)));
  // Same angle with a positive inner product spans dimension 3 and is not tight.
  const auto space = constant_gram(3, Rational(1, 2));
  CHECK(space.d == 3);
  CHECK_FALSE(tight_frame_check(space));
  CHECK(space.alpha_sq != QuadSurd(relative_bound(3, 3)));
}

TEST_CASE("lines from the (9,3,3) Seidel block") {
  const auto s = seidel_933();
  CHECK(is_hermitian(s.entries));
  CHECK(mat_poly_check(s.entries, {Rational(-8), Rational(2), Rational(1)}));
  const auto pair = seidel_to_linesets(s);
  CHECK(pair.spectrum.theta == QuadSurd(2));
  CHECK(pair.spectrum.tau == QuadSurd(-4));
  CHECK(pair.tau_set.d == 6);
  CHECK(pair.theta_set.d == 3);
  CHECK(pair.tau_set.d + pair.theta_set.d == 9);
  CHECK(pair.tau_set.alpha_sq == QuadSurd(Rational(1, 16)));
  CHECK(pair.theta_set.alpha_sq == QuadSurd(Rational(1, 4)));
  CHECK(mat_rank_exact(pair.theta_set.gram) == 3);

  // G^2 = (n/d) G entry by entry.
  const auto& g = pair.theta_set.gram;
  CHECK(g * g == scaled(g, rat(3, Rational(3))));
  CHECK(tight_frame_check(pair.tau_set));
  CHECK(tight_frame_check(pair.theta_set));
  CHECK(static_cast<std::int64_t>(pair.theta_set.n) == absolute_bound(3, LineField::complex));

  // Seidel eigenvalues of a tight set are -1/alpha and (n - d)/(alpha d); the
  // theta set is I - S/theta, so its own Seidel matrix is -S.
  for (const auto& [set, seidel] : {std::pair{&pair.tau_set, s.entries}, std::pair{&pair.theta_set, s.negated().entries}}) {
    const QuadSurd alpha = QuadSurd::sqrt(set->alpha_sq.as_rational());
    const auto n = static_cast<long>(set->n), d = static_cast<long>(set->d);
    const QuadSurd a = QuadSurd(-1) / alpha, b = QuadSurd(n - d) / (alpha * QuadSurd(d));
    const QuadSurd sum = a + b, prod = a * b;
    REQUIRE(sum.is_rational());
    CHECK(mat_poly_check(seidel, {prod.as_rational(), -sum.as_rational(), Rational(1)}));
  }
}

TEST_CASE("tight iff alpha^2 meets the relative bound") {
  for (const auto& set : {seidel_to_linesets(seidel_933()).tau_set, constant_gram(3, Rational(1, 2)), constant_gram(3, Rational(-1, 2)),
                          constant_gram(5, Rational(1, 3))}) {
    CHECK(tight_frame_check(set) ==
          (set.alpha_sq == QuadSurd(relative_bound(static_cast<std::int64_t>(set.n), static_cast<std::int64_t>(set.d)))));
  }
}

TEST_CASE("small Seidel matrices") {
  Matrix<CycNum> k2(2, 2, CycNum(2));
  k2(0, 1) = k2(1, 0) = CycNum(2, Rational(1));
  const auto pair = seidel_to_linesets(SeidelMatrix{k2, 2});
  CHECK(pair.spectrum.theta == QuadSurd(1));
  CHECK(pair.spectrum.tau == QuadSurd(-1));
  CHECK(pair.tau_set.d == 1);
  CHECK(pair.theta_set.d == 1);

  Matrix<CycNum> three(3, 3, CycNum(3));
  three(0, 1) = three(1, 2) = CycNum::zeta_power(3, 1);
  three(1, 0) = three(2, 1) = CycNum::zeta_power(3, 2);
  three(0, 2) = CycNum(3, Rational(1));
  three(2, 0) = CycNum(3, Rational(1));
  try {
    seidel_spectrum(SeidelMatrix{three, 3});
    FAIL("expected an error");
  } catch (const VerificationError& e) {
    CHECK(e.condition() == "more-than-two-eigenvalues");
  }
}

TEST_CASE("icosahedral lines") {
  const auto s = find_conference_seidel(6, 0);
  CHECK(mat_poly_check(s.entries, {Rational(-5), Rational(0), Rational(1)}));
  const auto pair = seidel_to_linesets(s);
  CHECK(pair.spectrum.theta == QuadSurd::sqrt(5));
  CHECK(pair.tau_set.d == 3);
  CHECK(pair.theta_set.d == 3);
  CHECK(pair.tau_set.alpha_sq == QuadSurd(Rational(1, 5)));
  CHECK(pair.theta_set.alpha_sq == QuadSurd(Rational(1, 5)));
  CHECK(absolute_bound(3, LineField::real) == 6);
}

TEST_CASE("cover to lines and back") {
  const auto f = thas_somma(3, 2, 1);
  for (std::size_t k = 1; k < 3; ++k) {
    const auto out = cover_to_lines(f, k);
    CHECK(out.lines.theta_set.d == 3);
    CHECK(out.lines.tau_set.d == 6);
    const auto back = lines_to_cover(out.seidel, 3);
    CHECK(back.c_formula == QuadSurd(3));
    CHECK(back.certificate.summary_line() == out.certificate.summary_line());
    CHECK(back.certificate.spectrum_line() == out.certificate.spectrum_line());
  }

  for (const auto& cyclic : {thas_somma(2, 2, 1), thas_somma(5, 2, 1), thas_somma(3, 4, 1), dcff(1, 1)}) {
    const auto out = cover_to_lines(cyclic, 1);
    const auto back = lines_to_cover(out.seidel, cyclic.r());
    CHECK(back.certificate.summary_line() == out.certificate.summary_line());
    CHECK(back.certificate.spectrum_line() == out.certificate.spectrum_line());
  }

  const auto ico = lines_to_cover(find_conference_seidel(6, 0), 2);
  CHECK(ico.certificate.summary_line() == "DRACKN n=6 r=2 c=2 delta=0 theta=sqrt(5) tau=-sqrt(5)");
  CHECK(ico.c_formula == QuadSurd(2));

  CHECK_THROWS_AS(cover_to_lines(f, 0), std::invalid_argument);
}

TEST_CASE("entries that are not r-th roots of unity") {
  Matrix<CycNum> m(2, 2, CycNum(3));
  m(0, 1) = -CycNum::zeta_power(3, 1);
  m(1, 0) = m(0, 1).conj();
  const SeidelMatrix s{m, std::nullopt};
  CHECK_NOTHROW(s.validate());
  try {
    lines_to_cover(s, 3);
    FAIL("expected an error");
  } catch (const VerificationError& e) {
    CHECK(e.condition() == "not-root-of-unity");
  }
}

TEST_CASE("real doubling") {
  const auto s = find_conference_seidel(6, 0);
  const auto graph = double_real(s);
  CHECK(graph.size() == 12);
  const auto cert = verify_cover_graph(graph, 6, 2);
  CHECK(cert.summary_line() == "DRACKN n=6 r=2 c=2 delta=0 theta=sqrt(5) tau=-sqrt(5)");

  Matrix<CycNum> one(2, 2, CycNum(2));
  one(0, 1) = one(1, 0) = CycNum(2, Rational(1));
  try {
    verify_cover_graph(double_real(SeidelMatrix{one, 2}), 2, 2);
    FAIL("expected an error");
  } catch (const VerificationError& e) {
    CHECK(e.condition() == "not-connected");
  }

  Matrix<CycNum> plus(3, 3, CycNum(2, Rational(1)));
  for (int i = 0; i < 3; ++i) plus(i, i) = CycNum(2);
  const auto triangles = double_real(SeidelMatrix{plus, 2});
  for (std::size_t v = 0; v < 6; ++v) CHECK(triangles.degree(v) == 2);
  try {
    verify_cover_graph(triangles, 3, 2);
    FAIL("expected an error");
  } catch (const VerificationError& e) {
    CHECK(e.condition() == "not-connected");
  }
}

TEST_CASE("floating-point Gram check") {
  using C = std::complex<double>;
  const double a = 0.5;
  std::vector<std::vector<C>> g{{1, a, a}, {a, 1, a}, {a, a, 1}};
  CHECK(float_gram_check(g).ok);
  g[0][1] = 0.4;
  CHECK_FALSE(float_gram_check(g).ok);
}
