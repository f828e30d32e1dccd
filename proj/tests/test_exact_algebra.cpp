#include <doctest.h>

#include <complex>
#include <memory>
#include <numbers>
#include <random>

#include "drackn/cyc_surd.hpp"
#include "drackn/cyclotomic.hpp"
#include "drackn/finite_field.hpp"
#include "drackn/matrix.hpp"
#include "drackn/quadratic.hpp"

using namespace drackn;

namespace {

CycNum z(int r, long k) { return CycNum::zeta_power(r, k); }

// Numerical value of a CycNum from its coefficient vector alone.
std::complex<double> approx(const CycNum& x) {
  const int r = x.root_order();
  const std::complex<double> zeta = r == 2 ? -1.0 : std::polar(1.0, 2 * std::numbers::pi / r);
  std::complex<double> out = 0, power = 1;
  for (const auto& c : x.coeffs()) {
    out += c.get_d() * power;
    power *= zeta;
  }
  return out;
}

CycNum random_cyc(int r, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> c;
  for (int i = 0; i < std::max(1, r - 1); ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return CycNum(r, c);
}

Matrix<Rational> complete_graph(std::size_t n) {
  Matrix<Rational> a(n, n, Rational(1));
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 0;
  return a;
}

}  // namespace

TEST_CASE("cyclotomic products reduce to the canonical basis") {
  CHECK(z(3, 1) * z(3, 1) == CycNum(3, {Rational(-1), Rational(-1)}));
  CHECK(z(5, 2) * z(5, 4) == z(5, 1));
  CHECK(z(3, 1) * z(3, 2) == CycNum(3, Rational(1)));
  CHECK(z(2, 1) == CycNum(2, Rational(-1)));
}

TEST_CASE("conjugation inverts roots of unity") {
  CHECK(z(3, 1).conj() == CycNum(3, {Rational(-1), Rational(-1)}));
  CHECK(z(2, 1).conj() == z(2, 1));
  CHECK(z(5, 3).conj() == z(5, 2));
  for (int k = 0; k < 7; ++k) CHECK(z(7, k).root_of_unity_exponent() == k);
  CHECK_FALSE((-z(3, 1)).root_of_unity_exponent().has_value());
}

TEST_CASE("arithmetic agrees with complex evaluation") {
  std::mt19937 rng(7);
  for (int r : {2, 3, 5, 7, 11}) {
    for (int trial = 0; trial < 40; ++trial) {
      const CycNum a = random_cyc(r, rng), b = random_cyc(r, rng), c = random_cyc(r, rng);
      CHECK(std::abs(approx(a * b) - approx(a) * approx(b)) < 1e-6);
      CHECK(std::abs(approx(a.conj()) - std::conj(approx(a))) < 1e-9);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b).coeffs().size() == static_cast<std::size_t>(std::max(1, r - 1)));
      if (!a.is_zero()) CHECK(a * a.inverse() == CycNum(r, Rational(1)));
    }
  }
}

TEST_CASE("product of (x - zeta^k) is the cyclotomic polynomial") {
  for (int r : {3, 5, 7, 13}) {
    std::vector<CycNum> poly{CycNum(r, Rational(1))};  // low to high
    for (int k = 1; k < r; ++k) {
      std::vector<CycNum> next(poly.size() + 1, CycNum(r));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] += poly[i];
        next[i] -= poly[i] * z(r, k);
      }
      poly = next;
    }
    REQUIRE(poly.size() == static_cast<std::size_t>(r));
    for (const auto& c : poly) CHECK(c == CycNum(r, Rational(1)));
  }
}

TEST_CASE("gauss sums square to +-r") {
  for (int r : {3, 5, 7, 11, 13}) {
    const CycNum g = CycNum::gauss_sum(r);
    CHECK(g * g == CycNum(r, Rational(r % 4 == 1 ? r : -r)));
  }
}

TEST_CASE("quadratic surds compare exactly") {
  const QuadSurd s5 = QuadSurd::sqrt(5);
  CHECK(s5 * s5 == QuadSurd(5));
  CHECK(QuadSurd::sqrt(12) == QuadSurd(0, 2, 3));
  CHECK(s5 > QuadSurd(2));
  CHECK(s5 < QuadSurd(Rational(9, 4)));
  CHECK((QuadSurd(1) - s5).sign() < 0);
  CHECK(QuadSurd(Rational(1, 2), Rational(1, 2), 21).to_string() == "1/2+1/2*sqrt(21)");
  CHECK((-s5).to_string() == "-sqrt(5)");
}

TEST_CASE("cyclotomic surds stay a field") {
  const CycSurd a = CycSurd::embed(3, QuadSurd::sqrt(5)) + CycSurd(z(3, 1));
  CHECK(a * a.inverse() == CycSurd(CycNum(3, Rational(1))));
  // sqrt(5) already lies in Q(zeta_5).
  const CycSurd folded = CycSurd::embed(5, QuadSurd::sqrt(5));
  CHECK(folded.in_base_field());
  CHECK(folded * folded == CycSurd(CycNum(5, Rational(5))));
}

TEST_CASE("annihilating polynomials") {
  CHECK(mat_poly_check(complete_graph(4), {Rational(-3), Rational(-2), Rational(1)}));
  CHECK_FALSE(mat_poly_check(complete_graph(4), {Rational(-3), Rational(-1), Rational(1)}));
  CHECK(mat_poly_check(Matrix<Rational>::identity(5, Rational(0)), {Rational(-1), Rational(1)}));
}

TEST_CASE("exact rank") {
  CHECK(mat_rank_exact(Matrix<Rational>(6, 6, Rational(1))) == 1);
  CHECK(mat_rank_exact(Matrix<Rational>::identity(7, Rational(0))) == 7);
  // Nullity of A - lambda I for K_5 gives the eigenvalue multiplicities 1 and 4.
  auto a = complete_graph(5);
  CHECK(5 - mat_rank_exact(a - scaled(Matrix<Rational>::identity(5, Rational(0)), Rational(4))) == 1);
  CHECK(5 - mat_rank_exact(a + Matrix<Rational>::identity(5, Rational(0))) == 4);
}

TEST_CASE("finite field arithmetic") {
  auto gf3 = std::make_shared<const FiniteField>(3, 1);
  CHECK(ff_arith(FFElement(gf3, {2}), FFElement(gf3, {2}), FFOp::add) == FFElement(gf3, {1}));

  auto gf4 = std::make_shared<const FiniteField>(2, 2, std::vector<int>{1, 1, 1});
  CHECK(ff_arith(FFElement(gf4, {0, 1}), FFElement(gf4, {0, 1}), FFOp::mul) == FFElement(gf4, {1, 1}));

  auto gf8 = std::make_shared<const FiniteField>(2, 3, std::vector<int>{1, 1, 0, 1});
  CHECK(ff_arith(FFElement(gf8, {0, 1, 0}), FFElement(gf8, {0, 0, 1}), FFOp::mul) == FFElement(gf8, {1, 1, 0}));

  for (auto [p, t] : {std::pair{2, 4}, {3, 2}, {5, 2}, {2, 7}}) {
    const FiniteField f(p, t);
    for (FiniteField::Code a = 1; a < f.size(); ++a) {
      CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.pow(a, f.size() - 1) == 1);
    }
  }
  CHECK_THROWS_AS(FiniteField(2, 2, {1, 0, 1}), std::invalid_argument);
}

TEST_CASE("rank over GF(p)") {
  CHECK(rank_mod_p({{1, 2}, {2, 4}}, 5) == 1);
  CHECK(rank_mod_p({{1, 2}, {2, 4}}, 2) == 1);
  CHECK(rank_mod_p({{1, 1}, {1, 2}}, 3) == 2);
}
