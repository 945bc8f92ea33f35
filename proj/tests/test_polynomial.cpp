#include <doctest.h>

#include <vector>

#include "mpcshield/polynomial.hpp"
#include "mpcshield/rng.hpp"
#include "oracles.hpp"

using namespace mpcshield;

namespace {

Polynomial random_poly(PrimeModulus p, int degree_bound, Prg& rng) {
  std::vector<FieldElement> coeffs;
  for (int i = 0; i < degree_bound; ++i) coeffs.push_back(rng.uniform(p));
  return Polynomial(p, coeffs);
}

}  // namespace

TEST_CASE("canonical form strips trailing zeros") {
  const PrimeModulus p(7);
  const Polynomial a(p, std::vector<std::uint64_t>{4, 5, 0, 0});
  CHECK(a.degree() == 1);
  CHECK(a == Polynomial(p, std::vector<std::uint64_t>{4, 5}));
  CHECK(Polynomial(p).degree() == Polynomial::kZeroDegree);
  CHECK(Polynomial(p, std::vector<std::uint64_t>{0}).is_zero());
}

TEST_CASE("poly_eval examples") {
  const PrimeModulus p(7);
  // P derived by interpolating the codeword points (1,2), (2,0)
  const Polynomial poly = lagrange_interpolate(
      {{p.element(1), p.element(2)}, {p.element(2), p.element(0)}});
  CHECK(poly == Polynomial(p, std::vector<std::uint64_t>{4, 5}));
  CHECK(poly_eval(poly, p.element(3)).value() == 5);
  CHECK(poly_eval(poly, p.element(4)).value() == 3);
  CHECK(poly_eval(Polynomial(p), p.element(6)).value() == 0);
  CHECK_THROWS_AS(poly_eval(poly, PrimeModulus(11).element(1)), ModulusMismatch);
}

TEST_CASE("poly_divide examples") {
  const PrimeModulus p(7);
  const Polynomial n1(p, std::vector<std::uint64_t>{2, 3, 5});
  const Polynomial d1(p, std::vector<std::uint64_t>{4, 1});
  const PolyDivision div = poly_divide(n1, d1);
  CHECK(div.quotient == Polynomial(p, std::vector<std::uint64_t>{4, 5}));
  CHECK(div.remainder.is_zero());
  CHECK(div.quotient * d1 == n1);

  const Polynomial x2(p, std::vector<std::uint64_t>{0, 0, 1});
  const Polynomial x(p, std::vector<std::uint64_t>{0, 1});
  CHECK(poly_divide(x2, x).quotient == x);
  CHECK(poly_divide(x2, x).remainder.is_zero());

  const Polynomial small(p, std::vector<std::uint64_t>{1, 1});
  CHECK(poly_divide(small, x2).quotient.is_zero());
  CHECK(poly_divide(small, x2).remainder == small);

  CHECK_THROWS_AS(poly_divide(small, Polynomial(p)), DivisionByZeroPolynomial);
}

TEST_CASE("division identity holds for random operands") {
  const PrimeModulus p(101);
  Prg rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial numerator = random_poly(p, 8, rng);
    Polynomial divisor = random_poly(p, 4, rng);
    if (divisor.is_zero()) divisor = Polynomial(p, std::vector<std::uint64_t>{1});
    const PolyDivision div = poly_divide(numerator, divisor);
    CHECK(divisor * div.quotient + div.remainder == numerator);
    CHECK(div.remainder.degree() < divisor.degree());
  }
}

TEST_CASE("lagrange_interpolate examples") {
  const PrimeModulus p(7);
  const Polynomial poly = lagrange_interpolate(
      {{p.element(1), p.element(2)}, {p.element(2), p.element(0)}});
  CHECK(poly_eval(poly, p.element(1)).value() == 2);
  CHECK(poly_eval(poly, p.element(2)).value() == 0);

  const Polynomial constant =
      lagrange_interpolate({{p.element(5), p.element(3)}});
  CHECK(constant == Polynomial(p, std::vector<std::uint64_t>{3}));

  CHECK_THROWS_AS(lagrange_interpolate(
                      {{p.element(1), p.element(2)}, {p.element(1), p.element(0)}}),
                  DuplicateAbscissa);
}

TEST_CASE("interpolation round trip") {
  const PrimeModulus p(101);
  Prg rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(rng.next_u64() % 8);
    const Polynomial poly = random_poly(p, m, rng);
    std::vector<std::pair<FieldElement, FieldElement>> points;
    for (int i = 1; i <= m; ++i)
      points.emplace_back(p.element(static_cast<std::uint64_t>(i)),
                          poly(p.element(static_cast<std::uint64_t>(i))));
    CHECK(lagrange_interpolate(points) == poly);
  }
}

TEST_CASE("horner agrees with the naive evaluator") {
  const PrimeModulus p(101);
  Prg rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial poly = random_poly(p, 6, rng);
    const FieldElement x = rng.uniform(p);
    CHECK(poly(x) == oracle::naive_eval(poly, x));
  }
}
