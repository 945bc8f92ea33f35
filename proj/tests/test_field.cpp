#include <doctest.h>

#include "mpcshield/field.hpp"
#include "mpcshield/rng.hpp"
#include "oracles.hpp"

using namespace mpcshield;

TEST_CASE("modulus validation") {
  CHECK_THROWS_AS(PrimeModulus(6), InvalidModulus);
  CHECK_THROWS_AS(PrimeModulus(1), InvalidModulus);
  CHECK_THROWS_AS(PrimeModulus(2), InvalidModulus);  // modulus must exceed 2
  CHECK_THROWS_AS(PrimeModulus(1ULL << 32), InvalidModulus);
  CHECK(PrimeModulus(7).value() == 7);
  CHECK(PrimeModulus((1ULL << 31) - 1).value() == 2147483647);
}

TEST_CASE("mod_inverse examples") {
  const PrimeModulus p(7);
  CHECK(mod_inverse(p.element(3)).value() == oracle::brute_force_inverse(3, 7));
  CHECK(mod_inverse(p.element(3)).value() == 5);
  CHECK(mod_inverse(p.element(1)).value() == 1);
  CHECK_THROWS_AS(mod_inverse(p.element(0)), ZeroInverse);
}

TEST_CASE("inverse is total on nonzero residues for small primes") {
  for (std::uint64_t q : {3ULL, 5ULL, 7ULL, 11ULL, 97ULL, 101ULL}) {
    const PrimeModulus p(q);
    for (std::uint64_t a = 1; a < q; ++a) {
      const FieldElement inv = mod_inverse(p.element(a));
      CHECK(inv.value() == oracle::brute_force_inverse(a, q));
      CHECK((p.element(a) * inv).value() == 1);
    }
  }
}

TEST_CASE("field axioms on random samples") {
  const PrimeModulus p(101);
  Prg rng(42);
  for (int i = 0; i < 200; ++i) {
    const FieldElement a = rng.uniform(p);
    const FieldElement b = rng.uniform(p);
    const FieldElement c = rng.uniform(p);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == p.element(0));
  }
}

TEST_CASE("products near the modulus cap stay exact") {
  const PrimeModulus p((1ULL << 31) - 1);
  const std::uint64_t q = p.value();
  // (p-1)^2 = 1 mod p
  CHECK((p.element(q - 1) * p.element(q - 1)).value() == 1);
  // compare against a 128-bit reference product
  const std::uint64_t a = q - 2, b = q - 3;
  const std::uint64_t expected = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % q);
  CHECK((p.element(a) * p.element(b)).value() == expected);
  CHECK((p.element(a) * mod_inverse(p.element(a))).value() == 1);
}

TEST_CASE("mixing moduli is rejected") {
  const PrimeModulus p7(7), p11(11);
  CHECK_THROWS_AS(p7.element(3) + p11.element(3), ModulusMismatch);
  CHECK_THROWS_AS(p7.element(3) * p11.element(3), ModulusMismatch);
}
