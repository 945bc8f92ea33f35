#include "mpcshield/field.hpp"

#include <ostream>

namespace mpcshield {

namespace {

constexpr std::uint64_t kMaxModulus = (1ULL << 31) - 1;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_same(PrimeModulus a, PrimeModulus b) {
  if (a != b) throw ModulusMismatch{};
}

}  // namespace

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p <= 2 || p > kMaxModulus)
    throw InvalidModulus("modulus must satisfy 2 < p <= 2^31 - 1, got " +
                         std::to_string(p));
  if (!is_prime(p))
    throw InvalidModulus("modulus " + std::to_string(p) + " is not prime");
}

FieldElement PrimeModulus::element(std::uint64_t v) const {
  return FieldElement(v % p_, *this);
}

FieldElement::FieldElement(std::uint64_t value, PrimeModulus modulus)
    : value_(value % modulus.value()), modulus_(modulus) {}

FieldElement FieldElement::operator+(FieldElement rhs) const {
  require_same(modulus_, rhs.modulus_);
  return FieldElement(value_ + rhs.value_, modulus_);
}

FieldElement FieldElement::operator-(FieldElement rhs) const {
  require_same(modulus_, rhs.modulus_);
  return FieldElement(value_ + modulus_.value() - rhs.value_, modulus_);
}

FieldElement FieldElement::operator*(FieldElement rhs) const {
  require_same(modulus_, rhs.modulus_);
  // residues < 2^31, so the product fits in 64 bits exactly
  return FieldElement(value_ * rhs.value_, modulus_);
}

FieldElement FieldElement::operator/(FieldElement rhs) const {
  require_same(modulus_, rhs.modulus_);
  return *this * mod_inverse(rhs);
}

FieldElement FieldElement::operator-() const {
  return FieldElement(modulus_.value() - value_, modulus_);
}

FieldElement mod_inverse(FieldElement a) {
  if (a.is_zero()) throw ZeroInverse{};
  const std::int64_t p = static_cast<std::int64_t>(a.modulus().value());
  std::int64_t r0 = p, r1 = static_cast<std::int64_t>(a.value());
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  // gcd(a, p) = 1 since p is prime and a != 0
  if (t0 < 0) t0 += p;
  return a.modulus().element(static_cast<std::uint64_t>(t0));
}

std::ostream& operator<<(std::ostream& os, FieldElement e) {
  return os << e.value();
}

}  // namespace mpcshield
