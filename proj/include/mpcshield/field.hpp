#pragma once

#include <cstdint>
#include <iosfwd>

#include "mpcshield/errors.hpp"

namespace mpcshield {

class FieldElement;

/// A validated prime p with 2 < p <= 2^31 - 1. The cap keeps every
/// product of two residues inside an unsigned 64-bit intermediate.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const { return p_; }

  /// Residue class of v, reduced into [0, p).
  FieldElement element(std::uint64_t v) const;

  friend bool operator==(PrimeModulus a, PrimeModulus b) { return a.p_ == b.p_; }
  friend bool operator!=(PrimeModulus a, PrimeModulus b) { return a.p_ != b.p_; }

 private:
  std::uint64_t p_;
};

class FieldElement {
 public:
  FieldElement(std::uint64_t value, PrimeModulus modulus);

  std::uint64_t value() const { return value_; }
  PrimeModulus modulus() const { return modulus_; }

  bool is_zero() const { return value_ == 0; }

  FieldElement operator+(FieldElement rhs) const;
  FieldElement operator-(FieldElement rhs) const;
  FieldElement operator*(FieldElement rhs) const;
  FieldElement operator/(FieldElement rhs) const;
  FieldElement operator-() const;

  FieldElement& operator+=(FieldElement rhs) { return *this = *this + rhs; }
  FieldElement& operator-=(FieldElement rhs) { return *this = *this - rhs; }
  FieldElement& operator*=(FieldElement rhs) { return *this = *this * rhs; }

  friend bool operator==(FieldElement a, FieldElement b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }
  friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

 private:
  std::uint64_t value_;
  PrimeModulus modulus_;
};

/// Multiplicative inverse by extended Euclid. Throws ZeroInverse on 0.
FieldElement mod_inverse(FieldElement a);

std::ostream& operator<<(std::ostream& os, FieldElement e);

}  // namespace mpcshield
