#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "mpcshield/field.hpp"

namespace mpcshield {

/// Dense polynomial over Z_p, coefficients stored low degree first and
/// kept canonical (no trailing zeros). The zero polynomial has an empty
/// coefficient vector and degree() == kZeroDegree.
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1;

  explicit Polynomial(PrimeModulus p) : modulus_(p) {}
  Polynomial(PrimeModulus p, std::vector<std::uint64_t> coefficients);
  Polynomial(PrimeModulus p, std::vector<FieldElement> coefficients);

  PrimeModulus modulus() const { return modulus_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }

  /// Coefficient of x^i; zero beyond the degree.
  FieldElement coefficient(std::size_t i) const;
  const std::vector<FieldElement>& coefficients() const { return coefficients_; }

  /// Horner evaluation.
  FieldElement operator()(FieldElement x) const;

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

 private:
  void normalize();

  PrimeModulus modulus_;
  std::vector<FieldElement> coefficients_;
};

FieldElement poly_eval(const Polynomial& p, FieldElement x);

struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;
};

/// Long division: numerator = divisor * quotient + remainder,
/// degree(remainder) < degree(divisor).
PolyDivision poly_divide(const Polynomial& numerator, const Polynomial& divisor);

/// Unique polynomial of degree < |points| through all points.
Polynomial lagrange_interpolate(
    const std::vector<std::pair<FieldElement, FieldElement>>& points);

}  // namespace mpcshield
