#include "mpcshield/polynomial.hpp"

#include <algorithm>

namespace mpcshield {

Polynomial::Polynomial(PrimeModulus p, std::vector<std::uint64_t> coefficients)
    : modulus_(p) {
  coefficients_.reserve(coefficients.size());
  for (std::uint64_t c : coefficients) coefficients_.push_back(p.element(c));
  normalize();
}

Polynomial::Polynomial(PrimeModulus p, std::vector<FieldElement> coefficients)
    : modulus_(p), coefficients_(std::move(coefficients)) {
  for (const FieldElement& c : coefficients_) {
    if (c.modulus() != modulus_) throw ModulusMismatch{};
  }
  normalize();
}

void Polynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back().is_zero())
    coefficients_.pop_back();
}

FieldElement Polynomial::coefficient(std::size_t i) const {
  if (i < coefficients_.size()) return coefficients_[i];
  return modulus_.element(0);
}

FieldElement Polynomial::operator()(FieldElement x) const {
  if (x.modulus() != modulus_) throw ModulusMismatch{};
  FieldElement acc = modulus_.element(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  if (modulus_ != rhs.modulus_) throw ModulusMismatch{};
  std::vector<FieldElement> out;
  const std::size_t m = std::max(coefficients_.size(), rhs.coefficients_.size());
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i)
    out.push_back(coefficient(i) + rhs.coefficient(i));
  return Polynomial(modulus_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  if (modulus_ != rhs.modulus_) throw ModulusMismatch{};
  std::vector<FieldElement> out;
  const std::size_t m = std::max(coefficients_.size(), rhs.coefficients_.size());
  out.reserve(m);
  for (std::size_t i = 0; i < m; ++i)
    out.push_back(coefficient(i) - rhs.coefficient(i));
  return Polynomial(modulus_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (modulus_ != rhs.modulus_) throw ModulusMismatch{};
  if (is_zero() || rhs.is_zero()) return Polynomial(modulus_);
  std::vector<FieldElement> out(
      coefficients_.size() + rhs.coefficients_.size() - 1, modulus_.element(0));
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j)
      out[i + j] += coefficients_[i] * rhs.coefficients_[j];
  return Polynomial(modulus_, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.modulus_ == b.modulus_ && a.coefficients_ == b.coefficients_;
}

FieldElement poly_eval(const Polynomial& p, FieldElement x) { return p(x); }

PolyDivision poly_divide(const Polynomial& numerator, const Polynomial& divisor) {
  if (divisor.is_zero()) throw DivisionByZeroPolynomial{};
  if (numerator.modulus() != divisor.modulus()) throw ModulusMismatch{};
  const PrimeModulus p = numerator.modulus();

  std::vector<FieldElement> rem(numerator.coefficients());
  const int ddeg = divisor.degree();
  const FieldElement lead_inv = mod_inverse(
      divisor.coefficient(static_cast<std::size_t>(ddeg)));

  const int qdeg = numerator.degree() - ddeg;
  if (qdeg < 0) return {Polynomial(p), numerator};

  std::vector<FieldElement> quot(static_cast<std::size_t>(qdeg) + 1,
                                 p.element(0));
  for (int i = qdeg; i >= 0; --i) {
    const std::size_t top = static_cast<std::size_t>(i + ddeg);
    if (top >= rem.size() || rem[top].is_zero()) continue;
    const FieldElement factor = rem[top] * lead_inv;
    quot[static_cast<std::size_t>(i)] = factor;
    for (int j = 0; j <= ddeg; ++j) {
      const std::size_t idx = static_cast<std::size_t>(i + j);
      rem[idx] -= factor * divisor.coefficient(static_cast<std::size_t>(j));
    }
  }
  return {Polynomial(p, std::move(quot)), Polynomial(p, std::move(rem))};
}

Polynomial lagrange_interpolate(
    const std::vector<std::pair<FieldElement, FieldElement>>& points) {
  if (points.empty()) throw InvalidParams("interpolation needs at least one point");
  const PrimeModulus p = points.front().first.modulus();
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first) throw DuplicateAbscissa{};

  Polynomial result(p);
  for (std::size_t i = 0; i < points.size(); ++i) {
    Polynomial basis(p, std::vector<std::uint64_t>{1});
    FieldElement denom = p.element(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * Polynomial(p, std::vector<FieldElement>{
                                        -points[j].first, p.element(1)});
      denom *= points[i].first - points[j].first;
    }
    const FieldElement scale = points[i].second / denom;
    basis = basis * Polynomial(p, std::vector<FieldElement>{scale});
    result = result + basis;
  }
  return result;
}

}  // namespace mpcshield
