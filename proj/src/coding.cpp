#include "mpcshield/coding.hpp"

#include "mpcshield/matrix.hpp"

namespace mpcshield {

RsParams::RsParams(std::uint32_t n_, std::uint32_t k_, PrimeModulus p_)
    : n(n_), k(k_), p(p_) {
  if (k == 0 || k > n || n > p.value())
    throw InvalidParams("require 1 <= k <= n <= p");
}

Codeword rs_encode(const std::vector<FieldElement>& message,
                   const RsParams& params) {
  if (message.size() != params.k) throw LengthMismatch{};
  const Polynomial poly(params.p, message);
  Codeword out;
  out.reserve(params.n);
  for (std::uint32_t i = 1; i <= params.n; ++i)
    out.push_back(poly(params.p.element(i)));
  return out;
}

bool is_codeword(const Codeword& r, const RsParams& params) {
  if (r.size() != params.n) throw LengthMismatch{};
  std::vector<std::pair<FieldElement, FieldElement>> points;
  points.reserve(params.k);
  for (std::uint32_t i = 1; i <= params.k; ++i)
    points.emplace_back(params.p.element(i), r[i - 1]);
  const Polynomial poly = lagrange_interpolate(points);
  for (std::uint32_t i = params.k + 1; i <= params.n; ++i)
    if (poly(params.p.element(i)) != r[i - 1]) return false;
  return true;
}

DecodeResult bw_decode(const Codeword& r, const RsParams& params) {
  if (r.size() != params.n) throw LengthMismatch{};
  const PrimeModulus p = params.p;
  const std::uint32_t n = params.n;
  const std::uint32_t k = params.k;
  const std::uint32_t e = params.error_capacity();

  // Unknowns: q_0..q_{k+e-1}, then e_0..e_{e-1} (E is monic of degree e).
  // Row i: sum_j q_j i^j - r_i * sum_{j<e} e_j i^j = r_i * i^e.
  const std::size_t qn = k + e;
  MatrixZp a(n, qn + e, p);
  std::vector<FieldElement> rhs;
  rhs.reserve(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    const FieldElement x = p.element(i);
    FieldElement pw = p.element(1);
    for (std::size_t j = 0; j < qn; ++j) {
      a.at(i - 1, j) = pw;
      pw *= x;
    }
    pw = p.element(1);
    for (std::size_t j = 0; j < e; ++j) {
      a.at(i - 1, qn + j) = -(r[i - 1] * pw);
      pw *= x;
    }
    rhs.push_back(r[i - 1] * pw);  // pw = i^e after the loop
  }

  const LinearSolution sol = solve_gaussian(a, rhs);
  if (sol.kind == LinearSolution::Kind::Inconsistent)
    throw Undecodable("key equation has no solution");

  std::vector<FieldElement> q_coeffs(sol.x.begin(), sol.x.begin() + qn);
  std::vector<FieldElement> e_coeffs(sol.x.begin() + qn, sol.x.end());
  e_coeffs.push_back(p.element(1));  // monic x^e term
  const Polynomial quotient(p, std::move(q_coeffs));
  const Polynomial locator(p, std::move(e_coeffs));

  const PolyDivision div = poly_divide(quotient, locator);
  if (!div.remainder.is_zero())
    throw Undecodable("locator does not divide the quotient polynomial");
  if (div.quotient.degree() >= static_cast<int>(k))
    throw Undecodable("recovered polynomial exceeds the message degree");

  DecodeResult result{div.quotient, {}, {}, locator};
  result.corrected.reserve(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    const FieldElement expected = result.message_poly(p.element(i));
    result.corrected.push_back(expected);
    if (expected != r[i - 1]) result.error_positions.insert(i);
  }
  if (result.error_positions.size() > e)
    throw Undecodable("more disagreements than the error capacity");
  return result;
}

}  // namespace mpcshield
