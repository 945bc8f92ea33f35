#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "mpcshield/polynomial.hpp"

namespace mpcshield {

using PlayerId = std::uint32_t;

/// Reed-Solomon parameters over Z_p with evaluation points 1..n.
/// Point n may equal p (it reduces to 0, still distinct from 1..n-1).
struct RsParams {
  RsParams(std::uint32_t n, std::uint32_t k, PrimeModulus p);

  std::uint32_t n;
  std::uint32_t k;
  PrimeModulus p;

  /// e = floor((n - k) / 2), the capacity of Berlekamp-Welch decoding.
  std::uint32_t error_capacity() const { return (n - k) / 2; }
};

/// symbols[i-1] = P(i); the players' shares viewed jointly.
using Codeword = std::vector<FieldElement>;

struct DecodeResult {
  Polynomial message_poly;
  /// 1-based player ids where the received word disagrees with message_poly.
  std::set<PlayerId> error_positions;
  Codeword corrected;
  /// Monic locator E of degree e from the key-equation solve.
  Polynomial locator;
};

Codeword rs_encode(const std::vector<FieldElement>& message, const RsParams& params);

/// True iff all n points lie on one polynomial of degree < k.
bool is_codeword(const Codeword& r, const RsParams& params);

/// Berlekamp-Welch: solve Q(i) = r_i * E(i) with E monic of degree e,
/// then recover P = Q / E. Throws Undecodable when no polynomial within
/// distance e explains the received word.
DecodeResult bw_decode(const Codeword& r, const RsParams& params);

}  // namespace mpcshield
