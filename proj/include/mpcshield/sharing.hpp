#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "mpcshield/coding.hpp"
#include "mpcshield/polynomial.hpp"
#include "mpcshield/rng.hpp"

namespace mpcshield {

/// Shamir (t, n)-threshold parameters; sharing polynomial degree t - 1.
struct SharingParams {
  SharingParams(std::uint32_t t, std::uint32_t n, PrimeModulus p);

  std::uint32_t t;
  std::uint32_t n;
  PrimeModulus p;
};

/// One evaluation point of the sharing polynomial: alpha_i = P(i).
struct Share {
  PlayerId owner;
  FieldElement value;
};

std::vector<Share> shamir_share(FieldElement secret, const SharingParams& params,
                                RandomSource& rng);

/// Interpolates at 0 and returns the constant term.
FieldElement shamir_reconstruct(const std::vector<Share>& shares,
                                const SharingParams& params);

/// gamma_i = prod_{j in helpers, j != i} (k - j) / (i - j) mod p.
/// Helper i's recombination weight toward the value at target k.
FieldElement lagrange_constant(PlayerId i, const std::set<PlayerId>& helpers,
                               PlayerId target, PrimeModulus p);

/// t values summing to v mod p; the first t - 1 are uniform from rng.
std::vector<FieldElement> additive_split(FieldElement v, std::uint32_t t,
                                         RandomSource& rng);

}  // namespace mpcshield
