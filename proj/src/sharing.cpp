#include "mpcshield/sharing.hpp"

#include <algorithm>

namespace mpcshield {

SharingParams::SharingParams(std::uint32_t t_, std::uint32_t n_, PrimeModulus p_)
    : t(t_), n(n_), p(p_) {
  // player ids 1..n must be distinct nonzero residues
  if (t == 0 || t > n || n > p.value() - 1)
    throw InvalidParams("require 1 <= t <= n <= p - 1");
}

std::vector<Share> shamir_share(FieldElement secret, const SharingParams& params,
                                RandomSource& rng) {
  if (secret.modulus() != params.p) throw ModulusMismatch{};
  std::vector<FieldElement> coeffs{secret};
  for (std::uint32_t i = 1; i < params.t; ++i)
    coeffs.push_back(rng.uniform(params.p));
  const Polynomial poly(params.p, std::move(coeffs));

  std::vector<Share> shares;
  shares.reserve(params.n);
  for (PlayerId i = 1; i <= params.n; ++i)
    shares.push_back(Share{i, poly(params.p.element(i))});
  return shares;
}

FieldElement shamir_reconstruct(const std::vector<Share>& shares,
                                const SharingParams& params) {
  if (shares.size() < params.t) throw InsufficientShares{};
  for (std::size_t i = 0; i < shares.size(); ++i)
    for (std::size_t j = i + 1; j < shares.size(); ++j)
      if (shares[i].owner == shares[j].owner) throw DuplicateOwner{};

  const PrimeModulus p = params.p;
  FieldElement acc = p.element(0);
  for (const Share& si : shares) {
    FieldElement weight = p.element(1);
    const FieldElement xi = p.element(si.owner);
    for (const Share& sj : shares) {
      if (sj.owner == si.owner) continue;
      const FieldElement xj = p.element(sj.owner);
      weight *= (-xj) / (xi - xj);
    }
    acc += weight * si.value;
  }
  return acc;
}

FieldElement lagrange_constant(PlayerId i, const std::set<PlayerId>& helpers,
                               PlayerId target, PrimeModulus p) {
  if (helpers.count(target)) throw TargetInHelperSet{};
  if (!helpers.count(i))
    throw InvalidParams("constant requested for a non-helper");

  const FieldElement xi = p.element(i);
  const FieldElement xk = p.element(target);
  FieldElement gamma = p.element(1);
  for (PlayerId j : helpers) {
    if (j == i) continue;
    const FieldElement xj = p.element(j);
    gamma *= (xk - xj) / (xi - xj);
  }
  return gamma;
}

std::vector<FieldElement> additive_split(FieldElement v, std::uint32_t t,
                                         RandomSource& rng) {
  if (t == 0) throw InvalidParams("need at least one portion");
  const PrimeModulus p = v.modulus();
  std::vector<FieldElement> portions;
  portions.reserve(t);
  FieldElement sum = p.element(0);
  for (std::uint32_t i = 0; i + 1 < t; ++i) {
    portions.push_back(rng.uniform(p));
    sum += portions.back();
  }
  portions.push_back(v - sum);
  return portions;
}

}  // namespace mpcshield
