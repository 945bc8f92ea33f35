#pragma once

#include <cstdint>

#include "mpcshield/field.hpp"

namespace mpcshield {

/// Source of randomness consumed by the sharing operations. Abstract so
/// tests can pin exact coefficient values.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual std::uint64_t next_u64() = 0;

  /// Uniform residue in [0, p) by rejection sampling.
  FieldElement uniform(PrimeModulus p);
};

/// Deterministic splitmix64 generator. Distinct stream ids (player ids)
/// give independent sequences under one scenario seed, so transcripts
/// are reproducible.
class Prg final : public RandomSource {
 public:
  explicit Prg(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64() override;

 private:
  std::uint64_t state_;
};

}  // namespace mpcshield
