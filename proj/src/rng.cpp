#include "mpcshield/rng.hpp"

namespace mpcshield {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

FieldElement RandomSource::uniform(PrimeModulus p) {
  const std::uint64_t mod = p.value();
  const std::uint64_t limit = ~0ULL - ~0ULL % mod;
  std::uint64_t x = next_u64();
  while (x >= limit) x = next_u64();
  return p.element(x % mod);
}

Prg::Prg(std::uint64_t seed, std::uint64_t stream) : state_(seed) {
  // fold the stream id into the state so streams diverge immediately
  state_ ^= splitmix64(stream) * 0xD1B54A32D192ED03ULL;
  (void)splitmix64(state_);
}

std::uint64_t Prg::next_u64() { return splitmix64(state_); }

}  // namespace mpcshield
