#include <doctest.h>

#include <vector>

#include "mpcshield/sharing.hpp"

using namespace mpcshield;

namespace {

/// Replays a fixed script of draws; values below p pass the rejection
/// sampler untouched.
class ScriptedRng final : public RandomSource {
 public:
  explicit ScriptedRng(std::vector<std::uint64_t> script)
      : script_(std::move(script)) {}

  std::uint64_t next_u64() override {
    REQUIRE(next_ < script_.size());
    return script_[next_++];
  }

 private:
  std::vector<std::uint64_t> script_;
  std::size_t next_ = 0;
};

}  // namespace

TEST_CASE("sharing params") {
  const PrimeModulus p(7);
  CHECK_THROWS_AS(SharingParams(5, 4, p), InvalidParams);
  CHECK_THROWS_AS(SharingParams(0, 4, p), InvalidParams);
  CHECK_THROWS_AS(SharingParams(2, 7, p), InvalidParams);  // n <= p - 1
}

TEST_CASE("shamir_share reproduces the toy-example codeword") {
  const PrimeModulus p(7);
  const SharingParams params(2, 4, p);
  ScriptedRng rng({5});  // forces P = 4 + 5x
  const std::vector<Share> shares = shamir_share(p.element(4), params, rng);
  REQUIRE(shares.size() == 4);
  const std::vector<std::uint64_t> expected{2, 0, 5, 3};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(shares[i].owner == i + 1);
    CHECK(shares[i].value.value() == expected[i]);
  }
}

TEST_CASE("threshold one duplicates the secret") {
  const PrimeModulus p(7);
  const SharingParams params(1, 4, p);
  Prg rng(1);
  for (const Share& s : shamir_share(p.element(6), params, rng))
    CHECK(s.value.value() == 6);
}

TEST_CASE("shamir_reconstruct examples") {
  const PrimeModulus p(7);
  const SharingParams t2(2, 4, p);
  CHECK(shamir_reconstruct({{1, p.element(2)}, {2, p.element(0)}}, t2).value() == 4);

  const SharingParams t1(1, 4, p);
  CHECK(shamir_reconstruct({{1, p.element(5)}}, t1).value() == 5);

  CHECK_THROWS_AS(shamir_reconstruct({{1, p.element(2)}}, t2), InsufficientShares);
  CHECK_THROWS_AS(
      shamir_reconstruct({{1, p.element(2)}, {1, p.element(0)}}, t2),
      DuplicateOwner);
}

TEST_CASE("every t-subset reconstructs the secret") {
  const PrimeModulus p(101);
  Prg rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t n = 4 + rng.next_u64() % 4;
    const std::uint32_t t = 2 + rng.next_u64() % (n - 2);
    const SharingParams params(t, n, p);
    const FieldElement secret = rng.uniform(p);
    const std::vector<Share> shares = shamir_share(secret, params, rng);
    // walk a few t-subsets per trial
    for (std::uint32_t start = 0; start + t <= n; ++start) {
      std::vector<Share> subset(shares.begin() + start,
                                shares.begin() + start + t);
      CHECK(shamir_reconstruct(subset, params) == secret);
    }
  }
}

TEST_CASE("lagrange_constant examples") {
  const PrimeModulus p(7);
  CHECK(lagrange_constant(1, {1, 2}, 3, p).value() == 6);
  CHECK(lagrange_constant(2, {1, 2}, 3, p).value() == 2);
  CHECK(lagrange_constant(1, {1}, 4, p).value() == 1);
  CHECK_THROWS_AS(lagrange_constant(1, {1, 3}, 3, p), TargetInHelperSet);
  // 6*P(1) + 2*P(2) = P(3) for P = 4 + 5x
  CHECK((p.element(6) * p.element(2) + p.element(2) * p.element(0)).value() == 5);
}

TEST_CASE("recombination identity") {
  const PrimeModulus p(101);
  Prg rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t t = 2 + rng.next_u64() % 4;
    std::set<PlayerId> helpers;
    while (helpers.size() < t)
      helpers.insert(static_cast<PlayerId>(1 + rng.next_u64() % 10));
    PlayerId target = static_cast<PlayerId>(1 + rng.next_u64() % 10);
    while (helpers.count(target)) target = static_cast<PlayerId>(1 + rng.next_u64() % 10);

    std::vector<FieldElement> coeffs;
    for (std::uint32_t i = 0; i < t; ++i) coeffs.push_back(rng.uniform(p));
    const Polynomial poly(p, coeffs);

    FieldElement acc = p.element(0);
    for (PlayerId h : helpers)
      acc += lagrange_constant(h, helpers, target, p) * poly(p.element(h));
    CHECK(acc == poly(p.element(target)));
  }
}

TEST_CASE("additive_split examples and invariants") {
  const PrimeModulus p(7);
  ScriptedRng empty({});
  CHECK(additive_split(p.element(5), 1, empty) ==
        std::vector<FieldElement>{p.element(5)});

  Prg rng(9);
  const std::vector<FieldElement> zero_split = additive_split(p.element(0), 3, rng);
  FieldElement sum = p.element(0);
  for (FieldElement v : zero_split) sum += v;
  CHECK(sum.is_zero());

  // deterministic under a fixed seed
  Prg a(77), b(77);
  CHECK(additive_split(p.element(6), 3, a) == additive_split(p.element(6), 3, b));

  Prg c(78);
  const std::vector<FieldElement> split = additive_split(p.element(6), 3, c);
  REQUIRE(split.size() == 3);
  sum = p.element(0);
  for (FieldElement v : split) sum += v;
  CHECK(sum.value() == 6);
}

TEST_CASE("identical seeds give identical shares") {
  const PrimeModulus p(101);
  const SharingParams params(3, 6, p);
  Prg a(42, 3), b(42, 3);
  const auto sa = shamir_share(p.element(50), params, a);
  const auto sb = shamir_share(p.element(50), params, b);
  REQUIRE(sa.size() == sb.size());
  for (std::size_t i = 0; i < sa.size(); ++i) CHECK(sa[i].value == sb[i].value);

  Prg c(42, 4);  // different stream
  const auto sc = shamir_share(p.element(50), params, c);
  bool all_equal = true;
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (sa[i].value != sc[i].value) all_equal = false;
  CHECK_FALSE(all_equal);
}
