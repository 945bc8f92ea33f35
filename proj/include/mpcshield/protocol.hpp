#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "mpcshield/rng.hpp"
#include "mpcshield/sharing.hpp"
#include "mpcshield/simnet.hpp"

namespace mpcshield {

/// One simulated party: public id, stored share, and a private
/// randomness stream (stream id = player id).
struct PlayerState {
  PlayerState(PlayerId id_, FieldElement share_value, SharingParams params_,
              std::uint64_t seed)
      : id(id_), share{id_, share_value}, params(params_), rng(seed, id_) {}

  PlayerId id;
  Share share;
  SharingParams params;
  Prg rng;
};

struct DetectionOutcome {
  enum class Verdict { ErrorAt, NoErrorDetected, Undecodable };

  FieldElement d1;
  FieldElement d2;
  std::optional<FieldElement> b0;
  Verdict verdict;
  /// Valid only when verdict == ErrorAt.
  PlayerId location = 0;

  friend bool operator==(const DetectionOutcome& a, const DetectionOutcome& b) {
    return a.d1 == b.d1 && a.d2 == b.d2 && a.b0 == b.b0 &&
           a.verdict == b.verdict && a.location == b.location;
  }
};

/// Player i's terms of the two Laplace expansions:
/// u = (-1)^(i+n) * (i * alpha_i) * M_i   (term of d1)
/// v = (-1)^(i+n) * (-alpha_i) * M_i      (term of d2)
struct DetContribution {
  PlayerId owner;
  FieldElement u;
  FieldElement v;
};

struct PlayerEquation {
  /// Public Vandermonde part [1, i, i^2, ..., i^(n-2)].
  std::vector<FieldElement> row;
  /// Coefficient -alpha_i multiplying b0.
  FieldElement b0_coefficient;
  /// Right-hand side i * alpha_i.
  FieldElement rhs;
};

PlayerEquation build_player_equation(PlayerId id, FieldElement alpha,
                                     std::uint32_t n);

/// M_i = det of the public Vandermonde columns with row i deleted; the
/// minors of A1 and A2 coincide since their first n-1 columns are equal.
std::vector<FieldElement> compute_public_minors(std::uint32_t n, PrimeModulus p);

DetContribution local_det_contribution(PlayerId id, FieldElement alpha,
                                       FieldElement minor, std::uint32_t n);

/// Cramer step: b0 = d1 / d2 when d2 != 0, and the locator x + b0 has
/// root (p - b0) mod p. A doubly-singular system means no error.
DetectionOutcome locate_error(FieldElement d1, FieldElement d2, std::uint32_t n);

/// Algorithm: round 1 the volunteer (lowest id) broadcasts the public
/// minors; round 2 every player Shamir-shares its u and v terms; round 3
/// everyone opens the summed sub-shares and interpolates d1, d2 locally.
DetectionOutcome run_detection(std::vector<PlayerState>& players, SimNet& net);

struct AddressedPortion {
  PlayerId to;
  FieldElement value;
};

/// Helper i splits gamma_i * alpha_i into one portion per helper
/// (keeping one addressed to itself).
std::vector<AddressedPortion> prepare_correction_portions(
    PlayerState& state, const std::set<PlayerId>& helpers, PlayerId target);

FieldElement aggregate_portions(const std::vector<FieldElement>& received,
                                std::uint32_t t);

FieldElement recover_share(const std::vector<FieldElement>& sigmas,
                           std::uint32_t t);

/// Two rounds: helpers exchange additive portions, then send their sigma
/// sums to the target, whose stored share is overwritten with the result.
FieldElement run_correction(std::vector<PlayerState>& players, PlayerId target,
                            SimNet& net);

/// Replace the stored shares named by the spec before a protocol run.
void apply_adversary(std::vector<PlayerState>& players, const AdversarySpec& spec);

}  // namespace mpcshield
