#include "mpcshield/protocol.hpp"

#include <map>

#include "mpcshield/matrix.hpp"

namespace mpcshield {

namespace {

FieldElement apply_sign(FieldElement value, PlayerId id, std::uint32_t n) {
  return (id + n) % 2 == 0 ? value : -value;
}

}  // namespace

PlayerEquation build_player_equation(PlayerId id, FieldElement alpha,
                                     std::uint32_t n) {
  const PrimeModulus p = alpha.modulus();
  const FieldElement x = p.element(id);
  PlayerEquation eq{{}, -alpha, p.element(id) * alpha};
  eq.row.reserve(n - 1);
  FieldElement pw = p.element(1);
  for (std::uint32_t j = 0; j + 1 < n; ++j) {
    eq.row.push_back(pw);
    pw *= x;
  }
  return eq;
}

std::vector<FieldElement> compute_public_minors(std::uint32_t n, PrimeModulus p) {
  if (n < 4) throw TooFewPlayers{};
  // public system matrix: columns [1, i, ..., i^(n-2)], last column secret
  MatrixZp a(n, n, p);
  for (std::uint32_t i = 1; i <= n; ++i) {
    FieldElement pw = p.element(1);
    const FieldElement x = p.element(i);
    for (std::uint32_t j = 0; j + 1 < n; ++j) {
      a.at(i - 1, j) = pw;
      pw *= x;
    }
  }
  std::vector<FieldElement> minors;
  minors.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i)
    minors.push_back(minor_determinant(a, i, n - 1));
  return minors;
}

DetContribution local_det_contribution(PlayerId id, FieldElement alpha,
                                       FieldElement minor, std::uint32_t n) {
  const PrimeModulus p = alpha.modulus();
  const FieldElement u = apply_sign(p.element(id) * alpha * minor, id, n);
  const FieldElement v = apply_sign(-alpha * minor, id, n);
  return DetContribution{id, u, v};
}

DetectionOutcome locate_error(FieldElement d1, FieldElement d2, std::uint32_t n) {
  if (d1.modulus() != d2.modulus()) throw ModulusMismatch{};
  const PrimeModulus p = d1.modulus();
  if (d2.is_zero()) {
    const auto verdict = d1.is_zero() ? DetectionOutcome::Verdict::NoErrorDetected
                                      : DetectionOutcome::Verdict::Undecodable;
    return DetectionOutcome{d1, d2, std::nullopt, verdict, 0};
  }
  const FieldElement b0 = d1 / d2;
  const FieldElement root = -b0;  // root of the locator x + b0
  if (root.value() >= 1 && root.value() <= n) {
    return DetectionOutcome{d1, d2, b0, DetectionOutcome::Verdict::ErrorAt,
                            static_cast<PlayerId>(root.value())};
  }
  return DetectionOutcome{d1, d2, b0, DetectionOutcome::Verdict::Undecodable, 0};
}

DetectionOutcome run_detection(std::vector<PlayerState>& players, SimNet& net) {
  const std::uint32_t n = static_cast<std::uint32_t>(players.size());
  if (n < 4) throw TooFewPlayers{};
  const SharingParams params = players.front().params;
  const PrimeModulus p = params.p;

  net.begin_phase(Phase::Detection);

  // round 1: the volunteer (lowest id) computes and broadcasts the minors
  {
    const std::vector<FieldElement> minors = compute_public_minors(n, p);
    std::vector<std::uint64_t> payload;
    payload.reserve(n);
    for (FieldElement m : minors) payload.push_back(m.value());
    net.send(players.front().id, kBroadcast, MsgKind::MinorBroadcast,
             std::move(payload));
  }
  net.deliver_round();

  // round 2: everyone sub-shares its u and v terms (u stream first)
  for (PlayerState& pl : players) {
    FieldElement minor = p.element(0);
    for (const Envelope& env : net.inbox(pl.id))
      if (env.kind == MsgKind::MinorBroadcast)
        minor = p.element(env.payload.at(pl.id - 1));
    const DetContribution contrib =
        local_det_contribution(pl.id, pl.share.value, minor, n);
    const std::vector<Share> u_shares = shamir_share(contrib.u, params, pl.rng);
    const std::vector<Share> v_shares = shamir_share(contrib.v, params, pl.rng);
    for (const Share& s : u_shares)
      net.send(pl.id, s.owner, MsgKind::DetSubshare, {s.value.value()});
    for (const Share& s : v_shares)
      net.send(pl.id, s.owner, MsgKind::DetSubshare, {s.value.value()});
  }
  net.deliver_round();

  // round 3: everyone opens the two sub-share sums
  for (PlayerState& pl : players) {
    FieldElement sum_u = p.element(0);
    FieldElement sum_v = p.element(0);
    std::map<PlayerId, int> seen;
    for (const Envelope& env : net.inbox(pl.id)) {
      if (env.kind != MsgKind::DetSubshare) continue;
      const FieldElement value = p.element(env.payload.at(0));
      if (seen[env.from]++ == 0)
        sum_u += value;
      else
        sum_v += value;
    }
    net.send(pl.id, kBroadcast, MsgKind::DetOpen, {sum_u.value()});
    net.send(pl.id, kBroadcast, MsgKind::DetOpen, {sum_v.value()});
  }
  net.deliver_round();

  // local interpolation; every player must land on the same outcome
  std::optional<DetectionOutcome> agreed;
  for (PlayerState& pl : players) {
    std::vector<Share> opened_u;
    std::vector<Share> opened_v;
    std::map<PlayerId, int> seen;
    for (const Envelope& env : net.inbox(pl.id)) {
      if (env.kind != MsgKind::DetOpen) continue;
      const Share share{env.from, p.element(env.payload.at(0))};
      if (seen[env.from]++ == 0)
        opened_u.push_back(share);
      else
        opened_v.push_back(share);
    }
    const FieldElement d1 = shamir_reconstruct(opened_u, params);
    const FieldElement d2 = shamir_reconstruct(opened_v, params);
    const DetectionOutcome outcome = locate_error(d1, d2, n);
    if (!agreed)
      agreed = outcome;
    else if (!(*agreed == outcome))
      throw ProtocolAbort("players disagree on the detection outcome");
  }
  return *agreed;
}

std::vector<AddressedPortion> prepare_correction_portions(
    PlayerState& state, const std::set<PlayerId>& helpers, PlayerId target) {
  if (!helpers.count(state.id))
    throw BadHelperSet("sender is not in the helper set");
  if (helpers.count(target))
    throw BadHelperSet("recovery target is in the helper set");
  const std::uint32_t t = static_cast<std::uint32_t>(helpers.size());
  const FieldElement gamma =
      lagrange_constant(state.id, helpers, target, state.params.p);
  const std::vector<FieldElement> portions =
      additive_split(gamma * state.share.value, t, state.rng);

  std::vector<AddressedPortion> out;
  out.reserve(t);
  std::size_t idx = 0;
  for (PlayerId helper : helpers) out.push_back({helper, portions[idx++]});
  return out;
}

FieldElement aggregate_portions(const std::vector<FieldElement>& received,
                                std::uint32_t t) {
  if (received.size() != t) throw MissingPortion{};
  FieldElement sum = received.front().modulus().element(0);
  for (FieldElement v : received) sum += v;
  return sum;
}

FieldElement recover_share(const std::vector<FieldElement>& sigmas,
                           std::uint32_t t) {
  if (sigmas.size() != t) throw MissingSigma{};
  FieldElement sum = sigmas.front().modulus().element(0);
  for (FieldElement v : sigmas) sum += v;
  return sum;
}

FieldElement run_correction(std::vector<PlayerState>& players, PlayerId target,
                            SimNet& net) {
  const std::uint32_t n = static_cast<std::uint32_t>(players.size());
  if (target == 0 || target > n) throw UnknownPlayer{};
  const SharingParams params = players.front().params;
  const PrimeModulus p = params.p;
  const std::uint32_t t = params.t;

  // helpers: the t lowest ids excluding the target
  std::set<PlayerId> helpers;
  for (PlayerId id = 1; id <= n && helpers.size() < t; ++id)
    if (id != target) helpers.insert(id);
  if (helpers.size() < t) throw InsufficientHelpers{};

  net.begin_phase(Phase::Correction);

  // round 1: addressed additive portions among the helpers
  for (PlayerState& pl : players) {
    if (!helpers.count(pl.id)) continue;
    for (const AddressedPortion& ap :
         prepare_correction_portions(pl, helpers, target))
      net.send(pl.id, ap.to, MsgKind::Portion, {ap.value.value()});
  }
  net.deliver_round();

  // round 2: each helper sends its sigma sum to the target
  for (PlayerState& pl : players) {
    if (!helpers.count(pl.id)) continue;
    std::vector<FieldElement> received;
    for (const Envelope& env : net.inbox(pl.id))
      if (env.kind == MsgKind::Portion)
        received.push_back(p.element(env.payload.at(0)));
    const FieldElement sigma = aggregate_portions(received, t);
    net.send(pl.id, target, MsgKind::Sigma, {sigma.value()});
  }
  net.deliver_round();

  std::vector<FieldElement> sigmas;
  for (const Envelope& env : net.inbox(target))
    if (env.kind == MsgKind::Sigma)
      sigmas.push_back(p.element(env.payload.at(0)));
  const FieldElement recovered = recover_share(sigmas, t);
  players[target - 1].share.value = recovered;
  return recovered;
}

void apply_adversary(std::vector<PlayerState>& players, const AdversarySpec& spec) {
  const std::uint32_t n = static_cast<std::uint32_t>(players.size());
  std::set<PlayerId> touched;
  for (const auto& [id, value] : spec.corruptions) {
    if (id == 0 || id > n) throw UnknownPlayer{};
    if (!touched.insert(id).second)
      throw ValidationError("player " + std::to_string(id) +
                            " corrupted more than once");
    PlayerState& pl = players[id - 1];
    pl.share.value = pl.params.p.element(value);
  }
}

}  // namespace mpcshield
