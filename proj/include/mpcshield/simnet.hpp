#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mpcshield/coding.hpp"

namespace mpcshield {

enum class MsgKind { MinorBroadcast, DetSubshare, DetOpen, Portion, Sigma };

enum class Phase { Detection, Correction };

/// Destination id 0 addresses every player.
constexpr PlayerId kBroadcast = 0;

struct Envelope {
  std::uint32_t round;
  PlayerId from;
  PlayerId to;
  MsgKind kind;
  std::vector<std::uint64_t> payload;
};

struct Transcript {
  std::vector<Envelope> envelopes;
  /// Phase of each delivered round, keyed by round index.
  std::map<std::uint32_t, Phase> round_phase;

  std::uint32_t rounds() const { return static_cast<std::uint32_t>(round_phase.size()); }
};

/// Players whose stored shares are replaced before the protocol starts.
struct AdversarySpec {
  std::vector<std::pair<PlayerId, std::uint64_t>> corruptions;
};

/// Round-synchronous reliable network among players 1..n. Messages sent
/// within a round become visible only after deliver_round(); the
/// transcript records every send in (round, from, to) order.
class SimNet {
 public:
  explicit SimNet(std::uint32_t player_count);

  std::uint32_t player_count() const { return n_; }
  std::uint32_t current_round() const { return round_; }

  void begin_phase(Phase phase) { phase_ = phase; }

  /// Stage an envelope stamped with the current round.
  void send(PlayerId from, PlayerId to, MsgKind kind,
            std::vector<std::uint64_t> payload);
  /// Stage a pre-built envelope; its round must match the current round
  /// by delivery time.
  void send(Envelope env);

  /// Close the round: canonical-sort staged envelopes into the transcript
  /// and fan them out to inboxes (broadcast reaches all n players).
  void deliver_round();

  /// Messages delivered to a player in the most recent round.
  const std::vector<Envelope>& inbox(PlayerId id) const;

  const Transcript& transcript() const { return transcript_; }

 private:
  std::uint32_t n_;
  std::uint32_t round_ = 1;
  Phase phase_ = Phase::Detection;
  std::vector<Envelope> outbox_;
  std::vector<std::vector<Envelope>> inboxes_;
  Transcript transcript_;
};

std::uint32_t round_count(const Transcript& tr, Phase phase);

const char* msg_kind_name(MsgKind kind);

/// One line per envelope:
/// round=<r> from=<i> to=<j|*> kind=<k> payload=<v1[,v2...]>
std::string export_transcript(const Transcript& tr);

}  // namespace mpcshield
