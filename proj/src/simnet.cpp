#include "mpcshield/simnet.hpp"

#include <algorithm>
#include <sstream>

namespace mpcshield {

SimNet::SimNet(std::uint32_t player_count)
    : n_(player_count), inboxes_(player_count) {}

void SimNet::send(PlayerId from, PlayerId to, MsgKind kind,
                  std::vector<std::uint64_t> payload) {
  send(Envelope{round_, from, to, kind, std::move(payload)});
}

void SimNet::send(Envelope env) {
  if (env.from == 0 || env.from > n_ || (env.to != kBroadcast && env.to > n_))
    throw UnknownPlayer{};
  outbox_.push_back(std::move(env));
}

void SimNet::deliver_round() {
  for (const Envelope& env : outbox_)
    if (env.round != round_) throw MixedRounds{};

  // ties (same from/to) keep staging order, which disambiguates paired
  // payload streams such as the u/v sub-shares
  std::stable_sort(outbox_.begin(), outbox_.end(),
                   [](const Envelope& a, const Envelope& b) {
                     if (a.round != b.round) return a.round < b.round;
                     if (a.from != b.from) return a.from < b.from;
                     return a.to < b.to;
                   });

  for (auto& inbox : inboxes_) inbox.clear();
  for (const Envelope& env : outbox_) {
    transcript_.envelopes.push_back(env);
    if (env.to == kBroadcast) {
      for (std::uint32_t i = 0; i < n_; ++i) inboxes_[i].push_back(env);
    } else {
      inboxes_[env.to - 1].push_back(env);
    }
  }
  transcript_.round_phase[round_] = phase_;
  outbox_.clear();
  ++round_;
}

const std::vector<Envelope>& SimNet::inbox(PlayerId id) const {
  if (id == 0 || id > n_) throw UnknownPlayer{};
  return inboxes_[id - 1];
}

std::uint32_t round_count(const Transcript& tr, Phase phase) {
  std::uint32_t count = 0;
  for (const auto& [round, ph] : tr.round_phase)
    if (ph == phase) ++count;
  return count;
}

const char* msg_kind_name(MsgKind kind) {
  switch (kind) {
    case MsgKind::MinorBroadcast: return "minor_broadcast";
    case MsgKind::DetSubshare: return "det_subshare";
    case MsgKind::DetOpen: return "det_open";
    case MsgKind::Portion: return "portion";
    case MsgKind::Sigma: return "sigma";
  }
  return "unknown";
}

std::string export_transcript(const Transcript& tr) {
  std::ostringstream out;
  for (const Envelope& env : tr.envelopes) {
    out << "round=" << env.round << " from=" << env.from << " to=";
    if (env.to == kBroadcast)
      out << '*';
    else
      out << env.to;
    out << " kind=" << msg_kind_name(env.kind) << " payload=";
    for (std::size_t i = 0; i < env.payload.size(); ++i) {
      if (i > 0) out << ',';
      out << env.payload[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mpcshield
