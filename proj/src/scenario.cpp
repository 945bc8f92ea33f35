#include "mpcshield/scenario.hpp"

#include <sstream>

#include "mpcshield/protocol.hpp"

namespace mpcshield {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::uint64_t parse_u64(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(s, &pos);
    if (pos != s.size()) throw ParseError(line, "trailing characters in number");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError(line, "expected a non-negative integer, got '" + s + "'");
  }
}

std::vector<std::uint64_t> parse_u64_list(const std::string& s, int line) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(parse_u64(trim(item), line));
  if (out.empty()) throw ParseError(line, "empty list");
  return out;
}

Mode parse_mode(const std::string& s, int line) {
  if (s == "detect") return Mode::Detect;
  if (s == "correct") return Mode::Correct;
  if (s == "full") return Mode::Full;
  if (s == "encode") return Mode::Encode;
  if (s == "decode") return Mode::Decode;
  throw ParseError(line, "unknown mode '" + s + "'");
}

std::string join(const std::vector<FieldElement>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ',';
    out << values[i].value();
  }
  return out.str();
}

}  // namespace

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::Detect: return "detect";
    case Mode::Correct: return "correct";
    case Mode::Full: return "full";
    case Mode::Encode: return "encode";
    case Mode::Decode: return "decode";
  }
  return "unknown";
}

Scenario parse_scenario(const std::string& text) {
  Scenario s;
  bool have_prime = false, have_players = false, have_threshold = false;
  bool have_mode = false;

  std::stringstream ss(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(ss, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(line_no, "expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (value.empty()) throw ParseError(line_no, "empty value for '" + key + "'");

    if (key == "prime") {
      s.prime = parse_u64(value, line_no);
      have_prime = true;
    } else if (key == "players") {
      s.players = static_cast<std::uint32_t>(parse_u64(value, line_no));
      have_players = true;
    } else if (key == "threshold") {
      s.threshold = static_cast<std::uint32_t>(parse_u64(value, line_no));
      have_threshold = true;
    } else if (key == "secret") {
      s.secret = parse_u64(value, line_no);
    } else if (key == "shares") {
      s.shares = parse_u64_list(value, line_no);
    } else if (key == "corrupt") {
      const auto colon = value.find(':');
      if (colon == std::string::npos)
        throw ParseError(line_no, "corrupt expects pos:value");
      s.corrupt = {static_cast<std::uint32_t>(
                       parse_u64(trim(value.substr(0, colon)), line_no)),
                   parse_u64(trim(value.substr(colon + 1)), line_no)};
    } else if (key == "mode") {
      s.mode = parse_mode(value, line_no);
      have_mode = true;
    } else if (key == "seed") {
      s.seed = parse_u64(value, line_no);
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }

  if (!have_prime || !have_players || !have_mode)
    throw ParseError(line_no, "missing required keys (prime, players, mode)");

  // validation beyond syntax
  std::optional<PrimeModulus> p;
  try {
    p.emplace(s.prime);
  } catch (const InvalidModulus& e) {
    throw ValidationError(e.what());
  }
  if (s.players < 1) throw ValidationError("players must be at least 1");
  if (!have_threshold) {
    // default t = n - 2e with e = 1
    if (s.players < 3) throw ValidationError("threshold unset and players < 3");
    s.threshold = s.players - 2;
  }
  if (s.threshold < 1 || s.threshold > s.players)
    throw ValidationError("threshold must lie in 1..players");
  if (s.secret && s.shares)
    throw ValidationError("give either secret or shares, not both");
  if (s.mode == Mode::Encode && !s.secret)
    throw ValidationError("encode mode needs a secret");
  if (s.mode == Mode::Decode && !s.shares)
    throw ValidationError("decode mode needs explicit shares");
  if (!s.secret && !s.shares)
    throw ValidationError("scenario needs a secret or a share list");
  if (s.shares && s.shares->size() != s.players)
    throw ValidationError("share list length must equal players");
  if (s.corrupt && (s.corrupt->first < 1 || s.corrupt->first > s.players))
    throw ValidationError("corrupt position must lie in 1..players");
  return s;
}

RunResult run_scenario(const Scenario& scenario) {
  const PrimeModulus p(scenario.prime);
  const std::uint32_t n = scenario.players;

  RunResult result;
  std::ostringstream report;
  report << "mode: " << mode_name(scenario.mode) << '\n'
         << "prime: " << scenario.prime << '\n'
         << "players: " << n << '\n'
         << "threshold: " << scenario.threshold << '\n'
         << "seed: " << scenario.seed << '\n';

  if (scenario.mode == Mode::Decode) {
    const RsParams params(n, scenario.threshold, p);
    Codeword received;
    for (std::uint64_t v : *scenario.shares) received.push_back(p.element(v));
    try {
      const DecodeResult decoded = bw_decode(received, params);
      report << "decode: ok\n"
             << "message: " << join(decoded.message_poly.coefficients()) << '\n';
      report << "errors: ";
      bool first = true;
      for (PlayerId pos : decoded.error_positions) {
        if (!first) report << ',';
        report << pos;
        first = false;
      }
      if (decoded.error_positions.empty()) report << "none";
      report << '\n' << "corrected: " << join(decoded.corrected) << '\n';
    } catch (const Undecodable&) {
      report << "decode: undecodable\n";
      result.exit_code = 1;
    }
    result.report = report.str();
    return result;
  }

  // dealer
  const SharingParams params(scenario.threshold, n, p);
  std::vector<FieldElement> dealt;
  if (scenario.secret) {
    Prg dealer(scenario.seed, 0);
    for (const Share& sh :
         shamir_share(p.element(*scenario.secret), params, dealer))
      dealt.push_back(sh.value);
  } else {
    for (std::uint64_t v : *scenario.shares) dealt.push_back(p.element(v));
  }

  if (scenario.mode == Mode::Encode || scenario.mode == Mode::Full)
    report << "shares: " << join(dealt) << '\n';
  if (scenario.mode == Mode::Encode) {
    result.report = report.str();
    return result;
  }

  std::vector<PlayerState> players;
  players.reserve(n);
  for (PlayerId id = 1; id <= n; ++id)
    players.emplace_back(id, dealt[id - 1], params, scenario.seed);

  if (scenario.corrupt) {
    AdversarySpec adversary;
    adversary.corruptions.emplace_back(scenario.corrupt->first,
                                       scenario.corrupt->second);
    apply_adversary(players, adversary);
  }

  SimNet net(n);
  const DetectionOutcome outcome = run_detection(players, net);
  switch (outcome.verdict) {
    case DetectionOutcome::Verdict::ErrorAt:
      report << "detection: location=" << outcome.location << '\n';
      break;
    case DetectionOutcome::Verdict::NoErrorDetected:
      report << "detection: none\n";
      break;
    case DetectionOutcome::Verdict::Undecodable:
      report << "detection: undecodable\n";
      result.exit_code = 1;
      break;
  }

  const bool want_correction =
      scenario.mode == Mode::Correct || scenario.mode == Mode::Full;
  if (want_correction &&
      outcome.verdict == DetectionOutcome::Verdict::ErrorAt) {
    const FieldElement recovered =
        run_correction(players, outcome.location, net);
    report << "correction: player=" << outcome.location
           << " recovered=" << recovered.value()
           << " rounds=" << round_count(net.transcript(), Phase::Correction)
           << '\n';
  }

  result.report = report.str();
  result.transcript = export_transcript(net.transcript());
  return result;
}

}  // namespace mpcshield
