#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mpcshield {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// algebra
struct ZeroInverse : Error {
  ZeroInverse() : Error("zero has no multiplicative inverse") {}
};
struct ModulusMismatch : Error {
  ModulusMismatch() : Error("operands belong to different prime fields") {}
};
struct InvalidModulus : Error {
  explicit InvalidModulus(const std::string& what) : Error(what) {}
};
struct DivisionByZeroPolynomial : Error {
  DivisionByZeroPolynomial() : Error("polynomial division by zero polynomial") {}
};
struct DuplicateAbscissa : Error {
  DuplicateAbscissa() : Error("interpolation points share an x-coordinate") {}
};
struct NonSquare : Error {
  NonSquare() : Error("matrix is not square") {}
};
struct IndexOutOfRange : Error {
  IndexOutOfRange() : Error("matrix index out of range") {}
};
struct SingularSystem : Error {
  explicit SingularSystem(bool inconsistent_)
      : Error(inconsistent_ ? "linear system is inconsistent"
                            : "linear system is underdetermined"),
        inconsistent(inconsistent_) {}
  bool inconsistent;
};

// coding
struct LengthMismatch : Error {
  LengthMismatch() : Error("sequence length does not match code parameters") {}
};
struct Undecodable : Error {
  explicit Undecodable(const std::string& what) : Error(what) {}
};

// sharing
struct InvalidParams : Error {
  explicit InvalidParams(const std::string& what) : Error(what) {}
};
struct InsufficientShares : Error {
  InsufficientShares() : Error("fewer shares than the threshold") {}
};
struct DuplicateOwner : Error {
  DuplicateOwner() : Error("two shares claim the same owner") {}
};
struct TargetInHelperSet : Error {
  TargetInHelperSet() : Error("recovery target appears in the helper set") {}
};
struct DuplicateHelper : Error {
  DuplicateHelper() : Error("helper set contains a repeated id") {}
};

// protocol
struct TooFewPlayers : Error {
  TooFewPlayers() : Error("single-error detection needs at least 4 players") {}
};
struct BadHelperSet : Error {
  explicit BadHelperSet(const std::string& what) : Error(what) {}
};
struct MissingPortion : Error {
  MissingPortion() : Error("helper did not receive one portion per helper") {}
};
struct MissingSigma : Error {
  MissingSigma() : Error("target did not receive one sigma per helper") {}
};
struct InsufficientHelpers : Error {
  InsufficientHelpers() : Error("fewer intact players than the threshold") {}
};
struct ProtocolAbort : Error {
  explicit ProtocolAbort(const std::string& what) : Error(what) {}
};

// simnet
struct UnknownPlayer : Error {
  UnknownPlayer() : Error("message or corruption addresses an unknown player") {}
};
struct MixedRounds : Error {
  MixedRounds() : Error("outbox mixes envelopes from different rounds") {}
};

// cli
struct ParseError : Error {
  ParseError(int line_, const std::string& what)
      : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
  int line;
};
struct ValidationError : Error {
  explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace mpcshield
