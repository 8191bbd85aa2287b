#include "qdual/error.hpp"

namespace qdual {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::UnknownRing: return "UnknownRing";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::BadUnit: return "BadUnit";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotLocal: return "NotLocal";
    case ErrorKind::Compatibility: return "Compatibility";
    case ErrorKind::NotSubmodule: return "NotSubmodule";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::NotQuasidualizing: return "NotQuasidualizing";
    case ErrorKind::BadArgument: return "BadArgument";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& witness, std::size_t line) {
  std::string msg(to_string(kind));
  if (line != 0) msg += " at line " + std::to_string(line);
  if (!witness.empty()) msg += ": " + witness;
  return msg;
}

}  // namespace

Error::Error(ErrorKind kind, std::string witness, std::size_t line)
    : std::runtime_error(compose(kind, witness, line)),
      kind_(kind),
      witness_(std::move(witness)),
      line_(line) {}

}  // namespace qdual
