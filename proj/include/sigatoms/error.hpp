#pragma once

#include <stdexcept>
#include <string>

namespace sigatoms {

enum class ErrorKind {
  ZeroDenominator,
  SpaceMismatch,
  InvalidSpace,
  InvalidArgument,
  GuardExceeded,
  NotMeasurable,
  Inconsistent,
  Underdetermined,
  NegativeAtomMass,
  InvalidPmf,
  UnsupportedDistribution,
  IndexerInconsistent,
  FiniteAtomTail,
  Parse,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so that callers
/// (notably the CLI) can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sigatoms
