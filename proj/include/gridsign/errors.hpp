#pragma once

#include <stdexcept>
#include <string>

namespace gridsign {

enum class Errc {
  MalformedInput,
  NotPermutation,
  MarkingCollision,
  BoundExceeded,
  StateMismatch,
  SizeMismatch,
  MissingRectangle,
  DuplicateRectangle,
  AnomalousClass,
  Inconsistent,
  NotGaugeEquivalent,
  DisconnectedStates,
  Internal,
};

const char* errc_name(Errc c);

// Exit-code category used by the CLI: 1 = input validation failure,
// 3 = internal invariant breach. Verification failures (exit 2) are
// reported through return values, not exceptions.
int errc_category(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace gridsign
