#include "gridsign/errors.hpp"

namespace gridsign {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MalformedInput: return "malformed_input";
    case Errc::NotPermutation: return "not_permutation";
    case Errc::MarkingCollision: return "marking_collision";
    case Errc::BoundExceeded: return "bound_exceeded";
    case Errc::StateMismatch: return "state_mismatch";
    case Errc::SizeMismatch: return "size_mismatch";
    case Errc::MissingRectangle: return "missing_rectangle";
    case Errc::DuplicateRectangle: return "duplicate_rectangle";
    case Errc::AnomalousClass: return "anomalous_class";
    case Errc::Inconsistent: return "inconsistent";
    case Errc::NotGaugeEquivalent: return "not_gauge_equivalent";
    case Errc::DisconnectedStates: return "disconnected_states";
    case Errc::Internal: return "internal";
  }
  return "unknown";
}

int errc_category(Errc c) {
  switch (c) {
    case Errc::MalformedInput:
    case Errc::NotPermutation:
    case Errc::MarkingCollision:
    case Errc::BoundExceeded:
    case Errc::StateMismatch:
    case Errc::SizeMismatch:
    case Errc::MissingRectangle:
    case Errc::DuplicateRectangle:
      return 1;
    case Errc::AnomalousClass:
    case Errc::Inconsistent:
    case Errc::NotGaugeEquivalent:
    case Errc::DisconnectedStates:
    case Errc::Internal:
      return 3;
  }
  return 3;
}

}  // namespace gridsign
