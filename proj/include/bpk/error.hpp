#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bpk {

enum class ErrorKind {
  InvalidInput,
  CapExceeded,
  Disconnected,
  NotAForest,
  NotInClosure,
  Unreachable,
  DegeneratePosition,
  DuplicateChord,
  BadParams,
  NotTransparent,
  NotStarForest,
  AdjacentCrossing,
  CoverMismatch,
  RadiusExceeded,
  ModelHostMismatch,
  NotCircular,
  NotSpanning,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bpk
