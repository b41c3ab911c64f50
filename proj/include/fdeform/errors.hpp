#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fdeform {

enum class ErrorKind {
  NotFaithful,
  FrameDegenerate,
  RestrictionMismatch,
  SingularS,
  ZetaZero,
  RetriesExhausted,
  UnknownFixture,
};

std::string_view to_string(ErrorKind kind);

/// Expected failure outcomes of representation-level operations.
class RepresentationError : public std::runtime_error {
 public:
  RepresentationError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fdeform
