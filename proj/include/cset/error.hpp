#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cset {

enum class ErrorKind {
  EmptyInput,
  DuplicateElement,
  Overflow,
  DegenerateSet,
  NotComplete,
  ZeroSum,
  NotDisjoint,
  NonZeroSum,
  NTooLarge,
  ZeroInput,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Domain error raised by every library operation. The kind is stable and
/// is what the command-line tool reports in its error body.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cset
