#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace alttam {

enum class ErrorKind {
  BadAlphabet,
  NonDyckWord,
  IndexOutOfRange,
  SpanOutOfRange,
  SizeMismatch,
  SizeTooLarge,
  CycleDetected,
  DuplicateElement,
  UnknownElement,
  NotComparable,
  LeafOutOfRange,
  RootEdgeForbidden,
  InvalidInterval,
  NotAValley,
  NotACovering,
  NotLeft,
  NotRight,
  NotLinear,
  HeightOutOfRange,
  OrderExceeded,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every library failure is reported through this one exception type; callers
// that need to distinguish failures switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace alttam
