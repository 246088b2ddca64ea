#pragma once

#include <stdexcept>
#include <string>

namespace boxdioph {

enum class ErrorKind {
  RankDeficient,
  NotSquare,
  Singular,
  DimensionMismatch,
  WrongM,
  NonPositiveEntry,
  GcdNotOne,
  CapExceeded,
  Parse,
  Internal,
};

const char *to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI,
/// the Python module) can map it to an exit code or exception type.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Message without the kind prefix.
  const std::string &detail() const noexcept { return detail_; }

private:
  ErrorKind kind_;
  std::string detail_;
};

} // namespace boxdioph
