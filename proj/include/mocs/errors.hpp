#ifndef MOCS_ERRORS_HPP
#define MOCS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mocs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed problem or reference document. `position()` is a byte offset
/// into the input when known, otherwise npos.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = npos)
      : Error(position == npos ? what : what + " (at byte " + std::to_string(position) + ")"),
        position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t position_;
};

/// A well-formed input that violates a model invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Enumeration would exceed the configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Argument outside an operation's domain (empty objective scope, eps < 0, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Internal consistency check failed; indicates a bug or degenerate numerics.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace mocs

#endif  // MOCS_ERRORS_HPP
