#pragma once

#include <stdexcept>
#include <string>

namespace obstacle_attack {

enum class Errc {
  EmptyMap,
  RaggedRows,
  BadChar,
  OutOfBounds,
  NoPath,
  BadEndpoint,
  NoBaseline,
  ReplanFailed,
  MissingKey,
  BadValue,
  UnknownKey,
  IoError,
};

const char* to_string(Errc code) noexcept;

/// Single exception type for the library; `code()` tells callers (and the
/// CLI exit-code mapping) which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace obstacle_attack
