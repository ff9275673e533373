#include "obstacle_attack/error.hpp"

namespace obstacle_attack {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyMap: return "EmptyMap";
    case Errc::RaggedRows: return "RaggedRows";
    case Errc::BadChar: return "BadChar";
    case Errc::OutOfBounds: return "OutOfBounds";
    case Errc::NoPath: return "NoPath";
    case Errc::BadEndpoint: return "BadEndpoint";
    case Errc::NoBaseline: return "NoBaseline";
    case Errc::ReplanFailed: return "ReplanFailed";
    case Errc::MissingKey: return "MissingKey";
    case Errc::BadValue: return "BadValue";
    case Errc::UnknownKey: return "UnknownKey";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace obstacle_attack
