#pragma once

#include <stdexcept>
#include <string>

namespace genwait {

// Raised when an exact-mode operation would exceed its configured size cap.
// Callers are expected to fall back to Monte Carlo estimation.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

}  // namespace genwait
