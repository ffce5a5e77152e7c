#pragma once

#include <stdexcept>
#include <string>

namespace drinfeld {

/// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A configurable resource cap (field size, enumeration size, extension
/// degree) was exceeded.
struct cap_exceeded : error {
  using error::error;
};

/// An operation received a TowerCase that does not match the profile, or a
/// case it is not defined for.
struct inconsistent_case : error {
  using error::error;
};

/// Input text could not be parsed; carries a position for diagnostics.
struct parse_error : error {
  parse_error(const std::string& what, std::size_t pos)
      : error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

}  // namespace drinfeld
