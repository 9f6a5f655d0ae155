#pragma once

#include <stdexcept>
#include <string>

namespace walkmine {

/// Malformed or inconsistent input. `location` names where the problem was
/// found (a JSON path, a line number, a vertex name), empty when not applicable.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& message, std::string location = {})
      : std::runtime_error(location.empty() ? message : location + ": " + message), location_(std::move(location)) {}

  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

}  // namespace walkmine
