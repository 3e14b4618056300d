#pragma once

#include <stdexcept>
#include <string>

namespace scsim {

// Invalid configuration, detected before any simulation runs.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A model invariant was violated while a simulation was running.
class SimFault : public std::runtime_error {
public:
  explicit SimFault(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace scsim
