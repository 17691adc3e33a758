#pragma once

#include <stdexcept>
#include <string>

namespace swinv {

/// Precondition or shape violation in a numerical routine.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The data cannot determine the requested quantity (vanishing kernel
/// integral, zero jump/diffusion intensity, ...).
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent experiment configuration. The message is
/// prefixed with the JSON path of the offending entry.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace swinv
