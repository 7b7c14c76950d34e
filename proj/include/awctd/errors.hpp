#pragma once

#include <stdexcept>
#include <string>

namespace awctd {

/// Invalid user-facing configuration (bad key, out-of-range value, unsupported order).
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A caller broke an operation's precondition (level out of range, mask not closed, ...).
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Non-finite field values appeared during time stepping.
class InstabilityError : public std::runtime_error {
public:
  InstabilityError(long step, const std::string &what)
      : std::runtime_error("numerical instability at step " + std::to_string(step) + ": " + what),
        step_(step) {}

  long step() const noexcept { return step_; }

private:
  long step_;
};

} // namespace awctd
