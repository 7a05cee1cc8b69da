#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace pw {

// Malformed input: bad file syntax, out-of-range vertex ids.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search exceeded its configured position/state budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t bound, int at_k = -1)
      : std::runtime_error(what), bound_(bound), at_k_(at_k) {}

  std::size_t bound() const { return bound_; }
  // Cop count at which the budget broke, or -1 when not applicable.
  int at_k() const { return at_k_; }

 private:
  std::size_t bound_;
  int at_k_;
};

// Unsupported combination of game parameters.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called on an argument that violates its contract
// (e.g. a strategy that does not win).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A strategy was asked to move at a position outside its domain.
class StrategyHole : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A runtime-checked invariant failed. name() is the invariant's tag,
// e.g. "Omit" or "monotone-move".
class InvariantViolation : public std::logic_error {
 public:
  InvariantViolation(std::string name, const std::string& witness)
      : std::logic_error(name + ": " + witness), name_(std::move(name)) {}

  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

}  // namespace pw
