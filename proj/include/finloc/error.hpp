#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace finloc {

enum class ErrorKind {
  NotAPoset,
  NotALattice,
  NotAFrame,
  BoundTooLarge,
  CarrierTooLarge,
  FrameTooLarge,
  NotPrime,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Error raised by every fallible operation. The witness carries the
/// offending data (a pair of elements, a failing family, ...) as JSON.
class FinlocError : public std::runtime_error {
public:
  FinlocError(ErrorKind kind, const std::string& message, nlohmann::json witness = nullptr)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const nlohmann::json& witness() const { return witness_; }

private:
  ErrorKind kind_;
  nlohmann::json witness_;
};

}  // namespace finloc
