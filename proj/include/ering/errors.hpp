#pragma once

#include <stdexcept>
#include <string>

namespace ering {

/// The carrier does not support the requested operation (e.g. exhaustive
/// enumeration of a matrix carrier, or a Stone model of a non-b-ring).
class CapabilityError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// An operation's precondition does not hold for the supplied elements.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Two values that must live in the same carrier do not.
class CarrierMismatch : public std::invalid_argument {
public:
  CarrierMismatch() : std::invalid_argument("elements belong to different carriers") {}
  explicit CarrierMismatch(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace ering
