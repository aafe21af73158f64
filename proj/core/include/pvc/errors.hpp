#pragma once

#include <stdexcept>
#include <string>

namespace pvc {

// Malformed instance, out-of-range index, violated precondition.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// The instance is valid but exceeds a configured enumeration or size limit.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pvc
