#pragma once

#include <stdexcept>
#include <string>

namespace mckay {

// Input is outside the supported family (excluded group, bad prime, ...).
class unsupported_input : public std::runtime_error {
 public:
  explicit unsupported_input(const std::string& what)
      : std::runtime_error(what) {}
};

// A configured resource ceiling (group order, class count, ...) was hit.
class resource_bound_exceeded : public std::runtime_error {
 public:
  explicit resource_bound_exceeded(const std::string& what)
      : std::runtime_error(what) {}
};

// An internal consistency check failed; indicates a bug, never bad input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace mckay
