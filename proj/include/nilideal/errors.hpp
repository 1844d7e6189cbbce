#pragma once

#include <stdexcept>
#include <string>

namespace nilideal {

/// Bad word text, rule file, or trace file.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A presentation or rule that violates a structural invariant.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Engine precondition failures (zero input, no conserved potential,
/// word outside the canonicalizable ideal, ...).
class EngineError : public std::runtime_error {
 public:
  explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured budget (node count, enumeration cap) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nilideal
