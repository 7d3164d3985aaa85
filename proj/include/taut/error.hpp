#pragma once

#include <stdexcept>
#include <string>

namespace taut {

/// Raised whenever an operation is called outside its domain: unstable
/// (g, n), division by zero, negative Bernoulli index and so on.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace taut
