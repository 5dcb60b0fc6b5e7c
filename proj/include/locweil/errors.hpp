#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locweil {

/// Mathematical precondition violated (log of zero, point in the support, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An effort cap was hit (factorization, Groebner pairs, certificate degree).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  explicit ParseError(const std::string& what) : std::invalid_argument(what), position_(0) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace locweil
