#pragma once

#include <stdexcept>
#include <string>

namespace gf2up {

// Thrown when an operation would exceed a configured resource ceiling
// (degree blowup in pow/substitution, brute-force candidate counts).
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown by the polynomial text parser; position is a byte offset into
// the input.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gf2up
