#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circulant {

enum class ErrorCode {
  bad_order,       // n < 3
  bad_jumps,       // jump value out of range, empty set
  zero_jump,       // value congruent to 0 mod n
  bad_modulus,     // m < 2 or m does not divide n
  bad_shift,       // t outside [0, n/m)
  bad_unit,        // multiplier not coprime to n
  order_mismatch,  // operands built on different orders
  bad_parameter,   // family generator constraint violated
  bound_exceeded,  // exhaustive oracle asked to search above its order bound
  parse,           // malformed literal or JSON document
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace circulant
