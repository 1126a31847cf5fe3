// Error types shared by every btspec module.

#ifndef BTSPEC_ERRORS_HPP_
#define BTSPEC_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace btspec {

// Base of all btspec failures. Domain errors (order exceeded, containment
// violations, ...) derive from this directly; malformed user input derives
// from usage_error.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct usage_error : error {
  using error::error;
};

// Malformed group-spec text. `position` is the 0-based offset of the
// offending character.
struct parse_error : usage_error {
  parse_error(const std::string& msg, std::size_t pos)
    : usage_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

// Well-formed text with parameters outside the family's valid range (Q6).
struct range_error : usage_error {
  using usage_error::usage_error;
};

struct order_exceeded : error {
  using error::error;
};

// A required subgroup containment (H <= K, I <= acting group) does not hold.
struct containment_error : error {
  using error::error;
};

// Coinduction would enumerate more points than the configured cap.
struct cap_exceeded : error {
  using error::error;
};

struct level_mismatch : error {
  using error::error;
};

[[noreturn]] inline void fail_containment(const std::string& what) {
  throw containment_error("containment violation: " + what);
}

} // namespace btspec

#endif
