#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kac {

// Precondition, domain or usage violation: the caller asked for something
// the library does not define.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computed object contradicts a structural claim the library relies on
// (a decomposition that does not reconstruct, a witness that does not
// intertwine, a descent whose fixed space has the wrong size). These are
// never swallowed.
class Falsification : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Outcome of a yes/no verification with a human-readable reason on failure.
struct Check {
  bool ok = true;
  std::string detail;

  static Check pass() { return {}; }
  static Check fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace kac
