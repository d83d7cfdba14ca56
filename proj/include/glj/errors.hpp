#pragma once

#include <stdexcept>
#include <string>

namespace glj {

// Malformed or inconsistent user input (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation needed objects outside the enumerated window (exit code 3).
class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An invariant that must hold on valid input was violated (exit code 4).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require_input(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

inline void require_internal(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

}  // namespace glj
