#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hallway {

// Parse failures on textual input (CLI exit code 2).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated domain invariants: bad windows, non-lecture-hall sequences,
// U_n / T_n^(s) condition failures (CLI exit code 3).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration or search refused because a configured cap was exceeded
// (CLI exit code 4).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rank cap for exhaustive enumeration.  Default 10, overridable through
// the HALLWAY_MAX_N environment variable.
inline int max_rank() {
  static const int cap = [] {
    if (const char* env = std::getenv("HALLWAY_MAX_N")) {
      int v = std::atoi(env);
      if (v > 0) return v;
    }
    return 10;
  }();
  return cap;
}

inline void check_rank(int n) {
  if (n < 0) throw DomainError("rank must be nonnegative");
  if (n > max_rank())
    throw ResourceError("rank " + std::to_string(n) + " exceeds cap " +
                        std::to_string(max_rank()) +
                        " (set HALLWAY_MAX_N to raise)");
}

}  // namespace hallway
