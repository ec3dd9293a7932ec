#pragma once
#include <stdexcept>
#include <string>

namespace symloop {

// A configured resource limit was exceeded (word length, orbit size, ...).
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed: the computation produced data that
// violates an identity the model guarantees. Always a bug or bad input.
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InvariantError(msg);
}

}  // namespace symloop
