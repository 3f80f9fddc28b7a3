#pragma once

#include <stdexcept>
#include <string>

namespace corrpack {

// Malformed input or a violated operation precondition.  The CLI maps this
// exception class to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A guarantee the algorithms rely on did not hold.  Seeing this means a bug
// or a corrupted in-memory instance, never a user mistake.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

// An exhaustive search exceeded its configured budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InputError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw InvariantError(msg);
}

}  // namespace corrpack
