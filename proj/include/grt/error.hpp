#pragma once

#include <stdexcept>
#include <string>

namespace grt {

/// Violated algorithm precondition or contract assertion.
struct precondition_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Exhaustive-search size cap exceeded.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input file or text.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw precondition_error(what);
}

}  // namespace detail
}  // namespace grt
