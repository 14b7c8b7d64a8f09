#pragma once

#include <stdexcept>
#include <string>

namespace qpw {

// Error taxonomy, aligned with the CLI exit-code contract:
//   UsageError         -> 2  (bad invocation, unknown suite, malformed input file)
//   AdmissibilityError -> 3  (grid or truncation cannot support the request)
//   InvariantError     -> 4  (a checked mathematical invariant failed)
//   DomainError        -> 5  (argument outside an operation's domain)
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AdmissibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qpw
