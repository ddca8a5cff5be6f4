#ifndef QMDS_ERRORS_HPP
#define QMDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qmds {

/// Thrown when an exhaustive oracle would exceed its work budget. Callers are
/// expected to catch this and fall back to a cheaper method (or report the
/// check as skipped); it is a refusal, not a failure.
class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a quantity that is mathematically guaranteed turns out wrong
/// at runtime (a nonzero criterion grid on a constructed code, disagreeing
/// dual-route checks, a twist element that does not exist). Reaching this is
/// a falsification of the underlying theorem or a bug, never a user error.
class InternalCheckFailure : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace qmds

#endif  // QMDS_ERRORS_HPP
