#pragma once

#include <stdexcept>
#include <string>

namespace onepl {

// Exit-code-bearing error hierarchy.  The CLI maps these to process exit
// codes; library callers can catch the specific type.

/// Bad command line (exit 1).
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed file or invalid embedding (exit 2).
struct InvalidInputError : std::runtime_error {
    explicit InvalidInputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input contains an x-crossing; the connectivity pipeline refuses it (exit 3).
struct XCrossingError : std::runtime_error {
    explicit XCrossingError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal invariant failed, e.g. the window radius bound or the
/// all-k-failed safety net (exit 4).
struct InternalInvariantError : std::runtime_error {
    explicit InternalInvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A window's decomposition exceeded the configured bag-size ceiling; the
/// run aborts instead of attempting an infeasible DP (exit 4).
struct WidthBlowupError : InternalInvariantError {
    explicit WidthBlowupError(const std::string& msg) : InternalInvariantError(msg) {}
};

} // namespace onepl
