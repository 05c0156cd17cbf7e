#pragma once

#include <stdexcept>
#include <string>

namespace bowtie {

// Base of all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An instance violates the data-model invariants (bad uniformity, oversized
// pairwise intersections, duplicate edges, ...).
struct ValidationError : Error {
    using Error::Error;
};

// An operation was called outside its contract (unmet hypothesis, unsupported
// linearity parameter, infeasible request).
struct PreconditionError : Error {
    using Error::Error;
};

// File or stream problem: unreadable path, short write.
struct IoError : Error {
    using Error::Error;
};

// Malformed file content. Messages carry 1-based line numbers.
struct ParseError : Error {
    using Error::Error;
};

// A consistency check that should be unreachable fired; indicates a bug.
struct InternalError : Error {
    using Error::Error;
};

namespace detail {
[[noreturn]] inline void check_failed(const char* expr, const std::string& msg) {
    throw InternalError("internal check failed: " + std::string(expr) +
                        (msg.empty() ? "" : " (" + msg + ")"));
}
} // namespace detail

// Always-on invariant check; never compiled out.
#define BOWTIE_CHECK(expr)                                                     \
    do {                                                                       \
        if (!(expr)) ::bowtie::detail::check_failed(#expr, "");                \
    } while (0)

#define BOWTIE_CHECK_MSG(expr, msg)                                           \
    do {                                                                       \
        if (!(expr)) ::bowtie::detail::check_failed(#expr, (msg));             \
    } while (0)

} // namespace bowtie
