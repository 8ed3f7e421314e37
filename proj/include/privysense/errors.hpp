#pragma once

#include <stdexcept>
#include <string>

namespace privysense {

// Error taxonomy. The CLI maps categories to exit codes:
//   input_error and subclasses    -> exit 2
//   logic-level failures (domain,
//   contract, coverage, ...)      -> exit 1
//   anything else                 -> exit 3 (internal invariant violation)

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller passed values outside an operation's mathematical domain
// (non-positive price, h0 <= 0, bad thresholds, ...).
struct domain_error : error {
    using error::error;
};

// A documented precondition was violated.
struct contract_error : error {
    using error::error;
};

// A price window does not cover the horizon a labeler needs.
struct coverage_error : error {
    using error::error;
};

// Input is technically valid but statistically unusable (e.g. constant
// return series).
struct degenerate_input_error : error {
    using error::error;
};

// Files, schemas, malformed artifacts.
struct input_error : error {
    using error::error;
};

struct io_error : input_error {
    using input_error::input_error;
};

// A required column or header element is missing or malformed.
struct schema_error : input_error {
    using input_error::input_error;
};

// Two artifacts that must belong together do not (vocabulary checksum).
struct mismatch_error : input_error {
    using input_error::input_error;
};

struct internal_error : error {
    using error::error;
};

inline void check_contract(bool ok, const std::string& msg) {
    if (!ok) throw contract_error(msg);
}

}  // namespace privysense
