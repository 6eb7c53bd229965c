#pragma once

#include <stdexcept>

namespace swapdist {

/// Invalid argument values or semantically bad domain data.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input outside an enumeration guard (factorial-sized scans, fixed arities).
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structurally malformed external file content.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad command-line usage: unknown option values, unusable flag combinations.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace swapdist
