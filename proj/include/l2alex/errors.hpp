#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace l2alex {

/// Error raised while parsing braid words, knot-spec JSON or word strings.
/// Carries the byte offset of the offending token when known.
struct parse_error : std::runtime_error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// A word mentions a generator outside the oracle's alphabet.
struct alphabet_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Presentation does not have deficiency one.
struct deficiency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input does not describe a knot (multi-component closure, H1 not Z, ...).
struct not_a_knot_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Claimed automorphism failed the symbolic round-trip or jacobian check.
struct invalid_automorphism_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inconsistent or malformed domain data (summaries, knot specs, configs).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numeric stage failed (bad epsilon, nonfinite value, ...).
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The requested computation needs a word-problem oracle that does not
/// exist for this input.
struct unsupported_oracle_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The monomiality limit is not defined for the requested expression.
struct undefined_lambda_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace l2alex
