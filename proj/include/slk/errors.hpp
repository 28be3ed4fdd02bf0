#pragma once

#include <stdexcept>
#include <string>

namespace slk {

/// Requested cycle class does not exist (p < 3, p > n, p + q > n, ...).
struct InvalidClassError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Input vertex sequence is not a cycle (repeats, too short).
struct MalformedCycleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A projection direction failed one of the genericity conditions.
struct GenericityError : std::runtime_error {
    GenericityError(std::string cond, const std::string& detail)
        : std::runtime_error(cond + ": " + detail), condition(std::move(cond)) {}
    std::string condition;
};

/// The deterministic candidate search ran out of directions.
struct NoGenericDirectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Triangle-disk oracle met a non-transverse contact.
struct DegenerateContactError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Random embedding generation exhausted its resample budget.
struct GenerationFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Embedding file could not be parsed.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A quantity that must be structurally impossible showed up; signals a bug
/// in the geometry pipeline, not bad user input.
struct InternalInconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace slk
