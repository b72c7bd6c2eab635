#pragma once

#include <stdexcept>
#include <string>

namespace linkcert {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller handed us inputs violating a documented precondition (CLI exit 2).
struct PreconditionError : Error {
    using Error::Error;
};

// Two cycles that must be vertex-disjoint are not.
struct NotDisjointError : PreconditionError {
    NotDisjointError() : PreconditionError("not disjoint") {}
    explicit NotDisjointError(const std::string& what) : PreconditionError(what) {}
};

// A projection direction failed a genericity predicate.
struct DegenerateDirectionError : Error {
    using Error::Error;
};

// A cycle is too small to host the requested number of bridges.
struct TooFewVerticesError : Error {
    using Error::Error;
};

// A bounded search ended without a hit. For searches backed by a cited
// existence theorem this is falsification evidence and must surface loudly
// (CLI exit 1), never be swallowed.
struct SearchExhausted : Error {
    using Error::Error;
};

// An internal invariant that the constructions guarantee was violated.
struct InternalCheckError : Error {
    using Error::Error;
};

}  // namespace linkcert
