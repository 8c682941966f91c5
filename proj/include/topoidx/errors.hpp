#pragma once

#include <stdexcept>
#include <string>

namespace topoidx {

// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A vertex id is >= the graph's vertex count.
class OutOfRangeVertexError : public Error {
public:
    using Error::Error;
};

// An edge joins a vertex to itself.
class SelfLoopError : public Error {
public:
    using Error::Error;
};

// The same unordered vertex pair appears twice in an edge list.
class DuplicateEdgeError : public Error {
public:
    using Error::Error;
};

// An operation that needs at least one vertex was given none.
class EmptyGraphError : public Error {
public:
    using Error::Error;
};

// A family or range parameter lies outside its validity domain.
class InvalidParameterError : public Error {
public:
    using Error::Error;
};

// A numeric input violates an operation's precondition (e.g. factoring 0).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

// Decimal rendering was requested for a value with a negative exponent.
class NegativeExponentError : public Error {
public:
    using Error::Error;
};

// An exact (factored) computation was requested with a real-valued parameter.
class NonIntegerParameterError : public Error {
public:
    using Error::Error;
};

// A degree-0 vertex poisons a vertex-power product; reported instead of
// returning a zero value, which has no factored representation.
class IsolatedVertexError : public Error {
public:
    using Error::Error;
};

// Malformed input file (bad header, bad tokens); message carries file:line.
class ParseError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failure (cannot open/read/write).
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace topoidx
