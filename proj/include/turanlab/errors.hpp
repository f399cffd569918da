#pragma once

#include <stdexcept>
#include <string>

namespace turanlab {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (HGR or JSON framing).
struct ParseError : Error {
    using Error::Error;
};

/// Structurally well-formed input violating a semantic constraint
/// (vertex id out of range, wrong arity, duplicate vertex in an edge).
struct ValidationError : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

/// Vector/graph sizes do not agree.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// A bounded search ran out of its node budget before exhausting.
struct BudgetExceeded : Error {
    using Error::Error;
};

/// Exhaustive search proved that no design with the requested
/// parameters exists (or a divisibility precondition rules it out).
struct NoSuchDesign : Error {
    using Error::Error;
};

struct InvalidAssignment : Error {
    using Error::Error;
};

/// Base graph does not cover pairs, so blowup partitions are not unique.
struct UnsupportedBase : Error {
    using Error::Error;
};

/// Weight vectors cannot be reconciled across a blowup pair.
struct InconsistentWeights : Error {
    using Error::Error;
};

/// The requested symmetrization pair is covered by an edge.
struct InvalidPair : Error {
    using Error::Error;
};

/// Tuple enumeration would exceed the configured memory cap.
struct MemoryBudget : Error {
    using Error::Error;
};

} // namespace turanlab
