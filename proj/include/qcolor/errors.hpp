#pragma once

#include <stdexcept>
#include <string>

namespace qcolor {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mixing elements of distinct fields or groups ("field mismatch", "group mismatch").
class MismatchError : public Error {
public:
    using Error::Error;
};

/// gcd(m, n) > 1: the closed braid is a link, not a knot.
class LinkParametersError : public Error {
public:
    LinkParametersError() : Error("link parameters") {}
    using Error::Error;
};

/// A tuple handed to a transform or expansion does not color the stated knot.
class NotAColoringError : public Error {
public:
    using Error::Error;
};

/// Structural size mismatch (tuple length vs. requested contraction, etc.).
class ShapeMismatchError : public Error {
public:
    ShapeMismatchError() : Error("shape mismatch") {}
    using Error::Error;
};

/// A search exceeded its budget; distinguished from a negative verdict.
class SearchInfeasibleError : public Error {
public:
    SearchInfeasibleError() : Error("search infeasible") {}
    using Error::Error;
};

/// Value outside an operation's mathematical domain ("not invertible",
/// "p must be prime", "not irreducible", "use recurrence path", ...).
class MathDomainError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (group descriptors, element grammar, tuple files).
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace qcolor
