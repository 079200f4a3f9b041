#pragma once

#include <stdexcept>
#include <string>

namespace openpack {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A vertex index is outside 0..n-1 (or an argument is outside its legal range).
struct RangeError : Error {
    using Error::Error;
};

// An edge joins a vertex to itself.
struct LoopError : Error {
    using Error::Error;
};

// A set-valued argument that must be nonempty was empty.
struct EmptySetError : Error {
    using Error::Error;
};

// The graph is larger than the configured cap for exhaustive routines.
struct CapExceededError : Error {
    using Error::Error;
};

// A set passed as an open packing is not one.
struct NotAPackingError : Error {
    using Error::Error;
};

// An operation that requires minimum degree >= 1 met an isolated vertex.
struct IsolatedVertexError : Error {
    using Error::Error;
};

// An operation that requires a connected graph got a disconnected one.
struct DisconnectedError : Error {
    using Error::Error;
};

struct NotASupportError : Error {
    using Error::Error;
};

struct NotAStrongSupportError : Error {
    using Error::Error;
};

// A generator specification violates one of its invariants.
struct SpecError : Error {
    using Error::Error;
};

// Malformed input document; carries the 1-based line number.
struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

}  // namespace openpack
