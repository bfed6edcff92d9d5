#pragma once

#include <stdexcept>
#include <string>

namespace pgcache {

// Bad parameters (preconditions, malformed input).
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An enumeration or build would exceed the configured cap.
struct ResourceError : std::runtime_error {
    std::string count;  // the offending count, verbatim
    ResourceError(const std::string& what, std::string count_)
        : std::runtime_error(what), count(std::move(count_)) {}
};

// A graph / cover / PDA failed a structural check.  `kind` identifies the
// violated condition, the message carries a minimal witness.
struct StructuralError : std::runtime_error {
    enum class Kind {
        Irregular,        // left/right degrees differ
        NotAnEdge,        // cover references a pair outside E(B)
        NotAMatching,     // shared endpoint inside a class
        NotInduced,       // cross edge present between two class edges
        SizeMismatch,     // |C_i| differ across classes
        Coverage,         // uncovered or doubly covered edge
        PdaC1,            // star count differs per column
        PdaC2,            // some integer in [S] missing
        PdaC3,            // equal integers share a row/column or crossing cell not star
    };
    Kind kind;
    StructuralError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

// Bit-exact decoding failed; never downgraded to a warning.
struct DecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace pgcache
