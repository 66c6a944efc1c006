#pragma once

#include <stdexcept>
#include <string>

namespace g4 {

// Malformed text input (curve encodings, coefficient lists, field tags).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathematically invalid request for an otherwise well-formed value.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cross-module invariant failed for a specific object.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation called out of order (e.g. a report requested before its inputs exist).
struct StateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace g4
