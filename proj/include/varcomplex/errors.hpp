#pragma once

#include <stdexcept>
#include <string>

namespace varcomplex {

/// Mismatched ambient dimensions, bad bidegrees, malformed scenario data.
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operations the calculus deliberately leaves undefined (star of a star,
/// horizontal contraction through an abstract star atom, ...).
struct UnsupportedError : std::runtime_error {
    explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Expression growth exceeded the configured term bound.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace varcomplex
