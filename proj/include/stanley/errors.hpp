#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stanley {

// Input text could not be parsed; `offset` is the byte position of the
// first offending character.
struct ParseError : std::runtime_error {
    std::size_t offset;

    ParseError(std::string msg, std::size_t off)
        : std::runtime_error(std::move(msg)), offset(off) {}
};

enum class FactorErrorKind {
    NotContained,  // some generator of J lies outside I
    Equal,         // I and J are the same ideal
};

struct FactorError : std::invalid_argument {
    FactorErrorKind kind;

    FactorError(FactorErrorKind k, const std::string& msg)
        : std::invalid_argument(msg), kind(k) {}
};

// A configured resource cap was exceeded. Callers that can degrade
// gracefully report the affected result as unknown instead of guessing.
struct ResourceCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A multidegree outside the supported box was requested.
struct BoxExceededError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace stanley
