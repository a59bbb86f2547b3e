#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace potalg {

// Base of every library error; callers can catch this to map to exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedOrder : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct MixedBackends : Error { using Error::Error; };
struct UnknownGenerator : Error { using Error::Error; };
struct UnknownConstant : Error { using Error::Error; };
struct SingularSubstitution : Error { using Error::Error; };
struct NotHomogeneous : Error { using Error::Error; };
struct NotQuadratic : Error { using Error::Error; };
struct TruncationExceeded : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct SchemaError : Error {
    std::string label, field;
    SchemaError(std::string l, std::string f, const std::string& what)
        : Error("entry " + l + ", field '" + f + "': " + what), label(std::move(l)), field(std::move(f)) {}
};

}  // namespace potalg
