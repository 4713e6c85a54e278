#pragma once

#include <stdexcept>
#include <string>

namespace moduli {

enum class ErrorKind {
    SingularMatrix,
    NonFinite,
    NotElliptic,
    IsIdentity,
    ParabolicGenerator,
    DegenerateLambda,
    InvalidOrder,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Domain error raised by library operations. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace moduli
