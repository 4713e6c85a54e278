#include "moduli/error.hpp"

namespace moduli {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::NotElliptic: return "NotElliptic";
        case ErrorKind::IsIdentity: return "IsIdentity";
        case ErrorKind::ParabolicGenerator: return "ParabolicGenerator";
        case ErrorKind::DegenerateLambda: return "DegenerateLambda";
        case ErrorKind::InvalidOrder: return "InvalidOrder";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

}  // namespace moduli
