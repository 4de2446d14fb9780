#include "gci/error.hpp"

namespace gci {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Dimension: return "dimension";
        case ErrorKind::Singular: return "singular";
        case ErrorKind::Bounds: return "bounds";
        case ErrorKind::Scope: return "scope";
        case ErrorKind::Size: return "size";
        case ErrorKind::Basis: return "basis";
        case ErrorKind::Search: return "search";
        case ErrorKind::Internal: return "internal";
        case ErrorKind::Parameter: return "parameter";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Disjoint: return "disjoint";
        case ErrorKind::NotPositiveDefinite: return "not-positive-definite";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace gci
