#pragma once

#include <stdexcept>
#include <string>

namespace gci {

/// Category of a domain failure. The CLI prints these verbatim, so the
/// names form part of the machine-parsable error surface.
enum class ErrorKind {
    Dimension,    // shape mismatch (non-square det, hadamard size, ...)
    Singular,     // singular conditioning submatrix
    Bounds,       // index outside 1..n
    Scope,        // operation only defined for singleton binomial statements
    Size,         // n below the supported minimum (cyclic family needs n >= 4)
    Basis,        // rows do not form a lattice basis
    Search,       // combinatorial search exceeds the configured cap
    Internal,     // invariant that must never fail did
    Parameter,    // argument outside its admissible range
    Parse,        // malformed textual input
    Disjoint,     // index sets overlap or repeat
    NotPositiveDefinite,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace gci
