#pragma once

#include <map>
#include <string>
#include <vector>

#include "gci/ci.hpp"
#include "gci/matrix.hpp"

namespace gci {

/// On-disk form of a covariance matrix: rational strings, never floats.
/// {"n": 2, "entries": [["1","1/2"],["1/2","1"]], "metadata": {...}}
struct MatrixDocument {
    int n = 0;
    std::vector<std::vector<std::string>> entries;  // n x n rational strings
    std::map<std::string, std::string> metadata;    // optional free-form
};

/// Grammar: `A _||_ B | C` or `A _||_ B`, with A, B, C comma-separated
/// positive integers. Malformed input reports the failing position.
CIStatement parse_statement(const std::string& text);

/// Verifies squareness and symmetry after rational normalization
/// ("2/4" equals "1/2"); rejects asymmetric grids.
SymMatrix to_sym_matrix(const MatrixDocument& doc);

/// Canonical document for a matrix (entries in lowest terms).
MatrixDocument to_document(const SymMatrix& sigma);

MatrixDocument parse_matrix_json(const std::string& json_text);
std::string to_json(const MatrixDocument& doc);

MatrixDocument load_matrix_file(const std::string& path);

}  // namespace gci
