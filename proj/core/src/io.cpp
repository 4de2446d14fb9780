#include "gci/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gci/error.hpp"

namespace gci {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw Error(ErrorKind::Parse, "statement parse error at position " +
                                          std::to_string(pos) + ": expected " + expected);
    }

    int read_positive_int() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start) fail("a positive integer");
        long value = 0;
        for (std::size_t k = start; k < pos; ++k) {
            value = value * 10 + (text[k] - '0');
            if (value > 1000000) fail("an index below 10^6");
        }
        if (value < 1) fail("a positive integer");
        return static_cast<int>(value);
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::vector<int> read_index_list() {
        std::vector<int> out;
        out.push_back(read_positive_int());
        while (try_consume(',')) out.push_back(read_positive_int());
        return out;
    }

    void consume_literal(const std::string& lit) {
        skip_ws();
        if (text.compare(pos, lit.size(), lit) != 0) fail("\"" + lit + "\"");
        pos += lit.size();
    }

    void expect_end() {
        skip_ws();
        if (pos != text.size()) fail("end of statement");
    }
};

}  // namespace

CIStatement parse_statement(const std::string& text) {
    Cursor cur{text};
    std::vector<int> a = cur.read_index_list();
    cur.consume_literal("_||_");
    std::vector<int> b = cur.read_index_list();
    std::vector<int> c;
    if (cur.try_consume('|')) c = cur.read_index_list();
    cur.expect_end();
    return CIStatement(std::move(a), std::move(b), std::move(c));
}

SymMatrix to_sym_matrix(const MatrixDocument& doc) {
    if (doc.n < 1) throw Error(ErrorKind::Parse, "matrix document needs n >= 1");
    if (doc.entries.size() != static_cast<std::size_t>(doc.n))
        throw Error(ErrorKind::Parse, "matrix document has the wrong number of rows");
    for (const auto& row : doc.entries)
        if (row.size() != static_cast<std::size_t>(doc.n))
            throw Error(ErrorKind::Parse, "matrix document row has the wrong length");

    SymMatrix sigma(doc.n);
    for (int i = 1; i <= doc.n; ++i)
        for (int j = 1; j <= doc.n; ++j) {
            const Rational value = parse_rational(doc.entries[i - 1][j - 1]);
            if (j < i) {
                if (value != sigma.at(j, i))
                    throw Error(ErrorKind::Parse,
                                "matrix document is not symmetric at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
            } else {
                sigma.set(i, j, value);
            }
        }
    return sigma;
}

MatrixDocument to_document(const SymMatrix& sigma) {
    MatrixDocument doc;
    doc.n = sigma.dim();
    doc.entries.assign(doc.n, std::vector<std::string>(doc.n));
    for (int i = 1; i <= doc.n; ++i)
        for (int j = 1; j <= doc.n; ++j) doc.entries[i - 1][j - 1] = to_string(sigma.at(i, j));
    return doc;
}

MatrixDocument parse_matrix_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw Error(ErrorKind::Parse, "matrix document needs \"n\" and \"entries\"");
    if (!j["n"].is_number_integer())
        throw Error(ErrorKind::Parse, "\"n\" must be an integer");

    MatrixDocument doc;
    doc.n = j["n"].get<int>();
    if (!j["entries"].is_array())
        throw Error(ErrorKind::Parse, "\"entries\" must be an array of rows");
    for (const auto& row : j["entries"]) {
        std::vector<std::string> r;
        if (!row.is_array()) throw Error(ErrorKind::Parse, "matrix row must be an array");
        for (const auto& cell : row) {
            if (!cell.is_string())
                throw Error(ErrorKind::Parse, "matrix entries must be rational strings");
            r.push_back(cell.get<std::string>());
        }
        doc.entries.push_back(std::move(r));
    }
    if (doc.n < 1) throw Error(ErrorKind::Parse, "matrix document needs n >= 1");
    if (doc.entries.size() != static_cast<std::size_t>(doc.n))
        throw Error(ErrorKind::Parse, "matrix document has the wrong number of rows");
    for (const auto& row : doc.entries)
        if (row.size() != static_cast<std::size_t>(doc.n))
            throw Error(ErrorKind::Parse, "matrix document row has the wrong length");
    if (j.contains("metadata")) {
        if (!j["metadata"].is_object())
            throw Error(ErrorKind::Parse, "\"metadata\" must be an object");
        for (const auto& [key, value] : j["metadata"].items()) {
            if (!value.is_string())
                throw Error(ErrorKind::Parse, "metadata values must be strings");
            doc.metadata.emplace(key, value.get<std::string>());
        }
    }
    return doc;
}

std::string to_json(const MatrixDocument& doc) {
    nlohmann::json j;
    j["n"] = doc.n;
    j["entries"] = doc.entries;
    if (!doc.metadata.empty()) j["metadata"] = doc.metadata;
    return j.dump(2);
}

MatrixDocument load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_json(buf.str());
}

}  // namespace gci
