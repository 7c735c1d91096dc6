#pragma once

#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nfam/family.hpp"
#include "nfam/seq.hpp"

/* Family file format:  {"n": 3, "vectors": [[0,0,0],[1,0,0]]}
 * Rows must all have length n, entries must be non-negative integers,
 * and duplicate rows are rejected rather than merged.
 */
namespace nfam {

using Json = nlohmann::ordered_json;

inline Json family_to_json(const Family& A) {
    Json j;
    j["n"] = A.dimension();
    Json rows = Json::array();
    for (const IntSeq& x : A) rows.push_back(x);
    j["vectors"] = std::move(rows);
    return j;
}

inline Family family_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw std::invalid_argument("missing integer field \"n\"");
    }
    const long long n = j["n"].get<long long>();
    if (n < 1 || n > 1000) throw std::invalid_argument("dimension out of range: " + std::to_string(n));
    if (!j.contains("vectors") || !j["vectors"].is_array()) {
        throw std::invalid_argument("missing array field \"vectors\"");
    }
    std::vector<IntSeq> rows;
    rows.reserve(j["vectors"].size());
    for (const Json& row : j["vectors"]) {
        if (!row.is_array() || static_cast<long long>(row.size()) != n) {
            throw std::invalid_argument("every vector must be an array of length " +
                                        std::to_string(n));
        }
        IntSeq x;
        x.reserve(row.size());
        for (const Json& v : row) {
            if (!v.is_number_integer()) throw std::invalid_argument("entries must be integers");
            const long long e = v.get<long long>();
            if (e < 0) throw std::invalid_argument("entries must be non-negative");
            if (e > 1000000000) throw std::invalid_argument("entry too large: " + std::to_string(e));
            x.push_back(static_cast<int>(e));
        }
        rows.push_back(std::move(x));
    }
    Family A(static_cast<int>(n), std::move(rows));
    if (A.size() != j["vectors"].size()) throw std::invalid_argument("duplicate vectors");
    return A;
}

inline Family load_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("family file " + path + ": cannot open");
    try {
        return family_from_json(Json::parse(in));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("family file " + path + ": " + e.what());
    } catch (const Json::exception& e) {
        throw std::invalid_argument("family file " + path + ": " + e.what());
    }
}

inline void save_family(const Family& A, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << family_to_json(A).dump() << '\n';
}

// One vector per line, comma-separated entries, no header.
inline std::string family_to_csv(const Family& A) {
    std::string out;
    for (const IntSeq& x : A) {
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(x[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace nfam
