#include "json_io.hpp"

#include <fstream>

namespace ck::cli {

json to_json(const PMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (int k = 0; k < m.cols(); ++k) r.push_back(m(i, k).str());
        rows.push_back(std::move(r));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"arity", m.arity()}, {"entries", std::move(rows)}};
}

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long>() < 0) throw UsageError(std::string("field '") + key + "' must be a non-negative integer");
    return v.get<int>();
}

std::string entry_text(const json& e) {
    if (e.is_string()) return e.get<std::string>();
    if (e.is_number_integer()) return std::to_string(e.get<long>());
    throw UsageError("matrix entries must be strings or integers");
}

}  // namespace

PMatrix pmatrix_from_json(const json& j) {
    const json& entries = field(j, "entries");
    if (!entries.is_array()) throw UsageError("'entries' must be an array of rows");
    int rows = j.contains("rows") ? int_field(j, "rows") : static_cast<int>(entries.size());
    int cols = j.contains("cols") ? int_field(j, "cols") : (entries.empty() ? 0 : static_cast<int>(entries[0].size()));
    if (static_cast<int>(entries.size()) != rows) throw UsageError("'entries' has the wrong number of rows");
    std::vector<Pim> parsed;
    int arity = j.contains("arity") ? int_field(j, "arity") : 0;
    int top = 0;
    for (const auto& r : entries) {
        if (!r.is_array() || static_cast<int>(r.size()) != cols) throw UsageError("every row needs " + std::to_string(cols) + " entries");
        for (const auto& e : r) {
            try {
                parsed.push_back(Pim::parse(entry_text(e)));
            } catch (const std::invalid_argument& ex) {
                throw UsageError(ex.what());
            }
            top = std::max(top, parsed.back().arity());
        }
    }
    if (!j.contains("arity")) arity = top;
    if (top > arity) throw UsageError("entry uses an iota index above the declared arity");
    PMatrix m(rows, cols, arity);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            Pim p = parsed[static_cast<std::size_t>(i) * cols + k];
            Pim q(arity);
            for (const auto& [mask, c] : p.terms()) q += Pim::monomial(arity, mask, c);
            m(i, k) = q;
        }
    return m;
}

json to_json(const SMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (int k = 0; k < m.cols(); ++k) r.push_back(m(i, k).str());
        rows.push_back(std::move(r));
    }
    return rows;
}

json to_json(const LinearRelation& p) {
    if (p.is_null()) return nullptr;
    return {{"source_dim", p.source()}, {"target_dim", p.target()}, {"basis", to_json(p.space().basis())}};
}

LinearRelation relation_from_json(const json& j, int null_source, int null_target) {
    if (j.is_null() || (j.is_string() && j.get<std::string>() == "null")) return LinearRelation::null(null_source, null_target);
    int s = int_field(j, "source_dim"), t = int_field(j, "target_dim");
    const json& basis = field(j, "basis");
    if (!basis.is_array()) throw UsageError("'basis' must be an array of vectors");
    std::vector<std::vector<Scalar>> rows;
    for (const auto& r : basis) {
        if (!r.is_array() || static_cast<int>(r.size()) != s + t)
            throw UsageError("every basis vector needs source_dim + target_dim = " + std::to_string(s + t) + " entries");
        std::vector<Scalar> v;
        for (const auto& e : r) {
            try {
                v.push_back(Scalar::parse(entry_text(e)));
            } catch (const std::invalid_argument& ex) {
                throw UsageError(ex.what());
            }
        }
        rows.push_back(std::move(v));
    }
    return LinearRelation::from_subspace(s, t, Subspace::span(s + t, rows));
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

}  // namespace ck::cli
