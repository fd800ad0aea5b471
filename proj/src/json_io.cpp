#include "hopfforge/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hopfforge/scalar_io.hpp"

namespace hopfforge {

namespace {

template <class F, class ToStr>
nlohmann::ordered_json structure_to_json(const StructureData<F>& H, unsigned conductor,
                                         ToStr&& str) {
    nlohmann::ordered_json j;
    j["dim"] = H.n;
    j["conductor"] = conductor;

    auto tensor_entries = [&](const Tensor3<F>& T) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& e : T.nonzeros())
            arr.push_back({e.i + 1, e.j + 1, e.k + 1, str(*e.value)});
        return arr;
    };
    j["mul"] = tensor_entries(H.C);
    j["comul"] = tensor_entries(H.D);

    nlohmann::ordered_json counit = nlohmann::ordered_json::array();
    for (const F& v : H.xi) counit.push_back(str(v));
    j["counit"] = std::move(counit);

    if (H.S) {
        nlohmann::ordered_json s = nlohmann::ordered_json::array();
        for (std::size_t col = 0; col < H.n; ++col)
            for (std::size_t row = 0; row < H.n; ++row)
                if (!is_zero(H.S->at(row, col)))
                    s.push_back({row + 1, col + 1, str(H.S->at(row, col))});
        j["antipode"] = std::move(s);
    }

    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    if (!H.meta.name.empty()) meta["name"] = H.meta.name;
    if (!H.meta.info.empty()) {
        nlohmann::ordered_json info = nlohmann::ordered_json::object();
        for (const auto& [k, v] : H.meta.info) info[k] = v;
        meta["info"] = std::move(info);
    }
    j["meta"] = std::move(meta);
    return j;
}

[[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("hopf data: " + what);
}

std::size_t get_index(const nlohmann::json& v, std::size_t n, const char* where) {
    if (!v.is_number_unsigned() && !v.is_number_integer()) fail(std::string(where) + ": index is not an integer");
    long long x = v.get<long long>();
    if (x < 1 || std::size_t(x) > n) fail(std::string(where) + ": index out of range");
    return std::size_t(x) - 1;
}

template <class F, class ParseScalar>
StructureData<F> structure_from_json(const nlohmann::json& j, const F& one,
                                     ParseScalar&& parse) {
    if (!j.is_object()) fail("document is not an object");
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
        fail("missing or invalid 'dim'");
    const std::size_t n = j["dim"].get<std::size_t>();

    StructureData<F> H = StructureData<F>::zeroed(n, one);

    auto read_tensor = [&](const char* key, Tensor3<F>& T) {
        if (!j.contains(key)) return;
        if (!j[key].is_array()) fail(std::string(key) + " is not an array");
        for (const auto& entry : j[key]) {
            if (!entry.is_array() || entry.size() != 4)
                fail(std::string(key) + ": each entry must be [i, j, k, scalar]");
            std::size_t a = get_index(entry[0], n, key);
            std::size_t b = get_index(entry[1], n, key);
            std::size_t c = get_index(entry[2], n, key);
            if (!entry[3].is_string()) fail(std::string(key) + ": scalar must be a string");
            if (!is_zero(T.at(a, b, c))) fail(std::string(key) + ": duplicate index triple");
            T.at(a, b, c) = parse(entry[3].template get<std::string>(), key);
        }
    };
    read_tensor("mul", H.C);
    read_tensor("comul", H.D);

    if (!j.contains("counit") || !j["counit"].is_array() || j["counit"].size() != n)
        fail("'counit' must be an array of dim scalar strings");
    for (std::size_t i = 0; i < n; ++i) {
        if (!j["counit"][i].is_string()) fail("counit: scalar must be a string");
        H.xi[i] = parse(j["counit"][i].template get<std::string>(), "counit");
    }

    if (j.contains("antipode")) {
        if (!j["antipode"].is_array()) fail("'antipode' is not an array");
        F zero = one;
        zero -= one;
        Matrix<F> S(n, n, zero);
        for (const auto& entry : j["antipode"]) {
            if (!entry.is_array() || entry.size() != 3)
                fail("antipode: each entry must be [i, j, scalar]");
            std::size_t r = get_index(entry[0], n, "antipode");
            std::size_t c = get_index(entry[1], n, "antipode");
            if (!entry[2].is_string()) fail("antipode: scalar must be a string");
            if (!is_zero(S.at(r, c))) fail("antipode: duplicate index pair");
            S.at(r, c) = parse(entry[2].template get<std::string>(), "antipode");
        }
        H.S = std::move(S);
    }

    if (j.contains("meta") && j["meta"].is_object()) {
        const auto& meta = j["meta"];
        if (meta.contains("name") && meta["name"].is_string())
            H.meta.name = meta["name"].get<std::string>();
        if (meta.contains("info") && meta["info"].is_object())
            for (const auto& [k, v] : meta["info"].items())
                if (v.is_string()) H.meta.info[k] = v.template get<std::string>();
    }
    return H;
}

unsigned get_conductor(const nlohmann::json& j) {
    if (!j.contains("conductor") || !j["conductor"].is_number_integer() ||
        j["conductor"].get<long long>() < 1)
        fail("missing or invalid 'conductor'");
    return j["conductor"].get<unsigned>();
}

} // namespace

nlohmann::ordered_json hopf_to_json(const HopfData& H) {
    return structure_to_json(H, H.one.conductor(),
                             [](const CycScalar& v) { return to_string(v); });
}

nlohmann::ordered_json family_to_json(const FamilyData& F) {
    return structure_to_json(F, F.one.conductor(),
                             [](const RatFunc& v) { return to_string(v); });
}

HopfData hopf_from_json(const nlohmann::json& j) {
    unsigned m = get_conductor(j);
    auto parse = [m](const std::string& s, const char* where) {
        try {
            return parse_scalar(s, m);
        } catch (const ParseError& e) {
            fail(std::string(where) + ": bad scalar '" + s + "': " + e.what());
        }
    };
    return structure_from_json(j, CycScalar::one(m), parse);
}

FamilyData family_from_json(const nlohmann::json& j) {
    unsigned m = get_conductor(j);
    auto parse = [m](const std::string& s, const char* where) {
        try {
            return parse_ratfunc(s, m);
        } catch (const ParseError& e) {
            fail(std::string(where) + ": bad scalar '" + s + "': " + e.what());
        }
    };
    return structure_from_json(j, RatFunc::one(m), parse);
}

nlohmann::ordered_json matrix_to_json(const Matrix<CycScalar>& M, unsigned conductor) {
    nlohmann::ordered_json j;
    j["dim"] = M.rows();
    j["conductor"] = conductor;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < M.cols(); ++k) row.push_back(to_string(M.at(i, k)));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Matrix<CycScalar> matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object()) fail("matrix document is not an object");
    unsigned m = get_conductor(j);
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
        fail("missing or invalid 'dim'");
    std::size_t n = j["dim"].get<std::size_t>();
    if (!j.contains("rows") || !j["rows"].is_array() || j["rows"].size() != n)
        fail("'rows' must be an array of dim rows");
    Matrix<CycScalar> M(n, n, CycScalar::zero(m));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = j["rows"][i];
        if (!row.is_array() || row.size() != n) fail("matrix row has wrong length");
        for (std::size_t k = 0; k < n; ++k) {
            if (!row[k].is_string()) fail("matrix entries must be scalar strings");
            try {
                M.at(i, k) = parse_scalar(row[k].get<std::string>(), m);
            } catch (const ParseError& e) {
                fail("bad matrix entry '" + row[k].get<std::string>() + "': " + e.what());
            }
        }
    }
    return M;
}

// top-level keys one per line; entry lists (arrays of arrays) one entry per
// line; everything else compact
std::string pretty(const nlohmann::ordered_json& j) {
    if (!j.is_object()) return j.dump() + "\n";
    std::string out = "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += "  " + nlohmann::ordered_json(key).dump() + ": ";
        if (value.is_array() && !value.empty() && value.front().is_array()) {
            out += "[\n";
            for (std::size_t i = 0; i < value.size(); ++i) {
                out += "    " + value[i].dump();
                out += (i + 1 < value.size()) ? ",\n" : "\n";
            }
            out += "  ]";
        } else {
            out += value.dump();
        }
    }
    out += "\n}\n";
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

} // namespace hopfforge
