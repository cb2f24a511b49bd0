// Algebra files (JSON) and report documents.
//
// Scalars are JSON strings: "n" or "p/q" over Q, decimals in [0, p) over F_p.
// Matrices are arrays of rows; entry [i][j] is the coefficient of e_i in the
// image of e_j. Product tensors are nested [i][j][k] arrays.

#ifndef HJD_IO_HPP
#define HJD_IO_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hjd/algebra.hpp"
#include "hjd/check.hpp"
#include "hjd/constructions.hpp"
#include "hjd/error.hpp"
#include "hjd/operators.hpp"

namespace hjd {

using json = nlohmann::ordered_json;

inline constexpr std::string_view tool_name = "hjd";
inline constexpr std::string_view tool_version = "1.0.0";

template <Scalar K>
using ModuleData = std::variant<RepresentationData<K>, BimoduleData<K>>;

template <Scalar K>
const std::string& module_name(const ModuleData<K>& m) {
    return std::visit([](const auto& x) -> const std::string& { return x.name; }, m);
}

/// In-memory form of an algebra file.
template <Scalar K>
struct AlgebraModel {
    HomAlgebra<K> algebra;
    std::map<std::string, Matrix<K>> maps;
    std::vector<ModuleData<K>> modules;

    const Matrix<K>& map(const std::string& name) const {
        auto it = maps.find(name);
        if (it == maps.end()) throw InputError("map \"" + name + "\" not found in file");
        return it->second;
    }

    /// Module by name; an empty name selects the only module (or the first).
    const ModuleData<K>& module(const std::string& name) const {
        if (modules.empty()) throw InputError("file declares no modules");
        if (name.empty()) return modules.front();
        for (const auto& m : modules)
            if (module_name(m) == name) return m;
        throw InputError("module \"" + name + "\" not found in file");
    }
    const RepresentationData<K>& representation(const std::string& name) const {
        const auto& m = module(name);
        if (auto* r = std::get_if<RepresentationData<K>>(&m)) return *r;
        throw InputError("module \"" + module_name(m) + "\" is a bimodule, a representation (rho) is needed");
    }
    const BimoduleData<K>& bimodule(const std::string& name) const {
        const auto& m = module(name);
        if (auto* b = std::get_if<BimoduleData<K>>(&m)) return *b;
        throw InputError("module \"" + module_name(m) + "\" is a representation, a bimodule (l, r) is needed");
    }

    friend bool operator==(const AlgebraModel&, const AlgebraModel&) = default;
};

using AnyModel = std::variant<AlgebraModel<Rational>, AlgebraModel<Fp>>;

// --- parsing ---------------------------------------------------------------

namespace detail {

inline std::string line_col(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') { ++line; col = 1; }
        else ++col;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline const json& member(const json& j, const char* key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) throw InputError(path + ": missing \"" + key + "\"");
    return *it;
}

inline std::size_t size_value(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
        throw InputError(path + ": expected a non-negative integer");
    return j.get<std::size_t>();
}

inline void only_keys(const json& j, std::initializer_list<std::string_view> keys, const std::string& path) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (auto k : keys) known = known || it.key() == k;
        if (!known) throw InputError(path + ": unknown key \"" + it.key() + "\"");
    }
}

template <Scalar K>
K scalar(const field_t<K>& f, const json& j, const std::string& path) {
    if (!j.is_string()) throw InputError(path + ": scalars must be strings");
    try {
        return f.parse(j.get<std::string>());
    } catch (const ScalarParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

inline const json& array_of(const json& j, std::size_t n, const std::string& path) {
    if (!j.is_array()) throw InputError(path + ": expected an array");
    if (j.size() != n)
        throw InputError(path + ": expected length " + std::to_string(n) + ", got " + std::to_string(j.size()));
    return j;
}

template <Scalar K>
Matrix<K> matrix(const field_t<K>& f, const json& j, std::size_t rows, std::optional<std::size_t> cols,
                 const std::string& path) {
    array_of(j, rows, path);
    std::size_t c = cols.value_or(rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0));
    Matrix<K> m(f, rows, c);
    for (std::size_t i = 0; i < rows; ++i) {
        const std::string rp = path + "[" + std::to_string(i) + "]";
        array_of(j[i], c, rp);
        for (std::size_t k = 0; k < c; ++k) m(i, k) = scalar<K>(f, j[i][k], rp + "[" + std::to_string(k) + "]");
    }
    return m;
}

template <Scalar K>
Tensor<K> tensor(const field_t<K>& f, const json& j, std::size_t n, const std::string& path) {
    array_of(j, n, path);
    Tensor<K> t(f, n);
    for (std::size_t a = 0; a < n; ++a) {
        const std::string pa = path + "[" + std::to_string(a) + "]";
        array_of(j[a], n, pa);
        for (std::size_t b = 0; b < n; ++b) {
            const std::string pb = pa + "[" + std::to_string(b) + "]";
            array_of(j[a][b], n, pb);
            for (std::size_t c = 0; c < n; ++c) t(a, b, c) = scalar<K>(f, j[a][b][c], pb + "[" + std::to_string(c) + "]");
        }
    }
    return t;
}

template <Scalar K>
std::vector<Matrix<K>> matrix_list(const field_t<K>& f, const json& j, std::size_t count, std::size_t m,
                                   const std::string& path) {
    array_of(j, count, path);
    std::vector<Matrix<K>> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(matrix<K>(f, j[i], m, m, path + "[" + std::to_string(i) + "]"));
    return out;
}

template <Scalar K>
AlgebraModel<K> model_from_json(const json& j, const field_t<K>& f) {
    only_keys(j, {"field", "dim", "basis", "products", "twist", "maps", "modules"}, "$");
    AlgebraModel<K> m;
    const std::size_t n = size_value(member(j, "dim", "$"), "dim");
    m.algebra = HomAlgebra<K>(f, n);
    if (auto it = j.find("basis"); it != j.end()) {
        array_of(*it, n, "basis");
        for (std::size_t i = 0; i < n; ++i) {
            if (!(*it)[i].is_string()) throw InputError("basis[" + std::to_string(i) + "]: expected a string");
            m.algebra.basis.push_back((*it)[i].get<std::string>());
        }
    }
    const json& prods = member(j, "products", "$");
    if (!prods.is_object()) throw InputError("products: expected an object");
    for (auto it = prods.begin(); it != prods.end(); ++it) {
        if (!is_declarable_label(it.key()))
            throw InputError("products: unknown product label \"" + it.key() + "\" (known: circ, dot, prec, succ)");
        m.algebra.products.emplace(it.key(), tensor<K>(f, it.value(), n, "products." + it.key()));
    }
    if (prods.size() == 2 && !m.algebra.is_two_product())
        throw InputError("products: two-product algebras declare exactly prec and succ");
    if (prods.size() > 2) throw InputError("products: at most two products");
    m.algebra.twist = matrix<K>(f, member(j, "twist", "$"), n, n, "twist");
    if (auto it = j.find("maps"); it != j.end()) {
        if (!it->is_object()) throw InputError("maps: expected an object");
        for (auto mit = it->begin(); mit != it->end(); ++mit)
            m.maps.emplace(mit.key(), matrix<K>(f, mit.value(), n, std::nullopt, "maps." + mit.key()));
    }
    if (auto it = j.find("modules"); it != j.end()) {
        if (!it->is_array()) throw InputError("modules: expected an array");
        for (std::size_t k = 0; k < it->size(); ++k) {
            const json& mj = (*it)[k];
            const std::string path = "modules[" + std::to_string(k) + "]";
            if (!mj.is_object()) throw InputError(path + ": expected an object");
            only_keys(mj, {"name", "moduleDim", "phi", "rho", "l", "r"}, path);
            std::string name;
            if (auto nit = mj.find("name"); nit != mj.end()) {
                if (!nit->is_string()) throw InputError(path + ".name: expected a string");
                name = nit->get<std::string>();
            }
            const std::size_t md = size_value(member(mj, "moduleDim", path), path + ".moduleDim");
            auto phi = matrix<K>(f, member(mj, "phi", path), md, md, path + ".phi");
            const bool has_rho = mj.contains("rho"), has_l = mj.contains("l"), has_r = mj.contains("r");
            if (has_rho && !has_l && !has_r) {
                m.modules.emplace_back(RepresentationData<K>{
                    name, md, matrix_list<K>(f, mj["rho"], n, md, path + ".rho"), std::move(phi)});
            } else if (!has_rho && has_l && has_r) {
                m.modules.emplace_back(BimoduleData<K>{name, md, matrix_list<K>(f, mj["l"], n, md, path + ".l"),
                                                       matrix_list<K>(f, mj["r"], n, md, path + ".r"), std::move(phi)});
            } else {
                throw InputError(path + ": a module has either rho, or both l and r");
            }
        }
    }
    return m;
}

}  // namespace detail

inline json parse_json_text(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw InputError("syntax error at " + detail::line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
    }
}

/// Parses and validates an algebra file; the field declared in it selects the scalar type.
inline AnyModel parse_algebra_file(std::string_view text) {
    const json j = parse_json_text(text);
    if (!j.is_object()) throw InputError("$: expected an object");
    const json& f = detail::member(j, "field", "$");
    if (f.is_string() && f.get<std::string>() == "Q") return detail::model_from_json<Rational>(j, RationalField{});
    if (f.is_object() && f.size() == 1 && f.contains("Fp") && f["Fp"].is_number_integer()) {
        PrimeField pf(f["Fp"].get<std::int64_t>());
        return detail::model_from_json<Fp>(j, pf);
    }
    throw InputError("field: expected \"Q\" or {\"Fp\": p}");
}

/// Typed variant of parse_algebra_file; throws if the file's field differs.
template <Scalar K>
AlgebraModel<K> parse_algebra_as(std::string_view text) {
    auto any = parse_algebra_file(text);
    if (auto* m = std::get_if<AlgebraModel<K>>(&any)) return std::move(*m);
    throw FieldMismatch("file declares a different field");
}

// --- canonical serialization ----------------------------------------------

namespace detail {

inline std::string quoted(const std::string& s) { return json(s).dump(); }

template <Scalar K>
std::string row_text(const Matrix<K>& m, std::size_t i) {
    std::string s = "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + quoted(m(i, j).to_string());
    return s + "]";
}

template <Scalar K>
void write_matrix(std::ostream& os, const Matrix<K>& m, const std::string& ind) {
    if (m.rows() == 0) { os << "[]"; return; }
    os << "[\n";
    for (std::size_t i = 0; i < m.rows(); ++i) os << ind << "  " << row_text(m, i) << (i + 1 < m.rows() ? ",\n" : "\n");
    os << ind << "]";
}

template <Scalar K>
void write_matrix_list(std::ostream& os, const std::vector<Matrix<K>>& ms, const std::string& ind) {
    if (ms.empty()) { os << "[]"; return; }
    os << "[\n";
    for (std::size_t i = 0; i < ms.size(); ++i) {
        os << ind << "  ";
        write_matrix(os, ms[i], ind + "  ");
        os << (i + 1 < ms.size() ? ",\n" : "\n");
    }
    os << ind << "]";
}

template <Scalar K>
void write_tensor(std::ostream& os, const Tensor<K>& t, const std::string& ind) {
    const std::size_t n = t.dim();
    if (n == 0) { os << "[]"; return; }
    os << "[\n";
    for (std::size_t i = 0; i < n; ++i) {
        os << ind << "  [";
        for (std::size_t j = 0; j < n; ++j) {
            os << (j ? ", " : "") << "[";
            for (std::size_t k = 0; k < n; ++k) os << (k ? ", " : "") << quoted(t(i, j, k).to_string());
            os << "]";
        }
        os << "]" << (i + 1 < n ? ",\n" : "\n");
    }
    os << ind << "]";
}

inline std::string field_text(const RationalField&) { return "\"Q\""; }
inline std::string field_text(const PrimeField& f) { return "{\"Fp\": " + std::to_string(f.p) + "}"; }

}  // namespace detail

/// Canonical text: fixed key order, reduced scalars, fixed layout.
template <Scalar K>
std::string serialize_algebra(const AlgebraModel<K>& m) {
    std::ostringstream os;
    const auto& a = m.algebra;
    os << "{\n";
    os << "  \"field\": " << detail::field_text(a.field) << ",\n";
    os << "  \"dim\": " << a.dim << ",\n";
    if (!a.basis.empty()) {
        os << "  \"basis\": [";
        for (std::size_t i = 0; i < a.basis.size(); ++i) os << (i ? ", " : "") << detail::quoted(a.basis[i]);
        os << "],\n";
    }
    os << "  \"products\": {";
    if (a.products.empty()) os << "},\n";
    else {
        os << "\n";
        std::size_t k = 0;
        for (const auto& [l, t] : a.products) {
            os << "    " << detail::quoted(l) << ": ";
            detail::write_tensor(os, t, "    ");
            os << (++k < a.products.size() ? ",\n" : "\n");
        }
        os << "  },\n";
    }
    os << "  \"twist\": ";
    detail::write_matrix(os, a.twist, "  ");
    if (!m.maps.empty()) {
        os << ",\n  \"maps\": {\n";
        std::size_t k = 0;
        for (const auto& [name, mat] : m.maps) {
            os << "    " << detail::quoted(name) << ": ";
            detail::write_matrix(os, mat, "    ");
            os << (++k < m.maps.size() ? ",\n" : "\n");
        }
        os << "  }";
    }
    if (!m.modules.empty()) {
        os << ",\n  \"modules\": [\n";
        for (std::size_t k = 0; k < m.modules.size(); ++k) {
            os << "    {\n";
            std::visit(
                [&](const auto& md) {
                    if (!md.name.empty()) os << "      \"name\": " << detail::quoted(md.name) << ",\n";
                    os << "      \"moduleDim\": " << md.module_dim << ",\n";
                    os << "      \"phi\": ";
                    detail::write_matrix(os, md.phi, "      ");
                    if constexpr (std::is_same_v<std::decay_t<decltype(md)>, RepresentationData<K>>) {
                        os << ",\n      \"rho\": ";
                        detail::write_matrix_list(os, md.rho, "      ");
                    } else {
                        os << ",\n      \"l\": ";
                        detail::write_matrix_list(os, md.l, "      ");
                        os << ",\n      \"r\": ";
                        detail::write_matrix_list(os, md.r, "      ");
                    }
                    os << "\n";
                },
                m.modules[k]);
            os << "    }" << (k + 1 < m.modules.size() ? ",\n" : "\n");
        }
        os << "  ]";
    }
    os << "\n}\n";
    return os.str();
}

/// Wraps a construction result as a file model.
template <Scalar K>
AlgebraModel<K> model_of(const ConstructionResult<K>& r) {
    AlgebraModel<K> m;
    m.algebra = r.algebra;
    for (const auto& rep : r.representations) m.modules.emplace_back(rep);
    for (const auto& bim : r.bimodules) m.modules.emplace_back(bim);
    return m;
}

// --- reports ---------------------------------------------------------------

/// 64-bit FNV-1a, used as the input digest in reports.
inline std::string fnv1a_digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string s = "fnv1a64:";
    for (int k = 15; k >= 0; --k) s += hex[(h >> (4 * k)) & 0xf];
    return s;
}

template <Scalar K>
json vector_json(const Vector<K>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

template <Scalar K>
json matrix_json(const Matrix<K>& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        a.push_back(std::move(row));
    }
    return a;
}

/// Names of witness slots: algebra basis names, v1, v2, ... for module vectors.
template <Scalar K>
std::vector<std::string> witness_names(const HomAlgebra<K>& a, const Verdict<K>& v) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < v.witness.size(); ++k) {
        const bool module = k < v.witness_sorts.size() && v.witness_sorts[k] == Sort::module;
        out.push_back(module ? "v" + std::to_string(v.witness[k] + 1) : a.basis_name(v.witness[k]));
    }
    return out;
}

template <Scalar K>
json verdict_json(const HomAlgebra<K>& a, const Verdict<K>& v) {
    json j;
    j["name"] = v.name;
    j["verdict"] = v.pass ? "PASS" : "FAIL";
    if (!v.pass) {
        j["witness"] = witness_names(a, v);
        if (v.lhs) j["lhs"] = vector_json(*v.lhs);
        if (v.rhs) j["rhs"] = vector_json(*v.rhs);
    }
    return j;
}

template <Scalar K>
json check_report_json(const HomAlgebra<K>& a, const CheckReport<K>& r) {
    json j;
    j["suite"] = r.suite;
    j["verdict"] = r.pass() ? "PASS" : "FAIL";
    j["identities"] = json::array();
    for (const auto& v : r.identities) j["identities"].push_back(verdict_json(a, v));
    j["structural"] = json::array();
    for (const auto& v : r.structural) j["structural"].push_back(verdict_json(a, v));
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

template <Scalar K>
json operator_report_json(const HomAlgebra<K>& a, const OperatorReport<K>& r, std::string_view kind) {
    json j;
    j["operator"] = kind;
    j["policy"] = policy_name(r.policy);
    j["verdict"] = r.overall() ? "PASS" : "FAIL";
    j["quadraticIdentity"] = verdict_json(a, r.quadratic);
    j["twistCommutation"] = verdict_json(a, r.twist);
    return j;
}

/// Stable machine-readable run summary.
struct ReportDocument {
    std::string command;
    std::string input_digest;
    json reports = json::array();
    json constructions = json::array();
    json results = json::array();
    int exit_status = 0;

    json to_json() const {
        json j;
        j["tool"] = tool_name;
        j["version"] = tool_version;
        j["command"] = command;
        j["inputDigest"] = input_digest;
        j["reports"] = reports;
        j["constructions"] = constructions;
        if (!results.empty()) j["results"] = results;
        j["exitStatus"] = exit_status;
        return j;
    }
    std::string dump() const { return to_json().dump(2) + "\n"; }
};

/// Text rendering of a verdict line.
template <Scalar K>
std::string verdict_text(const HomAlgebra<K>& a, const Verdict<K>& v) {
    std::string s = (v.pass ? "PASS  " : "FAIL  ") + v.name;
    if (!v.pass) {
        const auto names = witness_names(a, v);
        s += "  witness (";
        for (std::size_t k = 0; k < names.size(); ++k) s += (k ? ", " : "") + names[k];
        s += ")";
        auto vec = [](const Vector<K>& x) {
            std::string t = "[";
            for (std::size_t i = 0; i < x.size(); ++i) t += (i ? ", " : "") + x[i].to_string();
            return t + "]";
        };
        if (v.lhs) s += "  lhs " + vec(*v.lhs);
        if (v.rhs) s += "  rhs " + vec(*v.rhs);
    }
    return s;
}

}  // namespace hjd

#endif  // HJD_IO_HPP
