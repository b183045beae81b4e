#include "fcalg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "fcalg/constructors.hpp"
#include "fcalg/groups.hpp"

namespace fcalg {

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
    fail(ErrorCode::schema_error, "at " + path + ": " + msg);
}

const json& need(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) schema_fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema_fail(path, std::string("missing required key \"") + key + "\"");
    return *it;
}

std::string need_string(const json& j, const std::string& path) {
    if (!j.is_string()) schema_fail(path, "expected a string");
    return j.get<std::string>();
}

std::int64_t need_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) schema_fail(path, "expected an integer");
    return j.get<std::int64_t>();
}

const json& need_array(const json& j, const std::string& path) {
    if (!j.is_array()) schema_fail(path, "expected an array");
    return j;
}

std::string idx(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

}  // namespace

ordered_json scalar_to_json(const FieldPtr& field, const ScalarValue& v) {
    switch (field->kind()) {
        case FieldKind::rationals:
            return std::get<mpq_class>(v).get_str();
        case FieldKind::prime_field:
            return ordered_json::array({std::get<std::int64_t>(v)});
        case FieldKind::extension_field: {
            ordered_json a = ordered_json::array();
            for (std::int64_t c : std::get<GFCoeffs>(v)) a.push_back(c);
            return a;
        }
    }
    fail(ErrorCode::internal_error, "unhandled field kind");
}

ScalarValue scalar_from_json(const FieldPtr& field, const json& j, const std::string& path) {
    if (j.is_number_integer()) return field->from_integer(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return field->parse(j.get<std::string>());
        } catch (const Error& e) {
            schema_fail(path, e.what());
        }
    }
    if (j.is_array()) {
        if (field->kind() == FieldKind::rationals)
            schema_fail(path, "coefficient arrays are for finite-field scalars; "
                              "rational scalars are strings or integers");
        int k = field->degree();
        if (static_cast<int>(j.size()) != k)
            schema_fail(path, "expected " + std::to_string(k) + " coefficients, got " +
                                  std::to_string(j.size()));
        std::int64_t p = field->characteristic();
        std::vector<std::int64_t> coeffs;
        coeffs.reserve(j.size());
        for (std::size_t i = 0; i < j.size(); ++i) {
            std::int64_t c = need_int(j[i], idx(path, i));
            if (c < 0 || c >= p)
                schema_fail(idx(path, i), "coefficient out of range [0, " + std::to_string(p) + ")");
            coeffs.push_back(c);
        }
        if (field->kind() == FieldKind::prime_field) return coeffs[0];
        return GFCoeffs(coeffs);
    }
    schema_fail(path, "expected a scalar (integer, string, or coefficient array)");
}

ordered_json field_to_json(const FieldPtr& field) {
    ordered_json out;
    switch (field->kind()) {
        case FieldKind::rationals:
            out["kind"] = "rationals";
            break;
        case FieldKind::prime_field:
            out["kind"] = "prime_field";
            out["p"] = field->characteristic();
            break;
        case FieldKind::extension_field:
            out["kind"] = "extension_field";
            out["p"] = field->characteristic();
            out["degree"] = field->degree();
            out["modulus"] = field->modulus();
            break;
    }
    return out;
}

FieldPtr field_from_json(const json& j, const std::string& path) {
    std::string kind = need_string(need(j, "kind", path), path + "/kind");
    try {
        if (kind == "rationals") return FieldSpec::rationals();
        if (kind == "prime_field") return FieldSpec::prime(need_int(need(j, "p", path), path + "/p"));
        if (kind == "extension_field") {
            std::int64_t p = need_int(need(j, "p", path), path + "/p");
            const json& mj = need_array(need(j, "modulus", path), path + "/modulus");
            std::vector<std::int64_t> modulus;
            for (std::size_t i = 0; i < mj.size(); ++i)
                modulus.push_back(need_int(mj[i], idx(path + "/modulus", i)));
            if (j.contains("degree") &&
                need_int(j["degree"], path + "/degree") != static_cast<std::int64_t>(mj.size()) - 1)
                schema_fail(path + "/degree", "degree does not match the modulus length");
            return FieldSpec::extension(p, modulus);
        }
    } catch (const Error& e) {
        if (e.code() == ErrorCode::invalid_field) schema_fail(path, e.what());
        throw;
    }
    schema_fail(path + "/kind",
                "unknown field kind \"" + kind +
                    "\" (expected rationals, prime_field, or extension_field)");
}

ordered_json coords_to_json(const FieldPtr& field, const std::vector<ScalarValue>& coords) {
    ordered_json a = ordered_json::array();
    for (const ScalarValue& v : coords) a.push_back(scalar_to_json(field, v));
    return a;
}

std::vector<ScalarValue> coords_from_json(const FieldPtr& field, const json& j, int expected_len,
                                          const std::string& path) {
    const json& a = need_array(j, path);
    if (static_cast<int>(a.size()) != expected_len)
        schema_fail(path, "expected " + std::to_string(expected_len) + " coordinates, got " +
                              std::to_string(a.size()));
    std::vector<ScalarValue> coords;
    coords.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        coords.push_back(scalar_from_json(field, a[i], idx(path, i)));
    return coords;
}

ordered_json poly_to_json(const Poly& f) {
    ordered_json a = ordered_json::array();
    for (int i = 0; i <= f.degree(); ++i) a.push_back(scalar_to_json(f.field(), f.coeff(i)));
    return a;
}

ordered_json subspace_to_json(const Subspace& s) {
    ordered_json out;
    out["dim"] = s.dim();
    ordered_json rows = ordered_json::array();
    const FieldPtr& F = s.algebra()->field();
    for (int i = 0; i < s.dim(); ++i) {
        std::vector<ScalarValue> row;
        for (int jcol = 0; jcol < s.algebra()->dim(); ++jcol) row.push_back(s.basis().at(i, jcol));
        rows.push_back(coords_to_json(F, row));
    }
    out["basis"] = rows;
    return out;
}

ordered_json element_to_json(const AlgElement& e) {
    ordered_json out;
    out["coords"] = coords_to_json(e.algebra()->field(), e.coords());
    out["display"] = e.str();
    return out;
}

namespace {

GroupPtr group_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) schema_fail(path, "expected an object");
    if (j.contains("bundled")) {
        std::string name = need_string(j["bundled"], path + "/bundled");
        try {
            return bundled_group(name);
        } catch (const Error&) {
            std::string known;
            for (const std::string& n : bundled_group_names()) known += (known.empty() ? "" : ", ") + n;
            schema_fail(path + "/bundled", "unknown bundled group \"" + name + "\" (known: " + known + ")");
        }
    }
    std::string name = j.contains("name") ? need_string(j["name"], path + "/name") : std::string("G");
    const json& names_j = need_array(need(j, "element_names", path), path + "/element_names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < names_j.size(); ++i)
        names.push_back(need_string(names_j[i], idx(path + "/element_names", i)));
    const json& cayley_j = need_array(need(j, "cayley", path), path + "/cayley");
    std::vector<std::vector<int>> cayley;
    for (std::size_t i = 0; i < cayley_j.size(); ++i) {
        const json& row = need_array(cayley_j[i], idx(path + "/cayley", i));
        std::vector<int> r;
        for (std::size_t k = 0; k < row.size(); ++k)
            r.push_back(static_cast<int>(need_int(row[k], idx(idx(path + "/cayley", i), k))));
        cayley.push_back(std::move(r));
    }
    try {
        return FiniteGroupTable::create(std::move(name), std::move(names), std::move(cayley));
    } catch (const Error& e) {
        fail(ErrorCode::invalid_group_table, "at " + path + ": " + e.what());
    }
}

AlgebraPtr algebra_from_json(const FieldPtr& field, const json& j, const std::string& path) {
    std::string kind = need_string(need(j, "kind", path), path + "/kind");
    if (kind == "structure_constants") {
        const json& sj = need_array(need(j, "structure", path), path + "/structure");
        int n = static_cast<int>(sj.size());
        if (n < 1) schema_fail(path + "/structure", "needs at least one basis element");
        std::vector<std::string> names;
        if (j.contains("basis_names")) {
            const json& bn = need_array(j["basis_names"], path + "/basis_names");
            if (static_cast<int>(bn.size()) != n)
                schema_fail(path + "/basis_names", "expected " + std::to_string(n) + " names");
            for (std::size_t i = 0; i < bn.size(); ++i)
                names.push_back(need_string(bn[i], idx(path + "/basis_names", i)));
        } else {
            for (int i = 0; i < n; ++i) names.push_back("b" + std::to_string(i));
        }
        std::vector<std::vector<std::vector<ScalarValue>>> structure;
        for (int i = 0; i < n; ++i) {
            const json& row = need_array(sj[static_cast<std::size_t>(i)],
                                         idx(path + "/structure", static_cast<std::size_t>(i)));
            if (static_cast<int>(row.size()) != n)
                schema_fail(idx(path + "/structure", static_cast<std::size_t>(i)),
                            "expected " + std::to_string(n) + " entries");
            std::vector<std::vector<ScalarValue>> srow;
            for (int jj = 0; jj < n; ++jj) {
                std::string p2 = idx(idx(path + "/structure", static_cast<std::size_t>(i)),
                                     static_cast<std::size_t>(jj));
                srow.push_back(coords_from_json(field, row[static_cast<std::size_t>(jj)], n, p2));
            }
            structure.push_back(std::move(srow));
        }
        std::vector<ScalarValue> unity =
            coords_from_json(field, need(j, "unity", path), n, path + "/unity");
        std::string name =
            j.contains("name") ? need_string(j["name"], path + "/name") : std::string("A");
        try {
            return Algebra::create(field, std::move(names), std::move(structure), std::move(unity),
                                   std::move(name));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::invalid_algebra)
                fail(ErrorCode::invalid_algebra, "at " + path + ": " + e.what());
            throw;
        }
    }
    if (kind == "group_algebra")
        return group_algebra(field, group_from_json(need(j, "group", path), path + "/group"));
    if (kind == "twisted_group_algebra") {
        GroupPtr group = group_from_json(need(j, "group", path), path + "/group");
        const json& cj = need_array(need(j, "cocycle", path), path + "/cocycle");
        if (static_cast<int>(cj.size()) != group->order)
            schema_fail(path + "/cocycle", "expected " + std::to_string(group->order) + " rows");
        std::vector<std::vector<ScalarValue>> table;
        for (std::size_t i = 0; i < cj.size(); ++i) {
            const json& row = need_array(cj[i], idx(path + "/cocycle", i));
            if (static_cast<int>(row.size()) != group->order)
                schema_fail(idx(path + "/cocycle", i),
                            "expected " + std::to_string(group->order) + " entries");
            std::vector<ScalarValue> r;
            for (std::size_t k = 0; k < row.size(); ++k)
                r.push_back(scalar_from_json(field, row[k], idx(idx(path + "/cocycle", i), k)));
            table.push_back(std::move(r));
        }
        try {
            Cocycle lambda = Cocycle::create(field, *group, std::move(table));
            return twisted_group_algebra(field, group, lambda).algebra;
        } catch (const Error& e) {
            if (e.code() == ErrorCode::invalid_cocycle)
                fail(ErrorCode::invalid_cocycle, "at " + path + "/cocycle: " + e.what());
            throw;
        }
    }
    if (kind == "matrix" || kind == "triangular") {
        std::int64_t n = need_int(need(j, "n", path), path + "/n");
        if (n < 1 || n > 64) schema_fail(path + "/n", "n must be in [1, 64]");
        return kind == "matrix" ? matrix_algebra(field, static_cast<int>(n))
                                : triangular_algebra(field, static_cast<int>(n));
    }
    if (kind == "direct_sum") {
        const json& sj = need_array(need(j, "summands", path), path + "/summands");
        if (sj.size() < 2) schema_fail(path + "/summands", "expected at least two summands");
        AlgebraPtr acc = algebra_from_json(field, sj[0], idx(path + "/summands", 0));
        for (std::size_t i = 1; i < sj.size(); ++i)
            acc = direct_sum(acc, algebra_from_json(field, sj[i], idx(path + "/summands", i)));
        return acc;
    }
    schema_fail(path + "/kind",
                "unknown algebra kind \"" + kind +
                    "\" (expected structure_constants, group_algebra, twisted_group_algebra, "
                    "matrix, triangular, or direct_sum)");
}

}  // namespace

LoadedDescription load_description_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::parse_error, e.what());
    }
    if (!doc.is_object()) schema_fail("/", "the document root must be an object");
    LoadedDescription out;
    out.digest = sha256_hex(text);
    if (doc.contains("name")) out.doc_name = need_string(doc["name"], "/name");
    FieldPtr field = field_from_json(need(doc, "field", "/"), "/field");
    out.algebra = algebra_from_json(field, need(doc, "algebra", "/"), "/algebra");
    if (doc.contains("elements")) {
        const json& ej = doc["elements"];
        if (!ej.is_object()) schema_fail("/elements", "expected an object of named elements");
        for (auto it = ej.begin(); it != ej.end(); ++it) {
            std::vector<ScalarValue> coords = coords_from_json(
                field, it.value(), out.algebra->dim(), "/elements/" + it.key());
            out.elements.emplace_back(it.key(), out.algebra->element(std::move(coords)));
        }
    }
    return out;
}

LoadedDescription load_description_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::parse_error, "cannot open input file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_description_text(buf.str());
}

ordered_json serialize_description(const AlgebraPtr& algebra,
                                   const std::vector<std::pair<std::string, AlgElement>>& elements) {
    const FieldPtr& F = algebra->field();
    ordered_json out;
    out["name"] = algebra->name();
    out["field"] = field_to_json(F);
    ordered_json alg;
    alg["kind"] = "structure_constants";
    alg["name"] = algebra->name();
    alg["basis_names"] = algebra->basis_names();
    ordered_json structure = ordered_json::array();
    int n = algebra->dim();
    for (int i = 0; i < n; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < n; ++j) {
            const ScalarValue* pc = algebra->product_coords(i, j);
            row.push_back(coords_to_json(F, std::vector<ScalarValue>(pc, pc + n)));
        }
        structure.push_back(std::move(row));
    }
    alg["structure"] = std::move(structure);
    alg["unity"] = coords_to_json(F, algebra->one().coords());
    out["algebra"] = std::move(alg);
    if (!elements.empty()) {
        ordered_json ej;
        std::vector<std::pair<std::string, AlgElement>> sorted = elements;
        std::sort(sorted.begin(), sorted.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [name, el] : sorted) ej[name] = coords_to_json(F, el.coords());
        out["elements"] = std::move(ej);
    }
    return out;
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
        fail(ErrorCode::internal_error, "digest computation failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(static_cast<std::size_t>(len) * 2);
    for (unsigned i = 0; i < len; ++i) {
        out.push_back(hex[md[i] >> 4]);
        out.push_back(hex[md[i] & 15]);
    }
    return out;
}

}  // namespace fcalg
