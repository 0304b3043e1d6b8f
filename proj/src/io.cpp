#include "specon/io.hpp"

#include <fstream>

namespace specon {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "." + key; }

std::string idx(const std::string& path, size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

void expect_keys(const json& j, const std::string& path,
                 std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional) {
    if (!j.is_object()) throw parse_error(path + ": expected an object");
    for (const char* k : required)
        if (!j.contains(k)) throw parse_error(path + ": missing field '" + std::string(k) + "'");
    for (const auto& [k, v] : j.items()) {
        bool known = false;
        for (const char* r : required) known = known || k == r;
        for (const char* o : optional) known = known || k == o;
        if (!known) throw parse_error(path + ": unknown field '" + k + "'");
    }
}

size_t get_nat(const json& j, const std::string& path) {
    if (!(j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0)))
        throw parse_error(path + ": expected a natural number");
    return j.get<size_t>();
}

Rat get_rat(const json& j, const std::string& path) {
    if (!j.is_string()) throw parse_error(path + ": expected a rational string");
    try {
        return parse_rat(j.get<std::string>());
    } catch (const parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

Vec get_rat_row(const json& j, size_t len, const std::string& path) {
    if (!j.is_array() || j.size() != len)
        throw parse_error(path + ": expected " + std::to_string(len) + " rational strings");
    Vec v(len);
    for (size_t i = 0; i < len; ++i) v[i] = get_rat(j[i], idx(path, i));
    return v;
}

json rat_row(const Vec& v) {
    json out = json::array();
    for (const Rat& x : v) out.push_back(rat_str(x));
    return out;
}

Mat get_matrix(const json& j, size_t n, const std::string& path) {
    if (!j.is_array() || j.size() != n)
        throw parse_error(path + ": expected " + std::to_string(n) + " rows");
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) {
        Vec row = get_rat_row(j[i], n, idx(path, i));
        for (size_t k = 0; k < n; ++k) m(i, k) = row[k];
    }
    return m;
}

json matrix_rows(const Mat& m) {
    json out = json::array();
    for (size_t i = 0; i < m.rows; ++i) out.push_back(rat_row(m.row(i)));
    return out;
}

std::vector<std::string> get_names(const json& j, size_t dim, const std::string& path) {
    if (!j.is_array() || j.size() != dim)
        throw parse_error(path + ": expected " + std::to_string(dim) + " names");
    std::vector<std::string> names;
    for (size_t i = 0; i < dim; ++i) {
        if (!j[i].is_string()) throw parse_error(idx(path, i) + ": expected a string");
        names.push_back(j[i].get<std::string>());
    }
    return names;
}

// Shared by brackets (antisymmetric completion) and products (verbatim).
Tensor3 get_entry_table(const json& j, size_t dim, bool antisymmetric, const std::string& path) {
    if (!j.is_array()) throw parse_error(path + ": expected an array of entries");
    Tensor3 c(dim);
    std::map<std::pair<size_t, size_t>, size_t> seen;  // (i,j) -> entry index
    for (size_t e = 0; e < j.size(); ++e) {
        const json& ent = j[e];
        std::string epath = idx(path, e);
        if (!ent.is_array() || ent.size() != 3)
            throw parse_error(epath + ": expected [i, j, coefficients]");
        size_t i = get_nat(ent[0], idx(epath, 0));
        size_t jj = get_nat(ent[1], idx(epath, 1));
        if (i >= dim || jj >= dim) throw parse_error(epath + ": index out of range");
        Vec coeffs = get_rat_row(ent[2], dim, idx(epath, 2));
        auto dup = seen.find({i, jj});
        if (dup != seen.end())
            throw parse_error(epath + " and " + idx(path, dup->second) + ": duplicate entry (" +
                              std::to_string(i) + "," + std::to_string(jj) + ")");
        if (antisymmetric) {
            auto mirror = seen.find({jj, i});
            if (mirror != seen.end()) {
                for (size_t k = 0; k < dim; ++k)
                    if (c(i, jj, k) != coeffs[k])
                        throw parse_error(epath + " and " + idx(path, mirror->second) +
                                          ": entries (" + std::to_string(jj) + "," +
                                          std::to_string(i) + ") and (" + std::to_string(i) + "," +
                                          std::to_string(jj) + ") are not antisymmetric");
            }
        }
        seen[{i, jj}] = e;
        for (size_t k = 0; k < dim; ++k) {
            c(i, jj, k) = coeffs[k];
            if (antisymmetric && i != jj) c(jj, i, k) = -coeffs[k];
        }
    }
    return c;
}

json entry_table(const Tensor3& c, bool upper_only) {
    json out = json::array();
    size_t dim = c.n0;
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = upper_only ? i : 0; j < dim; ++j) {
            bool nonzero = false;
            for (size_t k = 0; k < dim; ++k) nonzero = nonzero || !is_zero(c(i, j, k));
            if (!nonzero) continue;
            Vec coeffs(dim);
            for (size_t k = 0; k < dim; ++k) coeffs[k] = c(i, j, k);
            out.push_back(json::array({i, j, rat_row(coeffs)}));
        }
    return out;
}

}  // namespace

json algebra_to_json(const LieAlgebra& l) {
    json j;
    j["dim"] = l.dim;
    if (!l.basis_names.empty()) j["basis_names"] = l.basis_names;
    j["brackets"] = entry_table(l.c, true);
    return j;
}

LieAlgebra algebra_from_json(const json& j, const std::string& path) {
    expect_keys(j, path, {"dim", "brackets"}, {"basis_names"});
    LieAlgebra l(get_nat(j["dim"], at(path, "dim")));
    if (j.contains("basis_names"))
        l.basis_names = get_names(j["basis_names"], l.dim, at(path, "basis_names"));
    l.c = get_entry_table(j["brackets"], l.dim, true, at(path, "brackets"));
    return l;
}

json pair_to_json(const SymmetricPair& p) {
    json j = algebra_to_json(p.algebra);
    j["involution"] = matrix_rows(p.involution.matrix);
    return j;
}

SymmetricPair pair_from_json(const json& j, const std::string& path) {
    expect_keys(j, path, {"dim", "brackets", "involution"}, {"basis_names"});
    json alg = j;
    alg.erase("involution");
    LieAlgebra l = algebra_from_json(alg, path);
    Involution s{get_matrix(j["involution"], l.dim, at(path, "involution"))};
    return decompose(l, s);
}

json product_to_json(const ProductTensor& t) {
    bool symmetric = true;
    for (size_t i = 0; i < t.dim && symmetric; ++i)
        for (size_t j = i + 1; j < t.dim && symmetric; ++j)
            for (size_t k = 0; k < t.dim; ++k)
                if (t.a(i, j, k) != t.a(j, i, k)) {
                    symmetric = false;
                    break;
                }
    json j;
    j["dim"] = t.dim;
    j["symmetric"] = symmetric;
    j["entries"] = entry_table(t.a, symmetric);
    return j;
}

ProductTensor product_from_json(const json& j, const std::string& path) {
    expect_keys(j, path, {"dim", "entries"}, {"symmetric"});
    size_t dim = get_nat(j["dim"], at(path, "dim"));
    bool symmetric = false;
    if (j.contains("symmetric")) {
        if (!j["symmetric"].is_boolean()) throw parse_error(at(path, "symmetric") + ": expected a boolean");
        symmetric = j["symmetric"].get<bool>();
    }
    ProductTensor t(dim);
    const json& entries = j["entries"];
    if (!entries.is_array()) throw parse_error(at(path, "entries") + ": expected an array");
    std::map<std::pair<size_t, size_t>, size_t> seen;
    for (size_t e = 0; e < entries.size(); ++e) {
        std::string epath = idx(at(path, "entries"), e);
        const json& ent = entries[e];
        if (!ent.is_array() || ent.size() != 3)
            throw parse_error(epath + ": expected [i, j, coefficients]");
        size_t i = get_nat(ent[0], idx(epath, 0));
        size_t jj = get_nat(ent[1], idx(epath, 1));
        if (i >= dim || jj >= dim) throw parse_error(epath + ": index out of range");
        if (symmetric && i > jj)
            throw parse_error(epath + ": symmetric records list only i <= j");
        auto dup = seen.find({i, jj});
        if (dup != seen.end())
            throw parse_error(epath + " and " + idx(at(path, "entries"), dup->second) +
                              ": duplicate entry");
        seen[{i, jj}] = e;
        Vec coeffs = get_rat_row(ent[2], dim, idx(epath, 2));
        for (size_t k = 0; k < dim; ++k) {
            t.a(i, jj, k) = coeffs[k];
            if (symmetric) t.a(jj, i, k) = coeffs[k];
        }
    }
    return t;
}

json nonassoc_to_json(const NonassocAlgebra& a) {
    json j;
    j["dim"] = a.dim;
    if (!a.basis_names.empty()) j["basis_names"] = a.basis_names;
    j["products"] = entry_table(a.p, false);
    return j;
}

NonassocAlgebra nonassoc_from_json(const json& j, const std::string& path) {
    expect_keys(j, path, {"dim", "products"}, {"basis_names"});
    NonassocAlgebra a(get_nat(j["dim"], at(path, "dim")));
    if (j.contains("basis_names"))
        a.basis_names = get_names(j["basis_names"], a.dim, at(path, "basis_names"));
    a.p = get_entry_table(j["products"], a.dim, false, at(path, "products"));
    return a;
}

json involution_to_json(const Involution& s) {
    json j;
    j["involution"] = matrix_rows(s.matrix);
    return j;
}

Involution involution_from_json(const json& j, const std::string& path) {
    if (j.is_array()) {
        size_t n = j.size();
        return Involution{get_matrix(j, n, path)};
    }
    expect_keys(j, path, {"involution"}, {});
    const json& m = j["involution"];
    if (!m.is_array()) throw parse_error(at(path, "involution") + ": expected a matrix");
    return Involution{get_matrix(m, m.size(), at(path, "involution"))};
}

json entry_to_json(const CatalogEntry& e) {
    if (e.algebra) return algebra_to_json(*e.algebra);
    if (e.pair) return pair_to_json(*e.pair);
    return nonassoc_to_json(*e.nonassoc);
}

RecordKind sniff(const json& j) {
    if (!j.is_object()) throw parse_error("$: expected an object record");
    if (j.contains("involution") && j.contains("brackets")) return RecordKind::pair;
    if (j.contains("involution")) return RecordKind::involution;
    if (j.contains("brackets")) return RecordKind::algebra;
    if (j.contains("products")) return RecordKind::nonassoc;
    if (j.contains("entries")) return RecordKind::product;
    throw parse_error("$: unrecognized record (no brackets/products/entries/involution)");
}

json subspace_to_json(const Subspace& s) {
    json j;
    j["ambient_dim"] = s.ambient_dim();
    json rows = json::array();
    for (const Vec& v : s.basis()) rows.push_back(rat_row(v));
    j["basis"] = rows;
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write '" + path + "'");
    out << bytes;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

std::string digest(const std::string& bytes) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json report_to_json(const Report& r) {
    json j;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["findings"] = r.findings;
    j["seed"] = r.seed;
    j["status"] = r.status;
    return j;
}

}  // namespace specon
