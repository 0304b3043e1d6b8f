#include "specon/catalog.hpp"

namespace specon {

namespace {

// Particular solution of A x = b; throws when inconsistent.
Vec solve_exact(const Mat& a, const Vec& b) {
    Mat aug(a.rows, a.cols + 1);
    for (size_t i = 0; i < a.rows; ++i) {
        for (size_t j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
        aug(i, a.cols) = b[i];
    }
    RrefResult rr = rref(aug);
    for (size_t p : rr.pivots)
        if (p == a.cols) throw structural_error("inconsistent linear system");
    Vec x(a.cols);
    for (size_t i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.r(i, a.cols);
    return x;
}

Mat elementary(size_t n, size_t i, size_t j) {
    Mat m(n, n);
    m(i, j) = 1;
    return m;
}

size_t parse_nat(const std::map<std::string, std::string>& params, const std::string& key,
                 size_t fallback, bool required = false) {
    auto it = params.find(key);
    if (it == params.end()) {
        if (required) throw parse_error("missing catalog parameter '" + key + "'");
        return fallback;
    }
    const std::string& s = it->second;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("catalog parameter '" + key + "' must be a natural number");
    return static_cast<size_t>(std::stoul(s));
}

void check_known_params(const std::map<std::string, std::string>& params,
                        std::initializer_list<const char*> known) {
    for (const auto& [k, v] : params) {
        bool ok = false;
        for (const char* name : known) ok = ok || k == name;
        if (!ok) throw parse_error("unknown catalog parameter '" + k + "'");
    }
}

}  // namespace

LieAlgebra algebra_from_matrices(const std::vector<Mat>& basis,
                                 const std::vector<std::string>& names) {
    size_t q = basis.size();
    if (q == 0) return LieAlgebra(0);
    size_t n = basis[0].rows;
    Mat cols(n * n, q);
    for (size_t s = 0; s < q; ++s)
        for (size_t i = 0; i < n * n; ++i) cols(i, s) = basis[s].a[i];
    if (rref(cols).rank != q) throw structural_error("matrix family is linearly dependent");
    LieAlgebra l(q);
    l.basis_names = names;
    for (size_t i = 0; i < q; ++i)
        for (size_t j = i + 1; j < q; ++j) {
            Vec coords = solve_exact(cols, commutator(basis[i], basis[j]).a);
            for (size_t k = 0; k < q; ++k) {
                l.c(i, j, k) = coords[k];
                l.c(j, i, k) = -coords[k];
            }
        }
    return l;
}

LieAlgebra so_algebra(size_t n) {
    std::vector<Mat> basis;
    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            basis.push_back(elementary(n, i, j) - elementary(n, j, i));
            names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    return algebra_from_matrices(basis, names);
}

LieAlgebra sl_algebra(size_t n) {
    std::vector<Mat> basis;
    std::vector<std::string> names;
    for (size_t i = 0; i + 1 < n; ++i) {
        basis.push_back(elementary(n, i, i) - elementary(n, i + 1, i + 1));
        names.push_back("H" + std::to_string(i + 1));
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            basis.push_back(elementary(n, i, j));
            names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    return algebra_from_matrices(basis, names);
}

LieAlgebra gl_algebra(size_t n) {
    std::vector<Mat> basis;
    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            basis.push_back(elementary(n, i, j));
            names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    return algebra_from_matrices(basis, names);
}

LieAlgebra heisenberg_algebra() {
    LieAlgebra l(3);
    l.basis_names = {"x", "y", "z"};
    l.c(0, 1, 2) = 1;
    l.c(1, 0, 2) = -1;
    return l;
}

SymmetricPair sphere_pair(size_t n) {
    LieAlgebra so = so_algebra(n + 1);
    // Conjugation by J = diag(1,...,1,-1): E_{ij} -> s_i s_j E_{ij}.
    Involution s;
    s.matrix = Mat(so.dim, so.dim);
    size_t idx = 0;
    for (size_t i = 0; i < n + 1; ++i)
        for (size_t j = i + 1; j < n + 1; ++j) {
            bool flip = (j == n);  // exactly one index touches the last axis
            s.matrix(idx, idx) = flip ? -1 : 1;
            ++idx;
        }
    return decompose(so, s);
}

SymmetricPair r4_so3_pair() {
    // Basis: translations e1..e4, then so(3) generators acting on e1..e3.
    LieAlgebra l(7);
    l.basis_names = {"e1", "e2", "e3", "e4", "X12", "X13", "X23"};
    std::vector<Mat> rot;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j) {
            Mat m(4, 4);
            m(i, j) = 1;
            m(j, i) = -1;
            rot.push_back(m);
        }
    for (size_t s = 0; s < 3; ++s)
        for (size_t j = 0; j < 4; ++j) {
            Vec col = rot[s].col(j);
            for (size_t k = 0; k < 4; ++k) {
                l.c(4 + s, j, k) = col[k];
                l.c(j, 4 + s, k) = -col[k];
            }
        }
    for (size_t s = 0; s < 3; ++s)
        for (size_t t = s + 1; t < 3; ++t) {
            Mat c = commutator(rot[s], rot[t]);
            // Expand in the rotation generators: entries (0,1), (0,2), (1,2).
            Vec coords{c(0, 1), c(0, 2), c(1, 2)};
            for (size_t k = 0; k < 3; ++k) {
                l.c(4 + s, 4 + t, 4 + k) = coords[k];
                l.c(4 + t, 4 + s, 4 + k) = -coords[k];
            }
        }
    Involution s;
    s.matrix = Mat(7, 7);
    for (size_t i = 0; i < 4; ++i) s.matrix(i, i) = -1;
    for (size_t i = 4; i < 7; ++i) s.matrix(i, i) = 1;
    return decompose(l, s);
}

namespace {

LieAlgebra base_algebra(const std::string& spec_name) {
    // "sl2", "so3", "gl2", "heisenberg"
    if (spec_name == "heisenberg") return heisenberg_algebra();
    size_t split = spec_name.find_first_of("0123456789");
    if (split == std::string::npos) throw parse_error("bad base algebra '" + spec_name + "'");
    std::string family = spec_name.substr(0, split);
    size_t n = parse_nat({{"n", spec_name.substr(split)}}, "n", 0, true);
    if (family == "so" && n >= 2 && n <= 8) return so_algebra(n);
    if (family == "sl" && n >= 2 && n <= 5) return sl_algebra(n);
    if (family == "gl" && n >= 1 && n <= 5) return gl_algebra(n);
    throw parse_error("bad base algebra '" + spec_name + "'");
}

}  // namespace

CatalogEntry build(const std::string& name, std::map<std::string, std::string> params) {
    CatalogEntry entry;
    entry.name = name;
    entry.params = params;
    if (name == "so") {
        check_known_params(params, {"n"});
        size_t n = parse_nat(params, "n", 3);
        if (n < 2 || n > 8) throw parse_error("so: n must lie in [2, 8]");
        entry.algebra = so_algebra(n);
    } else if (name == "sl") {
        check_known_params(params, {"n"});
        size_t n = parse_nat(params, "n", 2);
        if (n < 2 || n > 5) throw parse_error("sl: n must lie in [2, 5]");
        entry.algebra = sl_algebra(n);
    } else if (name == "gl") {
        check_known_params(params, {"n"});
        size_t n = parse_nat(params, "n", 2);
        if (n < 1 || n > 5) throw parse_error("gl: n must lie in [1, 5]");
        entry.algebra = gl_algebra(n);
    } else if (name == "heisenberg") {
        check_known_params(params, {});
        entry.algebra = heisenberg_algebra();
    } else if (name == "sphere-pair") {
        check_known_params(params, {"n"});
        size_t n = parse_nat(params, "n", 2);
        if (n < 2 || n > 6) throw parse_error("sphere-pair: n must lie in [2, 6]");
        entry.pair = sphere_pair(n);
    } else if (name == "double-pair") {
        check_known_params(params, {"base"});
        auto it = params.find("base");
        std::string base = it == params.end() ? "sl2" : it->second;
        entry.pair = double_pair(base_algebra(base));
    } else if (name == "r4-so3-pair") {
        check_known_params(params, {});
        entry.pair = r4_so3_pair();
    } else if (name == "zero-assoc") {
        check_known_params(params, {"n", "i1", "i2"});
        size_t n = parse_nat(params, "n", 2);
        size_t i1 = parse_nat(params, "i1", 1);
        size_t i2 = parse_nat(params, "i2", 2);
        if (n < 2 || n > 10) throw parse_error("zero-assoc: n must lie in [2, 10]");
        if (i1 < 1 || i1 > n || i2 < 1 || i2 > n || i1 == i2)
            throw parse_error("zero-assoc: need distinct i1, i2 in [1, n]");
        NonassocAlgebra a(n);
        a.p(i1 - 1, i1 - 1, i2 - 1) = 1;
        entry.nonassoc = a;
    } else if (name == "unital-line") {
        check_known_params(params, {});
        NonassocAlgebra a(1);
        a.p(0, 0, 0) = 1;
        entry.nonassoc = a;
    } else {
        throw parse_error("unknown catalog name '" + name + "'");
    }
    return entry;
}

}  // namespace specon
