#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "specon/io.hpp"

using namespace specon;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load_record(const std::string& path, Report& report) {
    std::string bytes = slurp(path);
    report.inputs.push_back(digest(bytes));
    try {
        return json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
}

json violation_json(const LieViolation& v) {
    return json{{"identity", v.identity}, {"indices", v.indices}};
}

json verify_json(const VerifyReport& v) {
    json j;
    j["commutative"] = v.commutative;
    j["associative"] = v.associative;
    j["invariant"] = v.invariant;
    if (v.first_witness) j["witness"] = violation_json(*v.first_witness);
    return j;
}

json product_record_list(const std::vector<ProductTensor>& ts) {
    json out = json::array();
    for (const ProductTensor& t : ts) out.push_back(product_to_json(t));
    return out;
}

void render_text(std::ostream& os, const json& j, int indent) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || v.is_array()) {
                os << pad << k << ":\n";
                render_text(os, v, indent + 2);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                   << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                os << pad << "-\n";
                render_text(os, v, indent + 2);
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

int finish(const Report& report, const std::string& format) {
    if (format == "machine") {
        std::cout << canonical_dump(report_to_json(report));
    } else {
        std::cout << report.command << ": " << report.status << "\n";
        render_text(std::cout, report.findings, 2);
    }
    if (report.status == "ok") return 0;
    return 1;
}

SymmetricPair load_pair(const std::string& path, Report& report) {
    json j = load_record(path, report);
    if (sniff(j) != RecordKind::pair)
        throw parse_error(path + ": expected a pair record (algebra + involution)");
    return pair_from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for symmetric pairs, special products, and graded algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    uint64_t seed = kDefaultSeed;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--seed", seed, "seed for randomized search steps");

    std::string in_path, involution_path, product_path, out_path, split_path;
    bool compact_h = false, special_product = false;
    size_t max_params = 3;
    std::string catalog_name;
    std::vector<std::string> catalog_params;

    CLI::App* c_check = app.add_subcommand("check", "validate a record file");
    c_check->add_option("file", in_path)->required();

    CLI::App* c_dec = app.add_subcommand("decompose", "split an algebra by an involution");
    c_dec->add_option("file", in_path)->required();
    c_dec->add_option("--involution", involution_path)->required();

    CLI::App* c_cls = app.add_subcommand("classify", "simple / semi-simple / strongly semi-simple");
    c_cls->add_option("file", in_path)->required();
    c_cls->add_flag("--compact-h", compact_h, "assert that H is compact");
    c_cls->add_option("--split", split_path, "write the summand bases to a file");

    CLI::App* c_prod = app.add_subcommand("products", "solve for special products");
    c_prod->add_option("file", in_path)->required();
    c_prod->add_option("--max-params", max_params);
    c_prod->add_option("--out", out_path, "write the solution set record");

    CLI::App* c_ver = app.add_subcommand("verify", "verify a product against a pair");
    c_ver->add_option("file", in_path)->required();
    c_ver->add_option("--product", product_path)->required();

    CLI::App* c_hol = app.add_subcommand("holonomy", "holonomy algebra of a special product");
    c_hol->add_option("file", in_path)->required();
    c_hol->add_option("--product", product_path)->required();

    CLI::App* c_tkk = app.add_subcommand("tkk", "graded Lie algebra of a Jordan algebra");
    c_tkk->add_option("file", in_path)->required();
    c_tkk->add_flag("--special-product", special_product);

    CLI::App* c_cat = app.add_subcommand("catalog", "write a catalog record");
    c_cat->add_option("name", catalog_name)->required();
    c_cat->add_option("--param", catalog_params, "key=value parameters");
    c_cat->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Report report;
    report.seed = seed;
    try {
        if (c_check->parsed()) {
            report.command = "check";
            json j = load_record(in_path, report);
            RecordKind kind = sniff(j);
            if (kind == RecordKind::algebra) {
                LieAlgebra l = algebra_from_json(j);
                LieValidation v = validate_lie(l);
                report.findings["record"] = "lie-algebra";
                report.findings["dim"] = l.dim;
                report.findings["valid"] = v.valid;
                json viol = json::array();
                for (const LieViolation& w : v.violations) viol.push_back(violation_json(w));
                report.findings["violations"] = viol;
                if (!v.valid) report.status = "violation";
            } else if (kind == RecordKind::pair) {
                SymmetricPair p = pair_from_json(j);
                LieValidation v = validate_lie(p.algebra);
                report.findings["record"] = "symmetric-pair";
                report.findings["dim"] = p.algebra.dim;
                report.findings["m_dim"] = p.m_dim();
                report.findings["h_dim"] = p.h_dim();
                report.findings["valid"] = v.valid;
                json viol = json::array();
                for (const LieViolation& w : v.violations) viol.push_back(violation_json(w));
                report.findings["violations"] = viol;
                if (!v.valid) report.status = "violation";
            } else if (kind == RecordKind::product) {
                ProductTensor t = product_from_json(j);
                report.findings["record"] = "product-tensor";
                report.findings["dim"] = t.dim;
                report.findings["valid"] = true;
            } else if (kind == RecordKind::nonassoc) {
                NonassocAlgebra a = nonassoc_from_json(j);
                AlgebraFlags f = classify_algebra(a);
                report.findings["record"] = "nonassoc-algebra";
                report.findings["dim"] = a.dim;
                report.findings["valid"] = true;
                report.findings["flags"] = {{"commutative", f.commutative},
                                            {"associative", f.associative},
                                            {"jordan", f.jordan},
                                            {"zero_associative", f.zero_associative},
                                            {"symmetric_leibniz", f.symmetric_leibniz}};
            } else {
                report.findings["record"] = "involution";
                report.findings["valid"] = true;
            }
        } else if (c_dec->parsed()) {
            report.command = "decompose";
            json aj = load_record(in_path, report);
            if (sniff(aj) != RecordKind::algebra)
                throw parse_error(in_path + ": expected a lie-algebra record");
            LieAlgebra l = algebra_from_json(aj);
            json ij = load_record(involution_path, report);
            Involution s = involution_from_json(ij);
            SymmetricPair p = decompose(l, s);
            report.findings["dim"] = l.dim;
            report.findings["m_dim"] = p.m_dim();
            report.findings["h_dim"] = p.h_dim();
            report.findings["m"] = subspace_to_json(p.m);
            report.findings["h"] = subspace_to_json(p.h);
        } else if (c_cls->parsed()) {
            report.command = "classify";
            SymmetricPair p = load_pair(in_path, report);
            Classification cls = classify(p, compact_h, seed);
            report.findings["simple"] = cls.simple;
            report.findings["semisimple"] = cls.semisimple;
            report.findings["strongly_semisimple"] = cls.strongly_semisimple;
            report.findings["confidence"] = confidence_name(cls.confidence);
            json dims = json::array(), certs = json::array();
            for (const Subspace& s : cls.decomposition) dims.push_back(s.dim());
            for (Certificate c : cls.certificates) certs.push_back(certificate_name(c));
            report.findings["decomposition_dims"] = dims;
            report.findings["certificates"] = certs;
            report.findings["zero_bracket_summands"] = cls.zero_bracket_summands;
            report.findings["m_dim"] = p.m_dim();
            if (p.m_dim() <= 1)
                report.findings["note"] =
                    "dim m <= 1: the uniqueness statement for simple pairs needs dim m > 1";
            if (!split_path.empty()) {
                json summands = json::array();
                for (const Subspace& s : cls.decomposition) summands.push_back(subspace_to_json(s));
                write_file(split_path, canonical_dump(json{{"summands", summands}}));
            }
        } else if (c_prod->parsed()) {
            report.command = "products";
            SymmetricPair p = load_pair(in_path, report);
            SolutionSet sol = solve_special(p, max_params);
            report.findings["w_dim"] = sol.candidate_basis.size();
            report.findings["basis"] = product_record_list(sol.candidate_basis);
            json cons = json::array();
            for (const MPoly& q : sol.quadratic_constraints) cons.push_back(q.str());
            report.findings["constraints"] = cons;
            report.findings["solutions"] = product_record_list(sol.solutions);
            json comps = json::array();
            for (const AffineComponent& c : sol.components) {
                json jc;
                json pt = json::array();
                for (const Rat& x : c.point) pt.push_back(rat_str(x));
                json dirs = json::array();
                for (const Vec& d : c.directions) {
                    json row = json::array();
                    for (const Rat& x : d) row.push_back(rat_str(x));
                    dirs.push_back(row);
                }
                jc["point"] = pt;
                jc["directions"] = dirs;
                comps.push_back(jc);
            }
            report.findings["components"] = comps;
            report.findings["status"] = solve_status_name(sol.status);
            report.findings["notes"] = sol.notes;
            if (!out_path.empty()) {
                json rec;
                rec["w_dim"] = sol.candidate_basis.size();
                rec["basis"] = product_record_list(sol.candidate_basis);
                rec["constraints"] = cons;
                rec["solutions"] = product_record_list(sol.solutions);
                rec["status"] = solve_status_name(sol.status);
                write_file(out_path, canonical_dump(rec));
            }
        } else if (c_ver->parsed()) {
            report.command = "verify";
            SymmetricPair p = load_pair(in_path, report);
            json pj = load_record(product_path, report);
            if (sniff(pj) != RecordKind::product)
                throw parse_error(product_path + ": expected a product record");
            ProductTensor t = product_from_json(pj);
            VerifyReport v = verify_special(p, t);
            report.findings = verify_json(v);
            if (!v.ok()) report.status = "violation";
        } else if (c_hol->parsed()) {
            report.command = "holonomy";
            SymmetricPair p = load_pair(in_path, report);
            json pj = load_record(product_path, report);
            if (sniff(pj) != RecordKind::product)
                throw parse_error(product_path + ": expected a product record");
            ProductTensor t = product_from_json(pj);
            HolonomyAlgebra hol = holonomy(p, t);
            report.findings["dim"] = hol.generators.dim();
            report.findings["closed"] = hol.closed;
            report.findings["module_dim"] = hol.module_dim;
            report.findings["generators"] = subspace_to_json(hol.generators);
        } else if (c_tkk->parsed()) {
            report.command = "tkk";
            json aj = load_record(in_path, report);
            if (sniff(aj) != RecordKind::nonassoc)
                throw parse_error(in_path + ": expected a nonassoc-algebra record");
            NonassocAlgebra a = nonassoc_from_json(aj);
            AlgebraFlags f = classify_algebra(a);
            report.findings["flags"] = {{"commutative", f.commutative},
                                        {"associative", f.associative},
                                        {"jordan", f.jordan},
                                        {"zero_associative", f.zero_associative},
                                        {"symmetric_leibniz", f.symmetric_leibniz}};
            GradedLieAlgebra g = tkk(a);
            report.findings["dim"] = g.lie.dim;
            report.findings["grade_dims"] = {{"-1", g.grade_dim(-1)},
                                             {"0", g.grade_dim(0)},
                                             {"+1", g.grade_dim(1)}};
            LowerCentralSeries lcs = lower_central_series(g.lie);
            report.findings["nilpotent"] = lcs.nilpotent;
            if (lcs.nil_class) report.findings["nilpotency_class"] = *lcs.nil_class;
            report.findings["semisimple"] = is_semisimple(g.lie);
            report.findings["algebra"] = algebra_to_json(g.lie);
            if (special_product) {
                auto [pair, prod] = tkk_special_product(a);
                report.findings["pair"] = pair_to_json(pair);
                report.findings["special_product"] = product_to_json(prod);
                report.findings["verify"] = verify_json(verify_special(pair, prod));
            }
        } else if (c_cat->parsed()) {
            report.command = "catalog";
            std::map<std::string, std::string> params;
            for (const std::string& kv : catalog_params) {
                size_t eq = kv.find('=');
                if (eq == std::string::npos)
                    throw parse_error("--param expects key=value, got '" + kv + "'");
                params[kv.substr(0, eq)] = kv.substr(eq + 1);
            }
            CatalogEntry entry = build(catalog_name, params);
            std::string bytes = canonical_dump(entry_to_json(entry));
            write_file(out_path, bytes);
            report.findings["name"] = entry.name;
            report.findings["params"] = entry.params;
            report.findings["out"] = out_path;
            report.findings["digest"] = digest(bytes);
            if (entry.algebra) report.findings["dim"] = entry.algebra->dim;
            if (entry.pair) {
                report.findings["dim"] = entry.pair->algebra.dim;
                report.findings["m_dim"] = entry.pair->m_dim();
                report.findings["h_dim"] = entry.pair->h_dim();
            }
            if (entry.nonassoc) report.findings["dim"] = entry.nonassoc->dim;
        }
    } catch (const rejection& e) {
        report.status = "rejected";
        report.findings["error"] = e.what();
        report.findings["witness"] = e.witness;
        return finish(report, format);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const structural_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return finish(report, format);
}
