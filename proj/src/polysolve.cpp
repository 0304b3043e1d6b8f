#include <algorithm>
#include <map>
#include <set>

#include "specon/poly.hpp"
#include "specon/subspace.hpp"

namespace specon {

namespace {

struct SolveCtx {
    size_t nvars = 0;
    PolySolveResult out;
};

using Subst = std::map<size_t, MPoly>;

std::vector<MPoly> tidy(const std::vector<MPoly>& sys, bool& dead) {
    std::set<MPoly> uniq;
    dead = false;
    for (const MPoly& p : sys) {
        MPoly n = p.normalized();
        if (n.is_zero()) continue;
        if (n.is_constant()) {
            dead = true;  // nonzero constant: no solutions on this branch
            return {};
        }
        uniq.insert(n);
    }
    return {uniq.begin(), uniq.end()};
}

void apply_subst(std::vector<MPoly>& sys, Subst& subst, size_t var, const MPoly& value) {
    for (MPoly& p : sys) p = p.substitute(var, value);
    for (auto& [v, expr] : subst) expr = expr.substitute(var, value);
    subst[var] = value;
}

bool rat_sqrt(const Rat& x, Rat& root) {
    if (sgn(x) < 0) return false;
    mpz_class n = x.get_num(), d = x.get_den(), rn, rd;
    if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 2) == 0) return false;
    if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 2) == 0) return false;
    root = Rat(rn, rd);
    return true;
}

// Square root of a polynomial of total degree <= 2 as an affine form,
// verified by reconstruction.
bool affine_sqrt(const MPoly& d, MPoly& root) {
    size_t n = d.nvars();
    if (d.is_zero()) {
        root = MPoly(n);
        return true;
    }
    if (d.total_degree() > 2) return false;
    if (d.is_constant()) {
        Rat r;
        if (!rat_sqrt(d.constant_value(), r)) return false;
        root = MPoly::constant(n, r);
        return true;
    }
    // Need some pure square term to anchor the reconstruction.
    for (size_t y = 0; y < n; ++y) {
        MPoly::Expo e2(n, 0);
        e2[y] = 2;
        auto it = d.terms().find(e2);
        if (it == d.terms().end()) continue;
        Rat ay;
        if (!rat_sqrt(it->second, ay)) return false;
        MPoly cand = MPoly::var(n, y) * ay;
        for (size_t j = 0; j < n; ++j) {
            if (j == y) continue;
            MPoly::Expo e(n, 0);
            e[y] = 1;
            e[j] = 1;
            auto ij = d.terms().find(e);
            if (ij != d.terms().end()) cand = cand + MPoly::var(n, j) * (ij->second / (2 * ay));
        }
        MPoly::Expo e1(n, 0);
        e1[y] = 1;
        auto i1 = d.terms().find(e1);
        if (i1 != d.terms().end()) cand = cand + MPoly::constant(n, i1->second / (2 * ay));
        if (cand * cand == d) {
            root = cand;
            return true;
        }
        return false;
    }
    return false;
}

// Tries to write b = a*r with r affine; exact linear solve for the
// coefficients of r.
bool divide_affine(const MPoly& a, const MPoly& b, MPoly& r) {
    size_t n = a.nvars();
    if (b.is_zero()) {
        r = MPoly(n);
        return true;
    }
    std::vector<MPoly> gens;  // a * x_i and a * 1
    for (size_t i = 0; i < n; ++i) gens.push_back(a * MPoly::var(n, i));
    gens.push_back(a);
    // Collect the monomials appearing anywhere.
    std::set<MPoly::Expo> monos;
    for (const MPoly& g : gens)
        for (const auto& [e, c] : g.terms()) monos.insert(e);
    for (const auto& [e, c] : b.terms()) monos.insert(e);
    Mat sys(monos.size(), gens.size() + 1);
    size_t row = 0;
    for (const auto& e : monos) {
        for (size_t j = 0; j < gens.size(); ++j) {
            auto it = gens[j].terms().find(e);
            sys(row, j) = it == gens[j].terms().end() ? Rat(0) : it->second;
        }
        auto it = b.terms().find(e);
        sys(row, gens.size()) = it == b.terms().end() ? Rat(0) : it->second;
        ++row;
    }
    RrefResult rr = rref(sys);
    for (size_t p : rr.pivots)
        if (p == gens.size()) return false;  // inconsistent
    Vec coeff(gens.size());
    for (size_t i = 0; i < rr.rank; ++i) coeff[rr.pivots[i]] = rr.r(i, gens.size());
    r = MPoly::constant(n, coeff.back());
    for (size_t i = 0; i < n; ++i) r = r + MPoly::var(n, i) * coeff[i];
    return a * r == b;
}

void emit_leaf(SolveCtx& ctx, const Subst& subst) {
    size_t n = ctx.nvars;
    std::vector<size_t> free_vars;
    for (size_t v = 0; v < n; ++v)
        if (!subst.count(v)) free_vars.push_back(v);
    bool affine = true;
    for (const auto& [v, expr] : subst)
        if (expr.total_degree() > 1) affine = false;

    auto eval_all = [&](const Vec& free_vals) {
        Vec point(n);
        Vec full(n);
        for (size_t i = 0; i < free_vars.size(); ++i) full[free_vars[i]] = free_vals[i];
        for (size_t v = 0; v < n; ++v) {
            auto it = subst.find(v);
            point[v] = it == subst.end() ? full[v] : it->second.eval(full);
        }
        return point;
    };

    if (affine) {
        AffineComponent comp;
        comp.point = eval_all(Vec(free_vars.size()));
        for (size_t i = 0; i < free_vars.size(); ++i) {
            Vec unit(free_vars.size());
            unit[i] = 1;
            Vec dir = eval_all(unit);
            for (size_t v = 0; v < n; ++v) dir[v] -= comp.point[v];
            comp.directions.push_back(dir);
        }
        ctx.out.components.push_back(std::move(comp));
        return;
    }
    // Curved branch: report the parametrization and sample points on it.
    std::string note = "parametrized component:";
    for (const auto& [v, expr] : subst) note += " w" + std::to_string(v) + " = " + expr.str() + ";";
    note += " free:";
    for (size_t f : free_vars) note += " w" + std::to_string(f);
    ctx.out.notes.push_back(note);
    std::vector<Vec> samples{Vec(free_vars.size())};
    for (size_t i = 0; i < free_vars.size(); ++i) {
        Vec unit(free_vars.size());
        unit[i] = 1;
        samples.push_back(unit);
    }
    for (const Vec& s : samples) ctx.out.components.push_back({eval_all(s), {}});
}

void solve_rec(SolveCtx& ctx, std::vector<MPoly> sys, Subst subst, int depth) {
    if (depth > 128) throw structural_error("polynomial solver recursion limit");
    bool dead = false;
    sys = tidy(sys, dead);
    if (dead) return;
    if (sys.empty()) {
        emit_leaf(ctx, subst);
        return;
    }

    // Affine constraint: eliminate a variable outright.
    for (size_t pi = 0; pi < sys.size(); ++pi) {
        const MPoly& p = sys[pi];
        if (p.total_degree() != 1) continue;
        for (size_t v = 0; v < ctx.nvars; ++v) {
            if (p.degree_in(v) != 1) continue;
            std::vector<MPoly> cs = p.coeffs_in(v);
            if (!cs[1].is_constant()) continue;
            MPoly expr = cs[0] * (Rat(-1) / cs[1].constant_value());
            std::vector<MPoly> rest;
            for (size_t j = 0; j < sys.size(); ++j)
                if (j != pi) rest.push_back(sys[j]);
            apply_subst(rest, subst, v, expr);
            solve_rec(ctx, std::move(rest), std::move(subst), depth + 1);
            return;
        }
    }

    // Univariate constraint: branch over its rational roots.
    for (size_t pi = 0; pi < sys.size(); ++pi) {
        size_t var = 0;
        std::optional<UPoly> u;
        for (size_t v = 0; v < ctx.nvars; ++v) {
            if (!sys[pi].uses(v)) continue;
            u = sys[pi].as_univariate(v);
            var = v;
            break;
        }
        if (!u) continue;
        std::vector<Rat> roots = rational_roots(*u);
        UPoly q = *u;
        for (const Rat& r : roots)
            while (!q.empty() && ueval(q, r) == 0 && udeg(q) >= 1) q = udeflate(q, r);
        if (udeg(q) >= 1 && count_real_roots(q) > 0) {
            ctx.out.complete = false;
            ctx.out.residual.push_back(sys[pi]);
        }
        for (const Rat& r : roots) {
            std::vector<MPoly> rest;
            for (size_t j = 0; j < sys.size(); ++j)
                if (j != pi) rest.push_back(sys[j]);
            Subst sub = subst;
            apply_subst(rest, sub, var, MPoly::constant(ctx.nvars, r));
            solve_rec(ctx, std::move(rest), std::move(sub), depth + 1);
        }
        return;
    }

    // Common variable factor: V(x * q) = V(x) union V(q).
    for (size_t pi = 0; pi < sys.size(); ++pi) {
        for (size_t v = 0; v < ctx.nvars; ++v) {
            bool divides = !sys[pi].terms().empty();
            for (const auto& [e, c] : sys[pi].terms())
                if (e[v] == 0) divides = false;
            if (!divides) continue;
            MPoly quotient(ctx.nvars);
            for (const auto& [e, c] : sys[pi].terms()) {
                MPoly::Expo q = e;
                --q[v];
                quotient.add_term(q, c);
            }
            {
                std::vector<MPoly> rest;
                for (size_t j = 0; j < sys.size(); ++j)
                    if (j != pi) rest.push_back(sys[j]);
                Subst sub = subst;
                apply_subst(rest, sub, v, MPoly(ctx.nvars));
                solve_rec(ctx, std::move(rest), std::move(sub), depth + 1);
            }
            {
                std::vector<MPoly> branch = sys;
                branch[pi] = quotient;
                solve_rec(ctx, std::move(branch), subst, depth + 1);
            }
            return;
        }
    }

    // Degree one in some variable.
    for (size_t pi = 0; pi < sys.size(); ++pi) {
        for (size_t v = 0; v < ctx.nvars; ++v) {
            if (sys[pi].degree_in(v) != 1) continue;
            std::vector<MPoly> cs = sys[pi].coeffs_in(v);
            if (cs[1].is_constant()) {
                // Pivot: v = -b/a, exact; degrees elsewhere may grow.
                MPoly expr = cs[0] * (Rat(-1) / cs[1].constant_value());
                std::vector<MPoly> rest;
                for (size_t j = 0; j < sys.size(); ++j)
                    if (j != pi) rest.push_back(sys[j]);
                apply_subst(rest, subst, v, expr);
                solve_rec(ctx, std::move(rest), std::move(subst), depth + 1);
                return;
            }
            MPoly r(ctx.nvars);
            if (divide_affine(cs[1], cs[0], r)) {
                // a*v + b = a*(v + r): branch on the two factors.
                MPoly linear = MPoly::var(ctx.nvars, v) + r;
                for (const MPoly& factor : {cs[1], linear}) {
                    std::vector<MPoly> branch = sys;
                    branch[pi] = factor;
                    solve_rec(ctx, std::move(branch), subst, depth + 1);
                }
                return;
            }
        }
    }

    // Quadratic in some variable with constant leading coefficient:
    // factor through the discriminant when it is a perfect square.
    for (size_t pi = 0; pi < sys.size(); ++pi) {
        for (size_t v = 0; v < ctx.nvars; ++v) {
            if (sys[pi].degree_in(v) != 2) continue;
            std::vector<MPoly> cs = sys[pi].coeffs_in(v);
            if (!cs[2].is_constant()) continue;
            Rat c2 = cs[2].constant_value();
            MPoly disc = cs[1] * cs[1] - cs[0] * (4 * c2);
            MPoly root(ctx.nvars);
            if (!affine_sqrt(disc, root)) {
                if (disc.is_constant() && sgn(disc.constant_value()) < 0) {
                    // Negative discriminant: no real zeros from this factor,
                    // but other polynomials may still have solutions... the
                    // whole product must vanish, so this branch is empty
                    // only if the system forces this polynomial to vanish.
                    return;  // no real solution of this constraint at all
                }
                continue;
            }
            for (int s : {1, -1}) {
                MPoly expr = (cs[1] * Rat(-1) + root * Rat(s)) * (Rat(1) / (2 * c2));
                std::vector<MPoly> rest;
                for (size_t j = 0; j < sys.size(); ++j)
                    if (j != pi) rest.push_back(sys[j]);
                Subst sub = subst;
                apply_subst(rest, sub, v, expr);
                solve_rec(ctx, std::move(rest), std::move(sub), depth + 1);
                if (root.is_zero()) break;  // double root: one branch
            }
            return;
        }
    }

    ctx.out.complete = false;
    for (const MPoly& p : sys) ctx.out.residual.push_back(p);
}

Vec reduce_point(const Subspace& span, Vec point) {
    for (size_t i = 0; i < span.dim(); ++i) {
        Rat f = point[span.pivots()[i]];
        if (is_zero(f)) continue;
        for (size_t j = 0; j < point.size(); ++j) point[j] -= f * span.basis()[i][j];
    }
    return point;
}

}  // namespace

PolySolveResult solve_poly_system(size_t nvars, const std::vector<MPoly>& system) {
    SolveCtx ctx;
    ctx.nvars = nvars;
    solve_rec(ctx, system, {}, 0);

    // Canonicalize: reduce points modulo direction spans, absorb contained
    // components, order deterministically.
    struct Canon {
        Subspace span;
        Vec point;
    };
    std::vector<Canon> canon;
    for (const AffineComponent& c : ctx.out.components) {
        Subspace sp = Subspace::span(nvars, c.directions);
        Vec pt = reduce_point(sp, c.point);
        bool seen = false;
        for (const Canon& k : canon)
            if (k.span == sp && k.point == pt) seen = true;
        if (!seen) canon.push_back({std::move(sp), std::move(pt)});
    }
    // Drop components strictly contained in another one.
    std::vector<bool> drop(canon.size(), false);
    for (size_t i = 0; i < canon.size(); ++i)
        for (size_t j = 0; j < canon.size(); ++j) {
            if (i == j || drop[i] || drop[j]) continue;
            if (!canon[j].span.contains(canon[i].span)) continue;
            Vec diff = canon[i].point;
            for (size_t k = 0; k < nvars; ++k) diff[k] -= canon[j].point[k];
            if (canon[j].span.contains(diff)) drop[i] = true;
        }
    std::vector<AffineComponent> kept;
    for (size_t i = 0; i < canon.size(); ++i) {
        if (drop[i]) continue;
        kept.push_back({canon[i].point, canon[i].span.basis()});
    }
    std::sort(kept.begin(), kept.end(), [](const AffineComponent& a, const AffineComponent& b) {
        if (a.directions.size() != b.directions.size())
            return a.directions.size() < b.directions.size();
        if (a.point != b.point) return a.point < b.point;
        return a.directions < b.directions;
    });
    ctx.out.components = std::move(kept);
    std::sort(ctx.out.notes.begin(), ctx.out.notes.end());
    std::set<MPoly> res(ctx.out.residual.begin(), ctx.out.residual.end());
    ctx.out.residual.assign(res.begin(), res.end());
    return ctx.out;
}

}  // namespace specon
