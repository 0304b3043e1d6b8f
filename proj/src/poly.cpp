#include "specon/poly.hpp"

#include <algorithm>
#include <set>

#include "specon/subspace.hpp"

namespace specon {

UPoly utrim(UPoly p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
    return p;
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

Rat ueval(const UPoly& p, const Rat& x) {
    Rat v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

UPoly uderiv(const UPoly& p) {
    UPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * p[i]);
    return utrim(d);
}

UPoly uadd(const UPoly& p, const UPoly& q) {
    UPoly r(std::max(p.size(), q.size()));
    for (size_t i = 0; i < p.size(); ++i) r[i] += p[i];
    for (size_t i = 0; i < q.size(); ++i) r[i] += q[i];
    return utrim(r);
}

UPoly umul(const UPoly& p, const UPoly& q) {
    if (p.empty() || q.empty()) return {};
    UPoly r(p.size() + q.size() - 1);
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return utrim(r);
}

UPoly urem(UPoly p, const UPoly& q) {
    p = utrim(std::move(p));
    if (q.empty()) throw structural_error("polynomial remainder by zero");
    while (p.size() >= q.size() && !p.empty()) {
        Rat f = p.back() / q.back();
        size_t shift = p.size() - q.size();
        for (size_t i = 0; i < q.size(); ++i) p[shift + i] -= f * q[i];
        p = utrim(std::move(p));
    }
    return p;
}

UPoly udeflate(const UPoly& p, const Rat& r) {
    if (p.empty()) return {};
    UPoly q(p.size() - 1);
    Rat carry = 0;
    for (size_t i = p.size(); i-- > 1;) {
        carry = p[i] + carry * r;
        q[i - 1] = carry;
    }
    if (p[0] + carry * r != 0) throw structural_error("deflation by a non-root");
    return utrim(std::move(q));
}

namespace {

UPoly umonic(UPoly p) {
    p = utrim(std::move(p));
    if (p.empty()) return p;
    Rat inv = 1 / p.back();
    for (Rat& c : p) c *= inv;
    return p;
}

UPoly ugcd(UPoly p, UPoly q) {
    p = utrim(std::move(p));
    q = utrim(std::move(q));
    while (!q.empty()) {
        UPoly r = urem(p, q);
        p = std::move(q);
        q = std::move(r);
    }
    return umonic(std::move(p));
}

UPoly udiv_exact(UPoly p, const UPoly& q) {
    p = utrim(std::move(p));
    if (q.empty()) throw structural_error("polynomial division by zero");
    UPoly quot(p.size() >= q.size() ? p.size() - q.size() + 1 : 0);
    while (p.size() >= q.size() && !p.empty()) {
        Rat f = p.back() / q.back();
        size_t shift = p.size() - q.size();
        quot[shift] = f;
        for (size_t i = 0; i < q.size(); ++i) p[shift + i] -= f * q[i];
        p = utrim(std::move(p));
    }
    if (!p.empty()) throw structural_error("inexact polynomial division");
    return utrim(std::move(quot));
}

std::vector<mpz_class> divisors(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    if (n == 0) throw structural_error("divisors of zero");
    std::vector<mpz_class> out;
    mpz_class d = 1;
    long steps = 0;
    for (; d * d <= n; ++d) {
        if (++steps > 20000000) throw structural_error("rational root search out of range");
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

}  // namespace

std::vector<Rat> rational_roots(const UPoly& p_in) {
    UPoly p = utrim(p_in);
    std::vector<Rat> roots;
    if (p.empty() || p.size() == 1) return roots;
    // Strip powers of x.
    size_t low = 0;
    while (low < p.size() && is_zero(p[low])) ++low;
    if (low > 0) {
        roots.push_back(Rat(0));
        p.erase(p.begin(), p.begin() + low);
        if (p.size() <= 1) return roots;
    }
    // Clear denominators and content.
    mpz_class den_lcm = 1;
    for (const Rat& c : p) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        den_lcm = den_lcm / g * c.get_den();
    }
    std::vector<mpz_class> ic(p.size());
    mpz_class content = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        ic[i] = mpz_class(p[i].get_num() * (den_lcm / p[i].get_den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ic[i].get_mpz_t());
    }
    for (auto& c : ic) c /= content;
    for (const mpz_class& num : divisors(ic.front()))
        for (const mpz_class& den : divisors(ic.back()))
            for (int s : {1, -1}) {
                Rat cand(s * num, den);
                cand.canonicalize();
                if (ueval(p, cand) == 0) roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

int count_real_roots(const UPoly& p_in) {
    UPoly p = utrim(p_in);
    if (p.empty()) throw structural_error("real-root count of the zero polynomial");
    if (p.size() == 1) return 0;
    UPoly g = ugcd(p, uderiv(p));
    if (udeg(g) > 0) p = udiv_exact(p, g);  // square-free part
    std::vector<UPoly> chain{p, uderiv(p)};
    while (!chain.back().empty() && udeg(chain.back()) > 0) {
        UPoly r = urem(chain[chain.size() - 2], chain.back());
        for (Rat& c : r) c = -c;
        if (r.empty()) break;
        chain.push_back(r);
    }
    auto sign_changes = [&](bool at_plus_inf) {
        int changes = 0, prev = 0;
        for (const UPoly& q : chain) {
            if (q.empty()) continue;
            int s = sgn(q.back());
            if (!at_plus_inf && udeg(q) % 2 == 1) s = -s;
            if (prev != 0 && s != 0 && s != prev) ++changes;
            if (s != 0) prev = s;
        }
        return changes;
    };
    return sign_changes(false) - sign_changes(true);
}

UPoly char_poly(const Mat& m) {
    if (m.rows != m.cols) throw structural_error("characteristic polynomial of non-square matrix");
    size_t n = m.rows;
    UPoly coeffs(n + 1);
    coeffs[n] = 1;
    Mat mk = m;
    for (size_t k = 1; k <= n; ++k) {
        Rat ak = -trace(mk) / Rat(static_cast<long>(k));
        coeffs[n - k] = ak;
        if (k < n) {
            Mat shifted = mk;
            for (size_t i = 0; i < n; ++i) shifted(i, i) += ak;
            mk = m * shifted;
        }
    }
    return utrim(std::move(coeffs));
}

UPoly det_pencil(const Mat& x, const Mat& y) {
    if (x.rows != x.cols || y.rows != y.cols || x.rows != y.rows)
        throw structural_error("det_pencil needs equal square matrices");
    size_t n = x.rows;
    if (n == 0) return UPoly{Rat(1)};
    std::vector<Rat> ts, ds;
    for (size_t i = 0; i <= n; ++i) {
        Rat t(static_cast<long>(i));
        Mat m = t * x + y;
        ts.push_back(t);
        ds.push_back(det(m));
    }
    // Lagrange interpolation.
    UPoly acc;
    for (size_t i = 0; i <= n; ++i) {
        UPoly term{ds[i]};
        for (size_t j = 0; j <= n; ++j) {
            if (j == i) continue;
            Rat inv = 1 / (ts[i] - ts[j]);
            term = umul(term, UPoly{-ts[j] * inv, inv});
        }
        acc = uadd(acc, term);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// MPoly

MPoly MPoly::constant(size_t nvars, const Rat& c) {
    MPoly p(nvars);
    p.add_term(Expo(nvars, 0), c);
    return p;
}

MPoly MPoly::var(size_t nvars, size_t i) {
    MPoly p(nvars);
    Expo e(nvars, 0);
    e[i] = 1;
    p.add_term(e, Rat(1));
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rat MPoly::constant_value() const {
    Expo zero(nvars_, 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rat(0) : it->second;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (unsigned x : e) t += static_cast<int>(x);
        d = std::max(d, t);
    }
    return d;
}

int MPoly::degree_in(size_t var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

void MPoly::add_term(const Expo& e, const Rat& c) {
    if (specon::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (specon::is_zero(it->second)) terms_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Expo e = e1;
            for (size_t i = 0; i < nvars_; ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MPoly MPoly::operator*(const Rat& s) const {
    MPoly r(nvars_);
    if (specon::is_zero(s)) return r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
}

MPoly MPoly::operator-() const { return *this * Rat(-1); }

bool MPoly::operator<(const MPoly& o) const {
    if (total_degree() != o.total_degree()) return total_degree() < o.total_degree();
    if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size();
    return terms_ < o.terms_;
}

MPoly MPoly::substitute(size_t var, const MPoly& value) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        MPoly term(nvars_);
        Expo rest = e;
        unsigned pow = rest[var];
        rest[var] = 0;
        term.add_term(rest, c);
        for (unsigned k = 0; k < pow; ++k) term = term * value;
        r = r + term;
    }
    return r;
}

Rat MPoly::eval(const Vec& point) const {
    if (point.size() != nvars_) throw structural_error("evaluation point of wrong arity");
    Rat total = 0;
    for (const auto& [e, c] : terms_) {
        Rat m = c;
        for (size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) m *= point[i];
        total += m;
    }
    return total;
}

std::vector<MPoly> MPoly::coeffs_in(size_t var) const {
    std::vector<MPoly> out(static_cast<size_t>(degree_in(var)) + 1, MPoly(nvars_));
    for (const auto& [e, c] : terms_) {
        Expo rest = e;
        unsigned pow = rest[var];
        rest[var] = 0;
        out[pow].add_term(rest, c);
    }
    return out;
}

std::optional<UPoly> MPoly::as_univariate(size_t var) const {
    UPoly p(static_cast<size_t>(degree_in(var)) + 1);
    for (const auto& [e, c] : terms_) {
        for (size_t i = 0; i < nvars_; ++i)
            if (i != var && e[i] != 0) return std::nullopt;
        p[e[var]] += c;
    }
    return utrim(std::move(p));
}

bool MPoly::uses(size_t var) const {
    for (const auto& [e, c] : terms_)
        if (e[var] != 0) return true;
    return false;
}

MPoly MPoly::normalized() const {
    if (terms_.empty()) return *this;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& [e, c] : terms_) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        den_lcm = den_lcm / g * c.get_den();
    }
    for (const auto& [e, c] : terms_) {
        mpz_class num = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (sgn(terms_.rbegin()->second) < 0) scale = -scale;
    return *this * scale;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat ac = abs(c);
        if (out.empty())
            out += sgn(c) < 0 ? "-" : "";
        else
            out += sgn(c) < 0 ? " - " : " + ";
        bool has_var = false;
        std::string mono;
        for (size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (has_var) mono += "*";
            mono += "w" + std::to_string(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            has_var = true;
        }
        if (!has_var)
            out += rat_str(ac);
        else if (ac == 1)
            out += mono;
        else
            out += rat_str(ac) + "*" + mono;
    }
    return out;
}

}  // namespace specon
