#include "specon/rational.hpp"

#include <cctype>

namespace specon {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw parse_error("empty rational literal");
    size_t slashes = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            ++slashes;
            continue;
        }
        bool sign_ok = (c == '-' || c == '+') && (i == 0 || s[i - 1] == '/');
        if (!std::isdigit(static_cast<unsigned char>(c)) && !sign_ok)
            throw parse_error("bad character in rational literal '" + s + "'");
    }
    if (slashes > 1 || s.back() == '/' || s.front() == '/')
        throw parse_error("malformed rational literal '" + s + "'");
    std::string t = s;
    if (t.front() == '+') t.erase(0, 1);
    mpq_class q;
    if (q.set_str(t, 10) != 0) throw parse_error("malformed rational literal '" + s + "'");
    if (q.get_den() == 0) throw parse_error("zero denominator in rational literal '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string vec_str(const Vec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += rat_str(v[i]);
    }
    return out + ")";
}

}  // namespace specon
