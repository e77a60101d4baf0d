#include "trop/rational.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace trop {

namespace {

// U+2212 (minus sign) as UTF-8.
const std::string kUnicodeMinus = "\xe2\x88\x92";

std::string normalize_minus(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        if (text.substr(i, 3) == kUnicodeMinus) {
            s += '-';
            i += 3;
        } else {
            s += text[i];
            ++i;
        }
    }
    return s;
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

Int parse_int(const std::string& s) {
    if (s.empty()) throw TropError("parse-error", "empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw TropError("parse-error", "bare sign in '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw TropError("parse-error", "bad integer literal '" + s + "'");
    // A leading zero would be read as an octal prefix by gmp.
    std::string digits = s.substr(start);
    std::size_t first = digits.find_first_not_of('0');
    if (first == std::string::npos) return Int(0);
    Int v(digits.substr(first));
    return s[0] == '-' ? Int(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s = strip(normalize_minus(text));
    if (s.empty()) throw TropError("parse-error", "empty rational literal");
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s));
    Int n = parse_int(strip(s.substr(0, slash)));
    Int d = parse_int(strip(s.substr(slash + 1)));
    return make_rational(n, d);
}

std::string format_rational(const Rational& q) { return q.str(); }

IntVec primitive_vector(IntVec v) {
    Int g = vec_content(v);
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

Int common_denominator(const RatVec& v) {
    Int l = 1;
    for (const Rational& q : v) l = boost::multiprecision::lcm(l, Int(denominator(q)));
    return l;
}

Rational dot(const RatVec& a, const RatVec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec to_rational(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return r;
}

Xgcd xgcd(Int a, Int b) {
    Int s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = b;
        b = r;
        Int s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        Int t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    return {a, s0, t0};
}

}  // namespace trop
