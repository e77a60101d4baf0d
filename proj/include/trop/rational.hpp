#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trop {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

// Domain failures carry a short machine-readable code plus a human detail.
class TropError : public std::runtime_error {
public:
    TropError(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Construct n/d in canonical form (lowest terms, positive denominator).
// Raw int pairs must not be fed to the mpq constructor directly: a negative
// denominator would be converted through unsigned long.
inline Rational make_rational(const Int& n, const Int& d) {
    if (d == 0) throw TropError("zero-denominator", "rational with denominator 0");
    return Rational(n, d);
}

// Accepts "p", "p/q", optional leading sign; U+2212 is treated as '-'.
Rational parse_rational(std::string_view text);

// "p" or "p/q", ASCII only. Inverse of parse_rational on canonical values.
std::string format_rational(const Rational& q);

// Floor division for integers (gmp's operator/ truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int vec_content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

// Divide by the content; direction (sign) is preserved.
IntVec primitive_vector(IntVec v);

// Least common multiple of denominators, always positive.
Int common_denominator(const RatVec& v);

Rational dot(const RatVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);
RatVec to_rational(const IntVec& v);

// g = gcd(a, b) together with s, t such that s*a + t*b = g.
struct Xgcd {
    Int g, s, t;
};
Xgcd xgcd(Int a, Int b);

}  // namespace trop
