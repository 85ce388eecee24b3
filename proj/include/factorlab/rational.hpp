#pragma once

// Exact arbitrary-precision integer and rational arithmetic.
//
// Int / Rat are thin aliases over boost::multiprecision; cpp_rational keeps
// fractions normalized (gcd 1, positive denominator) which is exactly the
// canonical form used everywhere in this library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace factorlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

// floor(q) as an Int, exact for negatives too.
inline Int rat_floor(const Rat& q) {
    Int n = num(q), d = den(q);
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

inline Int int_pow(Int base, unsigned long e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e >= 0) return Rat(int_pow(num(base), (unsigned long)e), int_pow(den(base), (unsigned long)e));
    if (base == 0) throw std::invalid_argument("rat_pow: 0 to negative power");
    return Rat(int_pow(den(base), (unsigned long)(-e)), int_pow(num(base), (unsigned long)(-e)));
}

// True iff q = m / 2^n for some integer m, n >= 0.
inline bool is_dyadic(const Rat& q) {
    Int d = den(q);
    while ((d & 1) == 0) d >>= 1;
    return d == 1;
}

inline bool int_is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if ((n & 1) == 0) return false;
    for (Int i = 3; i * i <= n; i += 2)
        if (n % i == 0) return false;
    return true;
}

// Prime factorization by trial division; fine for the coefficient heights
// this library works at. Returns (prime, multiplicity) pairs, ascending.
inline std::vector<std::pair<Int, int>> int_factorize(Int n) {
    if (n < 0) n = -n;
    std::vector<std::pair<Int, int>> out;
    if (n < 2) return out;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int m = 0;
            while (n % p == 0) { n /= p; ++m; }
            out.emplace_back(p, m);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// Number of prime factors counted with multiplicity.
inline long omega_with_multiplicity(const Int& n) {
    long c = 0;
    for (auto& [p, m] : int_factorize(n)) { (void)p; c += m; }
    return c;
}

inline std::string int_str(const Int& n) { return n.str(); }

// Canonical text form "p" or "p/q".
inline std::string rat_str(const Rat& q) {
    if (is_integer(q)) return num(q).str();
    return num(q).str() + "/" + den(q).str();
}

inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("rat_parse: zero denominator");
        return Rat(n, d);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
    }
}

}  // namespace factorlab
