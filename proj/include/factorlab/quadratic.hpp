#pragma once

// The real quadratic field Q(sqrt(2)), represented exactly as a + b*sqrt2
// with rational a, b. This field stands in for every irrational scalar the
// constructions quantify over: the proofs only use Q-linear independence of
// {1, sqrt2}, and here comparisons stay exact and decidable.

#include "factorlab/rational.hpp"

#include <compare>
#include <stdexcept>
#include <string>

namespace factorlab {

struct QLin {
    Rat rat_part;  // a
    Rat irr_part;  // b, value = a + b*sqrt2

    QLin() = default;
    QLin(Rat a, Rat b) : rat_part(std::move(a)), irr_part(std::move(b)) {}
    explicit QLin(const Rat& a) : rat_part(a), irr_part(0) {}
    explicit QLin(int a) : rat_part(a), irr_part(0) {}

    static QLin sqrt2() { return QLin(Rat(0), Rat(1)); }

    bool is_zero() const { return rat_part == 0 && irr_part == 0; }
    bool is_rational() const { return irr_part == 0; }

    friend bool operator==(const QLin& u, const QLin& v) {
        return u.rat_part == v.rat_part && u.irr_part == v.irr_part;
    }
    friend bool operator!=(const QLin& u, const QLin& v) { return !(u == v); }

    friend QLin operator+(const QLin& u, const QLin& v) {
        return QLin(u.rat_part + v.rat_part, u.irr_part + v.irr_part);
    }
    friend QLin operator-(const QLin& u, const QLin& v) {
        return QLin(u.rat_part - v.rat_part, u.irr_part - v.irr_part);
    }
    friend QLin operator-(const QLin& u) { return QLin(-u.rat_part, -u.irr_part); }
    friend QLin operator*(const QLin& u, const QLin& v) {
        // (a1 + b1 s)(a2 + b2 s) = a1 a2 + 2 b1 b2 + (a1 b2 + a2 b1) s
        return QLin(u.rat_part * v.rat_part + 2 * u.irr_part * v.irr_part,
                    u.rat_part * v.irr_part + u.irr_part * v.rat_part);
    }

    QLin conj() const { return QLin(rat_part, -irr_part); }

    // Field norm a^2 - 2 b^2; zero iff the value is zero.
    Rat norm() const { return rat_part * rat_part - 2 * irr_part * irr_part; }

    QLin inverse() const {
        if (is_zero()) throw std::invalid_argument("QLin: division by zero");
        Rat n = norm();
        return QLin(rat_part / n, -irr_part / n);
    }
    friend QLin operator/(const QLin& u, const QLin& v) { return u * v.inverse(); }

    // Exact sign of a + b*sqrt2 by sign analysis and squaring; never floats.
    int sign() const {
        int sa = rat_part == 0 ? 0 : (rat_part > 0 ? 1 : -1);
        int sb = irr_part == 0 ? 0 : (irr_part > 0 ? 1 : -1);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: compare a^2 with 2 b^2; the larger magnitude wins.
        Rat a2 = rat_part * rat_part, b22 = 2 * irr_part * irr_part;
        if (a2 == b22) return 0;  // impossible for b != 0 (sqrt2 irrational), kept for totality
        return a2 > b22 ? sa : sb;
    }

    friend bool operator<(const QLin& u, const QLin& v) { return (u - v).sign() < 0; }
    friend bool operator<=(const QLin& u, const QLin& v) { return (u - v).sign() <= 0; }
    friend bool operator>(const QLin& u, const QLin& v) { return (u - v).sign() > 0; }
    friend bool operator>=(const QLin& u, const QLin& v) { return (u - v).sign() >= 0; }
};

inline int qlin_cmp(const QLin& u, const QLin& v) { return (u - v).sign(); }

enum class QLinOp { add, sub, mul, div };

inline QLin qlin_arith(const QLin& u, const QLin& v, QLinOp op) {
    switch (op) {
        case QLinOp::add: return u + v;
        case QLinOp::sub: return u - v;
        case QLinOp::mul: return u * v;
        case QLinOp::div:
            if (v.is_zero()) throw std::invalid_argument("qlin_arith: division by zero");
            return u / v;
    }
    throw std::invalid_argument("qlin_arith: bad op");
}

// Canonical text form "p/q + r/s*sqrt2" (pure-rational values print as "p/q").
inline std::string qlin_str(const QLin& x) {
    if (x.irr_part == 0) return rat_str(x.rat_part);
    return rat_str(x.rat_part) + " + " + rat_str(x.irr_part) + "*sqrt2";
}

inline QLin qlin_parse(const std::string& s) {
    auto star = s.find("*sqrt2");
    if (star == std::string::npos) return QLin(rat_parse(s));
    auto plus = s.rfind(" + ", star);
    if (plus == std::string::npos) throw std::invalid_argument("qlin_parse: bad form '" + s + "'");
    return QLin(rat_parse(s.substr(0, plus)), rat_parse(s.substr(plus + 3, star - plus - 3)));
}

}  // namespace factorlab
