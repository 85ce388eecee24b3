#pragma once

// Dense univariate polynomials over an exact field (Rat or QLin).
// Coefficients ascending: c[i] is the coefficient of x^i.

#include "factorlab/quadratic.hpp"
#include "factorlab/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace factorlab {

template <class K>
inline K field_zero() { return K(0); }
template <>
inline QLin field_zero<QLin>() { return QLin(Rat(0)); }

template <class K>
inline bool field_is_zero(const K& x) { return x == K(0); }
template <>
inline bool field_is_zero<QLin>(const QLin& x) { return x.is_zero(); }

template <class K>
struct DPoly {
    std::vector<K> c;

    DPoly() = default;
    explicit DPoly(std::vector<K> cc) : c(std::move(cc)) { trim(); }
    static DPoly constant(const K& k) {
        DPoly p;
        if (!field_is_zero(k)) p.c.push_back(k);
        return p;
    }
    static DPoly monomial(const K& k, size_t e) {
        DPoly p;
        if (!field_is_zero(k)) {
            p.c.assign(e + 1, field_zero<K>());
            p.c[e] = k;
        }
        return p;
    }

    void trim() {
        while (!c.empty() && field_is_zero(c.back())) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long deg() const { return (long)c.size() - 1; }  // -1 for zero
    const K& lead() const {
        if (is_zero()) throw std::invalid_argument("lead of zero polynomial");
        return c.back();
    }
    K at(size_t i) const { return i < c.size() ? c[i] : field_zero<K>(); }

    friend bool operator==(const DPoly& a, const DPoly& b) { return a.c == b.c; }
    friend bool operator!=(const DPoly& a, const DPoly& b) { return !(a == b); }

    friend DPoly operator+(const DPoly& a, const DPoly& b) {
        DPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), field_zero<K>());
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) + b.at(i);
        r.trim();
        return r;
    }
    friend DPoly operator-(const DPoly& a, const DPoly& b) {
        DPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), field_zero<K>());
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(i) - b.at(i);
        r.trim();
        return r;
    }
    friend DPoly operator*(const DPoly& a, const DPoly& b) {
        if (a.is_zero() || b.is_zero()) return DPoly();
        DPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, field_zero<K>());
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    DPoly scaled(const K& k) const {
        DPoly r = *this;
        for (auto& x : r.c) x = x * k;
        r.trim();
        return r;
    }

    K eval(const K& x) const {
        K acc = field_zero<K>();
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    DPoly derivative() const {
        DPoly r;
        for (size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * K(Rat((long long)i)));
        r.trim();
        return r;
    }

    // f(x + a)
    DPoly shifted(const K& a) const {
        DPoly r, xa;
        xa.c = {a, K(Rat(1))};
        DPoly pw = DPoly::constant(K(Rat(1)));
        for (size_t i = 0; i < c.size(); ++i) {
            r = r + pw.scaled(c[i]);
            pw = pw * xa;
        }
        return r;
    }
};

template <class K>
inline std::pair<DPoly<K>, DPoly<K>> divmod(const DPoly<K>& a, const DPoly<K>& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    DPoly<K> q, r = a;
    if (r.deg() < b.deg()) return {q, r};
    q.c.assign(r.deg() - b.deg() + 1, field_zero<K>());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        K f = r.lead() / b.lead();
        long d = r.deg() - b.deg();
        q.c[d] = q.c[d] + f;
        // r -= f * x^d * b
        for (size_t i = 0; i < b.c.size(); ++i) r.c[i + d] = r.c[i + d] - f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <class K>
inline bool divides_exactly(const DPoly<K>& b, const DPoly<K>& a, DPoly<K>* quot = nullptr) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return false;
    if (quot) *quot = q;
    return true;
}

template <class K>
inline DPoly<K> poly_monic(const DPoly<K>& a) {
    if (a.is_zero()) return a;
    K inv = K(Rat(1)) / a.lead();
    return a.scaled(inv);
}

template <class K>
inline DPoly<K> poly_gcd(DPoly<K> a, DPoly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = b;
        b = r;
    }
    return poly_monic(a);
}

template <class K>
inline DPoly<K> poly_pow(DPoly<K> base, long e) {
    DPoly<K> r = DPoly<K>::constant(K(Rat(1)));
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

inline std::string dpoly_str(const DPoly<Rat>& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (p.c[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += rat_str(p.c[i]);
        if (i > 0) s += "*x^" + std::to_string(i);
    }
    return s;
}

inline std::string dpoly_str(const DPoly<QLin>& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (field_is_zero(p.c[i])) continue;
        if (!s.empty()) s += " + ";
        s += "(" + qlin_str(p.c[i]) + ")";
        if (i > 0) s += "*x^" + std::to_string(i);
    }
    return s;
}

}  // namespace factorlab
