#pragma once

// appb: F2[X, y, Z]_(X, y, Z) with X = x^(Q>=0), Z = x^Q y^(>=2).
// Monomials x^a y^k live in the ring iff (k = 0 and a >= 0), (k = 1 and
// a >= 0), or k >= 2 (any rational a). Units are the polynomials with
// constant term 1. The irreducible elements are exactly those containing y
// as a term (coefficient of y equal to 1, constant term 0): anything else
// has a small monomial factor.

#include "factorlab/domains/ids.hpp"
#include "factorlab/rational.hpp"
#include "factorlab/setpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace factorlab {

struct AppBExp {
    Rat a;   // exponent of x
    long k;  // exponent of y, >= 0

    AppBExp() : a(0), k(0) {}
    AppBExp(Rat aa, long kk) : a(std::move(aa)), k(kk) {}

    friend AppBExp operator+(const AppBExp& u, const AppBExp& v) {
        return AppBExp(u.a + v.a, u.k + v.k);
    }
    friend bool operator==(const AppBExp& u, const AppBExp& v) {
        return u.k == v.k && u.a == v.a;
    }
    // lexicographic on (k, a): y-degree first, then the x-exponent
    friend bool operator<(const AppBExp& u, const AppBExp& v) {
        if (u.k != v.k) return u.k < v.k;
        return u.a < v.a;
    }
};

using AppBPoly = SetPoly<AppBExp>;

struct AppBRing {
    DomainId id = DomainId::AppB;

    static bool exp_ok(const AppBExp& e) {
        if (e.k < 0) return false;
        if (e.k <= 1) return e.a >= 0;
        return true;
    }
    bool member(const AppBPoly& f) const {
        for (auto& t : f.terms)
            if (!exp_ok(t)) return false;
        return true;
    }
    bool is_unit(const AppBPoly& f) const { return f.has_constant_term(); }

    static AppBPoly monomial(const Rat& a, long k) { return AppBPoly::monomial(AppBExp(a, k)); }
    static AppBPoly y() { return monomial(Rat(0), 1); }

    // multiply by the single term x^a y^k (exponent shift)
    static AppBPoly shift(const AppBPoly& f, const Rat& a, long k) {
        AppBPoly r;
        for (auto& t : f.terms) r.toggle(AppBExp(t.a + a, t.k + k));
        return r;
    }

    AppBExp minimal_term(const AppBPoly& f) const {
        if (f.is_zero()) throw std::invalid_argument("minimal_term: zero polynomial");
        return *f.terms.begin();
    }

    bool has_y_term(const AppBPoly& f) const { return f.terms.count(AppBExp(Rat(0), 1)) > 0; }

    // largest j with y^j dividing f inside the ring (terms with k - j <= 1
    // must keep a >= 0)
    long y_multiple_order(const AppBPoly& f) const {
        if (f.is_zero()) return 0;
        long kmin = f.terms.begin()->k;
        for (long j = kmin; j >= 0; --j) {
            bool ok = true;
            for (auto& t : f.terms)
                if (t.k - j <= 1 && t.a < 0) { ok = false; break; }
            if (ok) return j;
        }
        return 0;
    }

    std::optional<AppBPoly> divide(const AppBPoly& f, const Rat& a, long k) const {
        AppBPoly q = shift(f, -a, -k);
        if (!member(q)) return std::nullopt;
        return q;
    }

    std::string str(const AppBPoly& f) const {
        if (f.is_zero()) return "0";
        std::string s;
        for (auto& t : f.terms) {
            if (!s.empty()) s += " + ";
            if (t.a == 0 && t.k == 0) {
                s += "1";
                continue;
            }
            std::string part;
            if (t.a != 0) part += "x^(" + rat_str(t.a) + ")";
            if (t.k != 0) {
                if (!part.empty()) part += "*";
                part += "y^" + std::to_string(t.k);
            }
            s += part;
        }
        return s;
    }
};

}  // namespace factorlab
