#pragma once

// d24: the union of Z[x^(1/n)] over all n -- integer-coefficient polynomials
// in radicals of x. An element normalizes to a common exponent denominator;
// arithmetic lifts to the lcm. Divisibility and factorization reduce to
// Z[t] with t = x^(1/N); enlarging N beyond the lcm cannot create or destroy
// divisibility (a rational function in t^k that is a polynomial in t is a
// polynomial in t^k), but CAN split elements further, so irreducibility is
// decided per denominator and reported at the bound reached.

#include "factorlab/domains/ids.hpp"
#include "factorlab/intpoly_factor.hpp"
#include "factorlab/search_bounds.hpp"
#include "factorlab/verdict.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace factorlab {

struct RootPoly {
    std::map<Rat, Int> terms;  // exponent -> nonzero integer coefficient

    RootPoly() = default;
    static RootPoly constant(const Int& c) {
        RootPoly r;
        if (c != 0) r.terms[Rat(0)] = c;
        return r;
    }
    static RootPoly monomial(const Int& c, const Rat& e) {
        RootPoly r;
        if (c != 0) r.terms[e] = c;
        return r;
    }

    void normalize() {
        for (auto it = terms.begin(); it != terms.end();)
            it = (it->second == 0) ? terms.erase(it) : std::next(it);
    }
    bool is_zero() const { return terms.empty(); }
    bool well_formed() const {
        for (auto& [e, c] : terms)
            if (e < 0 || c == 0) return false;
        return true;
    }
    Int coeff(const Rat& e) const {
        auto it = terms.find(e);
        return it == terms.end() ? Int(0) : it->second;
    }
    Int constant_term() const { return coeff(Rat(0)); }
    Rat min_exp() const { return terms.begin()->first; }
    Rat max_exp() const { return terms.rbegin()->first; }
    bool is_unit() const {
        return terms.size() == 1 && terms.count(Rat(0)) &&
               (terms.at(Rat(0)) == 1 || terms.at(Rat(0)) == -1);
    }
    Int content() const {
        Int g = 0;
        for (auto& [e, c] : terms) g = int_gcd(g, c);
        return g;
    }
    // lcm of exponent denominators
    Int denominator() const {
        Int l = 1;
        for (auto& [e, c] : terms) l = l / int_gcd(l, den(e)) * den(e);
        return l;
    }

    friend RootPoly operator+(const RootPoly& a, const RootPoly& b) {
        RootPoly r = a;
        for (auto& [e, c] : b.terms) r.terms[e] += c;
        r.normalize();
        return r;
    }
    friend RootPoly operator-(const RootPoly& a, const RootPoly& b) {
        RootPoly r = a;
        for (auto& [e, c] : b.terms) r.terms[e] -= c;
        r.normalize();
        return r;
    }
    friend RootPoly operator*(const RootPoly& a, const RootPoly& b) {
        RootPoly r;
        for (auto& [e1, c1] : a.terms)
            for (auto& [e2, c2] : b.terms) r.terms[e1 + e2] += c1 * c2;
        r.normalize();
        return r;
    }
    friend bool operator==(const RootPoly& a, const RootPoly& b) { return a.terms == b.terms; }
    friend bool operator!=(const RootPoly& a, const RootPoly& b) { return !(a == b); }
    friend bool operator<(const RootPoly& a, const RootPoly& b) { return a.terms < b.terms; }
};

inline std::string rootpoly_str(const RootPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (auto& [e, c] : f.terms) {
        if (!s.empty()) s += " + ";
        s += c.str();
        if (e != 0) s += "*x^(" + rat_str(e) + ")";
    }
    return s;
}

// f as a Z[t] polynomial with t = x^(1/N); N must be a multiple of every
// exponent denominator.
inline ZPoly root_to_z(const RootPoly& f, const Int& N) {
    ZPoly z;
    for (auto& [e, c] : f.terms) {
        Rat k = e * Rat(N);
        if (!is_integer(k)) throw std::invalid_argument("root_to_z: denominator too small");
        size_t idx = (size_t)(unsigned long)num(k);
        if (z.size() <= idx) z.resize(idx + 1, 0);
        z[idx] = c;
    }
    return z;
}

inline RootPoly root_from_z(const ZPoly& z, const Int& N) {
    RootPoly f;
    for (size_t i = 0; i < z.size(); ++i)
        if (z[i] != 0) f.terms[Rat(Int(i), N)] = z[i];
    return f;
}

// Exact divisibility in d24: test in Z[t] at the lcm denominator.
inline bool root_divides(const RootPoly& g, const RootPoly& f, RootPoly* quot = nullptr) {
    if (g.is_zero()) return false;
    if (f.is_zero()) {
        if (quot) *quot = RootPoly();
        return true;
    }
    Int N = f.denominator();
    Int d = g.denominator();
    N = N / int_gcd(N, d) * d;
    DPoly<Rat> qf = zf::to_q(root_to_z(f, N)), qg = zf::to_q(root_to_z(g, N));
    DPoly<Rat> q;
    if (!divides_exactly(qg, qf, &q)) return false;
    for (auto& c : q.c)
        if (!is_integer(c)) return false;
    if (quot) {
        ZPoly z;
        for (auto& c : q.c) z.push_back(num(c));
        *quot = root_from_z(z, N);
    }
    return true;
}

struct RootSplit {
    RootPoly left, right;
};

// Irreducibility: constants are decided exactly; otherwise the element is
// tested as F(t^k) for every k with denominator within bounds. Holds is
// at-bound (a finer denominator beyond the bound could still split it);
// Refuted is exact with the witnessed split.
inline Verdict<RootSplit> root_irreducible(const RootPoly& f, const SearchBounds& bounds) {
    if (f.is_zero() || f.is_unit())
        throw std::invalid_argument("root_irreducible: zero or unit input");
    // constants
    if (f.terms.size() == 1 && f.terms.count(Rat(0))) {
        Int c = int_abs(f.constant_term());
        if (int_is_prime(c))
            return Verdict<RootSplit>::make_holds("rational prime constant", RootSplit{f, f},
                                                  bounds);
        auto fac = int_factorize(c);
        Int a = fac[0].first;
        Int b = (f.constant_term() < 0 ? -c : c) / a;
        return Verdict<RootSplit>::make_refuted(
            "composite constant",
            RootSplit{RootPoly::constant(a), RootPoly::constant(b)}, bounds);
    }
    // constant term zero: x^(q/2) splits off (denominator enlarged, recorded)
    if (f.constant_term() == 0) {
        Rat q = f.min_exp();
        RootPoly mono = RootPoly::monomial(1, q / 2);
        RootPoly rest;
        for (auto& [e, c] : f.terms) rest.terms[e - q / 2] = c;
        return Verdict<RootSplit>::make_refuted("zero constant term: monomial splits off",
                                                RootSplit{mono, rest}, bounds);
    }
    // content
    Int ct = f.content();
    if (int_abs(ct) >= 2) {
        Int p = int_factorize(int_abs(ct))[0].first;
        RootPoly rest;
        for (auto& [e, c] : f.terms) rest.terms[e] = c / p;
        return Verdict<RootSplit>::make_refuted("content has a prime factor",
                                                RootSplit{RootPoly::constant(p), rest}, bounds);
    }
    // Eisenstein at any prime decides irreducibility for every denominator
    // at once: substituting t -> t^k leaves the coefficient list unchanged.
    {
        ZPoly F = root_to_z(f, f.denominator());
        Int lead = F.back(), cst = F.front();
        for (auto& [p, m] : int_factorize(int_abs(cst))) {
            (void)m;
            if (lead % p == 0) continue;
            if ((cst / p) % p == 0) continue;
            bool all = true;
            for (size_t i = 0; i + 1 < F.size(); ++i)
                if (F[i] % p != 0) { all = false; break; }
            if (all)
                return Verdict<RootSplit>::make_holds("eisenstein at " + p.str(),
                                                      RootSplit{f, f}, bounds);
        }
    }
    // polynomial splits at each denominator within bounds
    Int N0 = f.denominator();
    for (Int k = 1; N0 * k <= bounds.max_denominator; ++k) {
        Int N = N0 * k;
        ZPoly z = root_to_z(f, N);
        auto fq = factor_q(zf::to_q(z));
        long pieces = fq.x_power > 0 ? 1 : 0;
        for (auto& [p, m] : fq.factors) { (void)p; pieces += m; }
        if (pieces >= 2) {
            // rebuild an explicit two-factor split with integer coefficients
            DPoly<Rat> left = fq.factors[0].first;
            ZPoly lz = zf::primitive_from_q(left);
            RootPoly g = root_from_z(lz, N);
            RootPoly h;
            if (!root_divides(g, f, &h)) throw std::runtime_error("root_irreducible: bad split");
            return Verdict<RootSplit>::make_refuted(
                "splits over denominator " + N.str(), RootSplit{g, h}, bounds);
        }
    }
    return Verdict<RootSplit>{Outcome::holds, true,
                              "irreducible at every denominator within bound", RootSplit{f, f},
                              bounds};
}

// Bounded divisor enumeration: subset products of the Z[t] factorizations
// over each denominator within bounds, plus constant divisors.
inline std::vector<RootPoly> root_divisors_up_to(const RootPoly& f, const SearchBounds& bounds) {
    std::set<RootPoly> seen;
    std::vector<RootPoly> out;
    auto consider = [&](RootPoly g) {
        if (g.is_zero() || g.is_unit()) return;
        // canonical: positive leading coefficient of the minimal term
        if (g.terms.begin()->second < 0) {
            RootPoly n;
            for (auto& [e, c] : g.terms) n.terms[e] = -c;
            g = n;
        }
        RootPoly q;
        if (!root_divides(g, f, &q)) return;
        if (q.is_unit()) return;  // proper divisors only
        Rat h(bounds.max_coeff_height);
        for (auto& [e, c] : g.terms)
            if (Rat(int_abs(c)) > h) return;
        if (seen.insert(g).second) out.push_back(g);
    };
    Int c0 = f.content();
    for (Int d = 2; d <= int_abs(c0); ++d)
        if (int_abs(c0) % d == 0) consider(RootPoly::constant(d));
    Int N0 = f.denominator();
    for (Int k = 1; N0 * k <= bounds.max_denominator; ++k) {
        Int N = N0 * k;
        auto fq = factor_q(zf::to_q(root_to_z(f, N)));
        std::vector<DPoly<Rat>> irr;
        for (long i = 0; i < fq.x_power; ++i) irr.push_back(DPoly<Rat>::monomial(Rat(1), 1));
        for (auto& [p, m] : fq.factors)
            for (long i = 0; i < m; ++i) irr.push_back(p);
        size_t n = irr.size();
        if (n > 16) continue;
        for (size_t code = 1; code + 1 < ((size_t)1 << n); ++code) {
            DPoly<Rat> prod = DPoly<Rat>::constant(Rat(1));
            for (size_t i = 0; i < n; ++i)
                if ((code >> i) & 1) prod = prod * irr[i];
            ZPoly z = zf::primitive_from_q(prod);
            consider(root_from_z(z, N));
            // content multiples of the subset product
            for (Int d = 2; d <= int_abs(c0); ++d)
                if (int_abs(c0) % d == 0) {
                    ZPoly zd = z;
                    for (auto& x : zd) x *= d;
                    consider(root_from_z(zd, N));
                }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace factorlab
