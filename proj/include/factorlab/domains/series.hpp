#pragma once

// d12: power series with rational coefficients where the coefficient of x^q
// must be an integer for q <= 1, exponents have bounded denominator, and
// everything is truncated at a configurable order T (arithmetic is exact on
// exponents below T; every divisibility statement is "at truncation order").
//
// Units are the series with constant term +-1. A factorization with constant
// terms (a, b) is found, when it exists, by solving the coefficient
// equations grid-point by grid-point: at exponents <= 1 the equation
// a*eta_s + b*gamma_s = rhs must be solved over Z (branching on the choice
// mod gcd(a,b) when that gcd is a prime); above exponent 1 the coefficients
// are free rationals. For a constant term +-p^2 the only obstruction is a
// quadratic-residue condition at the first tail exponent whose coefficient
// is not divisible by p; that argument is denominator-free, so a failed
// residue gives exact irreducibility.

#include "factorlab/domains/ids.hpp"
#include "factorlab/rational.hpp"
#include "factorlab/search_bounds.hpp"
#include "factorlab/verdict.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace factorlab {

struct Series {
    std::map<Rat, Rat> terms;  // exponent -> nonzero coefficient

    void normalize() {
        for (auto it = terms.begin(); it != terms.end();)
            it = (it->second == 0) ? terms.erase(it) : std::next(it);
    }
    bool is_zero() const { return terms.empty(); }
    Rat coeff(const Rat& e) const {
        auto it = terms.find(e);
        return it == terms.end() ? Rat(0) : it->second;
    }
    Rat constant_term() const { return coeff(Rat(0)); }
    Rat min_exp() const { return terms.begin()->first; }
    static Series constant(const Rat& c) {
        Series s;
        if (c != 0) s.terms[Rat(0)] = c;
        return s;
    }
    static Series monomial(const Rat& c, const Rat& e) {
        Series s;
        if (c != 0) s.terms[e] = c;
        return s;
    }
    friend bool operator==(const Series& a, const Series& b) { return a.terms == b.terms; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }
    friend bool operator<(const Series& a, const Series& b) { return a.terms < b.terms; }
};

inline std::string series_str(const Series& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (auto& [e, c] : f.terms) {
        if (!s.empty()) s += " + ";
        s += rat_str(c);
        if (e != 0) s += "*x^(" + rat_str(e) + ")";
    }
    return s;
}

struct SeriesRing {
    Rat trunc = 4;                // keep exponents strictly below this
    long long den_bound = 4;      // advisory denominator bound for universes

    bool member(const Series& f) const {
        for (auto& [e, c] : f.terms) {
            if (e < 0 || e >= trunc) return false;
            if (e <= 1 && !is_integer(c)) return false;
        }
        return true;
    }
    void require_member(const Series& f) const {
        if (!member(f)) throw std::invalid_argument("series not in the ring");
    }
    bool is_unit(const Series& f) const {
        Rat c = f.constant_term();
        return c == 1 || c == -1;
    }

    Series truncate(Series f) const {
        for (auto it = f.terms.begin(); it != f.terms.end();)
            it = (it->first >= trunc) ? f.terms.erase(it) : std::next(it);
        return f;
    }
    Series add(const Series& a, const Series& b) const {
        Series r = a;
        for (auto& [e, c] : b.terms) r.terms[e] += c;
        r.normalize();
        return truncate(r);
    }
    Series sub(const Series& a, const Series& b) const {
        Series r = a;
        for (auto& [e, c] : b.terms) r.terms[e] -= c;
        r.normalize();
        return truncate(r);
    }
    Series mul(const Series& a, const Series& b) const {
        Series r;
        for (auto& [e1, c1] : a.terms)
            for (auto& [e2, c2] : b.terms)
                if (e1 + e2 < trunc) r.terms[e1 + e2] += c1 * c2;
        r.normalize();
        return r;
    }

    // g | f at truncation order: the quotient is computed by min-term
    // elimination and must satisfy the ring's integrality constraints.
    bool divides(const Series& g, const Series& f, Series* quot = nullptr) const {
        if (g.is_zero()) return false;
        if (f.is_zero()) {
            if (quot) *quot = Series();
            return true;
        }
        Rat q0 = g.min_exp();
        Rat c0 = g.terms.begin()->second;
        Series h, r = f;
        while (!r.is_zero()) {
            Rat e = r.min_exp() - q0;
            if (e < 0) return false;
            Rat c = r.terms.begin()->second / c0;
            if (e <= 1 && !is_integer(c)) return false;
            h.terms[e] = c;
            r = sub(r, mul(Series::monomial(c, e), g));
        }
        if (!member(h)) return false;
        if (quot) *quot = h;
        return true;
    }
};

// ---- two-factor lifting -----------------------------------------------------

struct SeriesSplit {
    Series left, right;
};

namespace d12_detail {

inline std::vector<Rat> grid_points(const Int& D, const Rat& T) {
    std::vector<Rat> g;
    for (Int j = 1; Rat(j, D) < T; ++j) g.push_back(Rat(j, D));
    return g;
}

// The factor grid: lcm of the ring's denominator budget (splits may need any
// root up to the bound, e.g. constants p^3 factor through cube roots) and
// the element's own exponent denominators, doubled for half-shifts.
inline Int grid_denominator(const SeriesRing& R, const Series& f, const Int& extra) {
    Int D = extra;
    for (long long k = 2; k <= R.den_bound; ++k) {
        Int kk = k;
        D = D / int_gcd(D, kk) * kk;
    }
    for (auto& [e, c] : f.terms) {
        (void)c;
        Int d = den(e);
        D = D / int_gcd(D, d) * d;
    }
    return D;
}

// Solve f = (a + gamma)(b + eta) at truncation order, gamma/eta supported on
// the 1/D grid with integer coefficients at exponents <= 1. DFS over the
// residue choice when gcd(a, b) > 1; branch_mod widens the branching window
// (the residue mod gcd is not always enough because later divisibility
// conditions see second-order data through the cross terms).
inline std::optional<SeriesSplit> bilift(const SeriesRing& R, const Series& f, const Int& a,
                                         const Int& b, const Int& D, const Int& branch_mod,
                                         long node_cap = 500000) {
    auto grid = grid_points(D, R.trunc);
    size_t M = grid.size();
    Int g = int_gcd(int_abs(a), int_abs(b));
    // extended gcd for a u + b v = g
    Int u = 0, v = 0;
    {
        Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            Int q = old_r / r;
            Int tmp = old_r - q * r; old_r = r; r = tmp;
            tmp = old_s - q * s; old_s = s; s = tmp;
            tmp = old_t - q * t; old_t = t; t = tmp;
        }
        if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
        u = old_s;
        v = old_t;
    }

    std::vector<Rat> gamma(M, Rat(0)), eta(M, Rat(0));
    long nodes = 0;

    std::function<bool(size_t)> solve = [&](size_t i) -> bool {
        if (++nodes > node_cap) return false;
        if (i == M) return true;
        Rat s = grid[i];
        // rhs = f_s - sum_{q + q' = s} gamma_q eta_{q'}
        Rat rhs = 0;
        {
            auto it = f.terms.find(s);
            if (it != f.terms.end()) rhs = it->second;
        }
        for (size_t j = 0; j < i; ++j) {
            Rat e2 = s - grid[j];
            if (e2 <= 0) break;
            // e2 on grid: index = e2 * D - 1
            Rat idxr = e2 * Rat(D);
            if (!is_integer(idxr)) continue;
            long idx = (long)(long long)num(idxr) - 1;
            if (idx < 0 || (size_t)idx >= i) continue;
            rhs -= gamma[j] * eta[(size_t)idx];
        }
        if (s > 1) {
            // free rational coefficients: put everything into eta
            gamma[i] = 0;
            eta[i] = rhs / Rat(a);
            if (solve(i + 1)) return true;
            eta[i] = 0;
            return false;
        }
        // integer level: a*eta_i + b*gamma_i = rhs
        if (!is_integer(rhs / Rat(g))) return false;
        Int scale = num(rhs / Rat(g));
        Int eta0 = u * scale, gamma0 = v * scale;
        // family: eta = eta0 + t*(b/g), gamma = gamma0 - t*(a/g)
        Int bg = b / g, ag = a / g;
        long long branches = (g == 1) ? 1 : (long long)branch_mod;
        for (long long t = 0; t < branches; ++t) {
            eta[i] = Rat(eta0 + Int(t) * bg);
            gamma[i] = Rat(gamma0 - Int(t) * ag);
            if (solve(i + 1)) return true;
        }
        eta[i] = 0;
        gamma[i] = 0;
        return false;
    };

    if (!solve(0)) return std::nullopt;
    Series left = Series::constant(Rat(a)), right = Series::constant(Rat(b));
    for (size_t i = 0; i < M; ++i) {
        if (gamma[i] != 0) left.terms[grid[i]] = gamma[i];
        if (eta[i] != 0) right.terms[grid[i]] = eta[i];
    }
    if (R.mul(left, right) != R.truncate(f)) return std::nullopt;
    if (!R.member(left) || !R.member(right)) return std::nullopt;
    return SeriesSplit{left, right};
}

// Deterministic lift with gamma fixed to a single term c x^u: eta follows
// level by level with no branching. Covers the canonical constructions
// (sums of p-th powers, residue-based quadratics) cheaply.
inline std::optional<SeriesSplit> single_term_lift(const SeriesRing& R, const Series& f,
                                                   const Int& a, const Int& b, const Rat& u,
                                                   const Int& c, const Int& D) {
    auto grid = grid_points(D, R.trunc);
    size_t M = grid.size();
    std::vector<Rat> eta(M, Rat(0));
    auto gamma_at = [&](const Rat& e) { return e == u ? Rat(c) : Rat(0); };
    for (size_t i = 0; i < M; ++i) {
        Rat s = grid[i];
        Rat rhs = 0;
        auto it = f.terms.find(s);
        if (it != f.terms.end()) rhs = it->second;
        rhs -= Rat(b) * gamma_at(s);
        // cross: gamma_u * eta_{s-u}
        Rat rem = s - u;
        if (rem > 0) {
            Rat idxr = rem * Rat(D);
            if (is_integer(idxr)) {
                long idx = (long)(long long)num(idxr) - 1;
                if (idx >= 0 && (size_t)idx < i) rhs -= Rat(c) * eta[(size_t)idx];
            }
        }
        Rat e = rhs / Rat(a);
        if (s <= 1 && !is_integer(e)) return std::nullopt;
        eta[i] = e;
    }
    Series left = Series::constant(Rat(a)), right = Series::constant(Rat(b));
    if (u < R.trunc) left.terms[u] = Rat(c);
    left.normalize();
    for (size_t i = 0; i < M; ++i)
        if (eta[i] != 0) right.terms[grid[i]] = eta[i];
    if (R.mul(left, right) != R.truncate(f)) return std::nullopt;
    if (!R.member(left) || !R.member(right)) return std::nullopt;
    return SeriesSplit{left, right};
}

}  // namespace d12_detail

// Exact irreducibility decision for d12 at truncation order.
//   constant 0          -> refuted (a small monomial splits off)
//   |constant| prime    -> holds (exact)
//   |constant| = p^2    -> quadratic-residue test at the first tail exponent
//                          not divisible by p; failure is exact irreducibility
//   other composites    -> refuted with a constructed split
inline Verdict<SeriesSplit> series_irreducible(const SeriesRing& R, const Series& f,
                                               const SearchBounds& bounds) {
    if (f.is_zero() || R.is_unit(f))
        throw std::invalid_argument("series_irreducible: zero or unit input");
    R.require_member(f);
    Rat c = f.constant_term();
    if (c == 0) {
        // x^eps splits off once eps is small enough that rational
        // coefficients stay above exponent 1 (denominator enlarged, recorded)
        Rat q0 = f.min_exp();
        Rat eps = q0 / 2;
        for (auto& [e, cc] : f.terms)
            if (e > 1 && !is_integer(cc)) {
                Rat cap = (e - Rat(1)) / 2;
                eps = std::min(eps, cap);
                break;  // terms are sorted: the first rational one is binding
            }
        Series mono = Series::monomial(Rat(1), eps);
        Series rest;
        for (auto& [e, cc] : f.terms) rest.terms[e - eps] = cc;
        return Verdict<SeriesSplit>::make_refuted("zero constant term: monomial splits off",
                                                  SeriesSplit{mono, rest}, bounds);
    }
    Int C = num(c);
    if (int_is_prime(int_abs(C)))
        return Verdict<SeriesSplit>::make_holds("rational prime constant term",
                                                SeriesSplit{f, f}, bounds);

    // p divides every coefficient on the integer line: trivial split
    for (auto& [p, mult] : int_factorize(int_abs(C))) {
        (void)mult;
        bool all = true;
        for (auto& [e, cc] : f.terms)
            if (e <= 1 && !is_integer(cc / Rat(p))) { all = false; break; }
        if (all) {
            Series rest;
            for (auto& [e, cc] : f.terms) rest.terms[e] = cc / Rat(p);
            return Verdict<SeriesSplit>::make_refuted(
                "prime divides the whole integer line",
                SeriesSplit{Series::constant(Rat(p)), rest}, bounds);
        }
    }

    auto factz = int_factorize(int_abs(C));
    bool prime_square = factz.size() == 1 && factz[0].second == 2;

    // Quadratic-residue obstruction for prime-square constants, tested
    // before any search: any split (+-p, +-p) forces matching shadows of
    // joint valuation s0/2, and the level-s0 equation becomes -x^2 = f_{s0}
    // (mod p) (x^2 for constant -p^2), where s0 is the minimal positive
    // exponent. The argument never references the exponent grid, so a failed
    // residue is exact irreducibility.
    if (prime_square) {
        Int p = factz[0].first;
        auto modp = [&](const Int& x) {
            Int r = x % p;
            if (r < 0) r += p;
            return r;
        };
        Rat s0(-1);
        Int m0 = 0;
        for (auto& [e, cc] : f.terms)
            if (e > 0) {
                if (e <= 1 && is_integer(cc) && num(cc) % p != 0) {
                    s0 = e;
                    m0 = modp(num(cc));
                }
                break;  // only the minimal positive exponent qualifies
            }
        if (s0 >= 0 && m0 != 0) {
            Int target = C > 0 ? modp(-m0) : modp(m0);
            bool qr = false;
            for (Int x = 1; x < p; ++x)
                if (x * x % p == target) { qr = true; break; }
            if (!qr)
                return Verdict<SeriesSplit>{
                    Outcome::holds, false,
                    "prime-square constant with non-residue leading tail: irreducible at "
                    "every denominator",
                    SeriesSplit{f, f}, bounds};
        }
    }

    // divisor pairs (a, b), both non-units, in both orders and signs
    std::vector<std::pair<Int, Int>> pairs;
    for (Int a = 2; a * a <= int_abs(C); ++a) {
        if (int_abs(C) % a != 0) continue;
        Int b = C / a;  // sign rides on b
        pairs.push_back({a, b});
        pairs.push_back({-a, -b});
        if (int_abs(b) != a) {
            pairs.push_back({b, a});
            pairs.push_back({-b, -a});
        }
    }
    Int D = d12_detail::grid_denominator(R, f, 2 * Int(R.den_bound));
    auto grid = d12_detail::grid_points(D, R.trunc);

    // deterministic single-term lifts first
    for (auto& [a, b] : pairs) {
        Int g = int_gcd(int_abs(a), int_abs(b));
        for (auto& u : grid) {
            if (u > 1) break;
            for (Int c = 1; c <= std::max(Int(1), g); ++c) {
                auto split = d12_detail::single_term_lift(R, f, a, b, u, c, D);
                if (split)
                    return Verdict<SeriesSplit>::make_refuted(
                        "constructed split with constants " + a.str() + ", " + b.str(),
                        *split, bounds);
            }
        }
    }
    // branching search as a backstop
    for (auto& [a, b] : pairs) {
        auto split = d12_detail::bilift(R, f, a, b, D, int_gcd(int_abs(a), int_abs(b)), 60000);
        if (split)
            return Verdict<SeriesSplit>::make_refuted(
                "constructed split with constants " + a.str() + ", " + b.str(), *split, bounds);
    }
    return Verdict<SeriesSplit>::make_unknown("no split found within grid bounds", bounds);
}

}  // namespace factorlab
