#pragma once

// The additively closed set S generated by
//   (i)   alpha (a fixed positive irrational; instantiated as sqrt2),
//   (ii)  1/2^n for n in Z (all powers of two),
//   (iii) g(n,m) = (alpha + m/2^n) / p(n,m) for n,m >= 1, m odd,
// where p(n,m) is the odd prime paired with (n,m).
//
// Elements are written a*alpha + q with rational a, q; the representation is
// unique because alpha is irrational. Membership is decided exactly: the odd
// part of den(a) forces the generator-(iii) counts mod their primes, and the
// leftover must be a non-negative integer multiple of alpha plus a
// non-negative dyadic. Adding p more copies of a forced generator only
// shrinks both residuals, so the forced minimal counts already decide the
// question; the exhaustive multiset search in the test suite referees this.

#include "factorlab/prime_pairing.hpp"
#include "factorlab/quadratic.hpp"
#include "factorlab/search_bounds.hpp"
#include "factorlab/verdict.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace factorlab {

struct S4Elem {
    Rat alpha_coeff;  // coefficient of alpha
    Rat rat_coeff;    // pure rational part

    S4Elem() : alpha_coeff(0), rat_coeff(0) {}
    S4Elem(Rat a, Rat q) : alpha_coeff(std::move(a)), rat_coeff(std::move(q)) {}
    static S4Elem alpha() { return S4Elem(1, 0); }
    static S4Elem rational(const Rat& q) { return S4Elem(0, q); }

    bool is_zero() const { return alpha_coeff == 0 && rat_coeff == 0; }
    QLin value() const { return QLin(rat_coeff, alpha_coeff); }  // alpha = sqrt2

    friend S4Elem operator+(const S4Elem& u, const S4Elem& v) {
        return S4Elem(u.alpha_coeff + v.alpha_coeff, u.rat_coeff + v.rat_coeff);
    }
    friend S4Elem operator-(const S4Elem& u, const S4Elem& v) {
        return S4Elem(u.alpha_coeff - v.alpha_coeff, u.rat_coeff - v.rat_coeff);
    }
    friend S4Elem operator*(const Int& k, const S4Elem& v) {
        return S4Elem(Rat(k) * v.alpha_coeff, Rat(k) * v.rat_coeff);
    }
    friend bool operator==(const S4Elem& u, const S4Elem& v) {
        return u.alpha_coeff == v.alpha_coeff && u.rat_coeff == v.rat_coeff;
    }
    friend bool operator!=(const S4Elem& u, const S4Elem& v) { return !(u == v); }
    // Real order (alpha = sqrt2 > 0), exact.
    friend bool operator<(const S4Elem& u, const S4Elem& v) { return u.value() < v.value(); }
};

// Canonical text encoding "a*alpha + q".
inline std::string s4_str(const S4Elem& t) {
    return rat_str(t.alpha_coeff) + "*alpha + " + rat_str(t.rat_coeff);
}

// Generator (iii) as a value: (alpha + m/2^n) / p(n,m).
inline S4Elem s4_scaled_generator(const Int& n, const Int& m) {
    Int p = pairing_prime(n, m);
    Rat dy(m, int_pow(2, (unsigned long)n));
    return S4Elem(Rat(1, p), dy / Rat(p));
}

// Certificate: a multiset of generators summing to the target.
struct S4Cert {
    Int alpha_count = 0;                                      // copies of generator (i)
    std::vector<std::pair<std::pair<Int, Int>, Int>> scaled;  // ((n, m), count)
    Rat dyadic_part = 0;                                      // total of generator-(ii) copies

    S4Elem total() const {
        S4Elem s(Rat(alpha_count), dyadic_part);
        for (auto& [nm, c] : scaled) s = s + (c * s4_scaled_generator(nm.first, nm.second));
        return s;
    }
    Int generator_count() const {
        Int c = alpha_count;
        for (auto& [nm, k] : scaled) { (void)nm; c += k; }
        if (dyadic_part > 0) ++c;  // counts as at least one generator-(ii) copy
        return c;
    }
};

using S4Verdict = Verdict<S4Cert>;

namespace detail {
// r mod p for a rational r whose denominator is coprime to p.
inline Int rat_mod_p(const Rat& r, const Int& p) {
    Int n = num(r) % p, d = den(r) % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    // d^(p-2) mod p
    Int inv = 1, base = d, e = p - 2;
    while (e > 0) {
        if ((e & 1) != 0) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return n * inv % p;
}
}  // namespace detail

// Decides t in S. Holds with a generator multiset; Refuted names the violated
// condition in the rule tag.
inline S4Verdict s4_membership(const S4Elem& t, const SearchBounds& bounds = {}) {
    auto refute = [&](const char* why) {
        return S4Verdict{Outcome::refuted, false, why, std::nullopt, bounds};
    };
    if (t.is_zero()) return refute("zero is not a nonempty sum of positive generators");
    if (t.alpha_coeff < 0) return refute("negative alpha coefficient");
    if (t.rat_coeff < 0) return refute("negative rational part");
    Int B = den(t.alpha_coeff);
    if ((B & 1) == 0)
        return refute("even denominator on the alpha coefficient is unreachable");

    // Each odd prime dividing den(a) forces the count of its generator mod p.
    S4Cert cert;
    Rat alpha_residue = t.alpha_coeff;
    Rat rat_residue = t.rat_coeff;
    for (auto& [p, mult] : int_factorize(B)) {
        if (mult > 1) return refute("alpha denominator not squarefree");
        Int forced = detail::rat_mod_p(Rat(p) * t.alpha_coeff, p);
        auto [n, m] = pairing_inverse(p);
        S4Elem g = s4_scaled_generator(n, m);
        alpha_residue -= forced * g.alpha_coeff;
        rat_residue -= forced * g.rat_coeff;
        cert.scaled.push_back({{n, m}, forced});
    }
    if (!is_integer(alpha_residue) || alpha_residue < 0)
        return refute("alpha budget exhausted by forced generator counts");
    if (rat_residue < 0) return refute("rational budget exhausted by forced generator counts");
    if (!is_dyadic(rat_residue)) return refute("non-dyadic rational residue");
    cert.alpha_count = num(alpha_residue);
    cert.dyadic_part = rat_residue;
    return S4Verdict::make_holds("forced-count decomposition", cert, bounds);
}

inline bool s4_cert_check(const S4Elem& t, const S4Cert& c) {
    if (c.alpha_count < 0 || c.dyadic_part < 0 || !is_dyadic(c.dyadic_part)) return false;
    for (auto& [nm, k] : c.scaled) {
        if (k < 0) return false;
        if (nm.first < 1 || nm.second < 1 || (nm.second & 1) == 0) return false;
    }
    if (c.generator_count() == 0) return false;
    return c.total() == t;
}

// Largest rational q with b - q in S (or = 0): the dyadic slack of the forced
// decomposition. Exists and is dyadic for every member; no search needed.
inline Rat s4_min_rational_subtract(const S4Elem& b) {
    auto v = s4_membership(b);
    if (!v.holds()) throw std::invalid_argument("s4_min_rational_subtract: element not in S");
    return v.evidence->dyadic_part;
}

// Atoms of S: alpha and the generators (iii); everything else is a sum.
inline bool s4_is_atom(const S4Elem& t) {
    auto v = s4_membership(t);
    if (!v.holds()) return false;
    const S4Cert& c = *v.evidence;
    if (c.dyadic_part != 0) return false;
    Int scaled_total = 0;
    for (auto& [nm, k] : c.scaled) { (void)nm; scaled_total += k; }
    return (c.alpha_count == 1 && scaled_total == 0) ||
           (c.alpha_count == 0 && scaled_total == 1);
}

namespace detail {
// Absorb a dyadic piece m/2^n (m odd, n >= 1) together with one alpha:
// alpha + m/2^n = p(n,m) copies of g(n,m).
inline void s4_absorb_piece(S4Cert& c, const Rat& piece) {
    Int n = 0, d = den(piece);
    while ((d & 1) == 0) { d >>= 1; ++n; }
    Int m = num(piece);
    Int p = pairing_prime(n, m);
    for (auto& [nm, k] : c.scaled)
        if (nm.first == n && nm.second == m) {
            k += p;
            c.alpha_count -= 1;
            c.dyadic_part -= piece;
            return;
        }
    c.scaled.push_back({{n, m}, p});
    c.alpha_count -= 1;
    c.dyadic_part -= piece;
}
}  // namespace detail

// t in <atoms of S>? A leftover dyadic d > 0 is absorbed via
// alpha + m/2^n = p(n,m) * g(n,m). A non-integer dyadic is one piece (one
// alpha); an integer dyadic can only be a sum of >= 2 such pieces (each piece
// has negative 2-adic valuation), e.g. d = (2d-1)/2 + 1/2, costing two
// alphas. This threshold is exact, so the verdict never needs a search.
inline S4Verdict s4_atom_span(const S4Elem& t, const SearchBounds& bounds = {}) {
    auto v = s4_membership(t, bounds);
    if (!v.holds()) throw std::invalid_argument("s4_atom_span: element not in S");
    S4Cert c = *v.evidence;
    if (c.dyadic_part > 0) {
        bool integral = is_integer(c.dyadic_part);
        Int needed = integral ? 2 : 1;
        if (c.alpha_count < needed)
            return S4Verdict{Outcome::refuted, false,
                             integral
                                 ? "integer dyadic part needs two alphas to absorb"
                                 : "positive dyadic part with no alpha to absorb it",
                             std::nullopt, bounds};
        if (integral) detail::s4_absorb_piece(c, Rat(1, 2));
        detail::s4_absorb_piece(c, c.dyadic_part);
    }
    return S4Verdict::make_holds("alpha-absorption rewriting", c, bounds);
}

// Atoms inside the bounded (n, m) grid, canonically ordered: alpha first,
// then g(n,m) by (n, m).
inline std::vector<S4Elem> s4_atoms_up_to(const SearchBounds& bounds) {
    std::vector<S4Elem> out;
    out.push_back(S4Elem::alpha());
    long long nmax = 0;
    while ((1LL << (nmax + 1)) <= bounds.max_denominator) ++nmax;
    for (long long n = 1; n <= std::max(1LL, nmax); ++n)
        for (long long m = 1; m <= bounds.max_coeff_height; m += 2)
            out.push_back(s4_scaled_generator(n, m));
    return out;
}

// All multisets of atoms summing to t, deduplicated, canonically ordered.
// Atom sums are exactly the decompositions with zero dyadic leftover; the
// enumeration walks bump vectors (adding p copies of g consumes one alpha and
// m/2^n of dyadic budget) over the bounded (n, m) grid.
inline std::vector<S4Cert> s4_atom_factorizations(const S4Elem& t, const SearchBounds& bounds) {
    std::vector<S4Cert> out;
    auto v = s4_membership(t, bounds);
    if (!v.holds()) return out;
    S4Cert base = *v.evidence;

    long long nmax = 0;
    while ((1LL << (nmax + 1)) <= bounds.max_denominator) ++nmax;
    nmax = std::max(1LL, nmax);
    std::vector<std::pair<Int, Int>> grid;
    for (long long n = 1; n <= nmax; ++n)
        for (long long m = 1; m <= bounds.max_coeff_height; m += 2) grid.push_back({n, m});

    // DFS over how many extra p-blocks of each grid generator to add; each
    // block consumes one alpha and m/2^n of dyadic budget.
    std::vector<Int> extra(grid.size(), 0);
    auto emit = [&](const Int& alphas_left) {
        S4Cert c = base;
        c.alpha_count = alphas_left;
        c.dyadic_part = 0;
        for (size_t j = 0; j < grid.size(); ++j) {
            if (extra[j] == 0) continue;
            Int p = pairing_prime(grid[j].first, grid[j].second);
            bool merged = false;
            for (auto& [nm, k] : c.scaled)
                if (nm == grid[j]) { k += extra[j] * p; merged = true; break; }
            if (!merged) c.scaled.push_back({grid[j], extra[j] * p});
        }
        std::sort(c.scaled.begin(), c.scaled.end());
        Int total = c.alpha_count;
        for (auto& [nm, k] : c.scaled) { (void)nm; total += k; }
        if (total > 0 && total <= bounds.max_factors) out.push_back(c);
    };
    std::function<void(size_t, Int, Rat)> rec = [&](size_t i, Int alphas_left, Rat dy_left) {
        if (i == grid.size()) {
            if (dy_left == 0) emit(alphas_left);
            return;
        }
        Rat piece(grid[i].second, int_pow(2, (unsigned long)grid[i].first));
        for (Int k = 0;; ++k) {
            if (alphas_left - k < 0) break;
            Rat used = Rat(k) * piece;
            if (used > dy_left) break;
            extra[i] = k;
            rec(i + 1, alphas_left - k, dy_left - used);
        }
        extra[i] = 0;
    };
    rec(0, base.alpha_count, base.dyadic_part);

    std::sort(out.begin(), out.end(), [](const S4Cert& a, const S4Cert& b) {
        if (a.alpha_count != b.alpha_count) return a.alpha_count > b.alpha_count;
        return a.scaled < b.scaled;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const S4Cert& a, const S4Cert& b) {
                              return a.alpha_count == b.alpha_count && a.scaled == b.scaled;
                          }),
              out.end());
    return out;
}

}  // namespace factorlab
