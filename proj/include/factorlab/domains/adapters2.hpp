#pragma once

// Adapters for d24, d12, the monomial algebras, and appb.

#include "factorlab/domains/adapters.hpp"

#include <functional>

namespace factorlab {

// ---- d24 ---------------------------------------------------------------------

struct D24Adapter {
    using E = RootPoly;
    using Cert = DomainCert<E>;
    using V = Verdict<Cert>;

    DomainId id() const { return DomainId::D24; }
    bool member(const E& f) const { return f.well_formed(); }
    bool is_unit(const E& f) const { return f.is_unit(); }
    E one() const { return RootPoly::constant(1); }
    E mul(const E& a, const E& b) const { return a * b; }
    bool eq(const E& a, const E& b) const { return a == b; }
    bool is_zero(const E& f) const { return f.is_zero(); }
    std::string str(const E& f) const { return rootpoly_str(f); }
    bool divides(const E& g, const E& f, E* q = nullptr) const { return root_divides(g, f, q); }

    void require_nonzero_nonunit(const E& f) const {
        if (f.is_zero() || f.is_unit())
            throw std::invalid_argument("operation requires a nonzero non-unit");
        if (!f.well_formed()) throw std::invalid_argument("element not in the domain");
    }

    V irreducible(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        auto v = root_irreducible(f, bounds);
        Cert c;
        if (v.holds()) {
            c.factors = {f};
            return V{Outcome::holds, v.at_bound, v.rule, c, bounds};
        }
        c.divisor = v.evidence->left;
        c.cofactor = v.evidence->right;
        return V::make_refuted(v.rule, c, bounds);
    }

    // Recursive split factorization; leaves are irreducible at the bound.
    V atomic(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        if (f.constant_term() == 0)
            return V::make_refuted(
                "constant term 0: irreducibles have nonzero constant terms, so no product "
                "of them has constant term 0",
                Cert{}, bounds);
        Cert c;
        bool bounded = false;
        std::vector<E> stack = {f};
        while (!stack.empty()) {
            E cur = stack.back();
            stack.pop_back();
            if (cur.is_unit()) {
                if (cur.constant_term() == -1) {
                    if (c.factors.empty()) throw std::runtime_error("atomic: sign on unit");
                    E& last = c.factors.back();
                    E neg;
                    for (auto& [e, cc] : last.terms) neg.terms[e] = -cc;
                    last = neg;
                }
                continue;
            }
            auto v = root_irreducible(cur, bounds);
            if (v.holds()) {
                bounded = bounded || v.at_bound;
                c.factors.push_back(cur);
                continue;
            }
            stack.push_back(v.evidence->left);
            stack.push_back(v.evidence->right);
        }
        E prod = one();
        for (auto& g : c.factors) prod = prod * g;
        if (!(prod == f)) throw std::runtime_error("atomic: product mismatch");
        return V{Outcome::holds, bounded, "recursive split factorization", c, bounds};
    }

    V furstenberg_divisor(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        Cert c;
        // strip the monomial part
        Rat q0 = f.min_exp();
        E g;
        for (auto& [e, cc] : f.terms) g.terms[e - q0] = cc;
        if (g.terms.size() == 1) {
            // f = c x^q: divisors of monomials are monomials, never irreducible
            Int cc = int_abs(g.constant_term());
            if (cc == 1)
                return V::make_refuted(
                    "monomial with unit coefficient: all divisors are monomials x^q, and "
                    "x^q = (x^(q/2))^2 is never irreducible",
                    Cert{}, bounds);
            Int p = int_factorize(cc)[0].first;
            c.divisor = RootPoly::constant(p);
            E q;
            divides(*c.divisor, f, &q);
            c.cofactor = q;
            return V::make_holds("prime of the monomial coefficient", c, bounds);
        }
        auto at = atomic(g, bounds);
        if (!at.holds()) return V::make_unknown("no factorization found for the unit part", bounds);
        c.divisor = at.evidence->factors.front();
        E q;
        if (!divides(*c.divisor, f, &q))
            throw std::runtime_error("furstenberg_divisor: bad factor");
        c.cofactor = q;
        return V{Outcome::holds, at.at_bound, "first factor after stripping the monomial part",
                 c, bounds};
    }

    V almost_atomic_witness(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        if (f.constant_term() == 0)
            return V::make_refuted(
                "constant term 0: every multiple by irreducibles keeps constant term 0 and "
                "atomic elements have nonzero constant terms",
                Cert{}, bounds);
        auto at = atomic(f, bounds);
        if (!at.holds()) return V::make_unknown("factorization incomplete at bound", bounds);
        Cert c = *at.evidence;
        c.product_factors = c.factors;
        c.factors.clear();
        c.multiplier = one();
        return V{Outcome::holds, at.at_bound, "already atomic: multiplier 1", c, bounds};
    }

    V quasi_atomic_witness(const E& f, const SearchBounds& bounds) const {
        auto v = almost_atomic_witness(f, bounds);
        if (v.refuted())
            v.rule = "constant term 0 persists under every multiplier beta";
        return v;
    }

    std::vector<E> divisors(const E& f, const SearchBounds& bounds) const {
        return root_divisors_up_to(f, bounds);
    }
};

// ---- d12 ---------------------------------------------------------------------

struct D12Adapter {
    SeriesRing R;
    using E = Series;
    using Cert = DomainCert<E>;
    using V = Verdict<Cert>;

    DomainId id() const { return DomainId::D12; }
    bool member(const E& f) const { return R.member(f); }
    bool is_unit(const E& f) const { return R.is_unit(f); }
    E one() const { return Series::constant(1); }
    E mul(const E& a, const E& b) const { return R.mul(a, b); }
    bool eq(const E& a, const E& b) const { return R.truncate(a) == R.truncate(b); }
    bool is_zero(const E& f) const { return f.is_zero(); }
    std::string str(const E& f) const { return series_str(f); }
    bool divides(const E& g, const E& f, E* q = nullptr) const { return R.divides(g, f, q); }

    void require_nonzero_nonunit(const E& f) const {
        if (f.is_zero() || R.is_unit(f))
            throw std::invalid_argument("operation requires a nonzero non-unit");
        R.require_member(f);
    }

    V irreducible(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        auto v = series_irreducible(R, f, bounds);
        Cert c;
        if (v.holds()) {
            c.factors = {f};
            return V{Outcome::holds, v.at_bound, v.rule, c, bounds};
        }
        if (v.refuted()) {
            c.divisor = v.evidence->left;
            c.cofactor = v.evidence->right;
            return V::make_refuted(v.rule, c, bounds);
        }
        return V::make_unknown(v.rule, bounds);
    }

    V atomic(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        if (f.constant_term() == 0)
            return V::make_refuted(
                "constant term 0: atomic elements have nonzero constant terms at truncation "
                "order",
                Cert{}, bounds);
        Cert c;
        bool bounded = true;  // all statements at truncation order
        std::vector<E> stack = {f};
        while (!stack.empty()) {
            E cur = stack.back();
            stack.pop_back();
            if (R.is_unit(cur)) {
                c.note = "a unit cofactor was folded into the factor list";
                c.factors.push_back(cur);
                continue;
            }
            auto v = series_irreducible(R, cur, bounds);
            if (v.holds()) {
                c.factors.push_back(cur);
                continue;
            }
            if (v.unknown()) return V::make_unknown("irreducibility undecided at bound", bounds);
            stack.push_back(v.evidence->left);
            stack.push_back(v.evidence->right);
        }
        E prod = one();
        for (auto& g : c.factors) prod = R.mul(prod, g);
        if (!eq(prod, f)) throw std::runtime_error("d12 atomic: product mismatch");
        return V{Outcome::holds, bounded, "recursive split factorization at truncation order",
                 c, bounds};
    }

    // Lift a divisor with constant term p: f = (p + gamma) h.
    std::optional<std::pair<E, E>> divisor_lift(const E& f, const Int& p) const {
        Rat q0 = f.min_exp();
        Rat m = f.terms.begin()->second;
        if (!is_integer(m / Rat(p))) return std::nullopt;
        Int b = num(m) / p;  // h's minimal coefficient
        Int D = d12_detail::grid_denominator(R, f, 2 * Int(R.den_bound));
        auto grid = d12_detail::grid_points(D, R.trunc);
        // unknown gamma on grid (exponents u > 0), h on q0 + grid
        size_t M = grid.size();
        std::vector<Rat> gamma(M, Rat(0)), h(M, Rat(0));
        Int g = int_gcd(p, int_abs(b));
        std::function<bool(size_t, long)> solve = [&](size_t i, long nodes) -> bool {
            if (nodes > 200000) return false;
            if (i == M) return true;
            Rat s = q0 + grid[i];  // product exponent handled at this level
            if (s >= R.trunc) return true;
            Rat rhs = 0;
            auto it = f.terms.find(s);
            if (it != f.terms.end()) rhs = it->second;
            rhs -= Rat(p) * 0;  // p * h_s handled below
            // cross: gamma_u * h_{s-u} for u on grid, s-u in [q0, s)
            for (size_t j = 0; j < i; ++j) {
                Rat u = grid[j];
                Rat rem = s - u - q0;  // index into h
                if (rem < 0) break;
                Rat idxr = rem * Rat(D);
                if (!is_integer(idxr)) continue;
                long hidx = (long)(long long)num(idxr) - 1;
                Rat hval = hidx == -1 ? Rat(b) : (hidx >= 0 && (size_t)hidx < i ? h[(size_t)hidx]
                                                                                : Rat(0));
                rhs -= gamma[j] * hval;
            }
            // equation: p * h_i + gamma_i * b = rhs
            bool h_int = (s <= 1);
            bool g_int = (grid[i] <= 1);
            if (!h_int && !g_int) {
                gamma[i] = 0;
                h[i] = rhs / Rat(p);
                if (solve(i + 1, nodes + 1)) return true;
                h[i] = 0;
                return false;
            }
            if (h_int && !g_int) {
                // gamma free rational, h integer: pick h_i = floor-solve
                // p h = rhs - gamma b: choose gamma to make h integral: gamma = (rhs - p h)/b
                h[i] = 0;
                gamma[i] = rhs / Rat(b);
                if (solve(i + 1, nodes + 1)) return true;
                gamma[i] = 0;
                return false;
            }
            // both integer (or gamma integer, h free)
            if (!h_int && g_int) {
                gamma[i] = 0;
                h[i] = rhs / Rat(p);
                if (solve(i + 1, nodes + 1)) return true;
                h[i] = 0;
                return false;
            }
            if (!is_integer(rhs / Rat(g))) return false;
            // particular solution via extended gcd
            Int u0 = 0, v0 = 0;
            {
                Int old_r = p, r = b, old_s = 1, ss = 0, old_t = 0, tt = 1;
                while (r != 0) {
                    Int qq = old_r / r;
                    Int tmp = old_r - qq * r; old_r = r; r = tmp;
                    tmp = old_s - qq * ss; old_s = ss; ss = tmp;
                    tmp = old_t - qq * tt; old_t = tt; tt = tmp;
                }
                if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
                u0 = old_s;
                v0 = old_t;
            }
            Int scale = num(rhs / Rat(g));
            long long branches = (g == 1) ? 1 : (long long)(g * g);
            for (long long t = 0; t < branches; ++t) {
                h[i] = Rat(u0 * scale + Int(t) * (b / g));
                gamma[i] = Rat(v0 * scale - Int(t) * (p / g));
                if (solve(i + 1, nodes + 1)) return true;
            }
            h[i] = 0;
            gamma[i] = 0;
            return false;
        };
        if (!solve(0, 0)) return std::nullopt;
        E pi = Series::constant(Rat(p));
        for (size_t i = 0; i < M; ++i)
            if (gamma[i] != 0 && grid[i] < R.trunc) pi.terms[grid[i]] = gamma[i];
        E hh = Series::monomial(Rat(b), q0);
        for (size_t i = 0; i < M; ++i)
            if (h[i] != 0 && q0 + grid[i] < R.trunc) hh.terms[q0 + grid[i]] = h[i];
        if (!eqseries(R.mul(pi, hh), f)) return std::nullopt;
        if (!R.member(pi) || !R.member(hh)) return std::nullopt;
        return std::make_pair(pi, hh);
    }

    bool eqseries(const E& a, const E& b) const { return R.truncate(a) == R.truncate(b); }

    V furstenberg_divisor(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        Cert c;
        Rat q0 = f.min_exp();
        Rat m = f.terms.begin()->second;
        if (q0 > 1) {
            c.divisor = Series::constant(2);
            E q;
            if (!divides(*c.divisor, f, &q))
                throw std::runtime_error("d12 furstenberg: 2 must divide");
            c.cofactor = q;
            return V::make_holds("minimal exponent above 1: every rational prime divides", c,
                                 bounds);
        }
        if (m == 1 || m == -1)
            return V::make_refuted(
                "minimal coefficient is a unit at exponent <= 1: an irreducible divisor "
                "would need its constant term to divide it",
                Cert{}, bounds);
        for (auto& [p, mult] : int_factorize(int_abs(num(m)))) {
            (void)mult;
            auto lift = divisor_lift(f, p);
            if (lift) {
                c.divisor = lift->first;
                c.cofactor = lift->second;
                return V{Outcome::holds, true, "lifted divisor with prime constant term", c,
                         bounds};
            }
        }
        return V::make_unknown("no prime-constant divisor lifted within the grid", bounds);
    }

    V almost_atomic_witness(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        if (f.constant_term() == 0)
            return V::make_refuted(
                "constant term 0 persists: atomic elements have nonzero constant terms",
                Cert{}, bounds);
        auto at = atomic(f, bounds);
        if (!at.holds()) return V::make_unknown("factorization incomplete at bound", bounds);
        Cert c = *at.evidence;
        c.product_factors = c.factors;
        c.factors.clear();
        c.multiplier = one();
        return V{Outcome::holds, true, "already atomic at truncation order: multiplier 1", c,
                 bounds};
    }

    V quasi_atomic_witness(const E& f, const SearchBounds& bounds) const {
        auto v = almost_atomic_witness(f, bounds);
        if (v.refuted()) v.rule = "constant term 0 persists under every multiplier";
        return v;
    }

    std::vector<E> divisors(const E& f, const SearchBounds& bounds) const {
        // bounded pool: integer constants and lifted prime-constant divisors
        std::vector<E> out;
        Rat c0 = f.constant_term();
        for (long long d = 2; d <= bounds.max_coeff_height; ++d) {
            E g = Series::constant(Rat(d));
            E q;
            if (divides(g, f, &q) && !R.is_unit(q)) out.push_back(g);
        }
        if (!f.is_zero() && c0 != 0 && c0 != 1 && c0 != -1)
            for (auto& [p, mult] : int_factorize(int_abs(num(c0)))) {
                (void)mult;
                auto lift = divisor_lift(f, p);
                if (lift && !R.is_unit(lift->second)) out.push_back(lift->first);
            }
        return out;
    }
};

}  // namespace factorlab
