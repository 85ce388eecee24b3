#pragma once

// F2[X]_(X) for an exponent monoid S: polynomials with exponents in
// S u {0}, localized so that anything with constant term 1 is a unit.
// Monomial divisors of monomials are decided by exponent subtraction; a
// polynomial that becomes a unit after removing a common monomial factor is
// "monomial-reducible", and for those every factorization question reduces
// to additive factorization in S.

#include "factorlab/alpha_monoid.hpp"
#include "factorlab/domains/ids.hpp"
#include "factorlab/seq_monoid.hpp"
#include "factorlab/setpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace factorlab {

// ---- exponent traits --------------------------------------------------------

struct QPlusTrait {
    using Exp = Rat;
    static bool in_monoid(const Exp& e) { return e > 0; }
    static std::optional<Exp> sub(const Exp& a, const Exp& b) {
        Rat d = a - b;
        if (d < 0) return std::nullopt;
        return d;
    }
    static bool is_atom(const Exp&) { return false; }  // q = q/2 + q/2
    // no exponent lies in the (empty) atom span
    static std::optional<std::vector<Exp>> atom_span(const Exp&) { return std::nullopt; }
    static std::vector<Exp> atom_candidates_below(const Exp&, const SearchBounds&) { return {}; }
    static std::optional<std::pair<Exp, Exp>> nonatom_split(const Exp& e) {
        return std::make_pair(e / 2, e / 2);
    }
    static std::string str(const Exp& e) { return rat_str(e); }
};

struct S4Trait {
    using Exp = S4Elem;
    static bool in_monoid(const Exp& e) { return s4_membership(e).holds(); }
    static std::optional<Exp> sub(const Exp& a, const Exp& b) {
        Exp d = a - b;
        if (d.is_zero() || s4_membership(d).holds()) return d;
        return std::nullopt;
    }
    static bool is_atom(const Exp& e) { return s4_is_atom(e); }
    static std::optional<std::vector<Exp>> atom_span(const Exp& e) {
        auto v = s4_atom_span(e);
        if (!v.holds()) return std::nullopt;
        std::vector<Exp> atoms;
        for (Int i = 0; i < v.evidence->alpha_count; ++i) atoms.push_back(S4Elem::alpha());
        for (auto& [nm, k] : v.evidence->scaled)
            for (Int i = 0; i < k; ++i) atoms.push_back(s4_scaled_generator(nm.first, nm.second));
        return atoms;
    }
    static std::vector<Exp> atom_candidates_below(const Exp& e, const SearchBounds& b) {
        std::vector<Exp> out;
        for (auto& a : s4_atoms_up_to(b))
            if (sub(e, a)) out.push_back(a);
        // the generators forced by e's own denominator, whatever the grid
        auto v = s4_membership(e);
        if (v.holds())
            for (auto& [nm, k] : v.evidence->scaled)
                if (k > 0) {
                    Exp g = s4_scaled_generator(nm.first, nm.second);
                    if (sub(e, g)) out.push_back(g);
                }
        return out;
    }
    static std::optional<std::pair<Exp, Exp>> nonatom_split(const Exp& e) {
        auto v = s4_membership(e);
        if (!v.holds()) return std::nullopt;
        const S4Cert& c = *v.evidence;
        // peel one generator off
        if (c.alpha_count >= 1) {
            Exp u = S4Elem::alpha();
            Exp rest = e - u;
            if (!rest.is_zero() && in_monoid(rest)) return std::make_pair(u, rest);
        }
        for (auto& [nm, k] : c.scaled)
            if (k >= 1) {
                Exp u = s4_scaled_generator(nm.first, nm.second);
                Exp rest = e - u;
                if (!rest.is_zero() && in_monoid(rest)) return std::make_pair(u, rest);
            }
        if (c.dyadic_part > 0) {
            Exp u = S4Elem::rational(c.dyadic_part / 2);
            Exp rest = e - u;
            if (!rest.is_zero() && in_monoid(rest)) return std::make_pair(u, rest);
        }
        return std::nullopt;
    }
    static std::string str(const Exp& e) { return s4_str(e); }
};

struct AppATrait {
    using Exp = SeqElem;
    static bool in_monoid(const Exp& e) { return seq_in_S(e); }
    static std::optional<Exp> sub(const Exp& a, const Exp& b) {
        auto d = checked_sub(a, b);
        if (!d) return std::nullopt;
        if (d->is_zero() || seq_in_S(*d)) return d;
        return std::nullopt;
    }
    static bool is_atom(const Exp& e) { return seq_atom_characterization(e); }
    static std::optional<std::vector<Exp>> atom_span(const Exp& e) {
        auto v = seq_in_M_span(e);
        if (!v.holds()) return std::nullopt;
        return v.evidence->atoms;
    }
    static std::vector<Exp> atom_candidates_below(const Exp& e, const SearchBounds&) {
        std::vector<Exp> out;
        // 7 e_i below e (support plus one fresh index)
        std::vector<long> idx = e.support_indices();
        long fresh = idx.empty() ? 1 : idx.back() + 1;
        idx.push_back(fresh);
        for (long i : idx) {
            SeqElem a = SeqElem::seven_e(i);
            if (sub(e, a)) out.push_back(a);
        }
        // clipped limit-3/5 sponges
        for (int L : {3, 5}) {
            SeqElem a{Int(L)};
            for (auto& [i, v] : e.deviations) a.deviations[i] = std::min<Int>(v, 6);
            a.normalize();
            if (a.max_entry() < 7 && seq_in_S(a) && sub(e, a)) out.push_back(a);
        }
        return out;
    }
    static std::optional<std::pair<Exp, Exp>> nonatom_split(const Exp& e) {
        // any entry >= 7 peels a 7 e_i; otherwise split the limit
        for (auto& [i, v] : e.deviations)
            if (v >= 7) {
                SeqElem u = SeqElem::seven_e(i);
                auto rest = sub(e, u);
                if (rest && !rest->is_zero() && in_monoid(*rest))
                    return std::make_pair(u, *rest);
            }
        if (e.limit >= 7) {
            long fresh = e.deviations.empty() ? 1 : e.deviations.rbegin()->first + 1;
            SeqElem u = SeqElem::seven_e(fresh);
            auto rest = sub(e, u);
            if (rest && !rest->is_zero() && in_monoid(*rest)) return std::make_pair(u, *rest);
        }
        for (int L : {3, 5}) {
            if (e.limit <= L) continue;
            SeqElem u{Int(L)};
            for (auto& [i, v] : e.deviations) u.deviations[i] = v;
            u.normalize();
            auto rest = sub(e, u);
            if (seq_in_S(u) && rest && !rest->is_zero() && in_monoid(*rest))
                return std::make_pair(u, *rest);
        }
        return std::nullopt;
    }
    static std::string str(const Exp& e) { return seq_str(e); }
};

// ---- the algebra -------------------------------------------------------------

template <class Trait>
struct MonomialAlgebra {
    using Exp = typename Trait::Exp;
    using Poly = SetPoly<Exp>;

    DomainId id;

    bool member(const Poly& f) const {
        for (auto& t : f.terms)
            if (!(t == Exp{}) && !Trait::in_monoid(t)) return false;
        return true;
    }
    bool is_unit(const Poly& f) const { return f.has_constant_term(); }

    // f = x^m * unit? Returns m when every term t satisfies t - m in S u {0}.
    std::optional<Exp> monomial_reduction(const Poly& f) const {
        for (auto& m : f.terms) {
            bool ok = true;
            for (auto& t : f.terms)
                if (!(t == m) && !Trait::sub(t, m)) { ok = false; break; }
            if (ok) return m;
        }
        return std::nullopt;
    }

    std::optional<Poly> divide_monomial(const Poly& f, const Exp& b) const {
        Poly q;
        for (auto& t : f.terms) {
            if (t == b) {
                q.toggle(Exp{});
                continue;
            }
            auto d = Trait::sub(t, b);
            if (!d) return std::nullopt;
            q.toggle(*d);
        }
        return q;
    }

    std::string str(const Poly& f) const {
        if (f.is_zero()) return "0";
        std::string s;
        for (auto& t : f.terms) {
            if (!s.empty()) s += " + ";
            if (t == Exp{})
                s += "1";
            else
                s += "x^(" + Trait::str(t) + ")";
        }
        return s;
    }
};

inline MonomialAlgebra<QPlusTrait> make_ma_qplus() { return {DomainId::MA_QPlus}; }
inline MonomialAlgebra<S4Trait> make_ma_s4() { return {DomainId::MA_S4}; }
inline MonomialAlgebra<AppATrait> make_ma_appa() { return {DomainId::MA_AppA}; }

}  // namespace factorlab
