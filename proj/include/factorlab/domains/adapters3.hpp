#pragma once

// Adapters for the localized monomial algebras and appb.

#include "factorlab/domains/adapters2.hpp"

namespace factorlab {

// ---- monomial algebras --------------------------------------------------------

template <class Trait>
struct MAAdapter {
    MonomialAlgebra<Trait> alg;
    using Exp = typename Trait::Exp;
    using E = SetPoly<Exp>;
    using Cert = DomainCert<E>;
    using V = Verdict<Cert>;

    DomainId id() const { return alg.id; }
    bool member(const E& f) const { return alg.member(f); }
    bool is_unit(const E& f) const { return alg.is_unit(f); }
    E one() const { return E::one(); }
    E mul(const E& a, const E& b) const { return a * b; }
    bool eq(const E& a, const E& b) const { return a == b; }
    bool is_zero(const E& f) const { return f.is_zero(); }
    std::string str(const E& f) const { return alg.str(f); }

    static E mono(const Exp& e) { return E::monomial(e); }

    bool divides(const E& g, const E& f, E* q = nullptr) const {
        // monomial divisor: exponent subtraction
        if (g.size() == 1) {
            auto d = alg.divide_monomial(f, *g.terms.begin());
            if (!d) return false;
            if (q) *q = *d;
            return true;
        }
        // general: eliminate minimal terms (ordered exponents)
        E r = f, quot;
        const Exp& gmin = *g.terms.begin();
        size_t guard = 4096;
        while (!r.is_zero() && guard-- > 0) {
            const Exp& rmin = *r.terms.begin();
            auto d = Trait::sub(rmin, gmin);
            if (!d && !(rmin == gmin)) return false;
            Exp shift = rmin == gmin ? Exp{} : *d;
            // shift must be a legal exponent (in S u {0})
            if (!(shift == Exp{}) && !Trait::in_monoid(shift)) return false;
            quot.toggle(shift);
            E piece = mono(shift) * g;
            r = r + piece;  // F2: adding removes the minimal term
        }
        if (!r.is_zero()) return false;
        if (q) *q = quot;
        return true;
    }

    void require_nonzero_nonunit(const E& f) const {
        if (f.is_zero() || is_unit(f))
            throw std::invalid_argument("operation requires a nonzero non-unit");
        if (!member(f)) throw std::invalid_argument("element not in the domain");
    }

    V irreducible(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        auto m = alg.monomial_reduction(f);
        Cert c;
        if (m) {
            if (Trait::is_atom(*m)) {
                c.factors = {f};
                return V::make_holds("monomial exponent is a monoid atom", c, bounds);
            }
            auto sp = Trait::nonatom_split(*m);
            if (!sp) return V::make_unknown("exponent split not constructed", bounds);
            c.divisor = mono(sp->first);
            auto q = alg.divide_monomial(f, sp->first);
            if (!q) throw std::runtime_error("ma irreducible: bad exponent split");
            c.cofactor = *q;
            return V::make_refuted("monomial exponent splits in the monoid", c, bounds);
        }
        // non-monomial: bounded monomial-divisor search
        for (auto& b : Trait::atom_candidates_below(*f.terms.begin(), bounds)) {
            auto q = alg.divide_monomial(f, b);
            if (q && !is_unit(*q)) {
                c.divisor = mono(b);
                c.cofactor = *q;
                return V::make_refuted("bounded monomial divisor found", c, bounds);
            }
        }
        return V::make_unknown("no split among bounded monomial divisors", bounds);
    }

    V atomic(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        auto m = alg.monomial_reduction(f);
        if (!m)
            return V::make_unknown(
                "not monomial-reducible: atomicity undecided beyond monomial elements",
                bounds);
        auto span = Trait::atom_span(*m);
        Cert c;
        if (!span) {
            const char* why;
            if (alg.id == DomainId::MA_QPlus)
                why = "antimatter: x^q = x^(q/2) x^(q/2) splits forever";
            else if (alg.id == DomainId::MA_S4)
                why = "exponent has dyadic slack its alphas cannot absorb";
            else
                why = "exponent limit is 7, outside the atom span";
            return V::make_refuted(why, c, bounds);
        }
        // f = x^(a1) ... x^(ak) * unit; fold the unit into the first factor
        E unit;
        {
            auto q = alg.divide_monomial(f, *m);
            unit = *q;
        }
        bool first = true;
        for (auto& a : *span) {
            if (first) {
                c.factors.push_back(mono(a) * unit);
                first = false;
            } else {
                c.factors.push_back(mono(a));
            }
        }
        E prod = one();
        for (auto& g : c.factors) prod = prod * g;
        if (!(prod == f)) throw std::runtime_error("ma atomic: product mismatch");
        return V::make_holds("exponent decomposed into atoms", c, bounds);
    }

    V furstenberg_divisor(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        Cert c;
        auto m = alg.monomial_reduction(f);
        if (m) {
            if (Trait::is_atom(*m)) {
                c.divisor = f;
                c.cofactor = one();
                return V::make_holds("the element itself is irreducible", c, bounds);
            }
            for (auto& a : Trait::atom_candidates_below(*m, bounds)) {
                auto q = alg.divide_monomial(f, a);
                if (q) {
                    c.divisor = mono(a);
                    c.cofactor = *q;
                    return V::make_holds("atom divisor of the monomial exponent", c, bounds);
                }
            }
            if (alg.id == DomainId::MA_QPlus)
                return V::make_refuted("antimatter: there are no irreducible elements at all",
                                       c, bounds);
            if (alg.id == DomainId::MA_S4) {
                auto v = s4_membership_of(*m);
                if (v)
                    return V::make_refuted(
                        "pure dyadic exponent: every atom has a positive alpha part, so no "
                        "atom lies below it",
                        c, bounds);
            }
            return V::make_unknown("no atom divisor within bounds", bounds);
        }
        for (auto& a : Trait::atom_candidates_below(*f.terms.begin(), bounds)) {
            auto q = alg.divide_monomial(f, a);
            if (q) {
                c.divisor = mono(a);
                c.cofactor = *q;
                return V::make_holds("atom divisor of every term", c, bounds);
            }
        }
        return V::make_unknown("no atom divisor within bounds", bounds);
    }

    // true iff the exponent is a pure positive dyadic (no alpha part): the
    // structural Furstenberg refuter for ma_s4
    static std::optional<bool> s4_membership_of(const Exp& e) {
        if constexpr (std::is_same_v<Exp, S4Elem>) {
            if (e.alpha_coeff == 0 && e.rat_coeff > 0 && is_dyadic(e.rat_coeff)) return true;
            return std::nullopt;
        } else {
            (void)e;
            return std::nullopt;
        }
    }

    V almost_atomic_witness(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        auto at = atomic(f, bounds);
        Cert c;
        if (at.holds()) {
            c = *at.evidence;
            c.product_factors = c.factors;
            c.factors.clear();
            c.multiplier = one();
            return V::make_holds("already atomic: multiplier 1", c, bounds);
        }
        // semi-atomic domains repair non-atomic elements with the witness
        auto w = semi_witness();
        if (!w) {
            if (alg.id == DomainId::MA_QPlus)
                return V::make_refuted("antimatter: no irreducible multipliers exist", c,
                                       bounds);
            return V::make_unknown("no witness for this domain", bounds);
        }
        E beta = *w;
        E prod = f * beta;
        auto pat = atomic(prod, bounds);
        if (!pat.holds())
            return V::make_unknown("witness product not factored at bound", bounds);
        c.multiplier = beta;
        auto bat = atomic(beta, bounds);
        if (bat.holds()) c.multiplier_factors = bat.evidence->factors;
        c.product_factors = pat.evidence->factors;
        return V::make_holds("semi-atomic witness as multiplier", c, bounds);
    }

    V quasi_atomic_witness(const E& f, const SearchBounds& bounds) const {
        auto v = almost_atomic_witness(f, bounds);
        if (v.refuted() && alg.id == DomainId::MA_QPlus)
            v.rule = "antimatter: no products of irreducibles exist for any multiplier";
        return v;
    }

    // The canonical semi-atomic witness exponent.
    //   ma_s4:  x^(2 alpha) -- two alphas absorb any dyadic slack, including
    //           integer slack which needs two pieces m/2^n
    //   ma_appa: x^(constant-3 sequence)
    std::optional<E> semi_witness() const {
        if constexpr (std::is_same_v<Exp, S4Elem>) {
            return mono(Int(2) * S4Elem::alpha());
        } else if constexpr (std::is_same_v<Exp, SeqElem>) {
            return mono(SeqElem::constant(3));
        } else {
            return std::nullopt;
        }
    }

    std::vector<E> divisors(const E& f, const SearchBounds& bounds) const {
        std::vector<E> out;
        auto m = alg.monomial_reduction(f);
        if (!m) return out;
        if constexpr (std::is_same_v<Exp, Rat>) {
            // divisors of x^q: x^(q * k / (2 max)) sampling within denominators
            for (long long d = 2; d <= bounds.max_denominator; ++d)
                for (long long k = 1; k < d; ++k) {
                    Rat b = *m * Rat(k, d);
                    if (b <= 0 || b >= *m) continue;
                    auto q = alg.divide_monomial(f, b);
                    if (q) out.push_back(mono(b));
                }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        } else {
            for (auto& a : Trait::atom_candidates_below(*m, bounds)) {
                auto q = alg.divide_monomial(f, a);
                if (q && !is_unit(*q)) out.push_back(mono(a));
            }
        }
        return out;
    }
};

using MAQPlusAdapter = MAAdapter<QPlusTrait>;
using MAS4Adapter = MAAdapter<S4Trait>;
using MAAppAAdapter = MAAdapter<AppATrait>;

inline MAQPlusAdapter make_ma_qplus_adapter() { return {make_ma_qplus()}; }
inline MAS4Adapter make_ma_s4_adapter() { return {make_ma_s4()}; }
inline MAAppAAdapter make_ma_appa_adapter() { return {make_ma_appa()}; }

// min_exponent_decompose per the two semi-atomic algebras.
//   ma_s4: q = min over terms of the largest subtractable rational
//   ma_appa: the limit-7 clip when the monomial is not atomic
inline std::pair<S4Elem, SetPoly<S4Elem>> ma_s4_min_exponent_decompose(
    const MAS4Adapter& A, const SetPoly<S4Elem>& f) {
    if (f.is_zero()) throw std::invalid_argument("min_exponent_decompose: zero input");
    std::optional<Rat> q;
    for (auto& t : f.terms) {
        Rat slack = t.is_zero() ? Rat(0) : s4_min_rational_subtract(t);
        q = q ? std::min(*q, slack) : slack;
    }
    S4Elem shift = S4Elem::rational(*q);
    auto g = A.alg.divide_monomial(f, shift);
    if (!g) throw std::runtime_error("min_exponent_decompose: shift failed");
    return {shift, *g};
}

inline std::pair<SeqElem, SetPoly<SeqElem>> ma_appa_min_exponent_decompose(
    const MAAppAAdapter& A, const SetPoly<SeqElem>& f) {
    if (f.is_zero()) throw std::invalid_argument("min_exponent_decompose: zero input");
    auto m = A.alg.monomial_reduction(f);
    if (m && !m->is_zero() && !seq_in_M_span(*m).holds()) {
        // clip: beta_i = min(t_i, 7), limit 7 (membership forces limit 7 here)
        SeqElem beta{Int(7)};
        for (auto& [i, v] : m->deviations) beta.deviations[i] = std::min<Int>(v, 7);
        beta.normalize();
        auto g = A.alg.divide_monomial(f, beta);
        if (g) return {beta, *g};
    }
    return {SeqElem(), f};
}

// ---- appb ---------------------------------------------------------------------

struct AppBAdapter {
    AppBRing R;
    using E = AppBPoly;
    using Cert = DomainCert<E>;
    using V = Verdict<Cert>;

    DomainId id() const { return DomainId::AppB; }
    bool member(const E& f) const { return R.member(f); }
    bool is_unit(const E& f) const { return R.is_unit(f); }
    E one() const { return E::one(); }
    E mul(const E& a, const E& b) const { return a * b; }
    bool eq(const E& a, const E& b) const { return a == b; }
    bool is_zero(const E& f) const { return f.is_zero(); }
    std::string str(const E& f) const { return R.str(f); }

    bool divides(const E& g, const E& f, E* q = nullptr) const {
        if (g.size() == 1) {
            auto t = *g.terms.begin();
            auto d = R.divide(f, t.a, t.k);
            if (!d) return false;
            if (q) *q = *d;
            return true;
        }
        // minimal-term elimination in the (k, a)-order
        E r = f, quot;
        AppBExp gmin = *g.terms.begin();
        size_t guard = 4096;
        while (!r.is_zero() && guard-- > 0) {
            AppBExp rmin = *r.terms.begin();
            AppBExp shift(rmin.a - gmin.a, rmin.k - gmin.k);
            if (shift.k < 0) return false;
            quot.toggle(shift);
            E piece;
            for (auto& t : g.terms) piece.toggle(t + shift);
            r = r + piece;
        }
        if (!r.is_zero()) return false;
        // the quotient itself must be a ring element
        if (!member(quot)) return false;
        if (q) *q = quot;
        return true;
    }

    void require_nonzero_nonunit(const E& f) const {
        if (f.is_zero() || is_unit(f))
            throw std::invalid_argument("operation requires a nonzero non-unit");
        if (!member(f)) throw std::invalid_argument("element not in the domain");
    }

    // Exact classification: irreducible iff y itself is a term.
    V irreducible(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        Cert c;
        if (R.has_y_term(f)) {
            c.factors = {f};
            return V::make_holds("coefficient of y is 1 and the constant term is 0", c,
                                 bounds);
        }
        // no y term: a monomial in x splits off
        std::optional<Rat> eps;
        for (auto& t : f.terms)
            if (t.k <= 1) eps = eps ? std::min(*eps, t.a) : t.a;
        Rat shift = eps ? *eps / 2 : Rat(1);
        c.divisor = R.monomial(shift, 0);
        auto q = R.divide(f, shift, 0);
        if (!q) throw std::runtime_error("appb irreducible: bad monomial split");
        c.cofactor = *q;
        return V::make_refuted("no y term: x^eps divides", c, bounds);
    }

    // Corollary route: f multiple of y^j with y^(j+1) as a term.
    V atomic_by_corollary(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        Cert c;
        long kmin = f.terms.begin()->k;
        for (long j = kmin; j >= 0; --j) {
            if (!f.terms.count(AppBExp(Rat(0), j + 1))) continue;
            auto g = R.divide(f, Rat(0), j);
            if (!g) continue;
            // g has a y term; if it also has a constant term it is y^j * unit
            if (g->has_constant_term()) {
                // f = y * y * ... * (y * unit)
                if (j == 0) throw std::logic_error("unit input slipped through");
                for (long i = 0; i < j - 1; ++i) c.factors.push_back(R.y());
                c.factors.push_back(R.y() * *g);
            } else {
                for (long i = 0; i < j; ++i) c.factors.push_back(R.y());
                c.factors.push_back(*g);
            }
            E prod = one();
            for (auto& x : c.factors) prod = prod * x;
            if (!(prod == f)) throw std::runtime_error("appb corollary: product mismatch");
            return V::make_holds("multiple of y^j with a y^(j+1) term", c, bounds);
        }
        return V::make_unknown("corollary hypothesis fails", bounds);
    }

    std::pair<Rat, long> minimal_term(const E& f) const {
        auto t = R.minimal_term(f);
        return {t.a, t.k};
    }

    // The four-case multiplier. Case 1 covers everything the corollary
    // already handles (including the min-term-at-alpha-0 shape and the
    // cancellation edge where y^(k+1) itself is a term of f).
    std::pair<E, int> witness(const E& f) const {
        require_nonzero_nonunit(f);
        SearchBounds b;
        if (atomic_by_corollary(f, b).holds()) return {one(), 1};
        auto [a, k] = minimal_term(f);
        if (a < 0) return {R.y() + R.monomial(-a, 0), 2};
        // a > 0 here: a == 0 always lands in case 1
        std::optional<Rat> beta;
        for (auto& t : f.terms)
            if (t.k == k + 1 && t.a < 0) {
                Rat cand = -t.a;
                beta = beta ? std::max(*beta, cand) : cand;
            }
        if (beta) return {R.y() + R.monomial(*beta, 0), 4};
        return {R.y() + R.monomial(-a, 2), 3};
    }

    V almost_atomic_witness(const E& f, const SearchBounds& bounds) const {
        auto [beta, tag] = witness(f);
        Cert c;
        c.multiplier = beta;
        c.note = "case " + std::to_string(tag);
        if (!is_unit(beta)) c.multiplier_factors = {beta};  // the multiplier is irreducible
        E prod = f * beta;
        auto at = atomic_by_corollary(prod, bounds);
        if (!at.holds())
            throw std::runtime_error("appb witness: corollary hypothesis failed");
        c.product_factors = at.evidence->factors;
        return V::make_holds("four-case witness multiplier", c, bounds);
    }

    V quasi_atomic_witness(const E& f, const SearchBounds& bounds) const {
        auto v = almost_atomic_witness(f, bounds);
        v.rule = "via the almost-atomic witness";
        return v;
    }

    V atomic(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        auto v = atomic_by_corollary(f, bounds);
        if (v.holds()) return v;
        if (R.has_y_term(f)) {
            Cert c;
            c.factors = {f};
            return V::make_holds("irreducible", c, bounds);
        }
        // Exact refuters. Every irreducible contains y, and top y-degrees
        // multiply with nonzero top coefficients, so a product of n
        // irreducibles has y-degree >= n and is never y-free.
        long kmax = 0;
        bool y_free = true;
        for (auto& t : f.terms) {
            kmax = std::max(kmax, t.k);
            if (t.k > 0) y_free = false;
        }
        if (y_free)
            return V::make_refuted(
                "y-free element: every irreducible contains y and products of them are "
                "never y-free",
                Cert{}, bounds);
        if (kmax <= 1)
            return V::make_refuted(
                "y-degree 1 but not irreducible: a product of two or more irreducibles has "
                "y-degree at least 2",
                Cert{}, bounds);
        return V::make_unknown("atomicity undecided at bound", bounds);
    }

    V furstenberg_divisor(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        Cert c;
        if (R.has_y_term(f)) {
            c.divisor = f;
            c.cofactor = one();
            return V::make_holds("the element itself is irreducible", c, bounds);
        }
        bool y_free = true;
        for (auto& t : f.terms)
            if (t.k > 0) { y_free = false; break; }
        if (y_free)
            return V::make_refuted(
                "y-free element: an irreducible divisor contains y and its inverse is an "
                "infinite y-series, so it divides no y-free element",
                Cert{}, bounds);
        // y itself divides?
        if (auto q = R.divide(f, Rat(0), 1); q && !is_unit(*q)) {
            c.divisor = R.y();
            c.cofactor = *q;
            return V::make_holds("y divides", c, bounds);
        }
        if (auto q = R.divide(f, Rat(0), 1); q) {
            c.divisor = f;
            c.cofactor = one();
            return V::make_holds("associate of the irreducible y", c, bounds);
        }
        // bounded (y + x^a) candidates from exponent differences
        std::vector<Rat> cands;
        for (auto& t : f.terms)
            for (auto& s : f.terms)
                if (t.a != s.a) cands.push_back(int_abs(num(t.a - s.a)) ? t.a - s.a : Rat(0));
        for (auto& a : cands) {
            if (a <= 0) continue;
            E pi = R.y() + R.monomial(a, 0);
            E q;
            if (divides(pi, f, &q)) {
                c.divisor = pi;
                c.cofactor = q;
                return V::make_holds("irreducible binomial divisor", c, bounds);
            }
        }
        return V::make_unknown("no irreducible divisor found at bound", bounds);
    }

    std::vector<E> divisors(const E& f, const SearchBounds& bounds) const {
        std::vector<E> out;
        (void)bounds;
        // monomial divisors x^a y^k of the minimal structure
        auto t0 = *f.terms.begin();
        for (long k = 0; k <= t0.k; ++k) {
            auto q = R.divide(f, Rat(0), k);
            if (k > 0 && q && !is_unit(*q)) out.push_back(R.monomial(Rat(0), k));
        }
        return out;
    }
};

inline AppBAdapter make_appb_adapter() { return {}; }

}  // namespace factorlab
