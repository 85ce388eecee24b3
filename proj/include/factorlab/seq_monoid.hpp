#pragma once

// Eventually-constant sequences of non-negative integers, stored as
// (limit, finite deviation map). S is the additive closure of
//   (i)  nonzero sequences with every entry a multiple of 7,
//   (ii) sequences with limit 3 or 5 (entries unconstrained).
// M = S \ (S + S) are the atoms; <M> is decided by the limit alone: the only
// members of S outside <M> are those with limit 7.

#include "factorlab/rational.hpp"
#include "factorlab/search_bounds.hpp"
#include "factorlab/verdict.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace factorlab {

struct SeqElem {
    Int limit = 0;                   // L(r), >= 0
    std::map<long, Int> deviations;  // index (>= 1) -> entry, entry != limit

    SeqElem() = default;
    explicit SeqElem(Int L) : limit(std::move(L)) {}
    SeqElem(Int L, std::map<long, Int> devs) : limit(std::move(L)), deviations(std::move(devs)) {
        normalize();
    }

    static SeqElem unit_at(long n, const Int& v) {  // v at index n, zero elsewhere
        SeqElem r;
        if (v != 0) r.deviations[n] = v;
        return r;
    }
    static SeqElem seven_e(long n) { return unit_at(n, 7); }
    static SeqElem constant(const Int& L) { return SeqElem(L); }

    void normalize() {
        for (auto it = deviations.begin(); it != deviations.end();)
            it = (it->second == limit) ? deviations.erase(it) : std::next(it);
    }

    Int entry(long i) const {
        auto it = deviations.find(i);
        return it == deviations.end() ? limit : it->second;
    }
    bool is_zero() const { return limit == 0 && deviations.empty(); }
    bool nonnegative() const {
        if (limit < 0) return false;
        for (auto& [i, v] : deviations)
            if (v < 0) return false;
        return true;
    }
    bool all_multiples_of_7() const {
        if (limit % 7 != 0) return false;
        for (auto& [i, v] : deviations)
            if (v % 7 != 0) return false;
        return true;
    }
    Int max_entry() const {
        Int m = limit;
        for (auto& [i, v] : deviations) m = std::max(m, v);
        return m;
    }
    std::vector<long> support_indices() const {
        std::vector<long> idx;
        for (auto& [i, v] : deviations) idx.push_back(i);
        return idx;
    }

    friend SeqElem operator+(const SeqElem& u, const SeqElem& v) {
        SeqElem r;
        r.limit = u.limit + v.limit;
        for (auto& [i, x] : u.deviations) r.deviations[i] = x + v.entry(i);
        for (auto& [i, x] : v.deviations)
            if (!u.deviations.count(i)) r.deviations[i] = u.limit + x;
        r.normalize();
        return r;
    }
    // Componentwise difference; nullopt if any entry would go negative.
    friend std::optional<SeqElem> checked_sub(const SeqElem& u, const SeqElem& v) {
        if (u.limit < v.limit) return std::nullopt;
        SeqElem r;
        r.limit = u.limit - v.limit;
        for (auto& [i, x] : u.deviations) {
            Int d = x - v.entry(i);
            if (d < 0) return std::nullopt;
            r.deviations[i] = d;
        }
        for (auto& [i, x] : v.deviations)
            if (!u.deviations.count(i)) {
                Int d = u.limit - x;
                if (d < 0) return std::nullopt;
                r.deviations[i] = d;
            }
        r.normalize();
        return r;
    }
    friend bool operator==(const SeqElem& u, const SeqElem& v) {
        return u.limit == v.limit && u.deviations == v.deviations;
    }
    friend bool operator!=(const SeqElem& u, const SeqElem& v) { return !(u == v); }
    // Canonical total order compatible with addition: limit first, then the
    // first differing index.
    friend bool operator<(const SeqElem& u, const SeqElem& v) {
        if (u.limit != v.limit) return u.limit < v.limit;
        auto a = u.deviations.begin(), b = v.deviations.begin();
        while (a != u.deviations.end() && b != v.deviations.end()) {
            if (a->first != b->first) {
                // Smaller index deviates in one of them only; compare entry vs limit.
                return a->first < b->first ? a->second < u.limit : v.limit < b->second;
            }
            if (a->second != b->second) return a->second < b->second;
            ++a;
            ++b;
        }
        if (a != u.deviations.end()) return a->second < u.limit;
        if (b != v.deviations.end()) return v.limit < b->second;
        return false;
    }
};

// Canonical text encoding "limit=L; {i:ai,...}".
inline std::string seq_str(const SeqElem& t) {
    std::string s = "limit=" + t.limit.str() + "; {";
    bool first = true;
    for (auto& [i, v] : t.deviations) {
        if (!first) s += ",";
        s += std::to_string(i) + ":" + v.str();
        first = false;
    }
    return s + "}";
}

inline bool seq_is_generator(const SeqElem& g) {
    if (g.is_zero() || !g.nonnegative()) return false;
    return g.all_multiples_of_7() || g.limit == 3 || g.limit == 5;
}

struct SeqCert {
    std::vector<SeqElem> summands;  // each a single generator

    SeqElem total() const {
        SeqElem s;
        for (auto& g : summands) s = s + g;
        return s;
    }
};

using SeqVerdict = Verdict<SeqCert>;

// L is reachable as 3x + 5y + 7z with x + y >= 1 (or as a pure multiple of 7
// handled separately) iff L in {3,5,6} or L >= 8.
inline bool seq_limit_reachable(const Int& L) {
    return L == 3 || L == 5 || L == 6 || L >= 8;
}

// Decides t in S with a generator-summand certificate.
inline SeqVerdict seq_membership(const SeqElem& t, const SearchBounds& bounds = {}) {
    auto refute = [&](const char* why) {
        return SeqVerdict{Outcome::refuted, false, why, std::nullopt, bounds};
    };
    if (!t.nonnegative()) return refute("negative entry");
    if (t.is_zero()) return refute("zero is not a nonempty sum of generators");
    if (t.all_multiples_of_7())
        return SeqVerdict::make_holds("single multiples-of-7 generator", SeqCert{{t}}, bounds);
    if (!seq_limit_reachable(t.limit))
        return refute("entries not all multiples of 7 and limit not in {3,5,6} u [8,oo)");

    // L = 3x + 5y + 7z with x + y >= 1 and z minimal 0; one limit-3/5 part
    // soaks up every deviation (its entries are unconstrained).
    Int L = t.limit;
    Int y = (2 * L) % 3;  // 5y = L (mod 3); x >= 0 for every reachable L
    Int x = (L - 5 * y) / 3;
    Int z = 0;
    SeqCert cert;
    SeqElem sponge;  // the generator that carries all deviations
    sponge.limit = (x >= 1) ? 3 : 5;
    Int tail = L - sponge.limit;  // carried by the remaining parts
    for (auto& [i, v] : t.deviations) sponge.deviations[i] = v;
    sponge.normalize();
    // Remaining parts are constant-3/5/7z with entry 0 at t's deviations.
    auto constant_part = [&](const Int& lim) {
        SeqElem part(lim);
        for (auto& [i, v] : t.deviations) { (void)v; part.deviations[i] = 0; }
        part.normalize();
        return part;
    };
    Int x_left = x - (sponge.limit == 3 ? 1 : 0);
    Int y_left = y - (sponge.limit == 5 ? 1 : 0);
    cert.summands.push_back(sponge);
    for (Int k = 0; k < x_left; ++k) cert.summands.push_back(constant_part(3));
    for (Int k = 0; k < y_left; ++k) cert.summands.push_back(constant_part(5));
    if (z > 0) cert.summands.push_back(constant_part(7 * z));
    return SeqVerdict::make_holds("limit decomposition 3x+5y", cert, bounds);
}

inline bool seq_cert_check(const SeqElem& t, const SeqCert& c) {
    if (c.summands.empty()) return false;
    for (auto& g : c.summands)
        if (!seq_is_generator(g)) return false;
    return c.total() == t;
}

inline bool seq_in_S(const SeqElem& t) { return seq_membership(t).holds(); }

inline bool seq_is_seven_e(const SeqElem& t) {
    return t.limit == 0 && t.deviations.size() == 1 && t.deviations.begin()->second == 7;
}

// Closed-form atom test: t = 7 e_n, or limit in {3,5} with every entry < 7.
// Precondition: t in S.
inline bool seq_atom_characterization(const SeqElem& t) {
    if (!seq_in_S(t)) throw std::invalid_argument("seq_atom_characterization: element not in S");
    if (seq_is_seven_e(t)) return true;
    if (t.limit != 3 && t.limit != 5) return false;
    return t.max_entry() < 7;
}

struct SeqSpanCert {
    std::vector<SeqElem> atoms;

    SeqElem total() const {
        SeqElem s;
        for (auto& a : atoms) s = s + a;
        return s;
    }
};

using SeqSpanVerdict = Verdict<SeqSpanCert>;

// Constructive membership of <M>: five cases on the limit.
//   L = 0        -> sums of 7 e_n
//   L in {3,5}   -> clip entries > 6 with 7 e_n, leave one atom
//   L = 6        -> clip, then split into two limit-3 atoms
//   L = 7        -> refuted: 7 = 3x + 5y is infeasible
//   L >= 8       -> 3x + 5y parts, entries clipped to fit 6(x+y) capacity
inline SeqSpanVerdict seq_in_M_span(const SeqElem& t, const SearchBounds& bounds = {}) {
    if (!seq_in_S(t)) throw std::invalid_argument("seq_in_M_span: element not in S");
    SeqSpanCert cert;
    Int L = t.limit;
    auto clip_sevens = [&](const SeqElem& r, const Int& cap) {
        // subtract 7 e_i until every deviating entry is <= cap; returns residue
        SeqElem res = r;
        for (auto& [i, v] : r.deviations) {
            if (v <= cap) continue;
            Int k = (v - cap + 6) / 7;  // smallest k with v - 7k <= cap
            while (v - 7 * k < 0) --k;  // keep entries non-negative
            for (Int j = 0; j < k; ++j) cert.atoms.push_back(SeqElem::seven_e(i));
            res.deviations[i] = v - 7 * k;
        }
        res.normalize();
        return res;
    };

    if (L == 0) {
        // all entries multiples of 7 (membership guarantees it)
        for (auto& [i, v] : t.deviations)
            for (Int j = 0; j < v / 7; ++j) cert.atoms.push_back(SeqElem::seven_e(i));
        return SeqSpanVerdict::make_holds("limit-0: sums of 7e_n", cert, bounds);
    }
    if (L == 3 || L == 5) {
        SeqElem res = clip_sevens(t, 6);
        cert.atoms.push_back(res);
        return SeqSpanVerdict::make_holds("limit-3/5: clip then atom", cert, bounds);
    }
    if (L == 6) {
        SeqElem res = clip_sevens(t, 6);
        SeqElem r1(3), r2(3);
        for (auto& [i, v] : res.deviations) {
            Int a = std::min<Int>(v, 3);
            r1.deviations[i] = a;
            r2.deviations[i] = v - a;
        }
        r1.normalize();
        r2.normalize();
        cert.atoms.push_back(r1);
        cert.atoms.push_back(r2);
        return SeqSpanVerdict::make_holds("limit-6: two limit-3 atoms", cert, bounds);
    }
    if (L == 7)
        return SeqSpanVerdict{Outcome::refuted, false,
                              "limit 7: atoms have limits 0, 3, 5 and 3x+5y=7 is infeasible",
                              std::nullopt, bounds};
    // L >= 8: 3x + 5y = L with x, y >= 0 and x + y >= 1.
    Int y = (2 * L) % 3;
    Int x = (L - 5 * y) / 3;
    Int parts = x + y;
    Int cap = 6 * parts;
    SeqElem res = clip_sevens(t, cap);
    std::vector<SeqElem> atoms;
    for (Int k = 0; k < x; ++k) atoms.push_back(SeqElem(Int(3)));
    for (Int k = 0; k < y; ++k) atoms.push_back(SeqElem(Int(5)));
    for (auto& [i, v] : res.deviations) {
        Int left = v;
        for (auto& a : atoms) {
            Int take = std::min<Int>(left, 6);
            a.deviations[i] = take;
            left -= take;
            if (left == 0) {
                // remaining atoms carry entry 0 at this index
                for (auto& b : atoms)
                    if (!b.deviations.count(i)) b.deviations[i] = 0;
                break;
            }
        }
    }
    for (auto& a : atoms) {
        a.normalize();
        cert.atoms.push_back(a);
    }
    return SeqSpanVerdict::make_holds("limit>=8: 3x+5y parts", cert, bounds);
}

inline bool seq_span_cert_check(const SeqElem& t, const SeqSpanCert& c) {
    if (c.atoms.empty()) return false;
    for (auto& a : c.atoms) {
        if (!seq_in_S(a)) return false;
        if (!seq_atom_characterization(a)) return false;
    }
    return c.total() == t;
}

// ---- bounded universe enumeration -----------------------------------------

struct SeqUniverse {
    long index_bound = 4;       // deviation indices 1..index_bound
    long long entry_bound = 14; // entries 0..entry_bound
    std::vector<Int> limits = {0, 3, 5};
};

// Every t with deviations on 1..index_bound, entries <= entry_bound, limit in
// the given set. Canonical order.
inline std::vector<SeqElem> seq_universe_elements(const SeqUniverse& u) {
    std::vector<SeqElem> out;
    for (const Int& L : u.limits) {
        std::vector<SeqElem> cur{SeqElem(L)};
        for (long i = 1; i <= u.index_bound; ++i) {
            std::vector<SeqElem> next;
            for (auto& t : cur)
                for (long long v = 0; v <= u.entry_bound; ++v) {
                    SeqElem s = t;
                    if (Int(v) != L) s.deviations[i] = v;
                    next.push_back(std::move(s));
                }
            cur = std::move(next);
        }
        for (auto& t : cur) out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Brute-force S \ (S + S) inside the bounded universe. Splits u + v = t are
// enumerated with u supported on supp(t) plus one fresh index; fresh
// deviations beyond that normalize away (S is stable under permuting
// indices), so one spare slot is enough.
inline std::vector<SeqElem> seq_atoms_in_universe(const SeqUniverse& uni) {
    std::vector<SeqElem> atoms;
    auto elements = seq_universe_elements(uni);
    for (auto& t : elements) {
        if (!seq_in_S(t)) continue;
        std::vector<long> idx = t.support_indices();
        idx.push_back(uni.index_bound + 1);  // one fresh slot
        bool splits = false;
        // Cheap candidate splits first; the full scan below only runs for
        // elements that survive these.
        {
            std::vector<SeqElem> candidates;
            for (long i : t.support_indices())
                if (t.entry(i) >= 7) candidates.push_back(SeqElem::seven_e(i));
            for (int c : {3, 5}) {
                SeqElem sponge{Int(c)};
                for (auto& [i, v] : t.deviations) sponge.deviations[i] = v;
                sponge.normalize();
                candidates.push_back(sponge);
            }
            for (auto& u : candidates) {
                if (u.is_zero()) continue;
                auto v = checked_sub(t, u);
                if (v && !v->is_zero() && seq_in_S(u) && seq_in_S(*v)) { splits = true; break; }
            }
        }
        if (splits) continue;
        // enumerate u <= t on idx with limit <= L(t)
        std::vector<Int> caps;
        for (long i : idx) caps.push_back(t.entry(i));
        std::function<void(size_t, SeqElem&)> rec = [&](size_t k, SeqElem& u) {
            if (splits) return;
            if (k == idx.size()) {
                for (Int ul = 0; ul <= t.limit; ++ul) {
                    u.limit = ul;
                    SeqElem uu = u;
                    uu.normalize();
                    if (uu.is_zero()) continue;
                    auto v = checked_sub(t, uu);
                    if (!v || v->is_zero()) continue;
                    if (seq_in_S(uu) && seq_in_S(*v)) { splits = true; return; }
                }
                u.limit = 0;
                return;
            }
            for (Int val = 0; val <= caps[k]; ++val) {
                u.deviations[idx[k]] = val;
                rec(k + 1, u);
                if (splits) return;
            }
            u.deviations.erase(idx[k]);
        };
        SeqElem u;
        rec(0, u);
        if (!splits) atoms.push_back(t);
    }
    return atoms;
}

}  // namespace factorlab
