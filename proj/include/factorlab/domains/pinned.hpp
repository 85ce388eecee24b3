#pragma once

// Polynomial rings over an exact field K (Q or Q(sqrt2)) with "pinned"
// degrees whose coefficients must be integers:
//
//   d8  = Z + Zx + x^2 Q[x]        pins {0, 1}, K = Q
//   d9  = Z + Zx + x^2 Q(sqrt2)[x] pins {0, 1}, K = Q(sqrt2)
//   d23 = Z + x Q[x]               pins {0},    K = Q
//
// Units are +-1. Every ring factorization g * h = f projects to a K[x]
// factorization, i.e. a sub-multiset of the K[x]-irreducible factors of f
// plus a scalar; the scalar ranges over a cyclic Z-module determined by the
// pinned coefficients. Enumerating sub-multisets and solving for the scalar
// decides irreducibility exactly and yields constructive factorizations.

#include "factorlab/domains/ids.hpp"
#include "factorlab/quad_factor.hpp"
#include "factorlab/search_bounds.hpp"
#include "factorlab/verdict.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace factorlab {

// ---- field helpers shared by Rat and QLin ----------------------------------

inline bool k_is_integer(const Rat& c) { return is_integer(c); }
inline bool k_is_integer(const QLin& c) { return c.irr_part == 0 && is_integer(c.rat_part); }

inline std::optional<Rat> k_as_rational(const Rat& c) { return c; }
inline std::optional<Rat> k_as_rational(const QLin& c) {
    if (c.irr_part != 0) return std::nullopt;
    return c.rat_part;
}

inline Rat k_height(const Rat& c) {
    return Rat(std::max(int_abs(num(c)), den(c)));
}
inline Rat k_height(const QLin& c) {
    return std::max(k_height(c.rat_part), k_height(c.irr_part));
}

inline std::string k_str(const Rat& c) { return rat_str(c); }
inline std::string k_str(const QLin& c) { return qlin_str(c); }

// ---- scalar modules ---------------------------------------------------------

// The set { mu in K : mu * u in Z for all constraints u } is all of K, a
// cyclic module gen * Z, or {0}.
template <class K>
struct ScalarModule {
    enum Kind { Free, Line, Zero } kind = Free;
    K gen{Rat(1)};

    static ScalarModule free() { return {Free, K{Rat(1)}}; }
    static ScalarModule zero() { return {Zero, K{Rat(0)}}; }
    static ScalarModule line(K g) { return {Line, std::move(g)}; }
};

template <class K>
inline ScalarModule<K> scalar_module(const std::vector<K>& constraints) {
    std::vector<K> us;
    for (auto& u : constraints)
        if (!field_is_zero(u)) us.push_back(u);
    if (us.empty()) return ScalarModule<K>::free();
    K gen = K{Rat(1)} / us[0];
    for (size_t i = 1; i < us.size(); ++i) {
        // need { k in Z : k * (gen * u) in Z }
        auto w = k_as_rational(gen * us[i]);
        if (!w) return ScalarModule<K>::zero();
        Int p = int_abs(num(*w)), q = den(*w);
        if (p == 0) continue;
        Int step = q / int_gcd(p, q);
        gen = gen * K{Rat(step)};
    }
    return ScalarModule<K>::line(gen);
}

// ---- the domain -------------------------------------------------------------

template <class K>
struct PinnedDomain {
    DomainId id;
    std::vector<long> pins;  // degrees whose coefficients must be integers

    using P = DPoly<K>;

    bool member(const P& f) const {
        for (long d : pins)
            if (!k_is_integer(f.at((size_t)d))) return false;
        return true;
    }
    void require_member(const P& f) const {
        if (!member(f)) throw std::invalid_argument("element not in the domain");
    }
    bool is_unit(const P& f) const {
        return f.deg() == 0 && (f.c[0] == K{Rat(1)} || f.c[0] == K{Rat(-1)});
    }
    long min_exp(const P& f) const {
        for (size_t i = 0; i < f.c.size(); ++i)
            if (!field_is_zero(f.c[i])) return (long)i;
        return -1;
    }
    K min_coeff(const P& f) const { return f.c[(size_t)min_exp(f)]; }

    // K[x] factorization with a uniform shape.
    struct Fac {
        K unit;
        long x_power;
        std::vector<DPoly<K>> irr;  // with multiplicity, expanded
    };
    Fac field_factorization(const P& f) const {
        Fac out;
        if constexpr (std::is_same_v<K, Rat>) {
            auto q = factor_q(f);
            out.unit = q.unit;
            out.x_power = q.x_power;
            for (auto& [p, m] : q.factors)
                for (long i = 0; i < m; ++i) out.irr.push_back(p);
        } else {
            auto q = factor_quad(f);
            out.unit = q.unit;
            out.x_power = q.x_power;
            for (auto& [p, m] : q.factors)
                for (long i = 0; i < m; ++i) out.irr.push_back(p);
        }
        return out;
    }

    // scalar-constraint module of mu * x^e * prod(parts)
    ScalarModule<K> part_module(long e, const std::vector<const P*>& parts) const {
        P poly = DPoly<K>::monomial(K{Rat(1)}, (size_t)e);
        for (auto* p : parts) poly = poly * *p;
        std::vector<K> us;
        for (long d : pins) us.push_back(poly.at((size_t)d));
        return scalar_module(us);
    }

    struct Split {
        P left, right;
    };

    // Enumerates proper two-factor splits; returns the first feasible one in
    // canonical order (constant extraction first with the smallest prime,
    // then by (x-power, subset) order). Exact: no split means irreducible.
    std::optional<Split> find_split(const P& f) const {
        Fac fac = field_factorization(f);
        size_t n = fac.irr.size();
        long e = fac.x_power;

        auto build = [&](long e1, const std::vector<size_t>& mask, const K& mu) {
            P g = DPoly<K>::monomial(mu, (size_t)e1);
            for (size_t i = 0; i < n; ++i)
                if (mask[i]) g = g * fac.irr[i];
            return g;
        };

        // constant extraction: f = mu * (f / mu)
        {
            std::vector<const P*> all;
            for (auto& p : fac.irr) all.push_back(&p);
            auto m2 = part_module(e, all);
            if (m2.kind == ScalarModule<K>::Line) {
                auto C = k_as_rational(fac.unit / m2.gen);
                if (C && is_integer(*C) && int_abs(num(*C)) >= 2) {
                    Int c = int_abs(num(*C));
                    Int p = int_factorize(c)[0].first;
                    K mu{Rat(p)};
                    P rest = f;
                    for (auto& x : rest.c) x = x / mu;
                    if (!is_unit(rest)) return Split{DPoly<K>::constant(mu), rest};
                }
            } else if (m2.kind == ScalarModule<K>::Free) {
                K mu{Rat(2)};
                P rest = f;
                for (auto& x : rest.c) x = x / mu;
                if (!is_unit(rest)) return Split{DPoly<K>::constant(mu), rest};
            }
        }

        // proper splits by x-power and sub-multiset (factors are expanded
        // with multiplicity; duplicate masks only cost a little)
        if (n > 20) throw std::invalid_argument("find_split: too many irreducible factors");
        std::vector<size_t> mask(n, 0);
        for (long e1 = 0; e1 <= e; ++e1) {
            for (size_t code = 0; code < ((size_t)1 << n); ++code) {
                size_t bits = 0;
                for (size_t i = 0; i < n; ++i) {
                    mask[i] = (code >> i) & 1;
                    bits += mask[i];
                }
                if (e1 == 0 && bits == 0) continue;          // left would be a constant
                if (e1 == e && bits == n) continue;          // right would be a constant
                std::vector<const P*> in, out_;
                for (size_t i = 0; i < n; ++i)
                    (mask[i] ? in : out_).push_back(&fac.irr[i]);
                auto m1 = part_module(e1, in);
                auto m2 = part_module(e - e1, out_);
                K mu{Rat(0)};
                bool ok = false;
                if (m1.kind == ScalarModule<K>::Zero || m2.kind == ScalarModule<K>::Zero) {
                    ok = false;
                } else if (m1.kind == ScalarModule<K>::Line &&
                           m2.kind == ScalarModule<K>::Line) {
                    auto C = k_as_rational(fac.unit / (m1.gen * m2.gen));
                    if (C && is_integer(*C) && *C != 0) {
                        mu = m1.gen;
                        ok = true;
                    }
                } else if (m1.kind == ScalarModule<K>::Line) {
                    mu = m1.gen;
                    ok = true;
                } else if (m2.kind == ScalarModule<K>::Line) {
                    mu = fac.unit / m2.gen;
                    ok = true;
                } else {
                    mu = K{Rat(1)};
                    ok = true;
                }
                if (!ok) continue;
                P left = build(e1, mask, mu);
                P right;
                if (!divides_exactly(left, f, &right))
                    throw std::runtime_error("find_split: inexact scalar solution");
                if (!member(left) || !member(right))
                    throw std::runtime_error("find_split: scalar solution left the domain");
                if (is_unit(left) || is_unit(right)) continue;
                return Split{left, right};
            }
        }
        return std::nullopt;
    }

    // Exact irreducibility through the split engine.
    Verdict<Split> irreducible(const P& f, const SearchBounds& bounds = {}) const {
        if (f.is_zero() || is_unit(f))
            throw std::invalid_argument("irreducible: zero or unit input");
        require_member(f);
        auto s = find_split(f);
        if (s) return Verdict<Split>::make_refuted("factor-partition split", *s, bounds);
        return Verdict<Split>::make_holds("factor-partition exhausted exactly", Split{f, f},
                                          bounds);
    }

    // Atomic factorization for pins {0,1} (d8/d9): possible iff the minimal
    // coefficient is an integer; the factor list multiplies back to f.
    std::optional<std::vector<P>> atomic_factorization(const P& f) const {
        if (!k_is_integer(min_coeff(f))) return std::nullopt;
        std::vector<P> out;
        P g = f;
        long k = min_exp(g);
        long strip = pins.size() >= 2 ? std::max(0L, k - 1) : 0L;
        for (long i = 0; i < strip; ++i) out.push_back(DPoly<K>::monomial(K{Rat(1)}, 1));
        if (strip > 0) {
            P q;
            divides_exactly(DPoly<K>::monomial(K{Rat(1)}, (size_t)strip), g, &q);
            g = q;
        }
        // recursive splitting; every part keeps min exponent <= 1, hence an
        // integral minimal coefficient, so no branch dead-ends
        std::vector<P> stack = {g};
        while (!stack.empty()) {
            P cur = stack.back();
            stack.pop_back();
            if (is_unit(cur)) {
                // fold the sign into the previous factor
                if (cur.c[0] == K{Rat(-1)}) {
                    if (out.empty()) return std::nullopt;  // f itself a unit: caller's bug
                    out.back() = out.back().scaled(K{Rat(-1)});
                }
                continue;
            }
            auto s = find_split(cur);
            if (!s) {
                out.push_back(cur);
                continue;
            }
            stack.push_back(s->left);
            stack.push_back(s->right);
        }
        // verify exactly
        P prod = DPoly<K>::constant(K{Rat(1)});
        for (auto& p : out) prod = prod * p;
        if (!(prod == f)) throw std::runtime_error("atomic_factorization: product mismatch");
        return out;
    }

    // Bounded divisor enumeration: non-unit, non-associate divisors within
    // coefficient height bounds, canonical representatives (positive minimal
    // coefficient), sorted.
    std::vector<P> divisors_up_to(const P& f, const SearchBounds& bounds) const {
        Fac fac = field_factorization(f);
        size_t n = fac.irr.size();
        long e = fac.x_power;
        std::set<std::vector<Rat>> seen;  // flattened canonical coefficient keys
        std::vector<P> out;
        Rat H(bounds.max_coeff_height);

        auto consider = [&](const P& g) {
            if (g.is_zero() || is_unit(g) || !member(g)) return;
            P q;
            if (!divides_exactly(g, f, &q)) return;
            if (!member(q) || is_unit(q)) return;  // proper divisors only
            for (auto& c : g.c)
                if (k_height(c) > H) return;
            P canon = g;
            if constexpr (std::is_same_v<K, Rat>) {
                if (min_coeff(canon) < 0) canon = canon.scaled(K{Rat(-1)});
            } else {
                if (min_coeff(canon).sign() < 0) canon = canon.scaled(K{Rat(-1)});
            }
            std::vector<Rat> flat;
            for (auto& c : canon.c) {
                if constexpr (std::is_same_v<K, Rat>) {
                    flat.push_back(c);
                } else {
                    flat.push_back(c.rat_part);
                    flat.push_back(c.irr_part);
                }
            }
            if (seen.insert(flat).second) out.push_back(canon);
        };

        std::vector<size_t> mask(n, 0);
        for (long e1 = 0; e1 <= e; ++e1) {
            for (size_t code = 0; code < ((size_t)1 << n); ++code) {
                size_t c = code;
                for (size_t i = 0; i < n; ++i) {
                    mask[i] = c & 1;
                    c >>= 1;
                }
                std::vector<const P*> in;
                P base = DPoly<K>::monomial(K{Rat(1)}, (size_t)e1);
                for (size_t i = 0; i < n; ++i)
                    if (mask[i]) {
                        in.push_back(&fac.irr[i]);
                        base = base * fac.irr[i];
                    }
                // scalar candidates: generator multiples within height
                auto m1 = part_module(e1, in);
                if (m1.kind == ScalarModule<K>::Zero) continue;
                std::vector<K> mus;
                if (m1.kind == ScalarModule<K>::Line) {
                    for (long long a = 1; a <= bounds.max_coeff_height; ++a)
                        mus.push_back(m1.gen * K{Rat(a)});
                } else {
                    for (long long a = 1; a <= bounds.max_coeff_height; ++a) {
                        mus.push_back(K{Rat(a)});
                        mus.push_back(K{Rat(1, a)});
                        if constexpr (std::is_same_v<K, QLin>) {
                            mus.push_back(QLin(Rat(0), Rat(a)));
                            mus.push_back(QLin(Rat(0), Rat(1, a)));
                        }
                    }
                }
                for (auto& mu : mus) consider(base.scaled(mu));
            }
        }
        std::sort(out.begin(), out.end(), [](const P& a, const P& b) {
            if (a.deg() != b.deg()) return a.deg() < b.deg();
            for (size_t i = 0; i < a.c.size(); ++i)
                if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
            return false;
        });
        return out;
    }
};

inline PinnedDomain<Rat> make_d8() { return {DomainId::D8, {0, 1}}; }
inline PinnedDomain<QLin> make_d9() { return {DomainId::D9, {0, 1}}; }
inline PinnedDomain<Rat> make_d23() { return {DomainId::D23, {0}}; }

}  // namespace factorlab
