#pragma once

// Factorization over Q(sqrt2) via norms: shift x -> x - s*sqrt2 until the
// norm g_s * conj(g_s) is squarefree over Q, factor the norm, and read the
// K-factors off as gcds. Only finitely many shifts are bad.

#include "factorlab/intpoly_factor.hpp"

#include <stdexcept>
#include <vector>

namespace factorlab {

inline DPoly<QLin> qlin_conj(const DPoly<QLin>& f) {
    DPoly<QLin> r = f;
    for (auto& c : r.c) c = c.conj();
    return r;
}

inline DPoly<QLin> lift_to_qlin(const DPoly<Rat>& f) {
    std::vector<QLin> c;
    c.reserve(f.c.size());
    for (auto& x : f.c) c.emplace_back(x);
    return DPoly<QLin>(std::move(c));
}

inline DPoly<Rat> project_to_rat(const DPoly<QLin>& f) {
    std::vector<Rat> c;
    c.reserve(f.c.size());
    for (auto& x : f.c) {
        if (x.irr_part != 0) throw std::invalid_argument("project_to_rat: irrational coefficient");
        c.push_back(x.rat_part);
    }
    return DPoly<Rat>(std::move(c));
}

struct KFactorization {
    QLin unit{Rat(1)};
    long x_power = 0;
    std::vector<std::pair<DPoly<QLin>, long>> factors;  // monic irreducible over Q(sqrt2)

    DPoly<QLin> remultiply() const {
        DPoly<QLin> r = DPoly<QLin>::monomial(unit, (size_t)x_power);
        for (auto& [p, m] : factors) r = r * poly_pow(p, m);
        return r;
    }
};

// Squarefree decomposition over K = Q(sqrt2), Yun's algorithm (char 0).
inline std::vector<std::pair<DPoly<QLin>, long>> yun_squarefree_k(const DPoly<QLin>& f) {
    std::vector<std::pair<DPoly<QLin>, long>> out;
    if (f.deg() <= 0) return out;
    DPoly<QLin> fp = f.derivative();
    DPoly<QLin> g = poly_gcd(f, fp);
    auto [c, r1] = divmod(f, g);
    auto [w, r2] = divmod(fp, g);
    if (!r1.is_zero() || !r2.is_zero()) throw std::runtime_error("yun_k: inexact division");
    DPoly<QLin> d = w - c.derivative();
    long i = 1;
    while (c.deg() > 0) {
        DPoly<QLin> a = poly_gcd(c, d);
        auto [c2, rc] = divmod(c, a);
        auto [w2, rw] = divmod(d, a);
        if (!rc.is_zero() || !rw.is_zero()) throw std::runtime_error("yun_k: inexact step");
        if (a.deg() > 0) out.push_back({a, i});
        c = c2;
        d = w2 - c2.derivative();
        ++i;
    }
    return out;
}

// Monic irreducible K-factors of a monic squarefree K-polynomial.
inline std::vector<DPoly<QLin>> trager_squarefree(const DPoly<QLin>& g) {
    if (g.deg() == 1) return {g};
    for (int s = 0; s < 64; ++s) {
        QLin shift = QLin(Rat(0), Rat(-s));  // x -> x - s*sqrt2
        DPoly<QLin> gs = g.shifted(shift);
        DPoly<QLin> normk = gs * qlin_conj(gs);
        DPoly<Rat> N = project_to_rat(normk);
        if (poly_gcd(N, N.derivative()).deg() != 0) continue;  // norm not squarefree
        auto nf = factor_q(N);
        std::vector<DPoly<QLin>> out;
        for (auto& [q, mult] : nf.factors) {
            (void)mult;  // norm squarefree: every multiplicity is 1
            DPoly<QLin> h = poly_gcd(gs, lift_to_qlin(q));
            if (h.deg() >= 1) out.push_back(poly_monic(h.shifted(QLin(Rat(0), Rat(s)))));
        }
        // x may divide the norm via the shift; it never divides monic gs pieces,
        // but guard the reconstruction anyway.
        DPoly<QLin> prod = DPoly<QLin>::constant(QLin(Rat(1)));
        for (auto& h : out) prod = prod * h;
        if (prod == poly_monic(g)) return out;
        continue;  // a degenerate shift; try the next one
    }
    throw std::runtime_error("trager_squarefree: no good shift found");
}

inline KFactorization factor_quad(const DPoly<QLin>& f0) {
    if (f0.is_zero()) throw std::invalid_argument("factor_quad: zero polynomial");
    KFactorization res;
    DPoly<QLin> f = f0;
    size_t k = 0;
    while (k < f.c.size() && field_is_zero(f.c[k])) ++k;
    if (k > 0) {
        res.x_power = (long)k;
        f.c.erase(f.c.begin(), f.c.begin() + (long)k);
    }
    res.unit = f.lead();
    f = poly_monic(f);
    if (f.deg() == 0) return res;
    for (auto& [part, mult] : yun_squarefree_k(f))
        for (auto& irr : trager_squarefree(part)) res.factors.push_back({irr, mult});
    std::sort(res.factors.begin(), res.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        for (size_t i = 0; i < a.first.c.size(); ++i)
            if (a.first.c[i] != b.first.c[i]) return a.first.c[i] < b.first.c[i];
        return false;
    });
    return res;
}

inline bool quad_irreducible(const DPoly<QLin>& f) {
    if (f.deg() < 1) return false;
    auto fac = factor_quad(f);
    return (fac.x_power == 1 && fac.factors.empty()) ||
           (fac.x_power == 0 && fac.factors.size() == 1 && fac.factors[0].second == 1);
}

}  // namespace factorlab
