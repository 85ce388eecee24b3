#pragma once

// Exact factorization of univariate polynomials over Q, by the classical
// route: Yun squarefree decomposition, Berlekamp factorization modulo a
// small good prime, Hensel lifting to above the Landau-Mignotte bound, and
// subset recombination. Degrees here are small (<= ~16), so the simple
// variants are plenty.

#include "factorlab/densepoly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

namespace factorlab {

using ZPoly = std::vector<Int>;  // ascending coefficients

namespace zf {

inline void trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline long deg(const ZPoly& a) { return (long)a.size() - 1; }

inline DPoly<Rat> to_q(const ZPoly& a) {
    std::vector<Rat> c;
    c.reserve(a.size());
    for (auto& x : a) c.emplace_back(x);
    return DPoly<Rat>(std::move(c));
}

inline Int content(const ZPoly& a) {
    Int g = 0;
    for (auto& x : a) g = int_gcd(g, x);
    return g;
}

inline Int height(const ZPoly& a) {
    Int h = 0;
    for (auto& x : a) h = std::max(h, int_abs(x));
    return h;
}

// Scale a rational polynomial to a primitive integer one with positive lead;
// returns the primitive polynomial (the dropped rational unit is recoverable
// from the leads, which callers track themselves).
inline ZPoly primitive_from_q(const DPoly<Rat>& f) {
    if (f.is_zero()) return {};
    Int L = 1;
    for (auto& c : f.c) L = L / int_gcd(L, den(c)) * den(c);
    ZPoly a;
    a.reserve(f.c.size());
    for (auto& c : f.c) a.push_back(num(c) * (L / den(c)));
    Int g = content(a);
    if (a.back() < 0) g = -g;
    for (auto& x : a) x /= g;
    return a;
}

// ---- arithmetic mod a small prime ----------------------------------------

using PPoly = std::vector<long long>;

inline void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline long pdeg(const PPoly& a) { return (long)a.size() - 1; }

inline long long pinv(long long a, long long p) {
    long long r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline PPoly pmul(const PPoly& a, const PPoly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    ptrim(r);
    return r;
}

inline std::pair<PPoly, PPoly> pdivmod(const PPoly& a, const PPoly& b, long long p) {
    PPoly q, r = a;
    ptrim(r);
    if (pdeg(r) < pdeg(b)) return {q, r};
    q.assign(pdeg(r) - pdeg(b) + 1, 0);
    long long binv = pinv(b.back(), p);
    while (pdeg(r) >= pdeg(b) && !r.empty()) {
        long long f = r.back() * binv % p;
        long d = pdeg(r) - pdeg(b);
        q[d] = f;
        for (size_t i = 0; i < b.size(); ++i)
            r[i + d] = ((r[i + d] - f * b[i]) % p + p) % p;
        ptrim(r);
    }
    ptrim(q);
    return {q, r};
}

inline PPoly pmonic(PPoly a, long long p) {
    ptrim(a);
    if (a.empty()) return a;
    long long inv = pinv(a.back(), p);
    for (auto& x : a) x = x * inv % p;
    return a;
}

inline PPoly pgcd(PPoly a, PPoly b, long long p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        auto [q, r] = pdivmod(a, b, p);
        (void)q;
        a = b;
        b = r;
    }
    return pmonic(a, p);
}

inline PPoly pderiv(const PPoly& a, long long p) {
    PPoly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back((long long)(i % (size_t)p) * a[i] % p);
    ptrim(r);
    return r;
}

inline PPoly psub_const(PPoly a, long long s, long long p) {
    if (a.empty()) a.push_back(0);
    a[0] = ((a[0] - s) % p + p) % p;
    ptrim(a);
    return a;
}

// Berlekamp factorization of a monic squarefree polynomial mod p.
inline std::vector<PPoly> berlekamp(const PPoly& f, long long p) {
    long n = pdeg(f);
    if (n <= 1) return {f};
    // x^p mod f
    PPoly xp = {1};
    {
        PPoly base = {0, 1};
        long long e = p;
        while (e) {
            if (e & 1) xp = pdivmod(pmul(xp, base, p), f, p).second;
            base = pdivmod(pmul(base, base, p), f, p).second;
            e >>= 1;
        }
    }
    // Q matrix rows: x^{p i} mod f
    std::vector<std::vector<long long>> B((size_t)n, std::vector<long long>((size_t)n, 0));
    PPoly row = {1};
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j <= pdeg(row); ++j) B[(size_t)j][(size_t)i] = row[(size_t)j];
        B[(size_t)i][(size_t)i] = (B[(size_t)i][(size_t)i] - 1 % p + p) % p;
        row = pdivmod(pmul(row, xp, p), f, p).second;
    }
    // nullspace of B (columns are images); standard column elimination
    // Solve B v = 0 over F_p: gaussian elimination on rows of B^T.
    std::vector<std::vector<long long>> M((size_t)n, std::vector<long long>((size_t)n, 0));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) M[(size_t)i][(size_t)j] = B[(size_t)i][(size_t)j];
    std::vector<long> pivot_col((size_t)n, -1);
    long rank = 0;
    for (long col = 0; col < n && rank < n; ++col) {
        long piv = -1;
        for (long r = rank; r < n; ++r)
            if (M[(size_t)r][(size_t)col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(M[(size_t)piv], M[(size_t)rank]);
        long long inv = pinv(M[(size_t)rank][(size_t)col], p);
        for (long j = 0; j < n; ++j) M[(size_t)rank][(size_t)j] = M[(size_t)rank][(size_t)j] * inv % p;
        for (long r = 0; r < n; ++r) {
            if (r == rank || M[(size_t)r][(size_t)col] == 0) continue;
            long long f2 = M[(size_t)r][(size_t)col];
            for (long j = 0; j < n; ++j)
                M[(size_t)r][(size_t)j] =
                    ((M[(size_t)r][(size_t)j] - f2 * M[(size_t)rank][(size_t)j]) % p + p) % p;
        }
        pivot_col[(size_t)rank] = col;
        ++rank;
    }
    std::vector<PPoly> basis;
    std::vector<bool> is_pivot((size_t)n, false);
    for (long r = 0; r < rank; ++r) is_pivot[(size_t)pivot_col[(size_t)r]] = true;
    for (long col = 0; col < n; ++col) {
        if (is_pivot[(size_t)col]) continue;
        PPoly v((size_t)n, 0);
        v[(size_t)col] = 1;
        for (long r = 0; r < rank; ++r)
            v[(size_t)pivot_col[(size_t)r]] = (p - M[(size_t)r][(size_t)col]) % p;
        ptrim(v);
        basis.push_back(v);
    }
    size_t nfactors = basis.size();
    std::vector<PPoly> factors = {pmonic(f, p)};
    for (auto& v : basis) {
        if (factors.size() == nfactors) break;
        if (pdeg(v) < 1) continue;  // the constant vector never splits
        std::vector<PPoly> next;
        for (auto& u : factors) {
            PPoly rem = u;
            std::vector<PPoly> pieces;
            for (long long s = 0; s < p && pdeg(rem) > 0; ++s) {
                PPoly g = pgcd(rem, psub_const(v, s, p), p);
                if (pdeg(g) > 0 && pdeg(g) < pdeg(rem)) {
                    pieces.push_back(g);
                    rem = pdivmod(rem, g, p).first;
                }
            }
            if (pdeg(rem) > 0) pieces.push_back(rem);
            for (auto& g : pieces) next.push_back(pmonic(g, p));
        }
        factors = next;
    }
    return factors;
}

// ---- Hensel lifting --------------------------------------------------------

using MPoly = std::vector<Int>;  // coefficients in [0, m)

inline void mtrim(MPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline long mdeg(const MPoly& a) { return (long)a.size() - 1; }

inline Int mmod(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

inline MPoly mreduce(const ZPoly& a, const Int& m) {
    MPoly r;
    r.reserve(a.size());
    for (auto& x : a) r.push_back(mmod(x, m));
    mtrim(r);
    return r;
}

inline MPoly mmul(const MPoly& a, const MPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = mmod(r[i + j] + a[i] * b[j], m);
    mtrim(r);
    return r;
}

inline MPoly madd(const MPoly& a, const MPoly& b, const Int& m) {
    MPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = mmod((i < a.size() ? a[i] : Int(0)) + (i < b.size() ? b[i] : Int(0)), m);
    mtrim(r);
    return r;
}

inline MPoly msub(const MPoly& a, const MPoly& b, const Int& m) {
    MPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = mmod((i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0)), m);
    mtrim(r);
    return r;
}

// Modular inverse via extended euclid on integers.
inline Int minv(const Int& a, const Int& m) {
    Int old_r = mmod(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw std::invalid_argument("minv: not invertible");
    return mmod(old_s, m);
}

// Division by a monic divisor, coefficients mod m.
inline std::pair<MPoly, MPoly> mdivmod_monic(const MPoly& a, const MPoly& b, const Int& m) {
    MPoly q, r = a;
    mtrim(r);
    if (mdeg(r) < mdeg(b)) return {q, r};
    q.assign(mdeg(r) - mdeg(b) + 1, 0);
    while (mdeg(r) >= mdeg(b) && !r.empty()) {
        Int f = r.back();
        long d = mdeg(r) - mdeg(b);
        q[(size_t)d] = f;
        for (size_t i = 0; i < b.size(); ++i) r[i + d] = mmod(r[i + d] - f * b[i], m);
        mtrim(r);
    }
    mtrim(q);
    return {q, r};
}

struct HenselPair {
    MPoly g, h, s, t;  // f = g h (mod m), s g + t h = 1 (mod m), h monic
};

// One quadratic Hensel step: modulus m -> m^2.
inline HenselPair hensel_step(const MPoly& f, const HenselPair& in, const Int& m) {
    Int m2 = m * m;
    MPoly g = mreduce(ZPoly(in.g.begin(), in.g.end()), m2);
    MPoly h = mreduce(ZPoly(in.h.begin(), in.h.end()), m2);
    MPoly s = mreduce(ZPoly(in.s.begin(), in.s.end()), m2);
    MPoly t = mreduce(ZPoly(in.t.begin(), in.t.end()), m2);

    MPoly e = msub(f, mmul(g, h, m2), m2);
    auto [q, r] = mdivmod_monic(mmul(s, e, m2), h, m2);
    MPoly g1 = madd(g, madd(mmul(t, e, m2), mmul(q, g, m2), m2), m2);
    MPoly h1 = madd(h, r, m2);
    MPoly b = msub(madd(mmul(s, g1, m2), mmul(t, h1, m2), m2), MPoly{1}, m2);
    auto [c, d] = mdivmod_monic(mmul(s, b, m2), h1, m2);
    MPoly s1 = msub(s, d, m2);
    MPoly t1 = msub(t, madd(mmul(t, b, m2), mmul(c, g1, m2), m2), m2);
    return {g1, h1, s1, t1};
}

// Extended euclid for polynomials mod p: s a + t b = 1.
inline std::pair<PPoly, PPoly> pbezout(const PPoly& a, const PPoly& b, long long p) {
    PPoly old_r = a, r = b;
    PPoly old_s = {1}, s = {};
    PPoly old_t = {}, t = {1};
    auto sub = [&](const PPoly& x, const PPoly& y) {
        PPoly z(std::max(x.size(), y.size()), 0);
        for (size_t i = 0; i < z.size(); ++i)
            z[i] = (((i < x.size() ? x[i] : 0) - (i < y.size() ? y[i] : 0)) % p + p) % p;
        ptrim(z);
        return z;
    };
    while (!r.empty()) {
        auto [q, rem] = pdivmod(old_r, r, p);
        PPoly tmp = sub(old_s, pmul(q, s, p));
        old_s = s;
        s = tmp;
        tmp = sub(old_t, pmul(q, t, p));
        old_t = t;
        t = tmp;
        old_r = r;
        r = rem;
    }
    if (pdeg(old_r) != 0) throw std::invalid_argument("pbezout: inputs not coprime");
    long long inv = pinv(old_r[0], p);
    for (auto& x : old_s) x = x * inv % p;
    for (auto& x : old_t) x = x * inv % p;
    return {old_s, old_t};
}

// Lift f = lc(f) * prod(gs) (mod p), gs monic mod p, to monic factors mod
// m_target (a power of p reached by repeated squaring; the returned modulus
// may overshoot m_target, which only helps).
inline std::vector<MPoly> hensel_lift_tree(const ZPoly& f, std::vector<PPoly> gs, long long p,
                                           const Int& m_target, Int& m_out) {
    if (gs.size() == 1) {
        // g = f / lc(f) mod m
        Int m = p;
        while (m < m_target) m *= m;
        MPoly fm = mreduce(f, m);
        Int inv = minv(fm.back(), m);
        for (auto& x : fm) x = mmod(x * inv, m);
        m_out = m;
        return {fm};
    }
    size_t half = gs.size() / 2;
    PPoly G = {1}, H = {1};
    for (size_t i = 0; i < half; ++i) G = pmul(G, gs[i], p);
    for (size_t i = half; i < gs.size(); ++i) H = pmul(H, gs[i], p);
    // A0 = lc(f) * G mod p
    PPoly A0 = G;
    long long lcp = (long long)mmod(f.back(), p);
    for (auto& x : A0) x = x * lcp % p;
    auto [s0, t0] = pbezout(A0, H, p);

    HenselPair hp;
    hp.g = MPoly(A0.begin(), A0.end());
    hp.h = MPoly(H.begin(), H.end());
    hp.s = MPoly(s0.begin(), s0.end());
    hp.t = MPoly(t0.begin(), t0.end());
    Int m = p;
    while (m < m_target) {
        MPoly fm = mreduce(f, m * m);
        hp = hensel_step(fm, hp, m);
        m *= m;
    }
    Int dummy;
    std::vector<MPoly> left =
        hensel_lift_tree(ZPoly(hp.g.begin(), hp.g.end()),
                         std::vector<PPoly>(gs.begin(), gs.begin() + half), p, m, dummy);
    std::vector<MPoly> right =
        hensel_lift_tree(ZPoly(hp.h.begin(), hp.h.end()),
                         std::vector<PPoly>(gs.begin() + half, gs.end()), p, m, dummy);
    left.insert(left.end(), right.begin(), right.end());
    m_out = m;
    return left;
}

// ---- top level -------------------------------------------------------------

// Factor a primitive squarefree integer polynomial with positive lead into
// primitive irreducible integer polynomials.
inline std::vector<ZPoly> factor_squarefree_primitive(const ZPoly& F0) {
    ZPoly F = F0;
    zf::trim(F);
    if (deg(F) <= 0) return {};
    if (deg(F) == 1) return {F};

    static const long long primes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,  31,
                                       37,  41,  43,  47,  53,  59,  61,  67,  71,  73,
                                       79,  83,  89,  97,  101, 103, 107, 109, 113, 127,
                                       131, 137, 139, 149, 151, 157, 163, 167, 173, 179};
    long long p = 0;
    for (long long cand : primes) {
        if (F.back() % cand == 0) continue;
        PPoly fp;
        for (auto& x : F) fp.push_back((long long)mmod(x, cand));
        ptrim(fp);
        if (pdeg(fp) != deg(F)) continue;
        if (pdeg(pgcd(fp, pderiv(fp, cand), cand)) == 0) { p = cand; break; }
    }
    if (p == 0) throw std::runtime_error("factor_squarefree_primitive: no good prime found");

    PPoly fp;
    for (auto& x : F) fp.push_back((long long)mmod(x, p));
    auto modular = berlekamp(pmonic(fp, p), p);
    if (modular.size() == 1) return {F};

    long n = deg(F);
    Int bound = (Int(n) + 1) * int_pow(2, (unsigned long)n) * height(F) * int_abs(F.back());
    Int m_target = 2 * bound + 1;
    Int m;
    auto lifted = hensel_lift_tree(F, modular, p, m_target, m);

    auto symmetric = [&](const MPoly& a) {
        ZPoly r;
        for (auto& x : a) r.push_back(x * 2 > m ? Int(x - m) : x);
        zf::trim(r);
        return r;
    };

    std::vector<ZPoly> out;
    std::vector<size_t> active(lifted.size());
    for (size_t i = 0; i < active.size(); ++i) active[i] = i;

    std::function<bool(size_t)> try_subsets = [&](size_t size) -> bool {
        std::vector<size_t> pick(size);
        std::function<bool(size_t, size_t)> rec = [&](size_t start, size_t k) -> bool {
            if (k == size) {
                MPoly T = {mmod(F.back(), m)};
                for (size_t i : pick) T = mmul(T, lifted[active[i]], m);
                ZPoly cand = symmetric(T);
                Int c = content(cand);
                if (cand.back() < 0) c = -c;
                for (auto& x : cand) x /= c;
                DPoly<Rat> q;
                if (deg(cand) >= 1 && deg(cand) < deg(F) &&
                    divides_exactly(to_q(cand), to_q(F), &q)) {
                    out.push_back(cand);
                    ZPoly rest = primitive_from_q(q);
                    F = rest;
                    std::vector<size_t> na;
                    for (size_t i = 0; i < active.size(); ++i)
                        if (std::find(pick.begin(), pick.end(), i) == pick.end())
                            na.push_back(active[i]);
                    active = na;
                    return true;
                }
                return false;
            }
            for (size_t i = start; i < active.size(); ++i) {
                pick[k] = i;
                if (rec(i + 1, k + 1)) return true;
            }
            return false;
        };
        return rec(0, 0);
    };

    size_t size = 1;
    while (2 * size <= active.size()) {
        if (try_subsets(size)) continue;  // same size again after a hit
        ++size;
    }
    if (deg(F) >= 1) out.push_back(F);
    return out;
}

}  // namespace zf

// Monic irreducible factors over Q with multiplicities, plus the unit and
// the power of x split off.
struct QFactorization {
    Rat unit = 1;
    long x_power = 0;
    std::vector<std::pair<DPoly<Rat>, long>> factors;  // (monic irreducible, multiplicity)

    DPoly<Rat> remultiply() const {
        DPoly<Rat> r = DPoly<Rat>::monomial(unit, (size_t)x_power);
        for (auto& [p, m] : factors) r = r * poly_pow(p, m);
        return r;
    }
};

// Yun squarefree decomposition of a monic rational polynomial.
inline std::vector<std::pair<DPoly<Rat>, long>> yun_squarefree(const DPoly<Rat>& f) {
    std::vector<std::pair<DPoly<Rat>, long>> out;
    if (f.deg() <= 0) return out;
    DPoly<Rat> fp = f.derivative();
    DPoly<Rat> g = poly_gcd(f, fp);
    auto [c, r1] = divmod(f, g);
    auto [w, r2] = divmod(fp, g);
    if (!r1.is_zero() || !r2.is_zero()) throw std::runtime_error("yun: inexact division");
    DPoly<Rat> d = w - c.derivative();
    long i = 1;
    while (c.deg() > 0) {
        DPoly<Rat> a = poly_gcd(c, d);
        auto [c2, rc] = divmod(c, a);
        auto [w2, rw] = divmod(d, a);
        if (!rc.is_zero() || !rw.is_zero()) throw std::runtime_error("yun: inexact step");
        if (a.deg() > 0) out.push_back({a, i});
        c = c2;
        d = w2 - c2.derivative();
        ++i;
    }
    return out;
}

inline QFactorization factor_q(const DPoly<Rat>& f0) {
    if (f0.is_zero()) throw std::invalid_argument("factor_q: zero polynomial");
    QFactorization res;
    DPoly<Rat> f = f0;
    // strip x^k
    size_t k = 0;
    while (k < f.c.size() && f.c[k] == 0) ++k;
    if (k > 0) {
        res.x_power = (long)k;
        f.c.erase(f.c.begin(), f.c.begin() + (long)k);
    }
    res.unit = f.lead();
    f = poly_monic(f);
    if (f.deg() == 0) return res;
    for (auto& [part, mult] : yun_squarefree(f)) {
        ZPoly Z = zf::primitive_from_q(part);
        for (auto& irr : zf::factor_squarefree_primitive(Z)) {
            DPoly<Rat> m = poly_monic(zf::to_q(irr));
            res.factors.push_back({m, mult});
        }
    }
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
                  return a.first.c < b.first.c;
              });
    return res;
}

// Irreducibility over Q of a nonconstant polynomial.
inline bool q_irreducible(const DPoly<Rat>& f) {
    if (f.deg() < 1) return false;
    auto fac = factor_q(f);
    return (fac.x_power == 1 && fac.factors.empty()) ||
           (fac.x_power == 0 && fac.factors.size() == 1 && fac.factors[0].second == 1);
}

}  // namespace factorlab
