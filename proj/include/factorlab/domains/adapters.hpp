#pragma once

// One adapter per domain behind a common surface:
//   member / is_unit / mul / eq / one / str
//   irreducible, atomic, furstenberg_divisor,
//   almost_atomic_witness, quasi_atomic_witness, divisors, divides
// Every Holds/Refuted verdict carries re-verifiable evidence in a DomainCert.

#include "factorlab/domains/monomial_algebra.hpp"
#include "factorlab/domains/nth_root.hpp"
#include "factorlab/domains/pinned.hpp"
#include "factorlab/domains/series.hpp"
#include "factorlab/domains/two_var.hpp"

#include <optional>
#include <string>
#include <vector>

namespace factorlab {

template <class E>
struct DomainCert {
    std::vector<E> factors;              // factorization: product equals the target
    std::optional<E> divisor, cofactor;  // divisor * cofactor = target
    std::optional<E> multiplier;         // witness multiplier
    std::vector<E> multiplier_factors;   // its factorization into irreducibles
    std::vector<E> product_factors;      // factorization of target * multiplier
    std::string note;
};

// ---- d8 / d9 / d23 ----------------------------------------------------------

template <class K>
struct PinnedAdapter {
    using E = DPoly<K>;
    PinnedDomain<K> dom;
    using Cert = DomainCert<E>;
    using V = Verdict<Cert>;

    DomainId id() const { return dom.id; }
    bool member(const E& f) const { return dom.member(f); }
    bool is_unit(const E& f) const { return dom.is_unit(f); }
    E one() const { return E::constant(K{Rat(1)}); }
    E mul(const E& a, const E& b) const { return a * b; }
    bool eq(const E& a, const E& b) const { return a == b; }
    std::string str(const E& f) const { return dpoly_str(f); }
    bool is_zero(const E& f) const { return f.is_zero(); }

    bool divides(const E& g, const E& f, E* q = nullptr) const {
        E quot;
        if (!divides_exactly(g, f, &quot)) return false;
        if (!dom.member(quot)) return false;
        if (q) *q = quot;
        return true;
    }

    void require_nonzero_nonunit(const E& f) const {
        if (f.is_zero() || is_unit(f))
            throw std::invalid_argument("operation requires a nonzero non-unit");
        dom.require_member(f);
    }

    bool d23_mode() const { return dom.pins.size() == 1; }

    V irreducible(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        auto v = dom.irreducible(f, bounds);
        if (v.holds()) {
            Cert c;
            c.factors = {f};
            return V::make_holds(v.rule, c, bounds);
        }
        Cert c;
        c.divisor = v.evidence->left;
        c.cofactor = v.evidence->right;
        return V::make_refuted(v.rule, c, bounds);
    }

    // d23 closed form: f(0) = c != 0; f factors as the primes of the integer
    // constant times monic factors normalized to constant term 1.
    std::vector<E> d23_factorization(const E& f) const {
        if constexpr (std::is_same_v<K, Rat>) {
            std::vector<E> out;
            auto fq = factor_q(f);
            E acc = one();
            for (auto& [p, m] : fq.factors)
                for (long i = 0; i < m; ++i) {
                    E norm = p.scaled(K{Rat(1)} / p.at(0));  // constant term 1
                    out.push_back(norm);
                    acc = acc * norm;
                }
            E q;
            if (!divides_exactly(acc, f, &q) || q.deg() != 0)
                throw std::runtime_error("d23_factorization: normalization failed");
            Int n = num(q.at(0));
            bool neg = n < 0;
            for (auto& [p, m] : int_factorize(int_abs(n)))
                for (int i = 0; i < m; ++i) out.push_back(E::constant(K{Rat(p)}));
            if (neg) {
                if (out.empty()) throw std::runtime_error("d23_factorization: unit input");
                out.front() = out.front().scaled(K{Rat(-1)});
            }
            return out;
        } else {
            (void)f;
            throw std::logic_error("d23_factorization: rational coefficients only");
        }
    }

    // d8/d9 (pins {0,1}): atomic iff the minimal coefficient is an integer.
    // d23 (pins {0}): atomic iff the constant term is nonzero.
    V atomic(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        if (!d23_mode()) {
            if (!k_is_integer(dom.min_coeff(f)))
                return V::make_refuted(
                    "minimal coefficient not an integer: irreducibles have integral minimal "
                    "coefficients and minimal exponent at most 1",
                    Cert{}, bounds);
            auto fac = dom.atomic_factorization(f);
            if (!fac) throw std::runtime_error("atomic: expected factorization");
            Cert c;
            c.factors = *fac;
            return V::make_holds("constructed factorization", c, bounds);
        }
        if (field_is_zero(f.at(0)))
            return V::make_refuted(
                "constant term 0: every factorization keeps pulling rational primes out",
                Cert{}, bounds);
        Cert c;
        c.factors = d23_factorization(f);
        return V::make_holds("constant-normalized factorization", c, bounds);
    }

    V furstenberg_divisor(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        Cert c;
        auto finish = [&](const char* rule) {
            E q;
            if (!divides(*c.divisor, f, &q))
                throw std::runtime_error("furstenberg_divisor: bad divisor");
            c.cofactor = q;
            return V::make_holds(rule, c, bounds);
        };
        if (d23_mode()) {
            K c0 = f.at(0);
            if (field_is_zero(c0)) {
                c.divisor = E::constant(K{Rat(2)});  // any prime; 2 is the tie-break
                return finish("constant 0: every rational prime divides");
            }
            auto r = k_as_rational(c0);
            if (int_abs(num(*r)) >= 2) {
                Int p = int_factorize(int_abs(num(*r)))[0].first;
                c.divisor = E::constant(K{Rat(p)});
                return finish("smallest prime of the constant term");
            }
            c.divisor = d23_factorization(f).front();
            return finish("first constant-1 irreducible factor");
        }
        if (!k_is_integer(dom.min_coeff(f))) {
            c.divisor = E::constant(K{Rat(2)});
            return finish("minimal exponent >= 2: every rational prime divides");
        }
        c.divisor = dom.atomic_factorization(f)->front();
        return finish("first factor of the atomic factorization");
    }

    V almost_atomic_witness(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        Cert c;
        if (!d23_mode()) {
            K m = dom.min_coeff(f);
            if (k_is_integer(m)) {
                c.multiplier = one();
                c.product_factors = *dom.atomic_factorization(f);
                return V::make_holds("already atomic: multiplier 1", c, bounds);
            }
            auto mr = k_as_rational(m);
            if (!mr)
                return V::make_refuted(
                    "irrational minimal coefficient: products of irreducibles have integer "
                    "minimal coefficients, so every multiple keeps an irrational minimal "
                    "coefficient at exponent >= 2",
                    Cert{}, bounds);
            Int n = den(*mr);
            c.multiplier = E::constant(K{Rat(n)});
            for (auto& [p, mm] : int_factorize(n))
                for (int i = 0; i < mm; ++i)
                    c.multiplier_factors.push_back(E::constant(K{Rat(p)}));
            E prod = f.scaled(K{Rat(n)});
            c.product_factors = *dom.atomic_factorization(prod);
            return V::make_holds("denominator of the minimal coefficient", c, bounds);
        }
        if (field_is_zero(f.at(0)))
            return V::make_refuted("constant term 0 persists under any multiplier", Cert{},
                                   bounds);
        c.multiplier = one();
        c.product_factors = d23_factorization(f);
        return V::make_holds("already atomic: multiplier 1", c, bounds);
    }

    V quasi_atomic_witness(const E& f, const SearchBounds& bounds) const {
        require_nonzero_nonunit(f);
        Cert c;
        if (!d23_mode()) {
            K m = dom.min_coeff(f);
            if (k_as_rational(m)) {
                auto aa = almost_atomic_witness(f, bounds);
                if (aa.holds()) aa.rule = "via the almost-atomic multiplier";
                return aa;
            }
            if constexpr (std::is_same_v<K, QLin>) {
                // beta = x^2 / r for the irrational minimal coefficient r
                long k = dom.min_exp(f);
                E beta = E::monomial(K{Rat(1)} / m, 2);
                c.multiplier = beta;
                E prod = f * beta;
                // product = x^(k+1) h where h has minimal term 1*x
                c.product_factors.assign((size_t)(k + 1), E::monomial(K{Rat(1)}, 1));
                E h;
                if (!divides_exactly(E::monomial(K{Rat(1)}, (size_t)(k + 1)), prod, &h))
                    throw std::runtime_error("quasi: bad shift");
                auto hfac = dom.atomic_factorization(h);
                if (!hfac) throw std::runtime_error("quasi: cofactor not atomic");
                for (auto& g : *hfac) c.product_factors.push_back(g);
                return V::make_holds("x^2 over the minimal coefficient", c, bounds);
            }
            throw std::logic_error("quasi: irrational coefficient in a rational domain");
        }
        if (field_is_zero(f.at(0)))
            return V::make_refuted(
                "constant term 0: every multiple has constant term 0 and atomic elements "
                "have nonzero constant terms",
                Cert{}, bounds);
        c.multiplier = one();
        c.product_factors = d23_factorization(f);
        return V::make_holds("multiplier 1", c, bounds);
    }

    std::vector<E> divisors(const E& f, const SearchBounds& bounds) const {
        return dom.divisors_up_to(f, bounds);
    }
};

using D8Adapter = PinnedAdapter<Rat>;
using D9Adapter = PinnedAdapter<QLin>;
using D23Adapter = PinnedAdapter<Rat>;

inline D8Adapter make_d8_adapter() { return {make_d8()}; }
inline D9Adapter make_d9_adapter() { return {make_d9()}; }
inline D23Adapter make_d23_adapter() { return {make_d23()}; }

// d23-only: irreducibles within bounds never meet the prime ideal
// {f : constant term 0}.
struct PrimeIdealCheck {
    std::vector<std::string> inspected;
    bool consistent = true;
};

inline Verdict<PrimeIdealCheck> d23_prime_ideal_instance_check(const D23Adapter& d23,
                                                               const SearchBounds& bounds) {
    if (d23.id() != DomainId::D23)
        throw std::invalid_argument("prime_ideal_instance_check: d23 only");
    PrimeIdealCheck out;
    for (Int p = 2; p <= bounds.max_coeff_height; ++p) {
        if (!int_is_prime(p)) continue;
        out.inspected.push_back(p.str());
    }
    long long H = std::min<long long>(bounds.max_coeff_height, 6);
    for (long long a = -H; a <= H; ++a)
        for (long long b = 0; b <= H; ++b)
            for (int sign : {1, -1}) {
                std::vector<Rat> cc = {Rat(sign), Rat(a), Rat(b)};
                DPoly<Rat> f{std::move(cc)};
                if (f.deg() < 1) continue;
                if (!q_irreducible(f)) continue;
                out.inspected.push_back(dpoly_str(f));
                if (f.at(0) == 0) out.consistent = false;  // impossible by construction
            }
    if (!out.consistent)
        return Verdict<PrimeIdealCheck>::make_refuted("an irreducible lies in the ideal", out,
                                                      bounds);
    return Verdict<PrimeIdealCheck>{Outcome::holds, true,
                                    "no enumerated irreducible has constant term 0", out,
                                    bounds};
}

}  // namespace factorlab
