#pragma once

// Polynomials over F2 with exponents drawn from an ordered commutative
// monoid: a finite set of exponents (every present term has coefficient 1).
// Addition toggles, multiplication convolves with toggling.

#include <set>
#include <string>
#include <vector>

namespace factorlab {

template <class Exp>
struct SetPoly {
    std::set<Exp> terms;

    SetPoly() = default;
    explicit SetPoly(std::set<Exp> t) : terms(std::move(t)) {}
    static SetPoly monomial(const Exp& e) { return SetPoly(std::set<Exp>{e}); }
    static SetPoly one() { return monomial(Exp{}); }

    bool is_zero() const { return terms.empty(); }
    bool has_constant_term() const { return terms.count(Exp{}) > 0; }
    size_t size() const { return terms.size(); }

    void toggle(const Exp& e) {
        auto it = terms.find(e);
        if (it == terms.end())
            terms.insert(e);
        else
            terms.erase(it);
    }

    friend SetPoly operator+(const SetPoly& a, const SetPoly& b) {
        SetPoly r = a;
        for (auto& e : b.terms) r.toggle(e);
        return r;
    }
    friend SetPoly operator*(const SetPoly& a, const SetPoly& b) {
        SetPoly r;
        for (auto& x : a.terms)
            for (auto& y : b.terms) r.toggle(x + y);
        return r;
    }
    friend bool operator==(const SetPoly& a, const SetPoly& b) { return a.terms == b.terms; }
    friend bool operator!=(const SetPoly& a, const SetPoly& b) { return !(a == b); }
    friend bool operator<(const SetPoly& a, const SetPoly& b) { return a.terms < b.terms; }
};

}  // namespace factorlab
