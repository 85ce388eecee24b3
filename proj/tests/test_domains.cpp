#include "factorlab/domains/adapters3.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace factorlab;

namespace {

DPoly<Rat> qp(std::initializer_list<Rat> cc) { return DPoly<Rat>(std::vector<Rat>(cc)); }
DPoly<QLin> kp(std::initializer_list<QLin> cc) { return DPoly<QLin>(std::vector<QLin>(cc)); }

template <class A, class E>
bool product_equals(const A& ad, const std::vector<E>& fs, const E& target) {
    E prod = ad.one();
    for (auto& f : fs) prod = ad.mul(prod, f);
    return ad.eq(prod, target);
}

}  // namespace

TEST_CASE("d8 membership, units, irreducibility") {
    auto d8 = make_d8_adapter();
    SearchBounds b;
    CHECK(d8.member(qp({Rat(1), Rat(2), Rat(1, 2)})));       // 1 + 2x + x^2/2
    CHECK(!d8.member(qp({Rat(1, 2)})));                      // 1/2 constant
    CHECK(!d8.member(qp({Rat(0), Rat(1, 3)})));              // x/3
    CHECK(!d8.is_unit(qp({Rat(2)})));
    CHECK(d8.is_unit(qp({Rat(-1)})));

    // x is irreducible; 6 + x is irreducible in d8 (x-coefficient pins)
    CHECK(d8.irreducible(qp({Rat(0), Rat(1)}), b).holds());
    CHECK(d8.irreducible(qp({Rat(6), Rat(1)}), b).holds());
    // (1/2) x^2 = 2 * (1/4) x^2
    auto v = d8.irreducible(qp({Rat(0), Rat(0), Rat(1, 2)}), b);
    REQUIRE(v.refuted());
    CHECK(d8.eq(d8.mul(*v.evidence->divisor, *v.evidence->cofactor),
                qp({Rat(0), Rat(0), Rat(1, 2)})));
    // x + x^2/4 is irreducible
    CHECK(d8.irreducible(qp({Rat(0), Rat(1), Rat(1, 4)}), b).holds());
    CHECK_THROWS_AS(d8.irreducible(qp({Rat(1)}), b), std::invalid_argument);
}

TEST_CASE("d8 atomicity and witnesses") {
    auto d8 = make_d8_adapter();
    SearchBounds b;
    // (1/2) x^2 is not atomic
    auto f = qp({Rat(0), Rat(0), Rat(1, 2)});
    CHECK(d8.atomic(f, b).refuted());
    // x^2 = x * x
    auto v = d8.atomic(qp({Rat(0), Rat(0), Rat(1)}), b);
    REQUIRE(v.holds());
    CHECK(v.evidence->factors.size() == 2);
    CHECK(product_equals(d8, v.evidence->factors, qp({Rat(0), Rat(0), Rat(1)})));

    // almost atomic witness: multiplier 2 makes it x^2
    auto w = d8.almost_atomic_witness(f, b);
    REQUIRE(w.holds());
    CHECK(d8.eq(*w.evidence->multiplier, qp({Rat(2)})));
    CHECK(product_equals(d8, w.evidence->product_factors, d8.mul(f, *w.evidence->multiplier)));

    // factor count bound: k <= omega(m) + deg(g) + 1
    auto f2 = qp({Rat(0), Rat(0), Rat(6, 5), Rat(1, 3)});
    auto w2 = d8.almost_atomic_witness(f2, b);
    REQUIRE(w2.holds());
    CHECK(product_equals(d8, w2.evidence->product_factors,
                         d8.mul(f2, *w2.evidence->multiplier)));

    // quasi-atomic goes through the same multiplier
    CHECK(d8.quasi_atomic_witness(f, b).holds());

    // a polynomial with integer minimal coefficient factors fully
    auto f3 = qp({Rat(0), Rat(0), Rat(2), Rat(1, 2)});
    auto v3 = d8.atomic(f3, b);
    REQUIRE(v3.holds());
    CHECK(product_equals(d8, v3.evidence->factors, f3));
    for (auto& g : v3.evidence->factors) CHECK(d8.irreducible(g, b).holds());
}

TEST_CASE("d8 divisors") {
    auto d8 = make_d8_adapter();
    SearchBounds b;
    b.max_coeff_height = 6;
    auto divs = d8.divisors(qp({Rat(0), Rat(0), Rat(1)}), b);  // x^2
    bool has_x = false;
    for (auto& g : divs) {
        DPoly<Rat> q;
        REQUIRE(d8.divides(g, qp({Rat(0), Rat(0), Rat(1)}), &q));
        CHECK(d8.eq(d8.mul(g, q), qp({Rat(0), Rat(0), Rat(1)})));
        if (d8.eq(g, qp({Rat(0), Rat(1)}))) has_x = true;
    }
    CHECK(has_x);
}

TEST_CASE("d9 irrational refuters and quasi witness") {
    auto d9 = make_d9_adapter();
    SearchBounds b;
    QLin s2 = QLin::sqrt2(), zero{Rat(0)}, one{Rat(1)};
    auto f = kp({zero, zero, s2});  // sqrt2 x^2
    CHECK(d9.member(f));
    CHECK(d9.atomic(f, b).refuted());
    CHECK(d9.almost_atomic_witness(f, b).refuted());

    auto v = d9.quasi_atomic_witness(f, b);
    REQUIRE(v.holds());
    // multiplier x^2 / sqrt2; product x^4 factors as x*x*x*x
    CHECK(v.evidence->product_factors.size() == 4);
    CHECK(product_equals(d9, v.evidence->product_factors, d9.mul(f, *v.evidence->multiplier)));

    // rational-coefficient elements still use the denominator multiplier
    auto g = kp({zero, zero, QLin(Rat(1, 2))});
    CHECK(d9.almost_atomic_witness(g, b).holds());

    // furstenberg: every rational prime divides sqrt2 x^2
    auto fd = d9.furstenberg_divisor(f, b);
    REQUIRE(fd.holds());
    CHECK(d9.eq(*fd.evidence->divisor, kp({QLin(Rat(2))})));
}

TEST_CASE("d23 closed forms") {
    auto d23 = make_d23_adapter();
    SearchBounds b;
    CHECK(d23.member(qp({Rat(2), Rat(1, 3)})));
    CHECK(!d23.member(qp({Rat(1, 2)})));

    // rational primes are irreducible
    CHECK(d23.irreducible(qp({Rat(5)}), b).holds());
    CHECK(d23.irreducible(qp({Rat(1), Rat(1)}), b).holds());   // 1 + x
    CHECK(d23.irreducible(qp({Rat(4)}), b).refuted());
    // constant 6: reducible (2 divides)
    CHECK(d23.irreducible(qp({Rat(6), Rat(1)}), b).refuted());

    // x: not atomic, but has furstenberg divisor 2
    auto x = qp({Rat(0), Rat(1)});
    CHECK(d23.atomic(x, b).refuted());
    auto fd = d23.furstenberg_divisor(x, b);
    REQUIRE(fd.holds());
    CHECK(d23.eq(*fd.evidence->divisor, qp({Rat(2)})));

    auto fd6 = d23.furstenberg_divisor(qp({Rat(6), Rat(1)}), b);
    REQUIRE(fd6.holds());
    CHECK(d23.eq(*fd6.evidence->divisor, qp({Rat(2)})));
    DPoly<Rat> q;
    CHECK(d23.divides(qp({Rat(2)}), qp({Rat(6), Rat(1)}), &q));

    // quasi-atomic refuted on x
    CHECK(d23.quasi_atomic_witness(x, b).refuted());
    // 6 + x is atomic: 2 * 3 * (1 + x/6)
    auto at = d23.atomic(qp({Rat(6), Rat(1)}), b);
    REQUIRE(at.holds());
    CHECK(product_equals(d23, at.evidence->factors, qp({Rat(6), Rat(1)})));

    // prime ideal instance check
    auto pic = d23_prime_ideal_instance_check(d23, b);
    CHECK(pic.holds());
    CHECK(pic.at_bound);
}

TEST_CASE("d23 divisors of x include every small prime") {
    auto d23 = make_d23_adapter();
    SearchBounds b;
    b.max_coeff_height = 10;
    auto divs = d23.divisors(qp({Rat(0), Rat(1)}), b);
    for (long long p : {2, 3, 5, 7}) {
        bool found = false;
        for (auto& g : divs)
            if (d23.eq(g, qp({Rat(p)}))) found = true;
        INFO("prime " << p);
        CHECK(found);
    }
}

TEST_CASE("d24 examples") {
    D24Adapter d24;
    SearchBounds b;
    b.max_denominator = 8;
    b.max_coeff_height = 12;

    RootPoly half = RootPoly::monomial(1, Rat(1, 2));
    auto v = d24.irreducible(half, b);
    REQUIRE(v.refuted());
    CHECK(d24.eq(d24.mul(*v.evidence->divisor, *v.evidence->cofactor), half));
    CHECK(v.evidence->divisor->terms.count(Rat(1, 4)));

    CHECK(d24.irreducible(RootPoly::constant(2), b).holds());
    CHECK(!d24.irreducible(RootPoly::constant(2), b).at_bound);

    // 2 + x: eisenstein at 2 for every denominator
    RootPoly twox = RootPoly::constant(2) + RootPoly::monomial(1, 1);
    auto v2 = d24.irreducible(twox, b);
    REQUIRE(v2.holds());
    CHECK(!v2.at_bound);

    // x^2 + 4 splits through x = t^2: (x - 2 sqrt(x) + 2)(x + 2 sqrt(x) + 2)
    RootPoly x2p4 = RootPoly::monomial(1, 2) + RootPoly::constant(4);
    auto v3 = d24.irreducible(x2p4, b);
    REQUIRE(v3.refuted());
    CHECK(d24.eq(d24.mul(*v3.evidence->divisor, *v3.evidence->cofactor), x2p4));

    // x has no irreducible divisor; 6 is atomic; const-0 refuters
    auto x = RootPoly::monomial(1, 1);
    CHECK(d24.furstenberg_divisor(x, b).refuted());
    CHECK(d24.quasi_atomic_witness(x, b).refuted());
    auto six = d24.atomic(RootPoly::constant(6), b);
    REQUIRE(six.holds());
    CHECK(six.evidence->factors.size() == 2);

    // divisors of x^(1/2) include x^(1/4)
    auto divs = d24.divisors(half, b);
    bool quarter = false;
    for (auto& g : divs)
        if (g.terms.count(Rat(1, 4))) quarter = true;
    CHECK(quarter);

    // pi | x beta implies pi | beta, spot-checked
    RootPoly beta = RootPoly::constant(3) + RootPoly::monomial(2, Rat(1, 2));
    RootPoly xb = x * beta;
    for (auto& pi : {twox, RootPoly::constant(2), RootPoly::constant(5)}) {
        RootPoly q;
        if (root_divides(pi, xb, &q)) CHECK(root_divides(pi, beta, nullptr));
    }
}

TEST_CASE("d12 irreducibility decisions") {
    D12Adapter d12;
    d12.R.trunc = 4;
    d12.R.den_bound = 4;
    SearchBounds b;

    auto c = [&](long long v) { return Series::constant(Rat(v)); };
    auto x = Series::monomial(1, 1);

    CHECK(d12.is_unit(d12.mul(c(1), c(1))));
    CHECK(d12.member(Series::monomial(Rat(1, 2), Rat(3, 2))));
    CHECK(!d12.member(Series::monomial(Rat(1, 2), Rat(1, 2))));

    auto add = [&](const Series& a, const Series& bb) { return d12.R.add(a, bb); };

    // 5 + x irreducible (prime constant)
    CHECK(d12.irreducible(add(c(5), x), b).holds());
    // 6 + x splits (coprime constants 2, 3)
    auto v6 = d12.irreducible(add(c(6), x), b);
    REQUIRE(v6.refuted());
    CHECK(d12.eq(d12.mul(*v6.evidence->divisor, *v6.evidence->cofactor), add(c(6), x)));
    // 4 + x splits through x^(1/2)
    auto v4 = d12.irreducible(add(c(4), x), b);
    REQUIRE(v4.refuted());
    CHECK(d12.eq(d12.mul(*v4.evidence->divisor, *v4.evidence->cofactor), add(c(4), x)));
    // 8 + x splits (2, 4)
    auto v8 = d12.irreducible(add(c(8), x), b);
    REQUIRE(v8.refuted());
    // 9 + x: quadratic-residue obstruction, exactly irreducible
    auto v9 = d12.irreducible(add(c(9), x), b);
    REQUIRE(v9.holds());
    CHECK(!v9.at_bound);
    // 9 + 2x splits
    auto v92 = d12.irreducible(add(c(9), Series::monomial(2, 1)), b);
    REQUIRE(v92.refuted());
    CHECK(d12.eq(d12.mul(*v92.evidence->divisor, *v92.evidence->cofactor),
                 add(c(9), Series::monomial(2, 1))));
    // constant term 0: monomial splits off
    auto vx = d12.irreducible(x, b);
    REQUIRE(vx.refuted());
    CHECK(d12.eq(d12.mul(*vx.evidence->divisor, *vx.evidence->cofactor), x));
}

TEST_CASE("d12 furstenberg and atomicity") {
    D12Adapter d12;
    d12.R.trunc = 4;
    d12.R.den_bound = 4;
    SearchBounds b;
    auto c = [&](long long v) { return Series::constant(Rat(v)); };
    auto x = Series::monomial(1, 1);
    auto add = [&](const Series& a, const Series& bb) { return d12.R.add(a, bb); };

    // x has no irreducible divisor
    CHECK(d12.furstenberg_divisor(x, b).refuted());
    // 2x does: the constant 2
    auto v2x = d12.furstenberg_divisor(Series::monomial(2, 1), b);
    REQUIRE(v2x.holds());
    // 6 + x gets a lifted prime-constant divisor
    auto v6 = d12.furstenberg_divisor(add(c(6), x), b);
    REQUIRE(v6.holds());
    Series q;
    CHECK(d12.divides(*v6.evidence->divisor, add(c(6), x), &q));

    // atomicity at truncation order
    CHECK(d12.atomic(x, b).refuted());
    auto at6 = d12.atomic(add(c(6), x), b);
    REQUIRE(at6.holds());
    Series prod = d12.one();
    for (auto& g : at6.evidence->factors) prod = d12.mul(prod, g);
    CHECK(d12.eq(prod, add(c(6), x)));

    // semi/almost-Furstenberg building blocks: p | x f, p does not divide x
    Series f = add(c(6), x);
    Series xf = d12.mul(x, f);
    Series two = c(2);
    CHECK(d12.divides(two, xf, nullptr));
    CHECK(!d12.divides(two, x, nullptr));
    // gamma = 2 + x: irreducible, p does not divide it, p | (2 + x) f
    Series gamma = add(c(2), x);
    CHECK(d12.irreducible(gamma, b).holds());
    CHECK(!d12.divides(two, gamma, nullptr));
    CHECK(d12.divides(two, d12.mul(gamma, f), nullptr));
}

TEST_CASE("ma_qplus antimatter behaviour") {
    auto A = make_ma_qplus_adapter();
    SearchBounds b;
    auto xq = [&](long long n, long long d) {
        return SetPoly<Rat>::monomial(Rat(n, d));
    };
    CHECK(A.is_unit(SetPoly<Rat>::one() + xq(1, 2)));  // 1 + x^(1/2)
    auto v = A.irreducible(xq(1, 2), b);
    REQUIRE(v.refuted());
    CHECK(A.eq(A.mul(*v.evidence->divisor, *v.evidence->cofactor), xq(1, 2)));
    CHECK(A.atomic(xq(1, 2), b).refuted());
    CHECK(A.furstenberg_divisor(xq(1, 2), b).refuted());
    auto divs = A.divisors(xq(1, 2), b);
    bool quarter = false;
    for (auto& g : divs)
        if (g.terms.count(Rat(1, 4))) quarter = true;
    CHECK(quarter);
}

TEST_CASE("ma_s4 atoms, spans, witness") {
    auto A = make_ma_s4_adapter();
    SearchBounds b;
    auto mono = [&](const S4Elem& e) { return SetPoly<S4Elem>::monomial(e); };
    S4Elem alpha = S4Elem::alpha();
    S4Elem half = S4Elem::rational(Rat(1, 2));

    CHECK(A.irreducible(mono(alpha), b).holds());
    auto v = A.irreducible(mono(half), b);
    REQUIRE(v.refuted());

    // x^(alpha + 1/2) = (x^g)^3
    auto at = A.atomic(mono(alpha + half), b);
    REQUIRE(at.holds());
    CHECK(at.evidence->factors.size() == 3);
    CHECK(product_equals(A, at.evidence->factors, mono(alpha + half)));

    // integer dyadic slack defeats a single alpha
    CHECK(A.atomic(mono(alpha + S4Elem::rational(Rat(2))), b).refuted());
    CHECK(A.atomic(mono(Int(2) * alpha + S4Elem::rational(Rat(2))), b).holds());

    // furstenberg refuter on pure dyadic exponents
    CHECK(A.furstenberg_divisor(mono(half), b).refuted());
    // and a divisor when the exponent has alpha content
    CHECK(A.furstenberg_divisor(mono(alpha + half), b).holds());

    // the witness repairs every monomial sample
    auto w = A.semi_witness();
    REQUIRE(w.has_value());
    for (auto& s : {half, S4Elem::rational(Rat(2)), alpha + half, S4Elem::rational(Rat(3, 4))}) {
        auto prod = A.mul(*w, mono(s));
        INFO("sample exponent " << s4_str(s));
        CHECK(A.atomic(prod, b).holds());
    }

    // min exponent decompose
    auto [q, g] = ma_s4_min_exponent_decompose(A, mono(alpha + half));
    CHECK(q == S4Elem::rational(Rat(1, 2)));
    CHECK(A.eq(g, mono(alpha)));
}

TEST_CASE("ma_appa spans and witness") {
    auto A = make_ma_appa_adapter();
    SearchBounds b;
    auto mono = [&](const SeqElem& e) { return SetPoly<SeqElem>::monomial(e); };
    SeqElem seven = SeqElem::constant(7);
    SeqElem three = SeqElem::constant(3);

    CHECK(A.irreducible(mono(SeqElem::seven_e(1)), b).holds());
    CHECK(A.irreducible(mono(three), b).holds());
    auto v = A.atomic(mono(seven), b);
    CHECK(v.refuted());

    // witness x^(const 3): limit 10 refactors through the atom span
    auto w = A.semi_witness();
    auto prod = A.mul(*w, mono(seven));
    auto at = A.atomic(prod, b);
    REQUIRE(at.holds());
    CHECK(product_equals(A, at.evidence->factors, prod));

    // lemma6 transform shape: beta^2 has limit 6 and splits into two limit-3 atoms
    auto sq = A.mul(*w, *w);
    auto at2 = A.atomic(sq, b);
    REQUIRE(at2.holds());
    CHECK(at2.evidence->factors.size() == 2);

    // decompose: non-atomic monomial yields the limit-7 clip
    SeqElem t = seven + SeqElem::seven_e(1);
    auto [beta, g] = ma_appa_min_exponent_decompose(A, mono(t));
    CHECK(beta.limit == 7);
    CHECK(A.eq(A.mul(mono(beta), g), mono(t)));
    // atomic monomial decomposes trivially
    auto [z, gz] = ma_appa_min_exponent_decompose(A, mono(three));
    CHECK(z.is_zero());

    // furstenberg: the constant-7 monomial still has an atom divisor
    CHECK(A.furstenberg_divisor(mono(seven), b).holds());
}

TEST_CASE("appb classification and witnesses") {
    AppBAdapter B;
    SearchBounds bb;
    auto mono = [&](Rat a, long k) { return AppBRing::monomial(a, k); };
    auto y = AppBRing::y();

    // minimal term examples
    CHECK(B.minimal_term(y * y + mono(1, 1)) == std::make_pair(Rat(1), 1L));
    CHECK(B.minimal_term(mono(3, 2) + mono(-1, 2)) == std::make_pair(Rat(-1), 2L));
    CHECK(B.minimal_term(y + mono(Rat(1, 2), 0)) == std::make_pair(Rat(1, 2), 0L));

    // irreducibility: y + x^(1/2) holds; monomials refuted
    CHECK(B.irreducible(y + mono(Rat(1, 2), 0), bb).holds());
    auto v = B.irreducible(mono(Rat(1, 2), 0), bb);
    REQUIRE(v.refuted());
    CHECK(B.eq(B.mul(*v.evidence->divisor, *v.evidence->cofactor), mono(Rat(1, 2), 0)));
    auto v2 = B.irreducible(mono(-1, 2), bb);  // x^-1 y^2
    REQUIRE(v2.refuted());
    CHECK(B.eq(B.mul(*v2.evidence->divisor, *v2.evidence->cofactor), mono(-1, 2)));

    // corollary: y^2 + xy = y (y + x)
    auto c1 = B.atomic_by_corollary(y * y + mono(1, 1), bb);
    REQUIRE(c1.holds());
    CHECK(c1.evidence->factors.size() == 2);
    CHECK(B.atomic_by_corollary(mono(Rat(1, 2), 0), bb).unknown());
    CHECK(B.atomic_by_corollary(y, bb).holds());

    // witness cases
    auto [m1, t1] = B.witness(mono(-1, 2));
    CHECK(t1 == 2);
    CHECK(B.eq(m1, y + mono(1, 0)));
    auto [m2, t2] = B.witness(y * y * y);
    CHECK(t2 == 1);
    CHECK(B.is_unit(m2));
    auto [m3, t3] = B.witness(mono(1, 1) + mono(-1, 2));
    CHECK(t3 == 4);
    CHECK(B.eq(m3, y + mono(1, 0)));
    // the cancellation edge: f = xy + y^2 is atomic already (case 1)
    auto [m4, t4] = B.witness(mono(1, 1) + mono(0, 2));
    CHECK(t4 == 1);

    // almost-atomic witness verifies through the corollary
    for (auto& f : {mono(-1, 2), mono(1, 1) + mono(-1, 2), y * y * y,
                    mono(Rat(3, 2), 1) + mono(2, 3)}) {
        auto w = B.almost_atomic_witness(f, bb);
        INFO("f = " << B.str(f));
        REQUIRE(w.holds());
        CHECK(product_equals(B, w.evidence->product_factors, B.mul(f, *w.evidence->multiplier)));
    }

    // atomicity refuters
    CHECK(B.atomic(mono(Rat(1, 2), 0), bb).refuted());           // y-free
    CHECK(B.atomic(mono(1, 1) + mono(2, 1), bb).refuted());      // y-degree 1, reducible
    CHECK(B.furstenberg_divisor(mono(Rat(1, 2), 0), bb).refuted());
}
