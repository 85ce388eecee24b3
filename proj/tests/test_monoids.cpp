#include "factorlab/monoid.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace factorlab;

namespace {

// Sieve-based oracle for the pairing: the (k+1)-th odd prime.
std::vector<long long> sieve_odd_primes(long long n) {
    std::vector<bool> comp(n + 1, false);
    std::vector<long long> odd;
    for (long long i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        if (i % 2 == 1) odd.push_back(i);
        for (long long j = 2 * i; j <= n; j += i) comp[j] = true;
    }
    return odd;
}

// Exhaustive generator-multiset membership oracle for the alpha monoid:
// sums of at most `max_size` generators drawn from alpha, dyadics 1/2^n
// (n in [-2, 4]), and scaled generators with n, m <= 4.
std::set<std::pair<Rat, Rat>> s4_reachable(int max_size) {
    std::vector<S4Elem> gens;
    gens.push_back(S4Elem::alpha());
    for (int n = -2; n <= 4; ++n)
        gens.push_back(S4Elem::rational(n >= 0 ? Rat(1, int_pow(2, n)) : Rat(int_pow(2, -n))));
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; m += 2) gens.push_back(s4_scaled_generator(n, m));

    std::set<std::pair<Rat, Rat>> out;
    std::function<void(size_t, int, S4Elem)> rec = [&](size_t i, int left, S4Elem acc) {
        if (!acc.is_zero()) out.insert({acc.alpha_coeff, acc.rat_coeff});
        if (left == 0 || i == gens.size()) return;
        for (int k = 1; k <= left; ++k) {
            S4Elem next = acc;
            for (int j = 0; j < k; ++j) next = next + gens[i];
            rec(i + 1, left - k, next);
        }
        rec(i + 1, left, acc);
    };
    rec(0, max_size, S4Elem());
    return out;
}

}  // namespace

TEST_CASE("pairing_prime examples and oracle") {
    CHECK(pairing_prime(1, 1) == 3);
    CHECK(pairing_prime(1, 3) == 7);
    CHECK(pairing_prime(2, 1) == 5);
    CHECK_THROWS_AS(pairing_prime(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(pairing_prime(0, 1), std::invalid_argument);

    auto odd = sieve_odd_primes(1000);
    std::set<Int> seen;
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 9; m += 2) {
            Int p = pairing_prime(n, m);
            Int k = cantor_pair(n - 1, (m - 1) / 2);
            REQUIRE(k < (long long)odd.size());
            CHECK(p == odd[(long long)k]);
            CHECK(seen.insert(p).second);  // injective
            auto [n2, m2] = pairing_inverse(p);
            CHECK(n2 == n);
            CHECK(m2 == m);
        }
}

TEST_CASE("s4_membership examples") {
    // 3/8 = 1/8 + 1/8 + 1/8
    auto v1 = s4_membership(S4Elem::rational(Rat(3, 8)));
    REQUIRE(v1.holds());
    CHECK(v1.evidence->dyadic_part == Rat(3, 8));
    CHECK(s4_cert_check(S4Elem::rational(Rat(3, 8)), *v1.evidence));

    // alpha + 1/2
    S4Elem t2 = S4Elem::alpha() + S4Elem::rational(Rat(1, 2));
    auto v2 = s4_membership(t2);
    REQUIRE(v2.holds());
    CHECK(v2.evidence->alpha_count == 1);
    CHECK(v2.evidence->dyadic_part == Rat(1, 2));
    CHECK(s4_cert_check(t2, *v2.evidence));

    // alpha/2: even denominator on the alpha coefficient is unreachable
    auto v3 = s4_membership(S4Elem(Rat(1, 2), Rat(0)));
    CHECK(v3.refuted());

    CHECK(s4_membership(S4Elem()).refuted());
    CHECK(s4_membership(S4Elem(Rat(-1), Rat(0))).refuted());
    CHECK(s4_membership(S4Elem(Rat(0), Rat(-1, 2))).refuted());

    // the scaled generator itself
    S4Elem g = s4_scaled_generator(1, 1);
    auto vg = s4_membership(g);
    REQUIRE(vg.holds());
    CHECK(vg.evidence->alpha_count == 0);
    CHECK(vg.evidence->dyadic_part == 0);

    // p * g = alpha + m/2^n
    S4Elem triple = Int(3) * g;
    CHECK(triple == t2);
}

TEST_CASE("s4_membership agrees with exhaustive generator search") {
    auto reachable = s4_reachable(6);
    CHECK(reachable.size() > 500);
    for (auto& [a, q] : reachable) {
        S4Elem t(a, q);
        auto v = s4_membership(t);
        INFO("element " << s4_str(t));
        REQUIRE(v.holds());
        CHECK(s4_cert_check(t, *v.evidence));
    }
}

TEST_CASE("s4_min_rational_subtract examples and descending oracle") {
    CHECK(s4_min_rational_subtract(S4Elem::rational(Rat(5, 4))) == Rat(5, 4));
    CHECK(s4_min_rational_subtract(S4Elem::alpha() + S4Elem::rational(Rat(1, 2))) == Rat(1, 2));
    CHECK(s4_min_rational_subtract(s4_scaled_generator(1, 1)) == 0);
    CHECK_THROWS_AS(s4_min_rational_subtract(S4Elem(Rat(1, 2), Rat(0))),
                    std::invalid_argument);

    // Oracle: largest dyadic q on a 1/64 grid with b - q in S (or zero).
    std::vector<S4Elem> cases = {
        S4Elem::rational(Rat(5, 4)),
        S4Elem::alpha() + S4Elem::rational(Rat(1, 2)),
        s4_scaled_generator(1, 1),
        s4_scaled_generator(2, 3) + S4Elem::rational(Rat(3, 8)),
        Int(2) * S4Elem::alpha() + S4Elem::rational(Rat(7, 16)),
    };
    for (auto& b : cases) {
        Rat best(-1);
        for (long long k = 64 * 8; k >= 0; --k) {
            Rat q(k, 64);
            if (q > b.rat_coeff) continue;
            S4Elem rest = b - S4Elem::rational(q);
            if (rest.is_zero() || s4_membership(rest).holds()) { best = q; break; }
        }
        INFO("element " << s4_str(b));
        CHECK(s4_min_rational_subtract(b) == best);
    }
}

TEST_CASE("s4 atoms and atom span") {
    CHECK(s4_is_atom(S4Elem::alpha()));
    CHECK(s4_is_atom(s4_scaled_generator(1, 1)));
    CHECK(s4_is_atom(s4_scaled_generator(3, 5)));
    CHECK(!s4_is_atom(S4Elem::rational(Rat(1, 2))));
    CHECK(!s4_is_atom(S4Elem::alpha() + S4Elem::rational(Rat(1, 2))));
    CHECK(!s4_is_atom(Int(2) * S4Elem::alpha()));

    // alpha + 1/2 = 3 g(1,1): in the atom span
    auto v = s4_atom_span(S4Elem::alpha() + S4Elem::rational(Rat(1, 2)));
    REQUIRE(v.holds());
    CHECK(s4_cert_check(S4Elem::alpha() + S4Elem::rational(Rat(1, 2)), *v.evidence));
    CHECK(v.evidence->dyadic_part == 0);

    // pure dyadic: no alpha to absorb it
    CHECK(s4_atom_span(S4Elem::rational(Rat(1, 2))).refuted());
    // integer dyadic slack needs two alphas
    CHECK(s4_atom_span(S4Elem::alpha() + S4Elem::rational(Rat(2))).refuted());
    auto v2 = s4_atom_span(Int(2) * S4Elem::alpha() + S4Elem::rational(Rat(2)));
    REQUIRE(v2.holds());
    CHECK(s4_cert_check(Int(2) * S4Elem::alpha() + S4Elem::rational(Rat(2)), *v2.evidence));
}

TEST_CASE("s4 atom factorizations") {
    SearchBounds b;
    b.max_denominator = 4;
    b.max_coeff_height = 3;
    b.max_factors = 12;

    // an atom factors only as itself
    auto fg = s4_atom_factorizations(s4_scaled_generator(1, 1), b);
    REQUIRE(fg.size() == 1);
    CHECK(fg[0].alpha_count == 0);

    // alpha + 1/2 has exactly one bounded atom factorization: 3 g(1,1)
    auto fa = s4_atom_factorizations(S4Elem::alpha() + S4Elem::rational(Rat(1, 2)), b);
    REQUIRE(fa.size() == 1);
    CHECK(fa[0].alpha_count == 0);
    REQUIRE(fa[0].scaled.size() == 1);
    CHECK(fa[0].scaled[0].second == 3);

    // a pure dyadic has none
    CHECK(s4_atom_factorizations(S4Elem::rational(Rat(1, 2)), b).empty());

    // every returned factorization re-verifies
    S4Elem t = Int(2) * S4Elem::alpha() + S4Elem::rational(Rat(1, 2));
    for (auto& c : s4_atom_factorizations(t, b)) CHECK(s4_cert_check(t, c));
}

TEST_CASE("seq membership examples") {
    CHECK(seq_membership(SeqElem::seven_e(1)).holds());
    CHECK(seq_membership(SeqElem::constant(3)).holds());
    CHECK(seq_membership(SeqElem::unit_at(1, 1)).refuted());
    CHECK(seq_membership(SeqElem()).refuted());
    CHECK(seq_membership(SeqElem::constant(7)).holds());   // multiples of 7
    CHECK(seq_membership(SeqElem::constant(4)).refuted()); // 4 unreachable
    CHECK(seq_membership(SeqElem::constant(8)).holds());   // 3 + 5

    // limit 7 with a non-multiple entry: not in S
    SeqElem bad(Int(7), {{1, Int(1)}});
    CHECK(seq_membership(bad).refuted());

    // certificates re-verify
    for (auto& t : {SeqElem::seven_e(2), SeqElem::constant(5), SeqElem::constant(9),
                    SeqElem(Int(3), {{1, Int(11)}, {2, Int(0)}})}) {
        auto v = seq_membership(t);
        REQUIRE(v.holds());
        CHECK(seq_cert_check(t, *v.evidence));
    }
}

TEST_CASE("seq membership additivity") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> lim(0, 12), idx(1, 4), val(0, 14);
    int tested = 0;
    while (tested < 200) {
        SeqElem u(Int(lim(rng))), v(Int(lim(rng)));
        for (int k = 0; k < 2; ++k) {
            u.deviations[idx(rng)] = val(rng);
            v.deviations[idx(rng)] = val(rng);
        }
        u.normalize();
        v.normalize();
        auto mu = seq_membership(u), mv = seq_membership(v);
        if (!mu.holds() || !mv.holds()) continue;
        ++tested;
        SeqElem w = u + v;
        auto mw = seq_membership(w);
        REQUIRE(mw.holds());
        // concatenated certificate also re-verifies
        SeqCert joined;
        for (auto& g : mu.evidence->summands) joined.summands.push_back(g);
        for (auto& g : mv.evidence->summands) joined.summands.push_back(g);
        CHECK(seq_cert_check(w, joined));
    }
}

TEST_CASE("seq atom characterization examples") {
    CHECK(seq_atom_characterization(SeqElem::seven_e(3)));
    SeqElem lim5(Int(5), {{1, Int(6)}, {2, Int(0)}});
    CHECK(seq_atom_characterization(lim5));
    SeqElem lim3e9(Int(3), {{2, Int(9)}});
    CHECK(!seq_atom_characterization(lim3e9));
    CHECK(!seq_atom_characterization(SeqElem::constant(7)));
    CHECK_THROWS_AS(seq_atom_characterization(SeqElem::unit_at(1, 1)), std::invalid_argument);
}

TEST_CASE("seq atoms in bounded universe match characterization") {
    SeqUniverse uni;
    uni.index_bound = 2;
    uni.entry_bound = 14;
    auto atoms = seq_atoms_in_universe(uni);
    std::set<SeqElem> atom_set(atoms.begin(), atoms.end());

    CHECK(atom_set.count(SeqElem::seven_e(1)));
    CHECK(atom_set.count(SeqElem::seven_e(2)));
    CHECK(!atom_set.count(SeqElem(Int(0), {{1, Int(14)}})));  // 14 e1 = 7e1 + 7e1
    CHECK(atom_set.count(SeqElem::constant(3)));

    for (auto& t : seq_universe_elements(uni)) {
        if (!seq_in_S(t)) continue;
        INFO("element " << seq_str(t));
        CHECK(seq_atom_characterization(t) == (atom_set.count(t) > 0));
    }
}

TEST_CASE("seq_in_M_span cases") {
    // limit 6 splits into two limit-3 atoms
    SeqElem six(Int(6), {{1, Int(9)}});
    auto v6 = seq_in_M_span(six);
    REQUIRE(v6.holds());
    CHECK(seq_span_cert_check(six, *v6.evidence));

    // limit 7 refuted
    CHECK(seq_in_M_span(SeqElem::constant(7)).refuted());
    SeqElem seven14(Int(7), {{2, Int(14)}});
    CHECK(seq_in_M_span(seven14).refuted());

    // 14 e1 = 7e1 + 7e1
    SeqElem fourteen = SeqElem::unit_at(1, 14);
    auto v14 = seq_in_M_span(fourteen);
    REQUIRE(v14.holds());
    CHECK(v14.evidence->atoms.size() == 2);
    CHECK(seq_span_cert_check(fourteen, *v14.evidence));

    CHECK_THROWS_AS(seq_in_M_span(SeqElem::constant(4)), std::invalid_argument);

    // spread of limits; every certificate re-verifies
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> idx(1, 4), val(0, 20);
    for (int L : {0, 3, 5, 6, 8, 9, 10, 12}) {
        for (int rep = 0; rep < 20; ++rep) {
            SeqElem t{Int(L)};
            for (int k = 0; k < 3; ++k) {
                int v = val(rng);
                if (L == 0) v = 7 * (v % 3);
                t.deviations[idx(rng)] = v;
            }
            t.normalize();
            if (!seq_in_S(t)) continue;
            auto v = seq_in_M_span(t);
            INFO("element " << seq_str(t));
            REQUIRE(v.holds());
            CHECK(seq_span_cert_check(t, *v.evidence));
        }
    }
}

TEST_CASE("monoid facade") {
    SearchBounds b;
    b.max_denominator = 4;
    b.max_coeff_height = 3;
    CHECK(monoid_atoms_up_to(MonoidId::QPlus, b).empty());
    auto s4 = monoid_atoms_up_to(MonoidId::SectionFour, b);
    CHECK(s4.size() == 1 + 2 * 2);  // alpha + g(n,m) for n in {1,2}, m in {1,3}
    SeqUniverse uni;
    uni.index_bound = 2;
    auto appa = monoid_atoms_up_to(MonoidId::AppendixA, b, uni);
    CHECK(appa.size() > 10);
    CHECK(monoid_from_tag("qplus") == MonoidId::QPlus);
    CHECK_THROWS_AS(monoid_from_tag("bogus"), std::invalid_argument);
}
