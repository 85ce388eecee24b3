#include "factorlab/quadratic.hpp"
#include "factorlab/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace factorlab;

namespace {

// Interval oracle for the sign of a + b*sqrt2 at `bits` of precision:
// lo/2^bits <= sqrt2 <= (lo+1)/2^bits with lo = isqrt(2 * 4^bits).
struct Sqrt2Interval {
    Int lo, hi, scale;  // scale = 2^bits
    explicit Sqrt2Interval(unsigned bits) {
        scale = int_pow(2, bits);
        Int target = 2 * scale * scale;
        lo = boost::multiprecision::sqrt(target);
        hi = lo + 1;
    }
    // sign of a + b*sqrt2, or 0 when the interval straddles zero
    int sign(const Rat& a, const Rat& b) const {
        // value * (den_a * den_b * scale) has bounds:
        Int da = den(a), db = den(b), na = num(a), nb = num(b);
        Int base = na * db * scale;
        Int blo = nb >= 0 ? nb * lo : nb * hi;
        Int bhi = nb >= 0 ? nb * hi : nb * lo;
        Int L = base + da * blo, H = base + da * bhi;
        if (L > 0) return 1;
        if (H < 0) return -1;
        return 0;  // straddle: decide exactly elsewhere
    }
};

Rat random_rat(std::mt19937_64& rng, long long height) {
    std::uniform_int_distribution<long long> n(-height, height), d(1, height);
    return Rat(Int(n(rng)), Int(d(rng)));
}

}  // namespace

TEST_CASE("qlin_cmp basic cases") {
    QLin zero(0), one(1), s2 = QLin::sqrt2();
    CHECK(qlin_cmp(zero, zero) == 0);
    CHECK(qlin_cmp(s2, one) > 0);
    // 3 - 2*sqrt2 > 0 since 9 > 8
    QLin x(Rat(3), Rat(-2));
    CHECK(qlin_cmp(x, zero) > 0);
    Sqrt2Interval oracle(200);
    CHECK(oracle.sign(3, -2) > 0);
}

TEST_CASE("qlin arithmetic examples") {
    QLin one_plus(Rat(1), Rat(1)), one_minus(Rat(1), Rat(-1));
    CHECK(qlin_arith(one_plus, one_minus, QLinOp::mul) == QLin(-1));
    CHECK(QLin::sqrt2() * QLin::sqrt2() == QLin(2));
    QLin inv = qlin_arith(QLin(1), one_plus, QLinOp::div);
    CHECK(inv == QLin(Rat(-1), Rat(1)));
    CHECK(inv * one_plus == QLin(1));  // verify by multiplying back
    CHECK_THROWS_AS(qlin_arith(one_plus, QLin(0), QLinOp::div), std::invalid_argument);
}

TEST_CASE("qlin field axioms on random triples") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 300; ++i) {
        QLin a(random_rat(rng, 40), random_rat(rng, 40));
        QLin b(random_rat(rng, 40), random_rat(rng, 40));
        QLin c(random_rat(rng, 40), random_rat(rng, 40));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("qlin_cmp agrees with 200-bit interval evaluation") {
    Sqrt2Interval oracle(200);
    std::mt19937_64 rng(777);
    int straddles = 0;
    for (int i = 0; i < 10000; ++i) {
        QLin u(random_rat(rng, 100), random_rat(rng, 100));
        QLin v(random_rat(rng, 100), random_rat(rng, 100));
        QLin d = u - v;
        int oracle_sign = oracle.sign(d.rat_part, d.irr_part);
        if (oracle_sign == 0) {
            // interval straddles zero only when the value is exactly zero
            ++straddles;
            CHECK(d.is_zero());
        } else {
            CHECK(qlin_cmp(u, v) == oracle_sign);
        }
    }
    CHECK(straddles < 100);
}

TEST_CASE("qlin total order transitivity sample") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        QLin a(random_rat(rng, 20), random_rat(rng, 20));
        QLin b(random_rat(rng, 20), random_rat(rng, 20));
        QLin c(random_rat(rng, 20), random_rat(rng, 20));
        if (a < b && b < c) CHECK(a < c);
        CHECK((a < b) + (b < a) + (a == b) == 1);
    }
}

TEST_CASE("rational and qlin text round-trips") {
    CHECK(rat_str(Rat(-3, 4)) == "-3/4");
    CHECK(rat_parse("-3/4") == Rat(-3, 4));
    CHECK(rat_parse("17") == Rat(17));
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    QLin x(Rat(1, 2), Rat(-2, 3));
    CHECK(qlin_str(x) == "1/2 + -2/3*sqrt2");
    CHECK(qlin_parse(qlin_str(x)) == x);
    CHECK(qlin_parse("5/7") == QLin(Rat(5, 7)));
}

TEST_CASE("rational helpers") {
    CHECK(rat_floor(Rat(-7, 2)) == -4);
    CHECK(rat_floor(Rat(7, 2)) == 3);
    CHECK(is_dyadic(Rat(3, 8)));
    CHECK(is_dyadic(Rat(5)));
    CHECK(!is_dyadic(Rat(1, 6)));
    CHECK(omega_with_multiplicity(12) == 3);
    CHECK(omega_with_multiplicity(1) == 0);
    CHECK(int_is_prime(Int(97)));
    CHECK(!int_is_prime(Int(91)));
}
