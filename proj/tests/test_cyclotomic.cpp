#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "igt/cyclotomic.hpp"

#include <numeric>
#include <random>

using namespace igt;

namespace {

// Seeded generator of random field elements with small coefficients.
Cyc random_cyc(std::mt19937_64& rng, long n) {
    long phi = euler_phi(n);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    Cyc out = Cyc::zero(n);
    for (long i = 0; i < phi; ++i) {
        QQ c(num(rng));
        c /= den(rng);
        out += Cyc(c, n) * Cyc::zeta_power(n, i);
    }
    return out;
}

} // namespace

TEST_CASE("parse examples") {
    // z^6 at n=24 is i: its square is -1
    Cyc i = parse_cyc("z^6", 24);
    CHECK(i * i == Cyc(-1, 24));

    Cyc half = parse_cyc("1/2*z^6 - 1/2", 24);
    CHECK(half + half == i - Cyc::one(24));

    CHECK(parse_cyc("z^24", 24) == Cyc::one(24));
    CHECK(parse_cyc("0", 24).is_zero());
    CHECK(parse_cyc("-z", 24) == -Cyc::zeta_power(24, 1));
    CHECK(parse_cyc("3/2", 24).rational_value() == QQ(3) / 2);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_cyc("1/0", 24), parse_error);
    CHECK_THROWS_AS(parse_cyc("z^", 24), parse_error);
    CHECK_THROWS_AS(parse_cyc("1 +", 24), parse_error);
    CHECK_THROWS_AS(parse_cyc("", 24), parse_error);
    CHECK_THROWS_AS(parse_cyc("q", 24), parse_error);
    try {
        parse_cyc("1 + $", 24);
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("arithmetic examples") {
    Cyc z6 = Cyc::zeta_power(24, 6);
    CHECK(z6 * z6 == Cyc(-1, 24));

    // (1 + i)^-1 = (1 - i)/2
    Cyc inv = (Cyc::one(24) + z6).inverse();
    CHECK(inv == parse_cyc("1/2 - 1/2*z^6", 24));

    // 1 + zeta_3 + zeta_3^2 = 0
    CHECK((Cyc::zeta_power(24, 8) + Cyc::zeta_power(24, 16) + Cyc::one(24)).is_zero());

    CHECK_THROWS_AS(Cyc::zero(24).inverse(), precondition_error);
}

TEST_CASE("conductor mismatch") {
    Cyc a = Cyc::zeta_power(8, 1);
    Cyc b = Cyc::zeta_power(12, 1);
    CHECK_THROWS_AS(a * b, precondition_error);
    auto [x, y] = to_common_conductor(a, b);
    CHECK(x.conductor() == 24);
    CHECK(x == Cyc::zeta_power(24, 3));
    CHECK(y == Cyc::zeta_power(24, 2));
    // rationals embed automatically
    CHECK(a + Cyc(QQ(2), 4) == a + Cyc(QQ(2), 8));
}

TEST_CASE("conjugation") {
    Cyc z = Cyc::zeta_power(24, 1);
    CHECK(z.conj() == Cyc::zeta_power(24, 23));
    CHECK(parse_cyc("z^6", 24).conj() == -parse_cyc("z^6", 24));
    CHECK(parse_cyc("3/2", 24).conj() == parse_cyc("3/2", 24));
    CHECK(z.conj().conj() == z);
}

TEST_CASE("roots of unity") {
    CHECK((-Cyc::zeta_power(24, 5)).is_root_of_unity());
    CHECK_FALSE(Cyc(QQ(1) / 2, 24).is_root_of_unity());
    CHECK_FALSE(Cyc::zero(24).is_root_of_unity());
    // odd conductor: -1 and 2n-th roots live in Q(zeta_n)
    Cyc r = Cyc::root_of_unity(9, 18, 1);
    CHECK(r.pow(18) == Cyc::one(9));
    CHECK(r.pow(9) == Cyc(-1, 9));
    CHECK_THROWS_AS(Cyc::root_of_unity(24, 48, 1), precondition_error);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(0);
    for (int n : {8, 12, 24}) {
        for (int it = 0; it < 60; ++it) {
            Cyc a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, n);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a.inverse() * a == Cyc::one(n));
            CHECK(a.conj() * b.conj() == (a * b).conj());
        }
    }
}

TEST_CASE("print/parse roundtrip on 1000 random elements") {
    std::mt19937_64 rng(1);
    int count = 0;
    for (int n : {5, 8, 20, 24, 36}) {
        for (int it = 0; it < 200; ++it) {
            Cyc a = random_cyc(rng, n);
            CHECK(parse_cyc(a.str(), n) == a);
            ++count;
        }
    }
    CHECK(count == 1000);
}

TEST_CASE("galois maps permute roots of the cyclotomic polynomial") {
    for (long n : {8L, 12L, 24L}) {
        for (long k = 1; k < n; ++k) {
            if (std::gcd(k, n) != 1) continue;
            // image of z satisfies Phi_n = 0, i.e. it has multiplicative order n
            Cyc img = Cyc::zeta_power(n, 1).galois(k);
            CHECK(img.pow(n) == Cyc::one(n));
            for (long d = 1; d < n; ++d)
                if (n % d == 0) CHECK(img.pow(d) != Cyc::one(n));
        }
    }
}

TEST_CASE("embedding is a field homomorphism") {
    std::mt19937_64 rng(2);
    for (int it = 0; it < 40; ++it) {
        Cyc a = random_cyc(rng, 12), b = random_cyc(rng, 12);
        CHECK((a * b).embedded(24) == a.embedded(24) * b.embedded(24));
        CHECK((a + b).embedded(24) == a.embedded(24) + b.embedded(24));
    }
}
