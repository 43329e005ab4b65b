#include <catch2/catch_amalgamated.hpp>

#include "polyfib/gaussian_int.hpp"
#include "polyfib/rational.hpp"

#include <random>

using namespace polyfib;

namespace {

GaussianRational random_gaussian(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 9);
    return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("gaussian rational arithmetic normalizes") {
    GaussianRational a(Rational(2, 4), Rational(-6, 8));
    CHECK(a.re == Rational(1, 2));
    CHECK(a.im == Rational(-3, 4));
    CHECK(a.re.get_den() == 2);

    GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK((GaussianRational(1) + i) * (GaussianRational(1) - i) == GaussianRational(2));
}

TEST_CASE("gaussian rational division is exact") {
    GaussianRational a(Rational(3), Rational(4));
    GaussianRational b(Rational(1), Rational(-2));
    CHECK(a / b * b == a);
    CHECK_THROWS_AS(a / GaussianRational(0), std::domain_error);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(2024);
    for (int it = 0; it < 200; ++it) {
        auto a = random_gaussian(rng), b = random_gaussian(rng), c = random_gaussian(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(inverse(a) * a == GaussianRational(1));
    }
}

TEST_CASE("string round trip") {
    std::mt19937 rng(7);
    for (int it = 0; it < 100; ++it) {
        auto z = random_gaussian(rng);
        CHECK(gaussian_from_string(to_string(z)) == z);
    }
    CHECK(to_string(GaussianRational(Rational(1, 2), Rational(-3, 4))) == "1/2-3/4*i");
    CHECK(to_string(GaussianRational(5)) == "5");
}

TEST_CASE("rational square roots") {
    CHECK(*rational_sqrt(Rational(9, 4)) == Rational(3, 2));
    CHECK(!rational_sqrt(Rational(2)));
    CHECK(!rational_sqrt(Rational(-4)));
}

TEST_CASE("gaussian square roots") {
    // (1+i)^2 = 2i
    auto s = gaussian_sqrt(GaussianRational(Rational(0), Rational(2)));
    REQUIRE(s);
    CHECK(*s * *s == GaussianRational(Rational(0), Rational(2)));
    CHECK(*gaussian_sqrt(GaussianRational(-4)) * *gaussian_sqrt(GaussianRational(-4)) == GaussianRational(-4));
    CHECK(!gaussian_sqrt(GaussianRational::i()));  // sqrt(i) is not in Q(i)
    CHECK(!gaussian_sqrt(GaussianRational(2)));

    std::mt19937 rng(99);
    for (int it = 0; it < 50; ++it) {
        auto z = random_gaussian(rng);
        auto r = gaussian_sqrt(z * z);
        REQUIRE(r);
        CHECK((*r == z || *r == -z));
    }
}

TEST_CASE("gaussian integer gcd and factorization") {
    // 4+2i = 2(2+i), 2+4i = 2i(2-i); 2+i and 2-i are coprime primes, so gcd = 2.
    GaussInt a(4, 2), b(2, 4);
    GaussInt g = gauss_gcd(a, b);
    CHECK(g.norm() == 4);
    CHECK(gauss_divides(g, a));
    CHECK(gauss_divides(g, b));

    auto f = gauss_factor(GaussInt(5, 0));
    CHECK(f.primes.size() == 2);  // 5 = (2+i)(2-i)
    mpz_class n(1);
    for (auto& [p, e] : f.primes)
        for (int k = 0; k < e; ++k) n *= p.norm();
    CHECK(n == 25);
}

TEST_CASE("gaussian divisors cover the rational root candidates") {
    auto divs = gauss_divisors(GaussInt(2, 0));
    // divisors of 2 up to units: 1, (1+i), 2
    CHECK(divs.size() == 3);
}

TEST_CASE("exact nth roots in Q(i)") {
    CHECK(*gaussian_nth_root(GaussianRational(-1), 3) == GaussianRational(-1));
    CHECK(*gaussian_nth_root(GaussianRational(8), 3) == GaussianRational(2));
    CHECK(*gaussian_nth_root(GaussianRational(Rational(27, 8)), 3) == GaussianRational(Rational(3, 2)));
    auto r = gaussian_nth_root(GaussianRational(-4), 4);  // (1+i)^4 = -4
    REQUIRE(r);
    CHECK(r->pow(4) == GaussianRational(-4));
    CHECK(!gaussian_nth_root(GaussianRational(2), 3));
    CHECK(!gaussian_nth_root(GaussianRational(-1), 4));  // primitive 8th root not in Q(i)

    std::mt19937 rng(31);
    for (int it = 0; it < 30; ++it) {
        auto z = random_gaussian(rng);
        if (z.is_zero()) continue;
        for (unsigned n : {2u, 3u, 4u}) {
            auto root = gaussian_nth_root(z.pow(n), n);
            REQUIRE(root);
            CHECK(root->pow(n) == z.pow(n));
        }
    }
}
