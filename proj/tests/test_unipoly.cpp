#include <catch2/catch_amalgamated.hpp>

#include "polyfib/unipoly.hpp"

#include <random>

using namespace polyfib;

namespace {

UniPoly from_roots(const std::vector<GaussianRational>& roots) {
    UniPoly p{GaussianRational(1)};
    for (const auto& r : roots) p = uni_mul(p, UniPoly{-r, GaussianRational(1)});
    return p;
}

}  // namespace

TEST_CASE("division and gcd") {
    UniPoly a{GaussianRational(-1), GaussianRational(0), GaussianRational(1)};  // w^2 - 1
    UniPoly b{GaussianRational(1), GaussianRational(1)};                        // w + 1
    auto [q, r] = uni_divmod(a, b);
    CHECK(uni_is_zero(r));
    CHECK(q == UniPoly{GaussianRational(-1), GaussianRational(1)});
    CHECK(uni_gcd(a, b) == uni_monic(b));
}

TEST_CASE("squarefree decomposition") {
    // (w-1)^2 (w+2)
    auto p = uni_mul(from_roots({GaussianRational(1), GaussianRational(1)}),
                     from_roots({GaussianRational(-2)}));
    auto sq = uni_squarefree(p);
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].second == 1);
    CHECK(sq[0].first == from_roots({GaussianRational(-2)}));
    CHECK(sq[1].second == 2);
    CHECK(sq[1].first == from_roots({GaussianRational(1)}));
}

TEST_CASE("resultant and discriminant") {
    // disc(w^2 + bw + c) = b^2 - 4c
    UniPoly p{GaussianRational(3), GaussianRational(-2), GaussianRational(1)};
    CHECK(uni_discriminant(p) == GaussianRational(4 - 12));
    // repeated root -> zero discriminant
    auto sq = from_roots({GaussianRational(2), GaussianRational(2)});
    CHECK(uni_discriminant(sq).is_zero());
    // resultant of coprime polynomials is nonzero
    CHECK(!uni_resultant(from_roots({GaussianRational(1)}), from_roots({GaussianRational(2)})).is_zero());
}

TEST_CASE("roots over Q(i): constructed cases") {
    auto i = GaussianRational::i();
    auto half = GaussianRational(Rational(1, 2));
    auto p = from_roots({i, -i, half, half});
    auto found = uni_roots(p);
    REQUIRE(found.roots.size() == 3);
    CHECK(uni_degree(found.residual) == 0);
    bool saw_half = false;
    for (auto& [root, mult] : found.roots) {
        if (root == half) {
            saw_half = true;
            CHECK(mult == 2);
        } else {
            CHECK(mult == 1);
        }
    }
    CHECK(saw_half);
}

TEST_CASE("roots: quadratic resolution via discriminant square test") {
    // w^2 - 2i has roots (1+i), -(1+i): discriminant 8i, sqrt in Q(i)
    UniPoly p{GaussianRational(Rational(0), Rational(-2)), GaussianRational(0), GaussianRational(1)};
    auto found = uni_roots(p);
    REQUIRE(found.roots.size() == 2);
    for (auto& [root, mult] : found.roots) CHECK(uni_eval(p, root).is_zero());
}

TEST_CASE("roots: irreducible residual is reported") {
    // w^2 - 2 has no roots in Q(i)
    UniPoly p{GaussianRational(-2), GaussianRational(0), GaussianRational(1)};
    auto found = uni_roots(p);
    CHECK(found.roots.empty());
    CHECK(uni_degree(found.residual) == 2);

    // (w^2 - 2)(w - 3): the rational root must still be extracted
    auto q = uni_mul(p, from_roots({GaussianRational(3)}));
    found = uni_roots(q);
    REQUIRE(found.roots.size() == 1);
    CHECK(found.roots[0].first == GaussianRational(3));
    CHECK(uni_degree(found.residual) == 2);
}

TEST_CASE("roots: randomized reconstruction") {
    std::mt19937 rng(61);
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    for (int it = 0; it < 40; ++it) {
        std::vector<GaussianRational> roots;
        int n = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < n; ++k)
            roots.emplace_back(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        auto p = from_roots(roots);
        auto found = uni_roots(p);
        CHECK(uni_degree(found.residual) == 0);
        std::size_t total = 0;
        for (auto& [root, mult] : found.roots) {
            CHECK(uni_eval(p, root).is_zero());
            total += static_cast<std::size_t>(mult);
        }
        CHECK(total == roots.size());
    }
}
