#include <catch2/catch_amalgamated.hpp>

#include "polyfib/infinity.hpp"
#include "polyfib/parser.hpp"

#include <random>

using namespace polyfib;

namespace {
const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kUV{"u", "v"};

PointAtInfinity point_of(const InfinityTrace& trace, const std::string& a, const std::string& b) {
    ProjectivePoint want{parse_constant(a), parse_constant(b)};
    for (const auto& p : trace.points)
        if (p.coords == want) return p;
    FAIL("point not found: [" + a + ":" + b + "]");
    return {};
}
}  // namespace

TEST_CASE("points at infinity: xy") {
    auto trace = points_at_infinity(parse("x*y", kXY));
    REQUIRE(trace.points.size() == 2);
    CHECK(point_of(trace, "1", "0").mult_a == 1);
    CHECK(point_of(trace, "0", "1").mult_a == 1);
    CHECK(trace.split);
}

TEST_CASE("points at infinity: x + y^2 has a double point") {
    auto trace = points_at_infinity(parse("x + y^2", kXY));
    REQUIRE(trace.points.size() == 1);
    CHECK(point_of(trace, "1", "0").mult_a == 2);
}

TEST_CASE("points at infinity: x^2 + y^2 factors over Q(i)") {
    auto trace = points_at_infinity(parse("x^2 + y^2", kXY));
    REQUIRE(trace.points.size() == 2);
    CHECK(point_of(trace, "1", "i").mult_a == 1);
    CHECK(point_of(trace, "1", "-i").mult_a == 1);
    CHECK(trace.split);
}

TEST_CASE("points at infinity: irreducible residual is flagged") {
    // f_2 = x^2 - 2y^2 has no Q(i)-rational roots
    auto trace = points_at_infinity(parse("x^2 - 2*y^2 + x", kXY));
    CHECK(trace.points.empty());
    CHECK(!trace.split);
    CHECK(*trace.residual.degree() == 2);
}

TEST_CASE("points at infinity is independent of the level") {
    std::mt19937 rng(71);
    std::uniform_int_distribution<long> c(-9, 9);
    for (const char* txt : {"x*y", "x + y^2", "x^2*y + x", "(x+2*y)^3 + x"}) {
        auto f = parse(txt, kXY);
        auto t1 = points_at_infinity(f);
        auto t2 = points_at_infinity(f - MultiPoly::constant(2, GaussianRational(Rational(c(rng)))));
        CHECK(t1.points == t2.points);
    }
}

TEST_CASE("mult_a sums to at most d, with equality iff split") {
    for (const char* txt : {"x*y", "x + y^2", "x^2 - 2*y^2 + x", "x^2*y + x"}) {
        auto f = parse(txt, kXY);
        auto trace = points_at_infinity(f);
        int total = 0;
        for (auto& p : trace.points) total += p.mult_a;
        int d = *leading_form(f).degree();
        CHECK(total <= d);
        CHECK((total == d) == trace.split);
    }
}

TEST_CASE("local model: xy at [1:0]") {
    auto f = parse("x*y", kXY);
    auto p = point_of(points_at_infinity(f), "1", "0");
    auto model = local_model(f, p);
    CHECK(model.g == parse("u", kUV));
    CHECK(model.degree == 2);
    CHECK(model.multiplicity == 1);
    CHECK(!model.cone_is_tangent_line);
    CHECK(model.instantiate_t(GaussianRational(1)) == parse("u - v^2", kUV));
}

TEST_CASE("local model: x + y^2 at [1:0]") {
    auto f = parse("x + y^2", kXY);
    auto p = point_of(points_at_infinity(f), "1", "0");
    auto model = local_model(f, p);
    CHECK(model.g == parse("v + u^2", kUV));
    CHECK(model.multiplicity == 1);
    REQUIRE(model.cone_is_tangent_line);
    CHECK(*model.lambda == GaussianRational(1));
    CHECK(model.instantiate_t(GaussianRational(5)) == parse("v + u^2 - 5*v^2", kUV));
    // beta = m + a_m = valuation of f_d in the chart = mult_a
    REQUIRE(model.coeff_valuations.size() == 1);
    CHECK(model.coeff_valuations[0].nonzero);
    CHECK(model.coeff_valuations[0].a_k + 1 == p.mult_a);
}

TEST_CASE("local model: linear polynomial") {
    auto f = parse("x", kXY);
    auto p = point_of(points_at_infinity(f), "0", "1");
    auto model = local_model(f, p);
    CHECK(model.multiplicity == 1);
    CHECK(model.degree == 1);
}

TEST_CASE("local model rejects points off X^inf") {
    auto f = parse("x*y", kXY);
    PointAtInfinity bogus{ProjectivePoint{GaussianRational(1), GaussianRational(1)}, 1};
    CHECK_THROWS_AS(local_model(f, bogus), std::invalid_argument);
}

TEST_CASE("tangent cones") {
    auto f = parse("x*y", kXY);
    auto model = local_model(f, point_of(points_at_infinity(f), "1", "0"));
    auto cone = tangent_cone(model, GaussianRational(1));
    CHECK(cone.form == parse("u", kUV));
    REQUIRE(cone.lines.size() == 1);
    CHECK(cone.lines[0].first == ProjectivePoint{GaussianRational(0), GaussianRational(1)});

    auto g = parse("x + y^2", kXY);
    auto gm = local_model(g, point_of(points_at_infinity(g), "1", "0"));
    for (long t : {0L, 5L}) {
        auto c = tangent_cone(gm, GaussianRational(Rational(t)));
        CHECK(c.form == parse("v", kUV));  // T_p H, for every t since m < d
    }
}

TEST_CASE("cone criterion") {
    auto f = parse("x*y", kXY);
    auto fm = local_model(f, point_of(points_at_infinity(f), "1", "0"));
    CHECK(cone_criterion(fm, GaussianRational(1), GaussianRational(2)));

    auto g = parse("x + y^2", kXY);
    auto gm = local_model(g, point_of(points_at_infinity(g), "1", "0"));
    CHECK(!cone_criterion(gm, GaussianRational(1), GaussianRational(2)));

    // single-variable (x+2y)^2: cones vary with t and never share a line
    auto h = parse("(x+2*y)^2", kXY);
    auto hp = points_at_infinity(h);
    REQUIRE(hp.points.size() == 1);
    auto hm = local_model(h, hp.points[0]);
    CHECK(hm.multiplicity == hm.degree);  // m = d
    CHECK(!cone_criterion(hm, GaussianRational(1), GaussianRational(2)));
    CHECK(!cone_criterion(hm, GaussianRational(0), GaussianRational(1)));

    CHECK_THROWS_AS(cone_criterion(fm, GaussianRational(1), GaussianRational(1)), std::invalid_argument);
}

TEST_CASE("cone criterion is symmetric and constant over pairs when m < d") {
    std::mt19937 rng(73);
    std::uniform_int_distribution<long> val(-6, 6);
    for (const char* txt : {"x*y", "x + y^2", "x^2*y + x"}) {
        auto f = parse(txt, kXY);
        for (const auto& p : points_at_infinity(f).points) {
            auto model = local_model(f, p);
            if (model.multiplicity >= model.degree) continue;
            std::optional<bool> expected;
            for (int it = 0; it < 12; ++it) {
                GaussianRational s(Rational(val(rng)), Rational(val(rng)));
                GaussianRational t(Rational(val(rng)), Rational(val(rng)));
                if (s == t) continue;
                bool a = cone_criterion(model, s, t);
                CHECK(a == cone_criterion(model, t, s));
                if (!expected) expected = a;
                CHECK(a == *expected);
            }
        }
    }
}

TEST_CASE("lowest form of g_t is lambda v^m for all t when the cone is T_pH and m < d") {
    std::mt19937 rng(79);
    std::uniform_int_distribution<long> val(-9, 9);
    for (const char* txt : {"x + y^2", "x + y^3", "x + 2*y^2 + y^3"}) {
        auto f = parse(txt, kXY);
        for (const auto& p : points_at_infinity(f).points) {
            auto model = local_model(f, p);
            REQUIRE(model.cone_is_tangent_line);
            REQUIRE(model.multiplicity < model.degree);
            MultiPoly expect = MultiPoly::monomial(2, {0, static_cast<unsigned>(model.multiplicity)},
                                                   *model.lambda);
            for (int it = 0; it < 8; ++it) {
                GaussianRational t(Rational(val(rng)), Rational(val(rng)));
                CHECK(lowest_form(model.instantiate_t(t)) == expect);
            }
        }
    }
}
