#pragma once

// Geometry at infinity for plane curves {f = t}: the trace X^inf on the line
// at infinity, local models g_t(u,v) = F(1,u,v) - t v^d at each Q(i)-rational
// point of X^inf, multiplicities, tangent cones, and the shared-cone distance
// criterion.

#include "polyfib/binary_form.hpp"
#include "polyfib/multipoly.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyfib {

struct PointAtInfinity {
    ProjectivePoint coords;  // [a:b], normalized
    int mult_a = 0;          // exponent of the corresponding linear factor in f_d

    friend bool operator==(const PointAtInfinity& p, const PointAtInfinity& q) {
        return p.coords == q.coords && p.mult_a == q.mult_a;
    }
};

struct InfinityTrace {
    std::vector<PointAtInfinity> points;  // Q(i)-rational points of {f_d = 0}
    MultiPoly residual;                   // factor of f_d with no Q(i)-rational root
    bool split = true;                    // true iff f_d splits into lines over Q(i)
};

/// X^inf = {f_d = 0} on P^1, for a nonconstant bivariate f.
inline InfinityTrace points_at_infinity(const MultiPoly& f) {
    if (f.nvars() != 2) throw std::invalid_argument("points_at_infinity: needs a bivariate polynomial");
    if (f.is_constant()) throw std::invalid_argument("points_at_infinity: constant polynomial");
    FormRoots roots = form_roots(leading_form(f));
    InfinityTrace out{{}, roots.residual, roots.residual.is_constant()};
    for (const auto& [pt, mult] : roots.points) out.points.push_back({pt, mult});
    return out;
}

/// Coefficient of v^j in g, as a univariate polynomial in u.
inline UniPoly coefficient_in_v(const MultiPoly& g, unsigned j) {
    UniPoly out;
    for (const auto& [e, c] : g.terms()) {
        if (e[1] != j) continue;
        if (out.size() <= e[0]) out.resize(e[0] + 1, GaussianRational(0));
        out[e[0]] += c;
    }
    uni_normalize(out);
    return out;
}

inline int uni_valuation(const UniPoly& p) {
    for (std::size_t k = 0; k < p.size(); ++k)
        if (!p[k].is_zero()) return static_cast<int>(k);
    return -1;  // zero polynomial
}

/// Valuation data of the v^(m-k) coefficient of g, k = 1..m.
struct CoeffValuation {
    int k = 0;
    bool nonzero = false;
    int a_k = 0;  // coefficient = u^(k + a_k) * unit when nonzero
};

struct LocalModel {
    PointAtInfinity point;                   // in the original coordinates
    std::array<std::array<GaussianRational, 2>, 2> chart;  // (x', y') = chart * (x, y)
    MultiPoly g;          // g_0(u, v) = F(1, u, v); instantiate t via g - t v^d
    int degree = 0;       // d = deg f
    int multiplicity = 0; // m = multiplicity of g at the origin
    bool cone_is_tangent_line = false;       // lowest form of g equals lambda * v^m
    std::optional<GaussianRational> lambda;  // set when cone_is_tangent_line
    std::vector<CoeffValuation> coeff_valuations;  // k = 1..m

    MultiPoly instantiate_t(const GaussianRational& t) const {
        if (t.is_zero()) return g;
        return g - MultiPoly::monomial(2, {0, static_cast<unsigned>(degree)}, t);
    }
};

/// Local model of f at a point of X^inf: moves the point to [1:0:0], takes the
/// chart [1:u:v] and forms g(u,v) = F(1,u,v).
inline LocalModel local_model(const MultiPoly& f, const PointAtInfinity& p) {
    if (f.nvars() != 2) throw std::invalid_argument("local_model: needs a bivariate polynomial");
    LocalModel model;
    model.point = p;
    int d = f.degree().value_or(0);
    if (d < 1) throw std::invalid_argument("local_model: constant polynomial");
    model.degree = d;

    // Chart change sending p to [1:0]; records (x', y') = A (x, y).
    MultiPoly x_of(2), y_of(2);  // x, y expressed in the primed coordinates
    if (!p.coords.a.is_zero()) {
        const GaussianRational& b = p.coords.b;
        model.chart = {{{GaussianRational(1), GaussianRational(0)}, {-b, GaussianRational(1)}}};
        x_of = MultiPoly::variable(2, 0);
        y_of = MultiPoly::variable(2, 1) + MultiPoly::variable(2, 0) * b;
    } else {
        model.chart = {{{GaussianRational(0), GaussianRational(1)}, {GaussianRational(1), GaussianRational(0)}}};
        x_of = MultiPoly::variable(2, 1);
        y_of = MultiPoly::variable(2, 0);
    }
    MultiPoly ft = substitute(f, {x_of, y_of});
    if (!leading_form(ft).eval({GaussianRational(1), GaussianRational(0)}).is_zero())
        throw std::invalid_argument("local_model: point does not lie on X^inf");

    MultiPoly F = homogenize(ft);           // variables (x', y', z)
    model.g = instantiate(F, 0, GaussianRational(1));  // (u, v) = (y', z)
    model.multiplicity = origin_multiplicity(model.g);

    MultiPoly low = lowest_form(model.g);
    Exponents pure_v{0, static_cast<unsigned>(model.multiplicity)};
    GaussianRational lam = low.coefficient(pure_v);
    model.cone_is_tangent_line = (!lam.is_zero() && low.term_count() == 1);
    if (model.cone_is_tangent_line) model.lambda = lam;

    for (int k = 1; k <= model.multiplicity; ++k) {
        UniPoly ck = coefficient_in_v(model.g, static_cast<unsigned>(model.multiplicity - k));
        CoeffValuation cv;
        cv.k = k;
        cv.nonzero = !uni_is_zero(ck);
        cv.a_k = cv.nonzero ? uni_valuation(ck) - k : 0;
        model.coeff_valuations.push_back(cv);
    }
    return model;
}

struct TangentCone {
    MultiPoly form;  // lowest-degree homogeneous part of g_t, in (u, v)
    std::vector<std::pair<ProjectivePoint, int>> lines;  // root [a:b] <-> line {b u - a v = 0}
    MultiPoly residual;  // factor of the form with no Q(i)-rational line
};

inline TangentCone tangent_cone(const LocalModel& model, const GaussianRational& t) {
    MultiPoly gt = model.instantiate_t(t);
    if (gt.is_zero()) throw std::logic_error("tangent_cone: instantiated model vanished");
    TangentCone cone;
    cone.form = lowest_form(gt);
    FormRoots roots = form_roots(cone.form);
    cone.lines = std::move(roots.points);
    cone.residual = std::move(roots.residual);
    return cone;
}

/// Shared tangent-line criterion: true iff the tangent cones of g_s and g_t
/// share a line other than {v = 0}; a shared transverse line forces
/// dist(X_s, X_t) = 0.
inline bool cone_criterion(const LocalModel& model, const GaussianRational& s, const GaussianRational& t) {
    if (s == t) throw std::invalid_argument("cone_criterion: s = t");
    MultiPoly fs = lowest_form(model.instantiate_t(s));
    MultiPoly ft = lowest_form(model.instantiate_t(t));
    MultiPoly g = form_gcd(fs, ft);
    int d = g.degree().value_or(0);
    return d - form_order_in_second(g) >= 1;
}

}  // namespace polyfib
