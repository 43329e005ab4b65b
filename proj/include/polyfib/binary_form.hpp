#pragma once

// Binary forms (homogeneous bivariate polynomials) over Q(i): roots on the
// projective line, gcd, and factorization into linear factors where the roots
// live in Q(i).

#include "polyfib/multipoly.hpp"
#include "polyfib/unipoly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace polyfib {

/// Normalized projective point [a:b] on P^1 (first nonzero coordinate = 1).
struct ProjectivePoint {
    GaussianRational a, b;

    static ProjectivePoint normalized(const GaussianRational& a0, const GaussianRational& b0) {
        if (a0.is_zero() && b0.is_zero()) throw std::invalid_argument("ProjectivePoint: [0:0]");
        if (!a0.is_zero()) return {GaussianRational(1), b0 / a0};
        return {GaussianRational(0), GaussianRational(1)};
    }

    friend bool operator==(const ProjectivePoint& p, const ProjectivePoint& q) {
        return p.a == q.a && p.b == q.b;
    }
    friend bool operator<(const ProjectivePoint& p, const ProjectivePoint& q) {
        if (p.a != q.a) return q.a < p.a;  // [1:*] sorts before [0:1]
        return p.b < q.b;
    }
};

inline std::string to_string(const ProjectivePoint& p) {
    return "[" + to_string(p.a) + ":" + to_string(p.b) + "]";
}

struct FormRoots {
    std::vector<std::pair<ProjectivePoint, int>> points;  // Q(i)-rational roots with multiplicity
    MultiPoly residual;  // factor with no Q(i) roots (constant 1 when the form splits)
};

/// Dehomogenization form(1, w) of a binary form in the variables (X, Y).
inline UniPoly form_dehomogenize(const MultiPoly& form) {
    if (form.nvars() != 2) throw std::invalid_argument("form_dehomogenize: needs 2 variables");
    int d = form.degree().value_or(0);
    UniPoly phi(static_cast<std::size_t>(d) + 1, GaussianRational(0));
    for (const auto& [e, c] : form.terms()) phi[e[1]] += c;
    uni_normalize(phi);
    return phi;
}

/// Rehomogenize a univariate polynomial to a binary form of degree = deg p.
inline MultiPoly form_homogenize(const UniPoly& p) {
    MultiPoly out(2);
    int d = uni_degree(p);
    for (int k = 0; k <= d; ++k)
        if (!p[static_cast<std::size_t>(k)].is_zero())
            out += MultiPoly::monomial(2, {static_cast<unsigned>(d - k), static_cast<unsigned>(k)},
                                       p[static_cast<std::size_t>(k)]);
    return out;
}

/// All roots of a nonzero binary form on P^1 that are rational over Q(i); an
/// irreducible residual factor, if any, is returned separately.
inline FormRoots form_roots(const MultiPoly& form) {
    if (form.nvars() != 2 || form.is_zero() || !form.is_homogeneous())
        throw std::invalid_argument("form_roots: needs a nonzero binary form");
    FormRoots out;
    int d = *form.degree();
    UniPoly phi = form_dehomogenize(form);
    int mult_infty = d - uni_degree(phi);  // multiplicity of [0:1] (the Y-axis root)
    if (mult_infty > 0)
        out.points.emplace_back(ProjectivePoint{GaussianRational(0), GaussianRational(1)}, mult_infty);
    UniRoots r = uni_roots(phi);
    for (const auto& [root, mult] : r.roots)
        out.points.emplace_back(ProjectivePoint{GaussianRational(1), root}, mult);
    out.residual = form_homogenize(r.residual);
    std::sort(out.points.begin(), out.points.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

/// Order of vanishing along {v = 0}, i.e. the largest k with Y^k | form.
inline int form_order_in_second(const MultiPoly& form) {
    int best = -1;
    for (const auto& [e, c] : form.terms()) {
        int k = static_cast<int>(e[1]);
        if (best < 0 || k < best) best = k;
    }
    return best < 0 ? 0 : best;
}

inline int form_order_in_first(const MultiPoly& form) {
    int best = -1;
    for (const auto& [e, c] : form.terms()) {
        int k = static_cast<int>(e[0]);
        if (best < 0 || k < best) best = k;
    }
    return best < 0 ? 0 : best;
}

/// Monic-normalized gcd of two nonzero binary forms.
inline MultiPoly form_gcd(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("form_gcd: zero form");
    int ax = std::min(form_order_in_first(f), form_order_in_first(g));
    int ay = std::min(form_order_in_second(f), form_order_in_second(g));
    // Strip the monomial part, then gcd the dehomogenizations.
    auto strip = [](const MultiPoly& form) {
        MultiPoly out(2);
        int ox = form_order_in_first(form), oy = form_order_in_second(form);
        for (const auto& [e, c] : form.terms())
            out += MultiPoly::monomial(2, {e[0] - static_cast<unsigned>(ox), e[1] - static_cast<unsigned>(oy)}, c);
        return out;
    };
    UniPoly h = uni_gcd(form_dehomogenize(strip(f)), form_dehomogenize(strip(g)));
    MultiPoly out = form_homogenize(h);
    out = out * MultiPoly::monomial(2, {static_cast<unsigned>(ax), static_cast<unsigned>(ay)}, GaussianRational(1));
    return out;
}

}  // namespace polyfib
