#pragma once

// Dense univariate polynomials over Q(i): Euclidean division, gcd, Yun
// squarefree decomposition, Sylvester resultant/discriminant, and complete
// root finding over Q(i) (squarefree decomposition + rational root search in
// Z[i] + quadratic resolution via the discriminant square test).

#include "polyfib/gaussian_int.hpp"
#include "polyfib/rational.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polyfib {

/// Coefficient vector indexed by degree; normalized = no trailing zeros.
using UniPoly = std::vector<GaussianRational>;

inline void uni_normalize(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int uni_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }
inline bool uni_is_zero(const UniPoly& p) { return p.empty(); }

inline UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()), GaussianRational(0));
    for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
    uni_normalize(r);
    return r;
}

inline UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
    UniPoly r(std::max(a.size(), b.size()), GaussianRational(0));
    for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] -= b[k];
    uni_normalize(r);
    return r;
}

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, GaussianRational(0));
    for (std::size_t ia = 0; ia < a.size(); ++ia)
        for (std::size_t ib = 0; ib < b.size(); ++ib) r[ia + ib] += a[ia] * b[ib];
    uni_normalize(r);
    return r;
}

inline UniPoly uni_scale(const UniPoly& a, const GaussianRational& c) {
    if (c.is_zero()) return {};
    UniPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

inline GaussianRational uni_eval(const UniPoly& p, const GaussianRational& x) {
    GaussianRational acc(0);
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
}

inline UniPoly uni_derivative(const UniPoly& p) {
    if (p.size() < 2) return {};
    UniPoly r(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) r[k - 1] = p[k] * GaussianRational(Rational(static_cast<long>(k)));
    uni_normalize(r);
    return r;
}

/// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b) {
    if (b.empty()) throw std::domain_error("uni_divmod: division by zero polynomial");
    UniPoly r = a, q;
    int db = uni_degree(b);
    if (uni_degree(a) >= db) q.assign(static_cast<std::size_t>(uni_degree(a) - db) + 1, GaussianRational(0));
    GaussianRational lead_inv = inverse(b.back());
    while (uni_degree(r) >= db) {
        int shift = uni_degree(r) - db;
        GaussianRational c = r.back() * lead_inv;
        q[static_cast<std::size_t>(shift)] = c;
        for (int k = 0; k <= db; ++k)
            r[static_cast<std::size_t>(k + shift)] -= c * b[static_cast<std::size_t>(k)];
        uni_normalize(r);
    }
    uni_normalize(q);
    return {q, r};
}

inline UniPoly uni_monic(const UniPoly& p) {
    if (p.empty()) return p;
    return uni_scale(p, inverse(p.back()));
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_normalize(a);
    uni_normalize(b);
    while (!b.empty()) {
        UniPoly r = uni_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return uni_monic(a);
}

/// Yun's squarefree decomposition: p = lc * prod factors[k].first^(factors[k].second)
/// with each factor monic and squarefree, multiplicities strictly increasing.
inline std::vector<std::pair<UniPoly, int>> uni_squarefree(const UniPoly& p_in) {
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly p = uni_monic(p_in);
    if (uni_degree(p) < 1) return out;
    UniPoly dp = uni_derivative(p);
    UniPoly g = uni_gcd(p, dp);
    UniPoly c = uni_divmod(p, g).first;
    UniPoly d = uni_sub(uni_divmod(dp, g).first, uni_derivative(c));
    int mult = 1;
    while (uni_degree(c) > 0) {
        UniPoly a = uni_gcd(c, d);
        if (uni_degree(a) > 0) out.emplace_back(a, mult);
        c = uni_divmod(c, a).first;
        d = uni_sub(uni_divmod(d, a).first, uni_derivative(c));
        ++mult;
    }
    return out;
}

/// Resultant via the Sylvester matrix with exact Gaussian elimination.
inline GaussianRational uni_resultant(const UniPoly& a, const UniPoly& b) {
    int da = uni_degree(a), db = uni_degree(b);
    if (da < 0 || db < 0) return GaussianRational(0);
    if (da == 0 && db == 0) return GaussianRational(1);
    if (da == 0) return a[0].pow(static_cast<unsigned>(db));
    if (db == 0) return b[0].pow(static_cast<unsigned>(da));
    int n = da + db;
    std::vector<std::vector<GaussianRational>> m(static_cast<std::size_t>(n),
                                                 std::vector<GaussianRational>(static_cast<std::size_t>(n), GaussianRational(0)));
    for (int row = 0; row < db; ++row)
        for (int k = 0; k <= da; ++k) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + k)] = a[static_cast<std::size_t>(da - k)];
    for (int row = 0; row < da; ++row)
        for (int k = 0; k <= db; ++k) m[static_cast<std::size_t>(db + row)][static_cast<std::size_t>(row + k)] = b[static_cast<std::size_t>(db - k)];
    GaussianRational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) return GaussianRational(0);
        if (pivot != col) {
            std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(col)]);
            det = -det;
        }
        GaussianRational pv = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det *= pv;
        GaussianRational inv = inverse(pv);
        for (int row = col + 1; row < n; ++row) {
            GaussianRational f = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] * inv;
            if (f.is_zero()) continue;
            for (int k = col; k < n; ++k)
                m[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] -=
                    f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(k)];
        }
    }
    return det;
}

/// Discriminant of p (nonzero iff p squarefree, for deg p >= 1).
inline GaussianRational uni_discriminant(const UniPoly& p) {
    int d = uni_degree(p);
    if (d < 1) throw std::domain_error("uni_discriminant: degree < 1");
    if (d == 1) return GaussianRational(1);
    GaussianRational res = uni_resultant(p, uni_derivative(p));
    GaussianRational sign = (static_cast<unsigned>(d) * static_cast<unsigned>(d - 1) / 2) % 2 == 0
                                ? GaussianRational(1)
                                : GaussianRational(-1);
    return sign * res / p.back();
}

struct UniRoots {
    std::vector<std::pair<GaussianRational, int>> roots;  // (root, multiplicity)
    UniPoly residual;  // product of factors with no Q(i) roots (monic; 1 if none)
};

namespace detail {

/// Q(i) roots of a squarefree polynomial; deflates them out of `p`.
inline std::vector<GaussianRational> squarefree_roots(UniPoly& p) {
    std::vector<GaussianRational> roots;
    uni_normalize(p);
    // w = 0 roots
    while (!p.empty() && p.front().is_zero()) {
        roots.emplace_back(0);
        p.erase(p.begin());
    }
    if (uni_degree(p) < 1) return roots;
    // Clear denominators to land in Z[i].
    mpz_class den(1);
    for (const auto& c : p) den = lcm(lcm(den, c.re.get_den()), c.im.get_den());
    std::vector<GaussInt> z;
    z.reserve(p.size());
    for (const auto& c : p) {
        Rational re = c.re * den, im = c.im * den;
        z.emplace_back(re.get_num(), im.get_num());
    }
    auto deflate = [&p](const GaussianRational& r) {
        UniPoly q(p.size() - 1);
        GaussianRational carry = p.back();
        for (std::size_t k = p.size() - 1; k-- > 0;) {
            q[k] = carry;
            carry = p[k] + carry * r;
        }
        p = q;  // carry is the remainder, zero for a true root
        uni_normalize(p);
    };
    try {
        std::vector<GaussInt> lead_divs = gauss_divisors(z.back());
        std::vector<GaussInt> tail_divs = gauss_divisors(z.front());
        const GaussianRational units[4] = {GaussianRational(1), GaussianRational::i(), GaussianRational(-1),
                                           GaussianRational(-1) * GaussianRational::i()};
        for (const auto& num : tail_divs) {
            for (const auto& dn : lead_divs) {
                GaussianRational base = num.to_rational() / dn.to_rational();
                for (const auto& u : units) {
                    GaussianRational cand = base * u;
                    if (uni_degree(p) < 1) break;
                    if (uni_eval(p, cand).is_zero()) {
                        roots.push_back(cand);
                        deflate(cand);
                    }
                }
            }
        }
    } catch (const std::runtime_error&) {
        // Divisor enumeration blew past its cap; fall through to the
        // quadratic resolution and leave the rest in the residual.
    }
    if (uni_degree(p) == 2) {
        // w = (-b +- sqrt(b^2 - 4ac)) / (2a), resolved exactly when the
        // discriminant is a square in Q(i).
        const GaussianRational &a = p[2], &b = p[1], &c = p[0];
        if (auto s = gaussian_sqrt(b * b - GaussianRational(4) * a * c)) {
            GaussianRational twoa = GaussianRational(2) * a;
            GaussianRational r1 = (-b + *s) / twoa, r2 = (-b - *s) / twoa;
            roots.push_back(r1);
            deflate(r1);
            roots.push_back(r2);
            deflate(r2);
        }
    }
    return roots;
}

}  // namespace detail

/// All Q(i) roots of p with multiplicities, plus the rootless residual factor.
inline UniRoots uni_roots(const UniPoly& p_in) {
    UniRoots out;
    out.residual = {GaussianRational(1)};
    UniPoly p = p_in;
    uni_normalize(p);
    if (uni_degree(p) < 1) return out;
    int zero_mult = 0;
    while (!p.empty() && p.front().is_zero()) {
        ++zero_mult;
        p.erase(p.begin());
    }
    if (zero_mult) out.roots.emplace_back(GaussianRational(0), zero_mult);
    for (auto& [factor, mult] : uni_squarefree(p)) {
        UniPoly f = factor;
        auto roots = detail::squarefree_roots(f);
        for (const auto& r : roots) out.roots.emplace_back(r, mult);
        if (uni_degree(f) > 0) {
            UniPoly residual_pow = uni_monic(f);
            for (int k = 1; k < mult; ++k) residual_pow = uni_mul(residual_pow, uni_monic(f));
            out.residual = uni_mul(out.residual, residual_pow);
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace polyfib
