#pragma once

// Aberth–Ehrlich simultaneous root refinement for univariate complex
// polynomials, with deterministic initialization on a scaled circle.

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyfib {

struct RootFindingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::complex<double> horner(const std::vector<std::complex<double>>& c,
                                   const std::complex<double>& z) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
}

}  // namespace detail

/// All complex roots of sum coeffs[k] z^k. Requires a nonzero leading
/// coefficient and degree >= 1. Residuals are checked against
/// 1e-9 * max|coeff| * max(1,|root|)^deg; non-convergence throws.
inline std::vector<std::complex<double>> roots_univariate(std::vector<std::complex<double>> coeffs) {
    using C = std::complex<double>;
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() < 2) throw RootFindingError("roots_univariate: degree < 1");

    double maxc = 0.0;
    for (const auto& c : coeffs) maxc = std::max(maxc, std::abs(c));
    if (!(maxc > 0.0) || !std::isfinite(maxc)) throw RootFindingError("roots_univariate: bad coefficients");

    std::vector<C> roots;
    // Deflate exact zero roots (vanishing low coefficients).
    std::size_t low = 0;
    while (low + 1 < coeffs.size() && std::abs(coeffs[low]) <= 1e-300 * maxc) ++low;
    for (std::size_t k = 0; k < low; ++k) roots.emplace_back(0.0, 0.0);
    std::vector<C> p(coeffs.begin() + static_cast<long>(low), coeffs.end());
    int deg = static_cast<int>(p.size()) - 1;

    if (deg == 1) {
        roots.push_back(-p[0] / p[1]);
    } else if (deg >= 2) {
        std::vector<C> dp(p.size() - 1);
        for (std::size_t k = 1; k < p.size(); ++k) dp[k - 1] = p[k] * static_cast<double>(k);

        // Initial guesses on a circle of radius from the geometric mean bound.
        double r0 = std::pow(std::abs(p[0] / p.back()), 1.0 / deg);
        if (!(r0 > 0.0) || !std::isfinite(r0)) r0 = 1.0;
        std::vector<C> z(static_cast<std::size_t>(deg));
        const double two_pi = 6.283185307179586;
        for (int k = 0; k < deg; ++k)
            z[static_cast<std::size_t>(k)] = std::polar(r0, two_pi * k / deg + 0.4);

        bool converged = false;
        for (int it = 0; it < 600 && !converged; ++it) {
            converged = true;
            for (int k = 0; k < deg; ++k) {
                C zk = z[static_cast<std::size_t>(k)];
                C pv = detail::horner(p, zk);
                C dv = detail::horner(dp, zk);
                C ratio = (std::abs(dv) > 0.0) ? pv / dv : C(1.0, 0.0);
                C sum(0.0, 0.0);
                for (int j = 0; j < deg; ++j) {
                    if (j == k) continue;
                    C diff = zk - z[static_cast<std::size_t>(j)];
                    if (std::abs(diff) < 1e-300) diff = C(1e-300, 0.0);
                    sum += 1.0 / diff;
                }
                C denom = 1.0 - ratio * sum;
                C step = (std::abs(denom) > 0.0) ? ratio / denom : ratio;
                z[static_cast<std::size_t>(k)] = zk - step;
                if (std::abs(step) > 1e-14 * (1.0 + std::abs(zk))) converged = false;
            }
        }
        for (const auto& zk : z) roots.push_back(zk);
    }

    // Residual certification on every root.
    int full_deg = static_cast<int>(coeffs.size()) - 1;
    for (const auto& r : roots) {
        if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
            throw RootFindingError("roots_univariate: non-finite root");
        double bound = 1e-9 * maxc * std::pow(std::max(1.0, std::abs(r)), full_deg);
        if (std::abs(detail::horner(coeffs, r)) > bound)
            throw RootFindingError("roots_univariate: residual check failed");
    }
    std::sort(roots.begin(), roots.end(), [](const C& a, const C& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

/// Groups nearly equal roots; returns (representative, multiplicity) pairs.
inline std::vector<std::pair<std::complex<double>, int>> cluster_roots(
    const std::vector<std::complex<double>>& roots, double radius) {
    std::vector<std::pair<std::complex<double>, int>> out;
    std::vector<bool> used(roots.size(), false);
    for (std::size_t a = 0; a < roots.size(); ++a) {
        if (used[a]) continue;
        std::complex<double> sum = roots[a];
        int count = 1;
        used[a] = true;
        for (std::size_t b = a + 1; b < roots.size(); ++b) {
            if (used[b]) continue;
            if (std::abs(roots[b] - roots[a]) <= radius * std::max(1.0, std::abs(roots[a]))) {
                sum += roots[b];
                ++count;
                used[b] = true;
            }
        }
        out.emplace_back(sum / static_cast<double>(count), count);
    }
    return out;
}

}  // namespace polyfib
