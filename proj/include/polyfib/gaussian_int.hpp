#pragma once

// Gaussian-integer arithmetic: Euclidean division, gcd, factorization into
// Gaussian primes, divisor enumeration and exact n-th roots in Q(i).
// Z[i] is a Euclidean domain, so rational-root search over Q(i) reduces to
// divisor enumeration exactly as over Q.

#include "polyfib/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace polyfib {

struct GaussInt {
    mpz_class re, im;

    GaussInt() : re(0), im(0) {}
    GaussInt(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    mpz_class norm() const { return re * re + im * im; }
    GaussInt conj() const { return {re, -im}; }

    friend GaussInt operator+(const GaussInt& a, const GaussInt& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussInt& a, const GaussInt& b) { return !(a == b); }
    friend bool operator<(const GaussInt& a, const GaussInt& b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }

    GaussianRational to_rational() const { return {Rational(re), Rational(im)}; }
};

namespace detail {
inline mpz_class round_div(const mpz_class& a, const mpz_class& b) {
    // nearest integer to a/b, ties toward +inf; |a - q*b| <= |b|/2
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_class b_abs = abs(b);
    if (2 * r >= b_abs) q += 1;
    return q;
}
}  // namespace detail

/// Rounded division: q with N(a - q*b) <= N(b)/2.
inline GaussInt gauss_div_round(const GaussInt& a, const GaussInt& b) {
    mpz_class n = b.norm();
    if (n == 0) throw std::domain_error("gauss_div_round: division by zero");
    GaussInt num = a * b.conj();
    return {detail::round_div(num.re, n), detail::round_div(num.im, n)};
}

/// True Euclidean remainder step; returns (quotient, remainder).
inline std::pair<GaussInt, GaussInt> gauss_divmod(const GaussInt& a, const GaussInt& b) {
    GaussInt q = gauss_div_round(a, b);
    return {q, a - q * b};
}

/// Exact division; throws if b does not divide a.
inline GaussInt gauss_div_exact(const GaussInt& a, const GaussInt& b) {
    auto [q, r] = gauss_divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("gauss_div_exact: not divisible");
    return q;
}

inline bool gauss_divides(const GaussInt& b, const GaussInt& a) {
    if (b.is_zero()) return a.is_zero();
    return gauss_divmod(a, b).second.is_zero();
}

inline GaussInt gauss_gcd(GaussInt a, GaussInt b) {
    while (!b.is_zero()) {
        auto r = gauss_divmod(a, b).second;
        a = b;
        b = r;
    }
    return a;
}

/// Canonical associate: rotate by units so that re > 0, im >= 0 (first quadrant,
/// positive real axis included, imaginary axis excluded unless zero).
inline GaussInt gauss_canonical(GaussInt z) {
    if (z.is_zero()) return z;
    for (int k = 0; k < 4; ++k) {
        if (z.re > 0 && z.im >= 0) return z;
        z = GaussInt(-z.im, z.re);  // multiply by i
    }
    return z;
}

namespace detail {

inline mpz_class pow_mod(mpz_class base, mpz_class exp, const mpz_class& mod) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

/// Factors n >= 1 by trial division plus Pollard rho; returns prime -> exponent.
inline std::map<mpz_class, int> factor_integer(mpz_class n) {
    std::map<mpz_class, int> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[mpz_class(p)] += 1;
            n /= p;
        }
    }
    mpz_class d(41);
    while (n > 1 && d * d <= n && d < 100000) {
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            out[d] += 1;
            n /= d;
        }
        d += 2;
    }
    // Pollard rho for whatever survives trial division.
    std::vector<mpz_class> stack;
    if (n > 1) stack.push_back(n);
    int guard = 0;
    while (!stack.empty()) {
        if (++guard > 256) throw std::runtime_error("factor_integer: too many rounds");
        mpz_class m = stack.back();
        stack.pop_back();
        if (mpz_probab_prime_p(m.get_mpz_t(), 40)) {
            out[m] += 1;
            continue;
        }
        mpz_class factor = 0;
        for (long c = 1; c < 64 && factor == 0; ++c) {
            mpz_class x(2), y(2), dgcd(1);
            int it = 0;
            while (dgcd == 1 && ++it < 200000) {
                x = (x * x + c) % m;
                y = (y * y + c) % m;
                y = (y * y + c) % m;
                mpz_class diff = abs(x - y);
                if (diff == 0) break;
                mpz_gcd(dgcd.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
            }
            if (dgcd != 1 && dgcd != m) factor = dgcd;
        }
        if (factor == 0) throw std::runtime_error("factor_integer: Pollard rho failed");
        stack.push_back(factor);
        stack.push_back(m / factor);
    }
    return out;
}

/// Square root of -1 mod p for p = 1 (mod 4).
inline mpz_class sqrt_minus_one_mod(const mpz_class& p) {
    mpz_class e = (p - 1) / 4;
    for (mpz_class a(2); a < p; ++a) {
        mpz_class s = pow_mod(a, (p - 1) / 2, p);
        if (s == p - 1) return pow_mod(a, e, p);
    }
    throw std::runtime_error("sqrt_minus_one_mod: no non-residue found");
}

}  // namespace detail

/// Factorization of a nonzero Gaussian integer: unit * prod primes[i]^exp[i],
/// with each prime in canonical associate form.
struct GaussFactorization {
    GaussInt unit;  // one of 1, i, -1, -i
    std::vector<std::pair<GaussInt, int>> primes;
};

inline GaussFactorization gauss_factor(const GaussInt& z) {
    if (z.is_zero()) throw std::domain_error("gauss_factor: zero");
    GaussFactorization out;
    GaussInt rest = z;
    auto norm_factors = detail::factor_integer(z.norm());
    for (const auto& [p, k] : norm_factors) {
        if (p == 2) {
            GaussInt pi(1, 1);
            int e = 0;
            while (gauss_divides(pi, rest)) {
                rest = gauss_div_exact(rest, pi);
                ++e;
            }
            if (e) out.primes.emplace_back(gauss_canonical(pi), e);
        } else if (mpz_class(p % 4) == 3) {
            GaussInt pi(p, 0);
            int e = 0;
            while (gauss_divides(pi, rest)) {
                rest = gauss_div_exact(rest, pi);
                ++e;
            }
            if (e) out.primes.emplace_back(gauss_canonical(pi), e);
            (void)k;
        } else {
            mpz_class x = detail::sqrt_minus_one_mod(p);
            GaussInt pi = gauss_gcd(GaussInt(p, 0), GaussInt(x, 1));
            for (GaussInt cand : {pi, pi.conj()}) {
                int e = 0;
                while (gauss_divides(cand, rest)) {
                    rest = gauss_div_exact(rest, cand);
                    ++e;
                }
                if (e) out.primes.emplace_back(gauss_canonical(cand), e);
            }
        }
    }
    // what is left must be a unit
    if (rest.norm() != 1) throw std::runtime_error("gauss_factor: nontrivial residual");
    out.unit = rest;
    return out;
}

/// All divisors of z up to unit multiples (canonical associates). Throws if the
/// divisor count would exceed `cap`.
inline std::vector<GaussInt> gauss_divisors(const GaussInt& z, std::size_t cap = 1 << 14) {
    auto f = gauss_factor(z);
    std::vector<GaussInt> divs{GaussInt(1)};
    for (const auto& [p, e] : f.primes) {
        std::vector<GaussInt> next;
        next.reserve(divs.size() * (e + 1));
        GaussInt pk(1);
        for (int k = 0; k <= e; ++k) {
            for (const auto& d : divs) next.push_back(gauss_canonical(d * pk));
            pk = pk * p;
        }
        divs = std::move(next);
        if (divs.size() > cap) throw std::runtime_error("gauss_divisors: too many divisors");
    }
    std::sort(divs.begin(), divs.end());
    divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
    return divs;
}

/// Exact n-th root of a nonzero Gaussian rational, if one exists in Q(i).
inline std::optional<GaussianRational> gaussian_nth_root(const GaussianRational& z, unsigned n) {
    if (n == 0) throw std::invalid_argument("gaussian_nth_root: n = 0");
    if (n == 1) return z;
    if (z.is_zero()) return GaussianRational(0);
    if (n == 2) return gaussian_sqrt(z);
    // Clear denominators: z = A / c with A in Z[i], c in Z > 0.
    mpz_class c = lcm(lcm(z.re.get_den(), z.im.get_den()), mpz_class(1));
    GaussInt a(z.re.get_num() * (c / z.re.get_den()), z.im.get_num() * (c / z.im.get_den()));
    // z = a / c; root(z) = root(a * c^(n-1)) / c.
    mpz_class cpow(1);
    for (unsigned k = 0; k + 1 < n; ++k) cpow *= c;
    GaussInt scaled = a * GaussInt(cpow, 0);
    GaussFactorization f = gauss_factor(scaled);
    GaussInt root(1);
    for (const auto& [p, e] : f.primes) {
        if (e % static_cast<int>(n) != 0) return std::nullopt;
        for (int k = 0; k < e / static_cast<int>(n); ++k) root = root * p;
    }
    GaussianRational base = root.to_rational() / GaussianRational(Rational(c));
    GaussianRational unit(1);
    for (int k = 0; k < 4; ++k) {
        GaussianRational cand = base * unit;
        if (cand.pow(n) == z) return cand;
        unit *= GaussianRational::i();
    }
    return std::nullopt;
}

}  // namespace polyfib
