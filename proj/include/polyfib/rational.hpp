#pragma once

// Exact scalars: arbitrary-precision rationals (GMP) and Gaussian rationals
// a + b*i with a, b in Q. All values are normalized after every operation
// (mpq_class keeps denominators positive and in lowest terms).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace polyfib {

using Rational = mpq_class;

inline Rational rational_from_string(const std::string& s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}             // NOLINT(google-explicit-constructor)
    GaussianRational(const Rational& r) : re(r), im(0) {  // NOLINT(google-explicit-constructor)
        re.canonicalize();
    }
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw std::domain_error("division by zero Gaussian rational");
        Rational n = b.norm();
        GaussianRational num = a * b.conj();
        return {num.re / n, num.im / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Total order (lexicographic on re, im); used for deterministic sorting only.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }

    GaussianRational pow(std::uint64_t e) const {
        GaussianRational base = *this, acc = GaussianRational(1);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    double re_double() const { return re.get_d(); }
    double im_double() const { return im.get_d(); }
};

inline GaussianRational inverse(const GaussianRational& z) { return GaussianRational(1) / z; }

/// Canonical text form: "p/q" when real, "p/q+r/s*i" otherwise ("-" absorbed).
inline std::string to_string(const GaussianRational& z) {
    auto rat_str = [](const Rational& q) { return q.get_str(); };
    if (z.is_real()) return rat_str(z.re);
    std::string s = rat_str(z.re);
    if (sgn(z.im) >= 0) s += "+";
    s += rat_str(z.im) + "*i";
    return s;
}

/// Parses the canonical form produced by to_string(). Throws on malformed input.
inline GaussianRational gaussian_from_string(const std::string& s) {
    auto star_i = s.rfind("*i");
    if (star_i == std::string::npos) return GaussianRational(rational_from_string(s));
    // Split the imaginary part off: find the sign that separates re from im,
    // scanning from just before "*i" back to position 1 (a leading '-' belongs to re).
    std::size_t split = std::string::npos;
    for (std::size_t k = star_i; k > 0; --k) {
        char c = s[k - 1];
        if ((c == '+' || c == '-') && k - 1 > 0) {
            split = k - 1;
            break;
        }
    }
    if (split == std::string::npos) throw std::invalid_argument("bad Gaussian rational: " + s);
    Rational re = rational_from_string(s.substr(0, split));
    std::string imtxt = s.substr(split, star_i - split);
    if (imtxt == "+" || imtxt == "-") imtxt += "1";
    if (imtxt.size() > 1 && imtxt[0] == '+') imtxt.erase(0, 1);
    return {re, rational_from_string(imtxt)};
}

/// Exact square root in Q(i), if one exists.
inline std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& z) {
    if (z.is_zero()) return GaussianRational(0);
    if (z.is_real()) {
        if (sgn(z.re) > 0) {
            if (auto r = rational_sqrt(z.re)) return GaussianRational(*r);
            return std::nullopt;
        }
        if (auto r = rational_sqrt(-z.re)) return GaussianRational(Rational(0), *r);
        return std::nullopt;
    }
    // (c+di)^2 = z  =>  c^2 = (re + |z|)/2, d = im/(2c); |z| must be rational.
    auto r = rational_sqrt(z.norm());
    if (!r) return std::nullopt;
    Rational c2 = (z.re + *r) / 2;  // never `auto` a gmpxx expression
    auto c = rational_sqrt(c2);
    if (!c || sgn(*c) == 0) return std::nullopt;
    Rational d = z.im / (2 * (*c));
    GaussianRational w(*c, d);
    if (w * w == z) return w;
    return std::nullopt;
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

}  // namespace polyfib
