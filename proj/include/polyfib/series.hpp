#pragma once

// Truncated power series over an abstract coefficient field. Two instantiations
// are used: exact Gaussian rationals and complex doubles (the fallback when a
// branch needs roots of unity or edge roots outside Q(i)).

#include "polyfib/rational.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace polyfib {

template <class K>
struct FieldTraits;

template <>
struct FieldTraits<GaussianRational> {
    static constexpr bool exact = true;
    static GaussianRational zero() { return GaussianRational(0); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational from_long(long n) { return GaussianRational(Rational(n)); }
    static GaussianRational from_gaussian(const GaussianRational& z) { return z; }
    static bool is_zero(const GaussianRational& z) { return z.is_zero(); }
    static std::complex<double> to_complex(const GaussianRational& z) {
        return {z.re_double(), z.im_double()};
    }
};

template <>
struct FieldTraits<std::complex<double>> {
    static constexpr bool exact = false;
    static constexpr double eps = 1e-9;
    static std::complex<double> zero() { return {0.0, 0.0}; }
    static std::complex<double> one() { return {1.0, 0.0}; }
    static std::complex<double> from_long(long n) { return {static_cast<double>(n), 0.0}; }
    static std::complex<double> from_gaussian(const GaussianRational& z) {
        return {z.re_double(), z.im_double()};
    }
    static bool is_zero(const std::complex<double>& z) { return std::abs(z) <= eps; }
    static std::complex<double> to_complex(const std::complex<double>& z) { return z; }
};

/// Coefficients of s^0 .. s^(order-1); everything beyond is unknown.
template <class K>
class TruncSeries {
public:
    using Traits = FieldTraits<K>;

    TruncSeries() = default;
    explicit TruncSeries(int order) : c_(static_cast<std::size_t>(order), Traits::zero()) {}
    static TruncSeries constant(const K& value, int order) {
        TruncSeries s(order);
        if (order > 0) s.c_[0] = value;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()); }
    const K& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
    K& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }
    const std::vector<K>& coeffs() const { return c_; }

    std::optional<int> valuation() const {
        for (int n = 0; n < order(); ++n)
            if (!Traits::is_zero(c_[static_cast<std::size_t>(n)])) return n;
        return std::nullopt;
    }

    bool known_zero() const { return !valuation().has_value(); }

    TruncSeries truncated(int new_order) const {
        TruncSeries s(std::min(new_order, order()));
        for (int n = 0; n < s.order(); ++n) s[n] = c_[static_cast<std::size_t>(n)];
        return s;
    }

    /// Multiply by s^k.
    TruncSeries shifted_up(int k) const {
        TruncSeries s(order() + k);
        for (int n = 0; n < order(); ++n) s[n + k] = c_[static_cast<std::size_t>(n)];
        return s;
    }

    /// Substitute s -> s^r (exponent stretch).
    TruncSeries stretched(int r) const {
        TruncSeries s(order() * r);
        for (int n = 0; n < order(); ++n) s[n * r] = c_[static_cast<std::size_t>(n)];
        return s;
    }

    /// Substitute s -> omega * s.
    TruncSeries twisted(const K& omega) const {
        TruncSeries s(order());
        K w = Traits::one();
        for (int n = 0; n < order(); ++n) {
            s[n] = c_[static_cast<std::size_t>(n)] * w;
            w = w * omega;
        }
        return s;
    }

    /// Keep only exponents divisible by r, mapped to n/r. The caller promises
    /// the others vanish; exact coefficients are checked, float ones tolerated.
    TruncSeries compressed(int r) const {
        TruncSeries s((order() + r - 1) / r);
        for (int n = 0; n < order(); ++n) {
            const K& v = c_[static_cast<std::size_t>(n)];
            if (n % r == 0) {
                s[n / r] = v;
            } else if constexpr (Traits::exact) {
                if (!Traits::is_zero(v)) throw std::logic_error("compressed: nonzero stray exponent");
            }
        }
        return s;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries s(std::min(a.order(), b.order()));
        for (int n = 0; n < s.order(); ++n) s[n] = a[n] + b[n];
        return s;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries s(std::min(a.order(), b.order()));
        for (int n = 0; n < s.order(); ++n) s[n] = a[n] - b[n];
        return s;
    }
    friend TruncSeries operator-(const TruncSeries& a) {
        TruncSeries s(a.order());
        for (int n = 0; n < s.order(); ++n) s[n] = Traits::zero() - a[n];
        return s;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries s(std::min(a.order(), b.order()));
        for (int n = 0; n < s.order(); ++n)
            for (int k = 0; k <= n; ++k) s[n] = s[n] + a[k] * b[n - k];
        return s;
    }
    friend TruncSeries operator*(const TruncSeries& a, const K& c) {
        TruncSeries s(a.order());
        for (int n = 0; n < s.order(); ++n) s[n] = a[n] * c;
        return s;
    }

    /// Multiplicative inverse; requires a unit constant term.
    TruncSeries inverted() const {
        if (order() == 0 || Traits::is_zero(c_[0]))
            throw std::domain_error("TruncSeries::inverted: constant term is not a unit");
        TruncSeries s(order());
        K inv0 = Traits::one() / c_[0];
        s[0] = inv0;
        for (int n = 1; n < order(); ++n) {
            K acc = Traits::zero();
            for (int k = 1; k <= n; ++k) acc = acc + c_[static_cast<std::size_t>(k)] * s[n - k];
            s[n] = Traits::zero() - acc * inv0;
        }
        return s;
    }

private:
    std::vector<K> c_;
};

template <class K>
TruncSeries<std::complex<double>> to_complex_series(const TruncSeries<K>& s) {
    TruncSeries<std::complex<double>> out(s.order());
    for (int n = 0; n < s.order(); ++n) out[n] = FieldTraits<K>::to_complex(s[n]);
    return out;
}

/// Exact m-th primitive root of unity, when it lies in Q(i).
inline std::optional<GaussianRational> exact_root_of_unity(int m) {
    switch (m) {
        case 1: return GaussianRational(1);
        case 2: return GaussianRational(-1);
        case 4: return GaussianRational::i();
        default: return std::nullopt;
    }
}

inline std::complex<double> float_root_of_unity(int m) {
    const double two_pi = 6.283185307179586476925286766559;
    return std::polar(1.0, two_pi / m);
}

}  // namespace polyfib
