#pragma once

// Sparse multivariate polynomials over Q(i): term map keyed by dense exponent
// vectors. Immutable value semantics; every operation returns a normalized
// polynomial (no zero terms stored).

#include "polyfib/rational.hpp"

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyfib {

using Exponents = std::vector<unsigned>;

class MultiPoly {
public:
    using TermMap = std::map<Exponents, GaussianRational>;

    explicit MultiPoly(int nvars = 1) : nvars_(check_nvars(nvars)) {}

    static MultiPoly zero(int nvars) { return MultiPoly(nvars); }

    static MultiPoly constant(int nvars, const GaussianRational& c) {
        MultiPoly p(nvars);
        if (!c.is_zero()) p.terms_[Exponents(static_cast<std::size_t>(nvars), 0)] = c;
        return p;
    }

    static MultiPoly variable(int nvars, int index, const GaussianRational& coeff = GaussianRational(1)) {
        if (index < 0 || index >= nvars) throw std::invalid_argument("MultiPoly::variable: index out of range");
        MultiPoly p(nvars);
        if (!coeff.is_zero()) {
            Exponents e(static_cast<std::size_t>(nvars), 0);
            e[static_cast<std::size_t>(index)] = 1;
            p.terms_[e] = coeff;
        }
        return p;
    }

    static MultiPoly monomial(int nvars, Exponents exps, const GaussianRational& coeff) {
        if (static_cast<int>(exps.size()) != nvars) throw std::invalid_argument("MultiPoly::monomial: bad exponent length");
        MultiPoly p(nvars);
        if (!coeff.is_zero()) p.terms_[std::move(exps)] = coeff;
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; disengaged for the zero polynomial (its degree is -infinity).
    std::optional<int> degree() const {
        std::optional<int> d;
        for (const auto& [e, c] : terms_) {
            int td = total_degree(e);
            if (!d || td > *d) d = td;
        }
        return d;
    }

    GaussianRational coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? GaussianRational(0) : it->second;
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0); }

    bool is_homogeneous() const {
        std::optional<int> d;
        for (const auto& [e, c] : terms_) {
            int td = total_degree(e);
            if (d && *d != td) return false;
            d = td;
        }
        return true;
    }

    friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
        require_same_arity(p, q);
        MultiPoly r = p;
        for (const auto& [e, c] : q.terms_) r.add_term(e, c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) {
        require_same_arity(p, q);
        MultiPoly r = p;
        for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
        return r;
    }
    friend MultiPoly operator-(const MultiPoly& p) {
        MultiPoly r(p.nvars_);
        for (const auto& [e, c] : p.terms_) r.terms_[e] = -c;
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
        require_same_arity(p, q);
        MultiPoly r(p.nvars_);
        for (const auto& [e1, c1] : p.terms_) {
            for (const auto& [e2, c2] : q.terms_) {
                Exponents e(e1.size());
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = e1[k] + e2[k];
                r.add_term(e, c1 * c2);
            }
        }
        return r;
    }
    friend MultiPoly operator*(const MultiPoly& p, const GaussianRational& c) {
        MultiPoly r(p.nvars_);
        if (c.is_zero()) return r;
        for (const auto& [e, v] : p.terms_) r.terms_[e] = v * c;
        return r;
    }
    friend MultiPoly operator*(const GaussianRational& c, const MultiPoly& p) { return p * c; }

    MultiPoly& operator+=(const MultiPoly& q) { return *this = *this + q; }
    MultiPoly& operator-=(const MultiPoly& q) { return *this = *this - q; }
    MultiPoly& operator*=(const MultiPoly& q) { return *this = *this * q; }

    friend bool operator==(const MultiPoly& p, const MultiPoly& q) {
        return p.nvars_ == q.nvars_ && p.terms_ == q.terms_;
    }
    friend bool operator!=(const MultiPoly& p, const MultiPoly& q) { return !(p == q); }

    MultiPoly pow(unsigned e) const {
        MultiPoly acc = constant(nvars_, GaussianRational(1));
        MultiPoly base = *this;
        while (e) {
            if (e & 1) acc *= base;
            if (e >>= 1) base *= base;
        }
        return acc;
    }

    GaussianRational eval(const std::vector<GaussianRational>& point) const {
        if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("eval: arity mismatch");
        GaussianRational acc(0);
        for (const auto& [e, c] : terms_) {
            GaussianRational t = c;
            for (std::size_t k = 0; k < e.size(); ++k)
                if (e[k]) t *= point[k].pow(e[k]);
            acc += t;
        }
        return acc;
    }

    std::complex<double> eval(const std::vector<std::complex<double>>& point) const {
        if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("eval: arity mismatch");
        std::complex<double> acc(0.0, 0.0);
        for (const auto& [e, c] : terms_) {
            std::complex<double> t(c.re_double(), c.im_double());
            for (std::size_t k = 0; k < e.size(); ++k)
                for (unsigned j = 0; j < e[k]; ++j) t *= point[k];
            acc += t;
        }
        return acc;
    }

    static int total_degree(const Exponents& e) {
        return std::accumulate(e.begin(), e.end(), 0, [](int a, unsigned b) { return a + static_cast<int>(b); });
    }

private:
    static int check_nvars(int n) {
        if (n < 0) throw std::invalid_argument("MultiPoly: negative variable count");
        return n;
    }
    static void require_same_arity(const MultiPoly& p, const MultiPoly& q) {
        if (p.nvars_ != q.nvars_) throw std::invalid_argument("MultiPoly: variable-count mismatch");
    }
    void add_term(const Exponents& e, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int nvars_;
    TermMap terms_;
};

struct HomogeneousDecomposition {
    std::vector<MultiPoly> parts;  // parts[k] homogeneous of degree k (possibly zero)
};

inline HomogeneousDecomposition homogeneous_parts(const MultiPoly& p) {
    HomogeneousDecomposition out;
    int d = p.degree().value_or(-1);
    out.parts.assign(static_cast<std::size_t>(d + 1), MultiPoly::zero(p.nvars()));
    for (const auto& [e, c] : p.terms()) {
        int k = MultiPoly::total_degree(e);
        out.parts[static_cast<std::size_t>(k)] += MultiPoly::monomial(p.nvars(), e, c);
    }
    return out;
}

/// Top (leading) homogeneous form f_d; zero polynomial is rejected.
inline MultiPoly leading_form(const MultiPoly& p) {
    auto d = p.degree();
    if (!d) throw std::invalid_argument("leading_form: zero polynomial");
    MultiPoly out(p.nvars());
    for (const auto& [e, c] : p.terms())
        if (MultiPoly::total_degree(e) == *d) out += MultiPoly::monomial(p.nvars(), e, c);
    return out;
}

/// Lowest-degree homogeneous part (the tangent-cone form at the origin).
inline MultiPoly lowest_form(const MultiPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("lowest_form: zero polynomial");
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        int td = MultiPoly::total_degree(e);
        if (first || td < m) m = td, first = false;
    }
    MultiPoly out(p.nvars());
    for (const auto& [e, c] : p.terms())
        if (MultiPoly::total_degree(e) == m) out += MultiPoly::monomial(p.nvars(), e, c);
    return out;
}

/// Multiplicity at the origin = degree of the lowest nonzero homogeneous part.
inline int origin_multiplicity(const MultiPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("origin_multiplicity: zero polynomial");
    return *lowest_form(p).degree();
}

/// F(x, z) homogeneous of degree deg(p) in nvars+1 variables (z appended last),
/// with F(x, 1) = p. Constants homogenize to themselves.
inline MultiPoly homogenize(const MultiPoly& p) {
    auto d = p.degree();
    if (!d) throw std::invalid_argument("homogenize: zero polynomial");
    MultiPoly out(p.nvars() + 1);
    for (const auto& [e, c] : p.terms()) {
        Exponents e2 = e;
        e2.push_back(static_cast<unsigned>(*d - MultiPoly::total_degree(e)));
        out += MultiPoly::monomial(p.nvars() + 1, e2, c);
    }
    return out;
}

/// Substitute variable j by images[j]; all images must share one arity.
inline MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images) {
    if (static_cast<int>(images.size()) != p.nvars())
        throw std::invalid_argument("substitute: arity mismatch");
    int target = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images)
        if (im.nvars() != target) throw std::invalid_argument("substitute: images have mixed arity");
    // Precompute the powers of each image up to its max exponent in p.
    std::vector<unsigned> maxe(images.size(), 0);
    for (const auto& [e, c] : p.terms())
        for (std::size_t k = 0; k < e.size(); ++k) maxe[k] = std::max(maxe[k], e[k]);
    std::vector<std::vector<MultiPoly>> powers(images.size());
    for (std::size_t k = 0; k < images.size(); ++k) {
        powers[k].push_back(MultiPoly::constant(target, GaussianRational(1)));
        for (unsigned j = 1; j <= maxe[k]; ++j) powers[k].push_back(powers[k].back() * images[k]);
    }
    MultiPoly out(target);
    for (const auto& [e, c] : p.terms()) {
        MultiPoly t = MultiPoly::constant(target, c);
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k]) t *= powers[k][e[k]];
        out += t;
    }
    return out;
}

/// p with variable `var` instantiated at `value` (arity drops by one).
inline MultiPoly instantiate(const MultiPoly& p, int var, const GaussianRational& value) {
    if (var < 0 || var >= p.nvars()) throw std::invalid_argument("instantiate: bad variable index");
    MultiPoly out(p.nvars() - 1);
    for (const auto& [e, c] : p.terms()) {
        GaussianRational coeff = c * value.pow(e[static_cast<std::size_t>(var)]);
        Exponents e2;
        e2.reserve(e.size() - 1);
        for (std::size_t k = 0; k < e.size(); ++k)
            if (static_cast<int>(k) != var) e2.push_back(e[k]);
        out += MultiPoly::monomial(p.nvars() - 1, e2, coeff);
    }
    return out;
}

/// F(x, 1): inverse of homogenize on its image (drops the last variable).
inline MultiPoly dehomogenize(const MultiPoly& p) {
    if (p.nvars() < 2) throw std::invalid_argument("dehomogenize: needs at least two variables");
    return instantiate(p, p.nvars() - 1, GaussianRational(1));
}

inline MultiPoly partial_derivative_single(const MultiPoly& p, int var) {
    if (var < 0 || var >= p.nvars()) throw std::invalid_argument("partial_derivative: bad variable");
    MultiPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        unsigned k = e[static_cast<std::size_t>(var)];
        if (k == 0) continue;
        Exponents e2 = e;
        e2[static_cast<std::size_t>(var)] = k - 1;
        out += MultiPoly::monomial(p.nvars(), e2, c * GaussianRational(Rational(static_cast<long>(k))));
    }
    return out;
}

/// Directional derivative sum_j xi_j * dp/dx_j; the direction must be nonzero.
inline MultiPoly partial_derivative(const MultiPoly& p, const std::vector<GaussianRational>& direction) {
    if (static_cast<int>(direction.size()) != p.nvars())
        throw std::invalid_argument("partial_derivative: direction arity mismatch");
    bool nonzero = false;
    for (const auto& x : direction) nonzero = nonzero || !x.is_zero();
    if (!nonzero) throw std::invalid_argument("partial_derivative: zero direction");
    MultiPoly out(p.nvars());
    for (int j = 0; j < p.nvars(); ++j)
        if (!direction[static_cast<std::size_t>(j)].is_zero())
            out += partial_derivative_single(p, j) * direction[static_cast<std::size_t>(j)];
    return out;
}

/// Reparsable text form; terms ordered by total degree descending, then by
/// exponent vector descending.
inline std::string to_expression_string(const MultiPoly& p, const std::vector<std::string>& vars) {
    if (static_cast<int>(vars.size()) != p.nvars())
        throw std::invalid_argument("to_expression_string: variable-name count mismatch");
    if (p.is_zero()) return "0";
    std::vector<std::pair<Exponents, GaussianRational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = MultiPoly::total_degree(a.first), db = MultiPoly::total_degree(b.first);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    auto rat_txt = [](const Rational& q) { return q.get_str(); };  // "p" or "p/q"
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        std::string mono;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (!e[k]) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[k];
            if (e[k] > 1) mono += "^" + std::to_string(e[k]);
        }
        GaussianRational coeff = c;
        if (first) {
            first = false;
        } else if (coeff.is_real() && sgn(coeff.re) < 0) {
            os << " - ";
            coeff = -coeff;
        } else {
            os << " + ";
        }
        // Coefficient as a grammar `factor`; empty means an implicit 1.
        std::string cs;
        if (coeff.is_real()) {
            if (!(coeff.is_one() && !mono.empty())) cs = rat_txt(coeff.re);
        } else if (sgn(coeff.re) == 0) {
            if (coeff.im == 1)
                cs = "i";
            else
                cs = (sgn(coeff.im) < 0 ? "(" + rat_txt(coeff.im) + ")" : rat_txt(coeff.im)) + "*i";
        } else {
            std::string im = rat_txt(abs(coeff.im));
            cs = "(" + rat_txt(coeff.re) + (sgn(coeff.im) < 0 ? "-" : "+") + im + "*i)";
        }
        if (mono.empty())
            os << (cs.empty() ? "1" : cs);
        else if (cs.empty())
            os << mono;
        else
            os << cs << "*" << mono;
    }
    return os.str();
}

}  // namespace polyfib
