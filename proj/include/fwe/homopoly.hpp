// Copyright 2026 The fwe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/*
 * Homogeneous bivariate polynomials.
 *
 * A HomPoly of degree n stores n+1 coefficients; coeffs[i] multiplies
 * x^(n-i) y^i. The zero polynomial keeps its degree, so operations that
 * lower the degree (differential operators) stay total.
 *
 * Matrices act by substitution: f^sigma(x, y) = f(ax + by, cx + dy) for
 * sigma = [[a, b], [c, d]].
 */

#include <fwe/scalar.hpp>
#include <fwe/upoly.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace fwe {

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
   public:
    using Error::Error;
};

template <class S>
class HomPoly {
   public:
    HomPoly() : c_(1, S(0)) {}
    /// Zero polynomial of degree n.
    explicit HomPoly(int n) : c_(static_cast<std::size_t>(check_degree(n)) + 1, S(0)) {}
    explicit HomPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("HomPoly needs at least one coefficient");
    }

    static HomPoly monomial(const S& c, int x_exp, int y_exp) {
        HomPoly p(x_exp + y_exp);
        p.c_[static_cast<std::size_t>(y_exp)] = c;
        return p;
    }
    static HomPoly constant(const S& c) { return HomPoly(std::vector<S>{c}); }
    static HomPoly x() { return monomial(S(1), 1, 0); }
    static HomPoly y() { return monomial(S(1), 0, 1); }
    /// a x + b y.
    static HomPoly linear(const S& a, const S& b) { return HomPoly(std::vector<S>{a, b}); }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const std::vector<S>& coeffs() const noexcept { return c_; }
    /// Coefficient of x^(n-i) y^i.
    const S& coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
    void set_coeff(int i, S v) { c_.at(static_cast<std::size_t>(i)) = std::move(v); }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const S& v) { return v.is_zero(); });
    }

    /// f(1, t) as a polynomial in t = y/x.
    UPoly<S> dehomogenize() const { return UPoly<S>(c_); }

    /// Applies fn to every coefficient.
    template <class Fn>
    auto map(Fn fn) const {
        using T = decltype(fn(c_[0]));
        std::vector<T> out;
        out.reserve(c_.size());
        for (const auto& v : c_) out.push_back(fn(v));
        return HomPoly<T>(std::move(out));
    }

    HomPoly operator-() const {
        HomPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    HomPoly& operator+=(const HomPoly& o) {
        same_degree(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    HomPoly& operator-=(const HomPoly& o) {
        same_degree(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    HomPoly& operator*=(const S& s) {
        for (auto& v : c_) v *= s;
        return *this;
    }

    friend HomPoly operator+(HomPoly a, const HomPoly& b) { return a += b; }
    friend HomPoly operator-(HomPoly a, const HomPoly& b) { return a -= b; }
    friend HomPoly operator*(HomPoly a, const S& s) { return a *= s; }
    friend HomPoly operator*(const S& s, HomPoly a) { return a *= s; }
    friend HomPoly operator*(const HomPoly& a, const HomPoly& b) {
        HomPoly r(a.degree() + b.degree());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    /// Structural equality; polynomials of different degree are never equal.
    friend bool operator==(const HomPoly& a, const HomPoly& b) { return a.c_ == b.c_; }

   private:
    static int check_degree(int n) {
        if (n < 0) throw std::invalid_argument("negative degree");
        return n;
    }
    void same_degree(const HomPoly& o) const {
        if (o.degree() != degree())
            throw std::invalid_argument("adding homogeneous polynomials of degree " + std::to_string(degree()) +
                                        " and " + std::to_string(o.degree()));
    }

    std::vector<S> c_;
};

using RPoly = HomPoly<Rational>;
using QPoly = HomPoly<QuadElem>;

template <class S>
HomPoly<S> pow(const HomPoly<S>& base, int e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    HomPoly<S> out = HomPoly<S>::constant(S(1));
    HomPoly<S> b = base;
    while (e > 0) {
        if (e & 1) out = out * b;
        e >>= 1;
        if (e > 0) b = b * b;
    }
    return out;
}

inline QPoly to_quad(const RPoly& f) {
    return f.map([](const Rational& v) { return QuadElem(v); });
}

/// Drops the sqrt(D) components; throws NotRationalError if any is nonzero.
inline RPoly rationalize(const QPoly& f) {
    return f.map([](const QuadElem& v) { return v.to_rational(); });
}

inline bool is_rational(const QPoly& f) {
    return std::all_of(f.coeffs().begin(), f.coeffs().end(), [](const QuadElem& v) { return v.is_rational(); });
}

// --------------------------------------------------------------------------
// 2x2 matrices

template <class S>
struct Mat2 {
    S a{0}, b{0}, c{0}, d{0};

    static Mat2 identity() { return {S(1), S(0), S(0), S(1)}; }

    S det() const { return a * d - b * c; }
    S trace() const { return a + d; }
    Mat2 transpose() const { return {a, c, b, d}; }
    Mat2 inverse() const {
        S dt = det();
        if (dt.is_zero()) throw std::domain_error("singular matrix");
        S inv = S(1) / dt;
        return {d * inv, -b * inv, -c * inv, a * inv};
    }
    Mat2 scaled(const S& s) const { return {a * s, b * s, c * s, d * s}; }

    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend bool operator==(const Mat2& m, const Mat2& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }

    std::string str() const {
        return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
    }
};

using QMat = Mat2<QuadElem>;

inline QMat to_quad(const Mat2<Rational>& m) { return {m.a, m.b, m.c, m.d}; }

/// sigma_q = (1/sqrt(q)) [[1, q-1], [1, -1]].
inline QMat macwilliams_matrix(const Rational& q) {
    if (q.sign() <= 0 || q == Rational(1)) throw PreconditionError("MacWilliams transform needs q > 0, q != 1");
    QuadElem s = QuadElem(1) / sqrt_rational(q);
    return {s, s * QuadElem(q - Rational(1)), s, -s};
}

/// tau = diag(1, -1).
inline QMat tau_matrix() { return {QuadElem(1), QuadElem(0), QuadElem(0), QuadElem(-1)}; }

// --------------------------------------------------------------------------
// Operations

/// f(ax + by, cx + dy).
template <class S>
HomPoly<S> act_matrix(const HomPoly<S>& f, const Mat2<S>& m) {
    const int n = f.degree();
    const HomPoly<S> l1 = HomPoly<S>::linear(m.a, m.b);
    const HomPoly<S> l2 = HomPoly<S>::linear(m.c, m.d);
    std::vector<HomPoly<S>> p1{HomPoly<S>::constant(S(1))}, p2{HomPoly<S>::constant(S(1))};
    for (int k = 1; k <= n; ++k) {
        p1.push_back(p1.back() * l1);
        p2.push_back(p2.back() * l2);
    }
    HomPoly<S> out(n);
    for (int i = 0; i <= n; ++i) {
        if (f.coeff(i).is_zero()) continue;
        out += (p1[static_cast<std::size_t>(n - i)] * p2[static_cast<std::size_t>(i)]) * f.coeff(i);
    }
    return out;
}

inline QPoly act_matrix(const RPoly& f, const QMat& m) { return act_matrix(to_quad(f), m); }

/// f^{sigma_q} = q^(-n/2) f(x + (q-1)y, x - y). Coefficients are rational
/// whenever q^(n/2) is; see rationalize().
template <class S>
QPoly macwilliams(const HomPoly<S>& f, const Rational& q) {
    if (q.sign() <= 0 || q == Rational(1)) throw PreconditionError("MacWilliams transform needs q > 0, q != 1");
    const int n = f.degree();
    Mat2<S> m{S(1), S(q - Rational(1)), S(1), S(-1)};
    HomPoly<S> g = act_matrix(f, m);
    QuadElem scale = QuadElem(pow(q, -(n / 2)));
    if (n % 2 != 0) scale /= sqrt_rational(q);
    if constexpr (std::is_same_v<S, QuadElem>) {
        return g * scale;
    } else {
        return to_quad(g) * scale;
    }
}

/// Rational-valued transform; throws NotRationalError when sqrt(q) survives.
inline RPoly macwilliams_rational(const RPoly& f, const Rational& q) { return rationalize(macwilliams(f, q)); }

/// p(D) f: x and y in p replaced by d/dx and d/dy.
template <class S>
HomPoly<S> diff_op(const HomPoly<S>& p, const HomPoly<S>& f) {
    const int m = p.degree(), n = f.degree();
    if (m > n) throw PreconditionError("diff_op: operator degree exceeds polynomial degree");
    HomPoly<S> out(n - m);
    // d^a/dx^a d^b/dy^b x^(n-i) y^i = (n-i)_a (i)_b x^(n-i-a) y^(i-b), falling factorials
    for (int j = 0; j <= m; ++j) {
        if (p.coeff(j).is_zero()) continue;
        const int ax = m - j, by = j;
        for (int i = by; i <= n; ++i) {
            if (n - i < ax || f.coeff(i).is_zero()) continue;
            mpz_class ff = 1;
            for (int t = 0; t < ax; ++t) ff *= (n - i - t);
            for (int t = 0; t < by; ++t) ff *= (i - t);
            out.set_coeff(i - by, out.coeff(i - by) + p.coeff(j) * f.coeff(i) * S(Rational(ff)));
        }
    }
    return out;
}

namespace detail {

// Largest k with x^k | f, for f != 0.
template <class S>
int x_multiplicity(const HomPoly<S>& f) {
    return f.degree() - static_cast<int>(f.dehomogenize().degree());
}

template <class S>
HomPoly<S> homogenize(const UPoly<S>& u, int n) {
    HomPoly<S> out(n);
    for (long i = 0; i <= u.degree(); ++i) out.set_coeff(static_cast<int>(i), u.coeff(static_cast<std::size_t>(i)));
    return out;
}

}  // namespace detail

/// g with a * g = f, or nullopt when a does not divide f.
template <class S>
std::optional<HomPoly<S>> divide_exact(const HomPoly<S>& a, const HomPoly<S>& f) {
    if (a.is_zero()) throw PreconditionError("divide_exact: zero divisor");
    if (a.degree() > f.degree()) return std::nullopt;
    if (f.is_zero()) return HomPoly<S>(f.degree() - a.degree());
    if (detail::x_multiplicity(a) > detail::x_multiplicity(f)) return std::nullopt;
    auto [quo, rem] = divmod(f.dehomogenize(), a.dehomogenize());
    if (!rem.is_zero()) return std::nullopt;
    return detail::homogenize(quo, f.degree() - a.degree());
}

/// True when a and b share no non-constant common factor.
template <class S>
bool coprime(const HomPoly<S>& a, const HomPoly<S>& b) {
    if (a.is_zero()) return b.degree() == 0 && !b.is_zero();
    if (b.is_zero()) return a.degree() == 0;
    if (detail::x_multiplicity(a) > 0 && detail::x_multiplicity(b) > 0) return false;
    return gcd(a.dehomogenize(), b.dehomogenize()).degree() == 0;
}

struct WeightProfile {
    std::optional<int> d;       // smallest i >= 1 with A_i != 0
    std::optional<int> d_perp;  // the same for the MacWilliams transform
    int divisibility = 0;       // gcd of the i >= 1 with A_i != 0; 0 if none
    int transform_sign = 0;     // leading coefficient of the transform (+1, -1, or 0 if neither)
};

namespace detail {

template <class S>
std::optional<int> min_weight(const HomPoly<S>& f) {
    for (int i = 1; i <= f.degree(); ++i)
        if (!f.coeff(i).is_zero()) return i;
    return std::nullopt;
}

}  // namespace detail

/// Minimum weight, dual minimum weight and divisibility of x^n + sum A_i x^(n-i) y^i.
template <class S>
WeightProfile weight_profile(const HomPoly<S>& f, const Rational& q) {
    if (f.is_zero()) throw PreconditionError("weight_profile: zero polynomial");
    if (!(f.coeff(0) == S(1))) throw PreconditionError("weight_profile: polynomial is not monic in x^n");
    WeightProfile wp;
    wp.d = detail::min_weight(f);
    int g = 0;
    for (int i = 1; i <= f.degree(); ++i)
        if (!f.coeff(i).is_zero()) g = std::gcd(g, i);
    wp.divisibility = g;
    QPoly t = macwilliams(f, q);
    wp.d_perp = detail::min_weight(t);
    if (t.coeff(0) == QuadElem(1)) wp.transform_sign = 1;
    else if (t.coeff(0) == QuadElem(-1)) wp.transform_sign = -1;
    return wp;
}

/// Rising factorial a (a+1) ... (a+n-1); 1 for n = 0.
inline Rational pochhammer(const Rational& a, int n) {
    if (n < 0) throw PreconditionError("pochhammer: negative length");
    Rational r(1);
    for (int k = 0; k < n; ++k) r *= a + Rational(k);
    return r;
}

}  // namespace fwe
