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
 * Exact scalars.
 *
 *   Rational  - arbitrary precision rational, always in lowest terms with a
 *               positive denominator (backed by GMP's mpq_class).
 *   QuadElem  - a + b*sqrt(D) with a, b rational and D a squarefree positive
 *               integer. Elements with b = 0 are treated as living in every
 *               extension; two irrational elements must share D.
 */

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace fwe {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic between Q(sqrt(D1)) and Q(sqrt(D2)) with D1 != D2.
class IncompatibleFieldError : public Error {
   public:
    using Error::Error;
};

/// A value that was required to be rational carries a sqrt(D) component.
class NotRationalError : public Error {
   public:
    using Error::Error;
};

class ParseError : public Error {
   public:
    using Error::Error;
};

class Rational {
   public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(mpz_class(std::to_string(v))) {}
    Rational(long num, long den) : v_(mpz_class(num), mpz_class(den)) {
        if (den == 0) throw std::domain_error("zero denominator");
        v_.canonicalize();
    }
    Rational(const mpz_class& v) : v_(v) {}
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses `num/den` or `num` (optional leading sign, no spaces).
    static Rational parse(std::string_view text) {
        std::string s(text);
        if (s.empty()) throw ParseError("empty rational");
        auto slash = s.find('/');
        auto is_int = [](const std::string& t) {
            std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
            if (i == t.size()) return false;
            for (; i < t.size(); ++i)
                if (t[i] < '0' || t[i] > '9') return false;
            return true;
        };
        auto strip_plus = [](std::string t) {
            if (!t.empty() && t[0] == '+') t.erase(0, 1);
            return t;
        };
        if (slash == std::string::npos) {
            if (!is_int(s)) throw ParseError("malformed rational '" + s + "'");
            return Rational(mpz_class(strip_plus(s)));
        }
        std::string n = s.substr(0, slash), d = s.substr(slash + 1);
        if (!is_int(n) || !is_int(d) || d[0] == '-' || d[0] == '+')
            throw ParseError("malformed rational '" + s + "'");
        mpz_class den(d);
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rational(mpz_class(strip_plus(n)), den);
    }

    const mpq_class& value() const noexcept { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_integer() const noexcept { return v_.get_den() == 1; }
    int sign() const noexcept { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    /// `num/den`, den omitted when 1.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

   private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(Rational base, long e) {
    if (e < 0) {
        base = base.inverse();
        e = -e;
    }
    Rational out(1);
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

inline mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline mpz_class factorial(long n) {
    if (n < 0) throw std::domain_error("factorial of negative");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

class QuadElem {
   public:
    QuadElem() = default;
    QuadElem(int v) : a_(v) {}
    QuadElem(long v) : a_(v) {}
    QuadElem(const Rational& a) : a_(a) {}
    QuadElem(Rational a, Rational b, std::int64_t radicand) : a_(std::move(a)), b_(std::move(b)), d_(radicand) {
        if (radicand < 1) throw std::domain_error("radicand must be positive");
        if (radicand == 1) {
            a_ += b_;
            b_ = Rational(0);
        }
        normalize();
    }

    const Rational& rational_part() const noexcept { return a_; }
    const Rational& surd_part() const noexcept { return b_; }
    /// D; 1 whenever the value is rational.
    std::int64_t radicand() const noexcept { return d_; }

    bool is_rational() const noexcept { return b_.is_zero(); }
    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }

    Rational to_rational() const {
        if (!is_rational()) throw NotRationalError("value " + str() + " is irrational");
        return a_;
    }

    QuadElem conj() const { return make(a_, -b_, d_); }
    /// a^2 - D b^2.
    Rational norm() const { return a_ * a_ - Rational(static_cast<long>(d_)) * b_ * b_; }

    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0 || sa == sb) return sb;
        // opposite signs: compare a^2 with D b^2
        Rational n = norm();
        return n.sign() > 0 ? sa : (n.sign() < 0 ? sb : 0);
    }

    double to_double() const;

    std::string str() const {
        if (is_rational()) return a_.str();
        std::string s;
        if (!a_.is_zero()) s = a_.str() + (b_.sign() > 0 ? " + " : " - ");
        else if (b_.sign() < 0) s = "-";
        Rational mag = abs(b_);
        if (mag != Rational(1)) s += mag.str() + "*";
        return s + "sqrt(" + std::to_string(d_) + ")";
    }

    QuadElem operator-() const { return make(-a_, -b_, d_); }

    QuadElem& operator+=(const QuadElem& o) {
        std::int64_t d = common(o);
        a_ += o.a_;
        b_ += o.b_;
        d_ = d;
        normalize();
        return *this;
    }
    QuadElem& operator-=(const QuadElem& o) { return *this += -o; }
    QuadElem& operator*=(const QuadElem& o) {
        std::int64_t d = common(o);
        Rational na = a_ * o.a_ + Rational(static_cast<long>(d)) * b_ * o.b_;
        Rational nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
        d_ = d;
        normalize();
        return *this;
    }
    QuadElem& operator/=(const QuadElem& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        common(o);
        Rational n = o.norm();
        *this *= o.conj();
        a_ /= n;
        b_ /= n;
        normalize();
        return *this;
    }

    friend QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
    friend QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
    friend QuadElem operator*(QuadElem a, const QuadElem& b) { return a *= b; }
    friend QuadElem operator/(QuadElem a, const QuadElem& b) { return a /= b; }

    friend bool operator==(const QuadElem& x, const QuadElem& y) {
        if (!x.is_rational() && !y.is_rational() && x.d_ != y.d_)
            throw IncompatibleFieldError("comparing elements of Q(sqrt(" + std::to_string(x.d_) + ")) and Q(sqrt(" +
                                         std::to_string(y.d_) + "))");
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadElem& q) { return os << q.str(); }

   private:
    static QuadElem make(Rational a, Rational b, std::int64_t d) {
        QuadElem q;
        q.a_ = std::move(a);
        q.b_ = std::move(b);
        q.d_ = d;
        q.normalize();
        return q;
    }

    void normalize() {
        if (b_.is_zero()) d_ = 1;
    }

    std::int64_t common(const QuadElem& o) const {
        if (is_rational()) return o.d_;
        if (o.is_rational() || o.d_ == d_) return d_;
        throw IncompatibleFieldError("mixing Q(sqrt(" + std::to_string(d_) + ")) and Q(sqrt(" +
                                     std::to_string(o.d_) + "))");
    }

    Rational a_;
    Rational b_;
    std::int64_t d_ = 1;
};

inline double QuadElem::to_double() const {
    double s = static_cast<double>(d_);
    return a_.to_double() + b_.to_double() * std::sqrt(s);
}

inline QuadElem pow(QuadElem base, long e) {
    if (e < 0) {
        base = QuadElem(1) / base;
        e = -e;
    }
    QuadElem out(1);
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

namespace detail {

// n = s^2 * core with core squarefree.
inline std::pair<mpz_class, mpz_class> square_decompose(mpz_class n) {
    mpz_class s = 1, core = 1;
    for (mpz_class p = 2; p * p <= n; ++p) {
        mpz_class p2 = p * p;
        while (mpz_divisible_p(n.get_mpz_t(), p2.get_mpz_t())) {
            n /= p2;
            s *= p;
        }
        if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            core *= p;
        }
    }
    return {s, core * n};
}

}  // namespace detail

/// Positive square root of q > 0 as an element of Q(sqrt(D)), D squarefree.
/// The radicand is 1 exactly when q is the square of a rational.
inline QuadElem sqrt_rational(const Rational& q) {
    if (q.sign() <= 0) throw std::domain_error("sqrt_rational requires q > 0");
    // sqrt(n/d) = sqrt(n*d)/d
    mpz_class nd = q.num() * q.den();
    auto [s, core] = detail::square_decompose(nd);
    if (!core.fits_slong_p()) throw std::overflow_error("radicand too large");
    Rational coef(s, q.den());
    if (core == 1) return QuadElem(coef);
    return QuadElem(Rational(0), coef, core.get_si());
}

}  // namespace fwe
