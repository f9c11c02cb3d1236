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

// Dense univariate polynomials over a field, coefficients stored from the
// constant term upwards with no trailing zeros.

#include <fwe/scalar.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fwe {

template <class S>
class UPoly {
   public:
    UPoly() = default;
    UPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
    UPoly(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

    static UPoly constant(const S& v) { return UPoly(std::vector<S>{v}); }
    static UPoly monomial(const S& v, std::size_t k) {
        std::vector<S> c(k + 1, S(0));
        c[k] = v;
        return UPoly(std::move(c));
    }

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<S>& coeffs() const noexcept { return c_; }
    S coeff(std::size_t i) const { return i < c_.size() ? c_[i] : S(0); }
    const S& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    S operator()(const S& t) const {
        S acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<S> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * S(static_cast<long>(i));
        return UPoly(std::move(d));
    }

    /// Drops every term of degree >= k.
    UPoly truncated(std::size_t k) const {
        if (c_.size() <= k) return *this;
        return UPoly(std::vector<S>(c_.begin(), c_.begin() + static_cast<long>(k)));
    }

    UPoly monic() const {
        if (is_zero()) return {};
        UPoly r = *this;
        S inv = S(1) / leading();
        for (auto& v : r.c_) v *= inv;
        return r;
    }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    UPoly& operator+=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) { return *this += -o; }
    UPoly& operator*=(const S& s) {
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const S& s) { return a *= s; }
    friend UPoly operator*(const S& s, UPoly a) { return a *= s; }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Quotient and remainder of Euclidean division.
    friend std::pair<UPoly, UPoly> divmod(const UPoly& num, const UPoly& den) {
        if (den.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<S> rem = num.c_;
        const std::size_t dn = den.c_.size();
        if (rem.size() < dn) return {UPoly(), num};
        std::vector<S> quo(rem.size() - dn + 1, S(0));
        const S inv = S(1) / den.leading();
        for (std::size_t k = rem.size(); k >= dn; --k) {
            const std::size_t shift = k - dn;  // top index is k - 1
            S f = rem[k - 1] * inv;
            quo[shift] = f;
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < dn; ++j) rem[shift + j] -= f * den.c_[j];
        }
        return {UPoly(std::move(quo)), UPoly(std::move(rem))};
    }

    /// Monic greatest common divisor (zero if both are zero).
    friend UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            auto r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// `terms` power-series coefficients of num/den; den(0) must be nonzero.
    friend std::vector<S> series_quotient(const UPoly& num, const UPoly& den, std::size_t terms) {
        if (den.is_zero() || den.coeff(0).is_zero())
            throw std::domain_error("series_quotient: denominator vanishes at 0");
        std::vector<S> out(terms, S(0));
        const S inv = S(1) / den.coeff(0);
        for (std::size_t k = 0; k < terms; ++k) {
            S acc = num.coeff(k);
            for (std::size_t j = 1; j <= k && j < den.c_.size(); ++j) acc -= den.c_[j] * out[k - j];
            out[k] = acc * inv;
        }
        return out;
    }

    /// Human readable form in the given variable, highest degree first.
    std::string str(const std::string& var = "T") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t k = c_.size(); k-- > 0;) {
            const S& v = c_[k];
            if (v.is_zero()) continue;
            std::string cs = v.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs.erase(0, 1);
            if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
            if (s.empty()) s = neg ? "-" : "";
            else s += neg ? " - " : " + ";
            if (k == 0) s += cs;
            else {
                if (cs != "1") s += cs + "*";
                s += var;
                if (k > 1) s += "^" + std::to_string(k);
            }
        }
        return s;
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<S> c_;
};

}  // namespace fwe
