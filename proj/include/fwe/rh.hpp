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
 * Numerical Riemann-hypothesis check: all roots of P(T) on |T| = 1/sqrt(q).
 *
 * Roots come from Aberth-Ehrlich iteration in MPFR arithmetic. Every value
 * carries its own precision, so concurrent checks at different precisions do
 * not interfere. The root set is recomputed at doubled precision until two
 * consecutive sets agree to tolerance/10.
 */

#include <fwe/upoly.hpp>
#include <fwe/zeta.hpp>

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fwe {

namespace mp {

/// Owning mpfr_t with value semantics.
class Real {
   public:
    explicit Real(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(mpfr_prec_t prec, double d) : Real(prec) { mpfr_set_d(v_, d, MPFR_RNDN); }
    Real(mpfr_prec_t prec, const Rational& r) : Real(prec) { mpfr_set_q(v_, r.value().get_mpq_t(), MPFR_RNDN); }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    /// Scientific notation with `digits` significant digits.
    std::string str(int digits) const {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

    friend Real operator+(const Real& a, const Real& b) { return op(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return op(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return op(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return op(a, b, mpfr_div); }
    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

    friend Real sqrt(const Real& a) {
        Real r(a.prec());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real abs(const Real& a) {
        Real r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real hypot(const Real& a, const Real& b) { return op(a, b, mpfr_hypot); }
    friend Real atan2(const Real& y, const Real& x) { return op(y, x, mpfr_atan2); }

    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    friend Real cos(const Real& a) {
        Real r(a.prec());
        mpfr_cos(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real sin(const Real& a) {
        Real r(a.prec());
        mpfr_sin(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

   private:
    template <class Fn>
    static Real op(const Real& a, const Real& b, Fn fn) {
        Real r(std::max(a.prec(), b.prec()));
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t p) : re(p), im(p) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real den = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }
    friend Real abs(const Complex& a) { return hypot(a.re, a.im); }
};

}  // namespace mp

struct RHOptions {
    double tolerance = 1e-9;
    unsigned precision_bits = 128;
    unsigned max_precision_bits = 2048;
};

/// Default starting precision; FWE_PRECISION_BITS overrides 128.
inline unsigned default_precision_bits() {
    if (const char* env = std::getenv("FWE_PRECISION_BITS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 32 && v <= 65536) return static_cast<unsigned>(v);
    }
    return 128;
}

struct RHRoot {
    std::string re;
    std::string im;
    double modulus;
};

struct RHReport {
    std::vector<RHRoot> roots;   // sorted by argument, then modulus
    double target_modulus = 0;  // 1/sqrt(q)
    double max_abs_deviation = 0;
    double max_residual = 0;     // max |P(root)| at the final precision
    double tolerance = 0;
    unsigned precision_bits = 0;  // precision of the reported root set
    std::optional<int> fe_sign;   // exact functional-equation pre-check
    bool converged = false;
    bool pass = false;
    std::string failure;  // empty unless converged is false
};

namespace detail {

struct RootRun {
    std::vector<mp::Complex> roots;
    bool converged = false;
};

inline mp::Complex horner(const std::vector<mp::Real>& c, const mp::Complex& z) {
    mp::Complex acc(c.back(), mp::Real(c.back().prec()));
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        acc = acc * z;
        acc.re = acc.re + c[k];
    }
    return acc;
}

// Aberth-Ehrlich iteration, Gauss-Seidel updates, deterministic seeds.
inline RootRun aberth(const UPoly<Rational>& p, const Rational& q, mpfr_prec_t prec) {
    const std::size_t n = static_cast<std::size_t>(p.degree());
    std::vector<mp::Real> c, dc;
    for (const auto& v : p.coeffs()) c.emplace_back(prec, v);
    const UPoly<Rational> dp = p.derivative();
    for (const auto& v : dp.coeffs()) dc.emplace_back(prec, v);
    if (dc.empty()) dc.emplace_back(prec);

    const mp::Real radius = mp::Real(prec, 1) / sqrt(mp::Real(prec, q));
    const mp::Real two_pi = mp::Real::pi(prec) * mp::Real(prec, 2);
    const mp::Real offset(prec, 0.5772156649015329);
    RootRun run;
    for (std::size_t k = 0; k < n; ++k) {
        mp::Real theta = two_pi * mp::Real(prec, static_cast<double>(k)) / mp::Real(prec, static_cast<double>(n)) + offset;
        run.roots.emplace_back(radius * cos(theta), radius * sin(theta));
    }
    // A root is done once its correction is below 2^(8 - prec) relative to
    // |z|, or once |P(z)| is within the Horner rounding bound
    // 2^(4 - prec) (n + 1) sum |c_k| |z|^k; done roots are frozen.
    mp::Real eps(prec, 1);
    mpfr_mul_2si(eps.get(), eps.get(), 8 - static_cast<long>(prec), MPFR_RNDN);
    mp::Real noise(prec, static_cast<double>(n + 1));
    mpfr_mul_2si(noise.get(), noise.get(), 4 - static_cast<long>(prec), MPFR_RNDN);
    std::vector<mp::Real> abs_c;
    for (const auto& v : c) abs_c.push_back(abs(v));
    const mp::Real one(prec, 1);
    std::vector<bool> done(n, false);
    const int max_iter = 200 + 20 * static_cast<int>(n);
    for (int it = 0; it < max_iter; ++it) {
        bool all_done = true;
        for (std::size_t k = 0; k < n; ++k) {
            if (done[k]) continue;
            mp::Complex& z = run.roots[k];
            mp::Complex pz = horner(c, z);
            mp::Real bound = abs_c.back();
            const mp::Real r = abs(z);
            for (std::size_t j = abs_c.size() - 1; j-- > 0;) bound = bound * r + abs_c[j];
            if (!(noise * bound < abs(pz))) {
                done[k] = true;
                continue;
            }
            mp::Complex w = pz / horner(dc, z);
            mp::Complex s(prec);
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) s = s + mp::Complex(one, mp::Real(prec)) / (z - run.roots[j]);
            mp::Complex dz = w / (mp::Complex(one, mp::Real(prec)) - w * s);
            z = z - dz;
            mp::Real scale = abs(z);
            if (scale < one) scale = one;
            if (abs(dz) < eps * scale) done[k] = true;
            else all_done = false;
        }
        if (all_done) {
            run.converged = true;
            break;
        }
    }
    return run;
}

// Largest distance in a greedy nearest-neighbour matching of two root sets.
inline double match_distance(const std::vector<mp::Complex>& a, const std::vector<mp::Complex>& b) {
    std::vector<bool> used(b.size(), false);
    double worst = 0;
    for (const auto& z : a) {
        std::optional<std::size_t> best;
        double bd = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            double d = abs(z - b[j]).to_double();
            if (!best || d < bd) {
                best = j;
                bd = d;
            }
        }
        if (!best) return 1e300;
        used[*best] = true;
        worst = std::max(worst, bd);
    }
    return worst;
}

}  // namespace detail

/// Roots of P and their distance from the circle |T| = 1/sqrt(q).
inline RHReport rh_check(const UPoly<Rational>& p, const Rational& q, const RHOptions& opt = {},
                         std::optional<Rational> genus = std::nullopt) {
    if (p.degree() < 1) throw PreconditionError("rh_check: polynomial degree must be >= 1");
    if (q.sign() <= 0 || q == Rational(1)) throw PreconditionError("rh_check: q must be positive and != 1");
    RHReport rep;
    rep.tolerance = opt.tolerance;
    rep.target_modulus = 1.0 / std::sqrt(q.to_double());
    if (genus) rep.fe_sign = functional_equation_check(p, q, *genus);

    unsigned bits = std::max(32u, opt.precision_bits);
    detail::RootRun prev = detail::aberth(p, q, bits);
    detail::RootRun cur;
    bool stable = false;
    while (bits * 2 <= std::max(opt.max_precision_bits, bits)) {
        bits *= 2;
        cur = detail::aberth(p, q, bits);
        if (prev.converged && cur.converged && detail::match_distance(prev.roots, cur.roots) < opt.tolerance / 10) {
            stable = true;
            break;
        }
        prev = std::move(cur);
    }
    if (!stable) {
        rep.precision_bits = bits;
        rep.failure = "root set not stable up to " + std::to_string(bits) + " bits";
        return rep;
    }
    rep.converged = true;
    rep.precision_bits = bits;

    std::vector<mp::Real> c;
    for (const auto& v : p.coeffs()) c.emplace_back(bits, v);
    const mp::Real target = mp::Real(bits, 1) / sqrt(mp::Real(bits, q));
    std::vector<std::pair<std::pair<double, double>, std::size_t>> order;
    for (std::size_t k = 0; k < cur.roots.size(); ++k) {
        const auto& z = cur.roots[k];
        mp::Real m = abs(z);
        rep.max_abs_deviation = std::max(rep.max_abs_deviation, abs(m - target).to_double());
        rep.max_residual = std::max(rep.max_residual, abs(detail::horner(c, z)).to_double());
        order.push_back({{atan2(z.im, z.re).to_double(), m.to_double()}, k});
    }
    std::sort(order.begin(), order.end());
    const int digits = 30;
    for (const auto& [key, k] : order) {
        const auto& z = cur.roots[k];
        rep.roots.push_back({z.re.str(digits), z.im.str(digits), key.second});
    }
    rep.pass = rep.max_abs_deviation < opt.tolerance;
    return rep;
}

inline RHReport rh_check(const ZetaPoly& z, const RHOptions& opt = {}) { return rh_check(z.P, z.q, opt, z.genus); }

inline nlohmann::json to_json(const RHReport& r) {
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& z : r.roots) roots.push_back({{"re", z.re}, {"im", z.im}});
    nlohmann::json j{{"target_modulus", r.target_modulus},
                     {"max_abs_deviation", r.max_abs_deviation},
                     {"max_residual", r.max_residual},
                     {"tolerance", r.tolerance},
                     {"precision_bits", r.precision_bits},
                     {"converged", r.converged},
                     {"pass", r.pass},
                     {"roots", roots}};
    if (r.fe_sign) j["fe_sign"] = *r.fe_sign;
    if (!r.failure.empty()) j["failure"] = r.failure;
    return j;
}

}  // namespace fwe
