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
 * Families of divisible formal weight enumerators.
 *
 *   type1    q = 2,   C[W_{2,2}, phi4],        phi4 to an odd power
 *   type4    q = 4,   C[W_{2,4}, phi3],        phi3 to an odd power
 *   q43      q = 4/3, C[W_{2,4/3}, phi6^2],    invariant (sign +1) members
 *   q43-odd  q = 4/3, C[W_{2,4/3}, phi6],      phi6 to an odd power
 *   ozeki    q = 2,   C[W_H8, W12],            W12 to an odd power, c = 4
 *
 * Every family is spanned by products even_gen^l * odd_gen^m; the parity of
 * m decides the sign of the product under the MacWilliams transform.
 */

#include <fwe/homopoly.hpp>
#include <fwe/linalg.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fwe {

enum class Family { TypeI, TypeIV, Q43Even, Q43Odd, Ozeki };
enum class Parity { Odd, Even, Any };

inline std::vector<Family> all_families() {
    return {Family::TypeI, Family::TypeIV, Family::Q43Even, Family::Q43Odd, Family::Ozeki};
}

inline std::string family_id(Family f) {
    switch (f) {
        case Family::TypeI: return "type1";
        case Family::TypeIV: return "type4";
        case Family::Q43Even: return "q43";
        case Family::Q43Odd: return "q43-odd";
        case Family::Ozeki: return "ozeki";
    }
    return {};
}

inline Family parse_family(std::string_view id) {
    for (auto f : all_families())
        if (family_id(f) == id) return f;
    throw ParseError("unknown family '" + std::string(id) + "' (expected type1, type4, q43, q43-odd or ozeki)");
}

// --------------------------------------------------------------------------
// Generators

enum class Generator { Phi4, Phi3, Phi6, W2, WH8, W12, W12Prime };

inline Generator parse_generator(std::string_view name) {
    if (name == "phi4") return Generator::Phi4;
    if (name == "phi3") return Generator::Phi3;
    if (name == "phi6") return Generator::Phi6;
    if (name == "w2") return Generator::W2;
    if (name == "wh8") return Generator::WH8;
    if (name == "w12") return Generator::W12;
    if (name == "w12p") return Generator::W12Prime;
    throw ParseError("unknown generator '" + std::string(name) + "' (expected phi4, phi3, phi6, w2, wh8, w12, w12p)");
}

namespace detail {

inline RPoly poly_from(std::initializer_list<Rational> c) { return RPoly(std::vector<Rational>(c)); }

}  // namespace detail

/// W_{2,q} = x^2 + (q-1) y^2.
inline RPoly w2(const Rational& q) { return detail::poly_from({1, 0, q - Rational(1)}); }

/// The named generator; `q` is used only by W2.
inline RPoly generator(Generator g, const Rational& q = Rational(2)) {
    using detail::poly_from;
    switch (g) {
        case Generator::Phi4: return poly_from({1, 0, -6, 0, 1});
        case Generator::Phi3: return poly_from({1, 0, -9, 0});
        case Generator::Phi6: return poly_from({1, 0, -5, 0, Rational(5, 3), 0, Rational(-1, 27)});
        case Generator::W2: return w2(q);
        case Generator::WH8: return poly_from({1, 0, 0, 0, 14, 0, 0, 0, 1});
        case Generator::W12: return poly_from({1, 0, 0, 0, -33, 0, 0, 0, -33, 0, 0, 0, 1});
        case Generator::W12Prime: {
            // x^2 y^2 (x^2 - y^2)^2 (9x^2 - y^2)^2 / 81 = (W_{2,4/3}^6 - phi6^2) / 12
            RPoly xy = RPoly::monomial(1, 1, 1);
            RPoly a = poly_from({1, 0, -1});
            RPoly b = poly_from({9, 0, -1});
            return xy * xy * a * a * b * b * Rational(1, 81);
        }
    }
    throw ParseError("unknown generator");
}

// --------------------------------------------------------------------------
// Family specs

struct FamilySpec {
    Family name;
    Rational q;
    int c;            // divisibility
    RPoly even_gen;   // invariant under sigma_q
    RPoly odd_gen;    // anti-invariant under sigma_q
    Parity parity;    // required parity of the odd_gen exponent
    int sign;         // sign of every member under sigma_q
};

class FamilyError : public Error {
   public:
    using Error::Error;
};

namespace detail {

inline FamilySpec make_family(Family f) {
    FamilySpec s{f, Rational(2), 2, RPoly(), RPoly(), Parity::Odd, -1};
    switch (f) {
        case Family::TypeI:
            s.q = 2;
            s.even_gen = w2(2);
            s.odd_gen = generator(Generator::Phi4);
            break;
        case Family::TypeIV:
            s.q = 4;
            s.even_gen = w2(4);
            s.odd_gen = generator(Generator::Phi3);
            break;
        case Family::Q43Even:
        case Family::Q43Odd:
            s.q = Rational(4, 3);
            s.even_gen = w2(Rational(4, 3));
            s.odd_gen = generator(Generator::Phi6);
            if (f == Family::Q43Even) {
                s.parity = Parity::Even;
                s.sign = 1;
            }
            break;
        case Family::Ozeki:
            s.q = 2;
            s.c = 4;
            s.even_gen = generator(Generator::WH8);
            s.odd_gen = generator(Generator::W12);
            break;
    }
    if (macwilliams(s.even_gen, s.q) != to_quad(s.even_gen))
        throw FamilyError(family_id(f) + ": even generator is not invariant");
    if (macwilliams(s.odd_gen, s.q) != to_quad(-s.odd_gen))
        throw FamilyError(family_id(f) + ": odd generator is not anti-invariant");
    return s;
}

}  // namespace detail

inline const FamilySpec& family_spec(Family f) {
    static const FamilySpec specs[] = {detail::make_family(Family::TypeI), detail::make_family(Family::TypeIV),
                                       detail::make_family(Family::Q43Even), detail::make_family(Family::Q43Odd),
                                       detail::make_family(Family::Ozeki)};
    return specs[static_cast<int>(f)];
}

// --------------------------------------------------------------------------
// Graded bases

struct BasisElement {
    int l;  // exponent of even_gen
    int m;  // exponent of odd_gen
    RPoly poly;
};

/// even_gen^l * odd_gen^m of total degree n, ordered by increasing m.
inline std::vector<BasisElement> basis(const FamilySpec& fam, int n, Parity parity) {
    if (n < 0) throw PreconditionError("basis: negative degree");
    const int de = fam.even_gen.degree(), dodd = fam.odd_gen.degree();
    std::vector<std::pair<int, int>> exps;
    for (int m = 0; m * dodd <= n; ++m) {
        if (parity == Parity::Odd && m % 2 == 0) continue;
        if (parity == Parity::Even && m % 2 != 0) continue;
        int rest = n - m * dodd;
        if (rest % de != 0) continue;
        exps.emplace_back(rest / de, m);
    }
    std::vector<BasisElement> out;
    if (exps.empty()) return out;
    int max_l = 0, max_m = 0;
    for (auto [l, m] : exps) {
        max_l = std::max(max_l, l);
        max_m = std::max(max_m, m);
    }
    std::vector<RPoly> pe{RPoly::constant(1)}, po{RPoly::constant(1)};
    for (int k = 1; k <= max_l; ++k) pe.push_back(pe.back() * fam.even_gen);
    for (int k = 1; k <= max_m; ++k) po.push_back(po.back() * fam.odd_gen);
    for (auto [l, m] : exps)
        out.push_back({l, m, pe[static_cast<std::size_t>(l)] * po[static_cast<std::size_t>(m)]});
    return out;
}

inline std::vector<BasisElement> basis(const FamilySpec& fam, int n) {
    if (n < 1) throw PreconditionError("basis: degree must be >= 1");
    return basis(fam, n, fam.parity);
}

/// Coordinates of f over basis(fam, deg f), or nullopt when f lies outside the span.
inline std::optional<std::vector<Rational>> expand_in_generators(const RPoly& f, const FamilySpec& fam) {
    auto b = basis(fam, f.degree());
    if (b.empty()) throw PreconditionError("expand_in_generators: empty basis in degree " + std::to_string(f.degree()));
    const int n = f.degree();
    Matrix<Rational> a(static_cast<std::size_t>(n + 1), std::vector<Rational>(b.size()));
    std::vector<Rational> rhs(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) a[static_cast<std::size_t>(i)][j] = b[j].poly.coeff(i);
        rhs[static_cast<std::size_t>(i)] = f.coeff(i);
    }
    auto sol = solve_linear(std::move(a), std::move(rhs));
    if (!sol.consistent) return std::nullopt;
    if (!sol.unique()) throw FamilyError("expand_in_generators: basis is linearly dependent");
    return sol.particular;
}

// --------------------------------------------------------------------------
// Bounds

struct BoundResult {
    int d_max;
    bool proven;  // false only for q43-odd degrees n != 6 (mod 12)
};

namespace detail {

inline int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace detail

inline BoundResult bound(const FamilySpec& fam, int n) {
    using detail::floor_div;
    if (basis(fam, n).empty())
        throw PreconditionError("bound: no " + family_id(fam.name) + " member of degree " + std::to_string(n));
    switch (fam.name) {
        case Family::TypeI: return {2 * floor_div(n - 4, 8) + 2, true};
        case Family::TypeIV: return {2 * floor_div(n - 3, 6) + 2, true};
        case Family::Q43Even: return {2 * floor_div(n, 12) + 2, true};
        case Family::Q43Odd: return {2 * floor_div(n - 6, 12) + 2, n % 12 == 6};
        case Family::Ozeki: return {4 * floor_div(n - 12, 24) + 4, true};
    }
    return {0, false};
}

/// Bounds for weight enumerators of Type I / Type IV self-dual codes.
inline int classical_bound_type1(int n) { return 2 * detail::floor_div(n, 8) + 2; }
inline int classical_bound_type4(int n) { return 2 * detail::floor_div(n, 6) + 2; }

// --------------------------------------------------------------------------
// Extremal enumerators

/// The extremal construction hit a degenerate system; this contradicts the
/// bound or its uniqueness claim.
class ExtremalError : public Error {
   public:
    using Error::Error;
};

struct ExtremalSolution {
    RPoly poly;
    std::vector<Rational> coords;  // over basis(fam, n)
    BoundResult bound;
};

/// Unique monic member with A_i = 0 for 0 < i < bound; checks A_bound != 0.
inline ExtremalSolution extremal_solution(const FamilySpec& fam, int n) {
    auto b = basis(fam, n);
    if (b.empty()) throw PreconditionError("extremal: empty basis in degree " + std::to_string(n));
    BoundResult bd = bound(fam, n);
    const std::size_t k = b.size();
    Matrix<Rational> a;
    std::vector<Rational> rhs;
    for (int i = 0; i < bd.d_max && i <= n; ++i) {
        std::vector<Rational> row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = b[j].poly.coeff(i);
        a.push_back(std::move(row));
        rhs.push_back(i == 0 ? Rational(1) : Rational(0));
    }
    auto sol = solve_linear(std::move(a), std::move(rhs));
    const std::string where = family_id(fam.name) + " n=" + std::to_string(n);
    if (!sol.consistent) throw ExtremalError(where + ": no monic member with d >= " + std::to_string(bd.d_max));
    if (!sol.unique())
        throw ExtremalError(where + ": solution space has dimension " + std::to_string(sol.nullspace.size() + 1));
    RPoly w(n);
    for (std::size_t j = 0; j < k; ++j) w += b[j].poly * sol.particular[j];
    if (bd.d_max > n || w.coeff(bd.d_max).is_zero())
        throw ExtremalError(where + ": A_" + std::to_string(bd.d_max) + " vanishes, bound not attained");
    return {std::move(w), std::move(sol.particular), bd};
}

inline RPoly extremal(const FamilySpec& fam, int n) { return extremal_solution(fam, n).poly; }

// --------------------------------------------------------------------------
// Membership predicates

struct EnumeratorCheck {
    bool ok = false;            // sign and divisibility as required
    int transform_sign = 0;     // +1 / -1 if f^{sigma_q} = +-f, else 0
    bool divisible = false;
    bool genus_nonnegative = false;  // d <= n/2 + 1
    WeightProfile profile;
};

/// Checks f^{sigma_q} = sign * f and divisibility by c for a monic f.
inline EnumeratorCheck check_enumerator(const RPoly& f, const Rational& q, int c, int sign) {
    EnumeratorCheck out;
    out.profile = weight_profile(f, q);
    QPoly t = macwilliams(f, q);
    QPoly qf = to_quad(f);
    if (t == qf) out.transform_sign = 1;
    else if (t == -qf) out.transform_sign = -1;
    out.divisible = out.profile.divisibility == 0 || out.profile.divisibility % c == 0;
    out.genus_nonnegative = !out.profile.d || 2 * *out.profile.d <= f.degree() + 2;
    out.ok = out.transform_sign == sign && out.divisible;
    return out;
}

/// Formal weight enumerator test: f^{sigma_q} = -f and c | i whenever A_i != 0.
inline EnumeratorCheck is_fwe(const RPoly& f, const Rational& q, int c) { return check_enumerator(f, q, c, -1); }

// --------------------------------------------------------------------------
// Burmann-Lagrange coefficient for the q = 4/3 families

namespace detail {

// Coefficients of (1 - r x)^(-k) up to x^order, as a k-fold product of
// truncated geometric series.
inline std::vector<Rational> inverse_binomial_series(const Rational& r, int k, int order) {
    const std::size_t len = static_cast<std::size_t>(order) + 1;
    std::vector<Rational> geom(len);
    Rational p(1);
    for (auto& v : geom) {
        v = p;
        p *= r;
    }
    std::vector<Rational> acc(len, Rational(0));
    acc[0] = 1;
    for (int t = 0; t < k; ++t) {
        std::vector<Rational> next(len, Rational(0));
        for (std::size_t i = 0; i < len; ++i) {
            if (acc[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < len; ++j) next[i + j] += acc[i] * geom[j];
        }
        acc = std::move(next);
    }
    return acc;
}

inline std::vector<Rational> series_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> r(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < r.size() && j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Taylor coefficients of (x - 1)^(-k) (x - 9)^(-k) up to x^order.
inline std::vector<Rational> f_mu_series(int k, int order) {
    auto s1 = inverse_binomial_series(Rational(1), k, order);
    auto s9 = inverse_binomial_series(Rational(1, 9), k, order);
    // (x - 1)^(-k) = (-1)^k (1 - x)^(-k);  (x - 9)^(-k) = (-9)^(-k) (1 - x/9)^(-k)
    Rational scale = pow(Rational(-1), k) * pow(Rational(-9), -k);
    auto out = series_mul(s1, s9);
    for (auto& v : out) v *= scale;
    return out;
}

}  // namespace detail

/// A_{2mu+2}, the first coefficient that survives cancellation.
///
/// q43 (degree 2(6mu+nu), 0 <= nu <= 5):
///   9^(2mu+2) (6mu+nu) / (3 (mu+1)!) * d^mu/dx^mu [(1+x/3)^(5-nu) F_mu(x)] at 0
/// q43-odd (degree 12mu+6, mu >= 2):
///   -9^(2mu+2) (2mu+1) / (mu+1)! * d^mu/dx^mu [(5 - 10x/3 + x^2/9) F_mu(x)] at 0
/// with F_mu(x) = (x-1)^(-2mu-2) (x-9)^(-2mu-2). Positive for q43, negative
/// for q43-odd; a violated sign throws.
inline Rational burmann_coefficient(Family fam, int mu, int nu = 0) {
    const int k = 2 * mu + 2;
    if (fam == Family::Q43Even) {
        if (mu < 0 || nu < 0 || nu > 5 || (mu == 0 && nu == 0))
            throw PreconditionError("burmann_coefficient(q43): need mu >= 0, 0 <= nu <= 5, (mu, nu) != (0, 0)");
        std::vector<Rational> lin(static_cast<std::size_t>(mu) + 1, Rational(0));
        lin[0] = 1;
        if (mu >= 1) lin[1] = Rational(1, 3);
        std::vector<Rational> h = detail::f_mu_series(k, mu);
        for (int t = 0; t < 5 - nu; ++t) h = detail::series_mul(h, lin);
        Rational deriv = h[static_cast<std::size_t>(mu)] * Rational(factorial(mu));
        Rational a = pow(Rational(9), k) * Rational(6 * mu + nu) / (Rational(3) * Rational(factorial(mu + 1))) * deriv;
        if (a.sign() <= 0) throw std::logic_error("burmann_coefficient(q43): expected a positive coefficient");
        return a;
    }
    if (fam == Family::Q43Odd) {
        if (mu < 2) throw PreconditionError("burmann_coefficient(q43-odd): need mu >= 2");
        std::vector<Rational> quad(static_cast<std::size_t>(mu) + 1, Rational(0));
        quad[0] = 5;
        quad[1] = Rational(-10, 3);
        quad[2] = Rational(1, 9);
        std::vector<Rational> g = detail::series_mul(detail::f_mu_series(k, mu), quad);
        Rational deriv = g[static_cast<std::size_t>(mu)] * Rational(factorial(mu));
        Rational a = -pow(Rational(9), k) * Rational(2 * mu + 1) / Rational(factorial(mu + 1)) * deriv;
        if (a.sign() >= 0) throw std::logic_error("burmann_coefficient(q43-odd): expected a negative coefficient");
        return a;
    }
    throw PreconditionError("burmann_coefficient: only defined for q43 and q43-odd");
}

}  // namespace fwe
