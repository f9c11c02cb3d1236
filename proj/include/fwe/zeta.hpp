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
 * Zeta polynomials of weight enumerators.
 *
 * For W = x^n + sum_{i>=d} A_i x^(n-i) y^i the zeta polynomial P(T), of
 * degree at most n - d, is fixed by
 *
 *   [T^(n-d)]  P(T) / ((1-T)(1-qT)) * (y(1-T) + xT)^n  =  (W - x^n) / (q-1).
 *
 * Two routes compute it: an exact linear solve of that identity, and the
 * expansion of W over MDS enumerators M_{n,d}, M_{n,d+1}, ... whose zeta
 * polynomials are 1.
 */

#include <fwe/homopoly.hpp>
#include <fwe/linalg.hpp>
#include <fwe/upoly.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fwe {

class ZetaError : public Error {
   public:
    using Error::Error;
};

struct ZetaPoly {
    UPoly<Rational> P;
    Rational q;
    int n = 0;
    int d = 0;
    Rational genus;  // n/2 + 1 - d
    int sign = 0;    // functional-equation sign, 0 when it fails

    int degree() const { return static_cast<int>(P.degree()); }
};

/// Checks P(T) = s P(1/(qT)) q^g T^(2g), i.e. p_{2g-i} = s p_i q^(g-i).
/// Returns s, or nullopt when neither sign works or 2g is not a
/// non-negative integer.
inline std::optional<int> functional_equation_check(const UPoly<Rational>& P, const Rational& q,
                                                    const Rational& genus) {
    Rational two_g = genus * Rational(2);
    if (!two_g.is_integer() || two_g.sign() < 0 || P.is_zero()) return std::nullopt;
    const long tg = two_g.num().get_si();
    if (P.degree() > tg) return std::nullopt;
    const QuadElem root_q = sqrt_rational(q);
    for (int s : {1, -1}) {
        bool ok = true;
        for (long i = 0; i <= tg && ok; ++i) {
            // q^(g-i) = sqrt(q)^(2g-2i)
            QuadElem lhs(P.coeff(static_cast<std::size_t>(tg - i)));
            QuadElem rhs = QuadElem(P.coeff(static_cast<std::size_t>(i)) * Rational(s)) * pow(root_q, tg - 2 * i);
            ok = lhs == rhs;
        }
        if (ok) return s;
    }
    return std::nullopt;
}

inline std::optional<int> functional_equation_check(const ZetaPoly& z) {
    return functional_equation_check(z.P, z.q, z.genus);
}

namespace detail {

inline ZetaPoly zeta_shell(const RPoly& w, const Rational& q, const char* who) {
    if (q.sign() <= 0 || q == Rational(1)) throw PreconditionError(std::string(who) + ": q must be positive and != 1");
    WeightProfile wp = weight_profile(w, q);
    if (!wp.d || *wp.d < 2) throw ZetaError(std::string(who) + ": minimum weight d must be >= 2");
    if (!wp.d_perp || *wp.d_perp < 2) throw ZetaError(std::string(who) + ": dual minimum weight must be >= 2");
    ZetaPoly z;
    z.q = q;
    z.n = w.degree();
    z.d = *wp.d;
    z.genus = Rational(z.n, 2) + Rational(1) - Rational(z.d);
    return z;
}

inline void finish(ZetaPoly& z) { z.sign = functional_equation_check(z).value_or(0); }

}  // namespace detail

/// Zeta polynomial from the generating-function identity, solved exactly
/// over all n + 1 monomials; surplus equations must be consistent.
inline ZetaPoly zeta_from_genfunc(const RPoly& w, const Rational& q) {
    ZetaPoly z = detail::zeta_shell(w, q, "zeta_from_genfunc");
    const int n = z.n, r = n - z.d;
    // (y + (x-y) T)^n = sum_j C(n,j) (x-y)^j y^(n-j) T^j
    std::vector<RPoly> terms;
    const RPoly xmy = RPoly::linear(1, -1);
    const RPoly yy = RPoly::y();
    RPoly xp = RPoly::constant(1);
    for (int j = 0; j <= r; ++j) {
        terms.push_back(xp * pow(yy, n - j) * Rational(binomial(n, j)));
        xp = xp * xmy;
    }
    // 1/((1-T)(1-qT)) = sum_k s_k T^k, s_k = (q^(k+1) - 1)/(q - 1)
    std::vector<Rational> s;
    for (int k = 0; k <= r; ++k) s.push_back((pow(q, k + 1) - Rational(1)) / (q - Rational(1)));
    // p_i multiplies [T^(r-i)] of the product.
    Matrix<Rational> a(static_cast<std::size_t>(n + 1), std::vector<Rational>(static_cast<std::size_t>(r + 1)));
    for (int i = 0; i <= r; ++i) {
        const int m = r - i;
        for (int j = 0; j <= m; ++j) {
            const Rational& sk = s[static_cast<std::size_t>(m - j)];
            const RPoly& t = terms[static_cast<std::size_t>(j)];
            for (int e = 0; e <= n; ++e)
                if (!t.coeff(e).is_zero())
                    a[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)] += t.coeff(e) * sk;
        }
    }
    std::vector<Rational> rhs(static_cast<std::size_t>(n + 1));
    const Rational inv = (q - Rational(1)).inverse();
    for (int e = 1; e <= n; ++e) rhs[static_cast<std::size_t>(e)] = w.coeff(e) * inv;
    auto sol = solve_linear(std::move(a), std::move(rhs));
    if (!sol.consistent) throw ZetaError("zeta_from_genfunc: inconsistent system (input is not of enumerator form)");
    if (!sol.unique()) throw ZetaError("zeta_from_genfunc: zeta polynomial is not unique");
    z.P = UPoly<Rational>(sol.particular);
    detail::finish(z);
    return z;
}

struct MDSEnumerator {
    int n;
    int d;
    Rational q;
    RPoly poly;
};

/// M_{n,d}: A_w = C(n,w) sum_{j=0}^{w-d} (-1)^j C(w,j) (q^(w-d+1-j) - 1) for w >= d.
inline MDSEnumerator mds_enumerator(int n, int d, const Rational& q) {
    if (d < 2 || d > n) throw PreconditionError("mds_enumerator: need 2 <= d <= n");
    if (q.sign() <= 0 || q == Rational(1)) throw PreconditionError("mds_enumerator: q must be positive and != 1");
    RPoly m(n);
    m.set_coeff(0, 1);
    for (int w = d; w <= n; ++w) {
        Rational acc(0);
        for (int j = 0; j <= w - d; ++j) {
            Rational t = Rational(binomial(w, j)) * (pow(q, w - d + 1 - j) - Rational(1));
            acc += j % 2 == 0 ? t : -t;
        }
        m.set_coeff(w, Rational(binomial(n, w)) * acc);
    }
    return {n, d, q, std::move(m)};
}

/// Zeta polynomial from W = sum a_i M_{n,d+i}, solved top-down in the
/// minimum weight; P = sum a_i T^i.
inline ZetaPoly zeta_from_mds(const RPoly& w, const Rational& q) {
    ZetaPoly z = detail::zeta_shell(w, q, "zeta_from_mds");
    const int n = z.n;
    RPoly rest = w;
    std::vector<Rational> a;
    for (int k = z.d; k <= n; ++k) {
        RPoly m = mds_enumerator(n, k, q).poly;
        Rational c = rest.coeff(k) / m.coeff(k);
        a.push_back(c);
        if (!c.is_zero()) rest -= m * c;
    }
    if (!rest.is_zero()) throw ZetaError("zeta_from_mds: residual after MDS expansion is " + rest.coeff(0).str() + " at x^n");
    z.P = UPoly<Rational>(a);
    detail::finish(z);
    return z;
}

inline nlohmann::json to_json(const ZetaPoly& z) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : z.P.coeffs()) coeffs.push_back(c.str());
    return {{"q", z.q.str()}, {"n", z.n}, {"d", z.d}, {"genus", z.genus.str()}, {"sign", z.sign}, {"coeffs", coeffs}};
}

}  // namespace fwe
