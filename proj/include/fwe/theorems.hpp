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

// Exact verifiers for identities satisfied by invariant differential
// operators acting on (formal) weight enumerators.

#include <fwe/families.hpp>
#include <fwe/zeta.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace fwe {

// --------------------------------------------------------------------------
// Star operator W* = p(D) W / (n (n-1))

inline RPoly star_operator_poly(Family fam) {
    switch (fam) {
        case Family::TypeI: return RPoly(std::vector<Rational>{1, 0, 1});
        case Family::TypeIV: return RPoly(std::vector<Rational>{1, 0, Rational(1, 3)});
        case Family::Q43Even:
        case Family::Q43Odd: return RPoly(std::vector<Rational>{1, 0, 3});
        case Family::Ozeki: break;
    }
    throw PreconditionError("star operator: not defined for " + family_id(fam));
}

/// zeta(W*) / zeta(W); for q43-odd this is only conjectured.
inline UPoly<Rational> star_zeta_factor(Family fam) {
    switch (fam) {
        case Family::TypeI: return UPoly<Rational>{1, -2, 2};
        case Family::TypeIV: return UPoly<Rational>{Rational(1, 3), Rational(-2, 3), Rational(4, 3)};
        case Family::Q43Even:
        case Family::Q43Odd: return UPoly<Rational>{3, -6, 4};
        case Family::Ozeki: break;
    }
    throw PreconditionError("star operator: not defined for " + family_id(fam));
}

/// 8k+4 (type1), 6k+3 (type4), 12k (q43), 12k+6 (q43-odd), k >= 1.
inline bool star_admissible(Family fam, int n) {
    switch (fam) {
        case Family::TypeI: return n >= 12 && n % 8 == 4;
        case Family::TypeIV: return n >= 9 && n % 6 == 3;
        case Family::Q43Even: return n >= 12 && n % 12 == 0;
        case Family::Q43Odd: return n >= 18 && n % 12 == 6;
        case Family::Ozeki: return false;
    }
    return false;
}

inline RPoly star_operator(const RPoly& w, Family fam) {
    const int n = w.degree();
    if (!star_admissible(fam, n))
        throw PreconditionError("star operator: degree " + std::to_string(n) + " is not admissible for " +
                                family_id(fam));
    return diff_op(star_operator_poly(fam), w) * Rational(1, static_cast<long>(n) * (n - 1));
}

struct StarCheck {
    int n = 0;
    RPoly star;
    bool is_extremal = false;   // W* equals the extremal member of degree n-2
    bool zeta_relation = false;  // zeta(W*) = factor * zeta(W)
    ZetaPoly zeta;
    ZetaPoly zeta_star;
};

inline StarCheck verify_star(Family fam, int n) {
    const FamilySpec& spec = family_spec(fam);
    StarCheck out;
    out.n = n;
    RPoly w = extremal(spec, n);
    out.star = star_operator(w, fam);
    try {
        out.is_extremal = extremal(spec, n - 2) == out.star;
    } catch (const ExtremalError&) {
        out.is_extremal = false;
    }
    out.zeta = zeta_from_genfunc(w, spec.q);
    out.zeta_star = zeta_from_genfunc(out.star, spec.q);
    out.zeta_relation = out.zeta_star.P == star_zeta_factor(fam) * out.zeta.P;
    return out;
}

// --------------------------------------------------------------------------
// Divisibility of p(D) W for type1 / type4 enumerators with d >= 4

namespace detail {

inline void require_type14(Family fam, const char* who) {
    if (fam != Family::TypeI && fam != Family::TypeIV)
        throw PreconditionError(std::string(who) + ": only type1 and type4 are supported");
}

}  // namespace detail

/// xy^3 - x^3y (type1) or y^3 - 9x^2y (type4).
inline RPoly divisibility_operator(Family fam) {
    detail::require_type14(fam, "divisibility_operator");
    if (fam == Family::TypeI) return RPoly(std::vector<Rational>{0, -1, 0, 1, 0});
    return RPoly(std::vector<Rational>{0, -9, 0, 1});
}

/// x^3y - xy^3 (type1) or x^2y - y^3 (type4).
inline RPoly divisibility_base(Family fam) {
    detail::require_type14(fam, "divisibility_base");
    if (fam == Family::TypeI) return RPoly(std::vector<Rational>{0, 1, 0, -1, 0});
    return RPoly(std::vector<Rational>{0, 1, 0, -1});
}

struct DivisibilityResult {
    int d = 0;
    RPoly a;                       // base^(d-3)
    RPoly image;                   // p(D) W
    std::optional<RPoly> cofactor;  // image / a
    std::optional<RPoly> reduced;   // cofactor / odd generator
    bool holds() const { return cofactor.has_value() && reduced.has_value(); }
};

/// base^(d-3) | p(D) W, and the cofactor is divisible by phi4 (phi3).
inline DivisibilityResult verify_divisibility_prop(const RPoly& w, Family fam) {
    detail::require_type14(fam, "verify_divisibility_prop");
    const FamilySpec& spec = family_spec(fam);
    WeightProfile wp = weight_profile(w, spec.q);
    if (!wp.d || *wp.d < 4) throw PreconditionError("verify_divisibility_prop: need d >= 4");
    DivisibilityResult out;
    out.d = *wp.d;
    out.a = pow(divisibility_base(fam), out.d - 3);
    out.image = diff_op(divisibility_operator(fam), w);
    out.cofactor = divide_exact(out.a, out.image);
    if (out.cofactor) out.reduced = divide_exact(spec.odd_gen, *out.cofactor);
    return out;
}

namespace detail {

// v with n = 4(d-1) + 2v (type1) or 3(d-1) + 2v (type4).
inline std::optional<int> extremal_v(Family fam, int n, int d) {
    const int rest = n - (fam == Family::TypeI ? 4 : 3) * (d - 1);
    const int vmax = fam == Family::TypeI ? 3 : 2;
    if (rest < 0 || rest % 2 != 0 || rest / 2 > vmax) return std::nullopt;
    return rest / 2;
}

}  // namespace detail

/// type1: (xy^3 - x^3y)(D) W = (d-2)_3 (n-d) A_d (x^3y - xy^3)^(d-3) (x^2+y^2)^v phi4
/// type4: (y^3 - 9x^2y)(D) W = (d-2)_3 A_d (x^2y - y^3)^(d-3) (x^2+3y^2)^v phi3
inline bool verify_extremal_diff_identity(const RPoly& w, Family fam) {
    detail::require_type14(fam, "verify_extremal_diff_identity");
    const FamilySpec& spec = family_spec(fam);
    const int n = w.degree();
    WeightProfile wp = weight_profile(w, spec.q);
    if (!wp.d || *wp.d < 4) throw PreconditionError("verify_extremal_diff_identity: need d >= 4");
    const int d = *wp.d;
    auto v = detail::extremal_v(fam, n, d);
    if (!v) throw PreconditionError("verify_extremal_diff_identity: (n, d) is not extremal");
    Rational c = pochhammer(Rational(d - 2), 3) * w.coeff(d);
    if (fam == Family::TypeI) c *= Rational(n - d);
    RPoly quad = fam == Family::TypeI ? w2(2) : RPoly(std::vector<Rational>{1, 0, 3});
    RPoly rhs = pow(divisibility_base(fam), d - 3) * pow(quad, *v) * spec.odd_gen * c;
    return diff_op(divisibility_operator(fam), w) == rhs;
}

/// Binomial-sum identity between the zeta coefficients of an extremal
/// enumerator with d = m + 2 (m >= 2 even) and a product of invariants.
inline bool verify_zeta_binomial_identity(const RPoly& w, Family fam) {
    detail::require_type14(fam, "verify_zeta_binomial_identity");
    const FamilySpec& spec = family_spec(fam);
    const int n = w.degree();
    ZetaPoly z = zeta_from_genfunc(w, spec.q);
    const int d = z.d, m = d - 2;
    if (m < 2 || m % 2 != 0) throw PreconditionError("verify_zeta_binomial_identity: need d - 2 >= 2 even");
    auto v = detail::extremal_v(fam, n, d);
    if (!v) throw PreconditionError("verify_zeta_binomial_identity: (n, d) is not extremal");
    const RPoly xmy = RPoly::linear(1, -1);
    const RPoly y = RPoly::y();
    const RPoly x2my2 = RPoly(std::vector<Rational>{1, 0, -1});
    const Rational ad = w.coeff(d);
    if (fam == Family::TypeI) {
        RPoly lhs(n - 4);
        for (int i = 0; i <= 2 * m + 2 * *v + 2; ++i) {
            Rational p = z.P.coeff(static_cast<std::size_t>(i));
            if (p.is_zero()) continue;
            lhs += pow(xmy, 3 * m + 2 * *v + 1 - i) * pow(y, m - 1 + i) *
                   (p * Rational(binomial(4 * m + 2 * *v, m - 1 + i)));
        }
        Rational c = pochhammer(Rational(d - 2), 3) * Rational(n - d) * ad / pochhammer(Rational(n - 3), 4);
        RPoly rhs = pow(RPoly::monomial(1, 1, 1), m - 1) * pow(x2my2, m - 1) * pow(w2(2), *v) * spec.odd_gen * c;
        return lhs == rhs;
    }
    UPoly<Rational> qpoly = z.P * UPoly<Rational>{1, 2};
    RPoly lhs(n - 3);
    for (int i = 0; i <= m + 2 * *v + 2; ++i) {
        Rational qi = qpoly.coeff(static_cast<std::size_t>(i));
        if (qi.is_zero()) continue;
        lhs += pow(xmy, 2 * m + 2 * *v + 1 - i) * pow(y, m - 1 + i) *
               (qi * Rational(binomial(3 * m + 2 * *v, m - 1 + i)));
    }
    Rational c = pochhammer(Rational(d - 2), 3) * ad / (Rational(3) * pochhammer(Rational(n - 2), 3));
    RPoly rhs = pow(y, m - 1) * pow(x2my2, m - 1) * pow(RPoly(std::vector<Rational>{1, 0, 3}), *v) * spec.odd_gen * c;
    return lhs == rhs;
}

// --------------------------------------------------------------------------
// Transformation rules for p(D) A under a linear substitution sigma

/// c with g = c f, or nullopt (f must be nonzero).
inline std::optional<QuadElem> eigen_ratio(const QPoly& f, const QPoly& g) {
    if (f.degree() != g.degree() || f.is_zero()) return std::nullopt;
    std::optional<QuadElem> c;
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i).is_zero()) continue;
        c = g.coeff(i) / f.coeff(i);
        break;
    }
    if (!c || c->is_zero() || !(f * *c == g)) return std::nullopt;
    return c;
}

struct DuursmaOkudaInput {
    QPoly p;
    QPoly A;
    std::optional<QPoly> a;  // needed for parts (ii) and (iii)
    QMat sigma;
    QuadElem c1{1};
    QuadElem c2{1};
    std::optional<QuadElem> c3;  // needed for part (iii)
};

struct DuursmaOkudaResult {
    bool preconditions = false;  // p^{t sigma} = c1 p and A^sigma = c2 A
    std::string precondition_failure;
    bool part_i = false;
    std::optional<bool> part_ii;   // set when a | p(D) A
    std::optional<bool> part_iii;  // set when additionally a^sigma = c3 a

    bool holds() const {
        return preconditions && part_i && part_ii.value_or(true) && part_iii.value_or(true);
    }
};

inline DuursmaOkudaResult verify_duursma_okuda(const DuursmaOkudaInput& in) {
    DuursmaOkudaResult out;
    if (in.c1.is_zero() || in.c2.is_zero()) {
        out.precondition_failure = "c1 and c2 must be nonzero";
        return out;
    }
    if (!(act_matrix(in.p, in.sigma.transpose()) == in.p * in.c1)) {
        out.precondition_failure = "p^{t sigma} != c1 p";
        return out;
    }
    if (!(act_matrix(in.A, in.sigma) == in.A * in.c2)) {
        out.precondition_failure = "A^sigma != c2 A";
        return out;
    }
    out.preconditions = true;
    const QPoly image = diff_op(in.p, in.A);
    const QuadElem ratio = in.c2 / in.c1;
    out.part_i = act_matrix(image, in.sigma) == image * ratio;
    if (!in.a) return out;
    auto cof = divide_exact(*in.a, image);
    if (!cof) {
        out.precondition_failure = "a does not divide p(D) A";
        return out;
    }
    const QPoly as = act_matrix(*in.a, in.sigma);
    bool ii = divide_exact(as, image).has_value();
    if (ii && coprime(*in.a, as)) ii = divide_exact(*in.a * as, image).has_value();
    out.part_ii = ii;
    if (!in.c3) return out;
    if (in.c3->is_zero() || !(as == *in.a * *in.c3)) {
        out.precondition_failure = "a^sigma != c3 a";
        return out;
    }
    out.part_iii = act_matrix(*cof, in.sigma) == *cof * (ratio / *in.c3);
    return out;
}

/// (p^{t sigma}(D) A)^sigma = p(D) A^sigma.
inline bool verify_duursma_lemma(const QPoly& p, const QPoly& A, const QMat& sigma) {
    return act_matrix(diff_op(act_matrix(p, sigma.transpose()), A), sigma) == diff_op(p, act_matrix(A, sigma));
}

// --------------------------------------------------------------------------
// Random instances

namespace sampling {

inline Rational small_rational(std::mt19937_64& rng, int bound = 5) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    return Rational(num(rng), den(rng));
}

inline RPoly random_poly(std::mt19937_64& rng, int n) {
    RPoly f(n);
    for (int i = 0; i <= n; ++i) f.set_coeff(i, small_rational(rng));
    if (f.is_zero()) f.set_coeff(0, 1);
    return f;
}

/// Rational 2x2 matrix with nonzero determinant.
inline QMat random_matrix(std::mt19937_64& rng) {
    for (;;) {
        QMat m{QuadElem(small_rational(rng, 3)), QuadElem(small_rational(rng, 3)), QuadElem(small_rational(rng, 3)),
               QuadElem(small_rational(rng, 3))};
        if (!m.det().is_zero()) return m;
    }
}

/// Involutions used for the eigenpolynomial samples.
inline std::vector<QMat> involutions() {
    const QMat t = tau_matrix();
    const QMat s2 = macwilliams_matrix(2), s4 = macwilliams_matrix(4);
    return {macwilliams_matrix(2), macwilliams_matrix(4), macwilliams_matrix(Rational(4, 3)), macwilliams_matrix(3),
            t, s2 * t * s2, s4 * t * s4};
}

/// f + s f^sigma, an eigenpolynomial of the involution sigma with value s.
inline std::optional<QPoly> eigen_poly(const RPoly& f, const QMat& sigma, int s) {
    QPoly g = to_quad(f);
    QPoly e = g + act_matrix(g, sigma) * QuadElem(s);
    if (e.is_zero()) return std::nullopt;
    return e;
}

/// Generic instance: random eigenpolynomials p (for t sigma) and A (for sigma).
inline DuursmaOkudaInput random_generic(std::mt19937_64& rng) {
    static const std::vector<QMat> inv = involutions();
    std::uniform_int_distribution<std::size_t> pick(0, inv.size() - 1);
    std::uniform_int_distribution<int> deg_a(3, 9), coin(0, 1);
    for (;;) {
        const QMat sigma = inv[pick(rng)];
        const int na = deg_a(rng);
        std::uniform_int_distribution<int> deg_p(1, na);
        const int np = deg_p(rng);
        const int s1 = coin(rng) ? 1 : -1, s2 = coin(rng) ? 1 : -1;
        auto p = eigen_poly(random_poly(rng, np), sigma.transpose(), s1);
        auto a = eigen_poly(random_poly(rng, na), sigma, s2);
        if (!p || !a) continue;
        return {*p, *a, std::nullopt, sigma, QuadElem(s1), QuadElem(s2), std::nullopt};
    }
}

/// Random type1 / type4 member with A_i = 0 for 0 < i < 4.
inline RPoly random_member_d4(std::mt19937_64& rng, Family fam) {
    const FamilySpec& spec = family_spec(fam);
    std::vector<int> degrees;
    for (int n = 9; n <= 30; ++n)
        if (!basis(spec, n).empty() && bound(spec, n).d_max >= 4) degrees.push_back(n);
    std::uniform_int_distribution<std::size_t> pick(0, degrees.size() - 1);
    for (;;) {
        const int n = degrees[pick(rng)];
        auto b = basis(spec, n);
        Matrix<Rational> m;
        std::vector<Rational> rhs;
        for (int i = 0; i < 4; ++i) {
            std::vector<Rational> row;
            for (const auto& e : b) row.push_back(e.poly.coeff(i));
            m.push_back(std::move(row));
            rhs.push_back(i == 0 ? Rational(1) : Rational(0));
        }
        auto sol = solve_linear(std::move(m), std::move(rhs));
        if (!sol.consistent) continue;
        std::vector<Rational> coords = sol.particular;
        for (const auto& v : sol.nullspace) {
            Rational t = small_rational(rng);
            for (std::size_t j = 0; j < coords.size(); ++j) coords[j] += t * v[j];
        }
        RPoly w(n);
        for (std::size_t j = 0; j < b.size(); ++j) w += b[j].poly * coords[j];
        return w;
    }
}

/// Structured instance: p the divisibility operator, A a family member with
/// d >= 4, a = base^(d-3), sigma in {sigma_q, tau}; the c_i are measured.
inline DuursmaOkudaInput random_structured(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    const Family fam = coin(rng) ? Family::TypeI : Family::TypeIV;
    const FamilySpec& spec = family_spec(fam);
    const RPoly w = random_member_d4(rng, fam);
    const int d = *weight_profile(w, spec.q).d;
    const QMat sigma = coin(rng) ? macwilliams_matrix(spec.q) : tau_matrix();
    DuursmaOkudaInput in;
    in.p = to_quad(divisibility_operator(fam));
    in.A = to_quad(w);
    in.a = to_quad(pow(divisibility_base(fam), d - 3));
    in.sigma = sigma;
    in.c1 = eigen_ratio(in.p, act_matrix(in.p, sigma.transpose())).value_or(QuadElem(0));
    in.c2 = eigen_ratio(in.A, act_matrix(in.A, sigma)).value_or(QuadElem(0));
    in.c3 = eigen_ratio(*in.a, act_matrix(*in.a, sigma)).value_or(QuadElem(0));
    return in;
}

}  // namespace sampling

struct PropertyRun {
    int samples = 0;
    int passed = 0;
    std::vector<std::string> failures;
    bool ok() const { return samples == passed; }
};

/// Randomized run of one part: 1 = generic (i), 2 = structured (ii), 3 = structured (iii), 4 = lemma.
inline PropertyRun run_duursma_okuda_samples(int part, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    PropertyRun run;
    for (int k = 0; k < samples; ++k) {
        ++run.samples;
        bool ok = false;
        std::string why;
        if (part == 1) {
            auto r = verify_duursma_okuda(sampling::random_generic(rng));
            ok = r.preconditions && r.part_i;
            why = r.precondition_failure;
        } else if (part == 2 || part == 3) {
            auto r = verify_duursma_okuda(sampling::random_structured(rng));
            ok = r.preconditions && r.part_i && (part == 2 ? r.part_ii.value_or(false) : r.part_iii.value_or(false));
            why = r.precondition_failure;
        } else if (part == 4) {
            std::uniform_int_distribution<int> deg_a(2, 8);
            const int na = deg_a(rng);
            std::uniform_int_distribution<int> deg_p(0, na);
            const int np = deg_p(rng);
            QPoly p = to_quad(sampling::random_poly(rng, np));
            QPoly a = to_quad(sampling::random_poly(rng, na));
            ok = verify_duursma_lemma(p, a, sampling::random_matrix(rng));
        } else {
            throw PreconditionError("run_duursma_okuda_samples: part must be 1..4");
        }
        if (ok) ++run.passed;
        else run.failures.push_back("sample " + std::to_string(k) + (why.empty() ? "" : ": " + why));
    }
    return run;
}

}  // namespace fwe
