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

// Finite 2x2 matrix groups over a real quadratic field and their Molien series.

#include <fwe/homopoly.hpp>
#include <fwe/upoly.hpp>

#include <cstddef>
#include <deque>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fwe {

class GroupTooLargeError : public Error {
   public:
    using Error::Error;
};

class MatrixGroup {
   public:
    MatrixGroup(std::vector<QMat> elements, std::vector<QMat> generators)
        : elements_(std::move(elements)), generators_(std::move(generators)) {}

    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<QMat>& elements() const noexcept { return elements_; }
    const std::vector<QMat>& generators() const noexcept { return generators_; }

    bool contains(const QMat& m) const {
        for (const auto& e : elements_)
            if (e == m) return true;
        return false;
    }

   private:
    std::vector<QMat> elements_;
    std::vector<QMat> generators_;
};

/// Breadth-first closure of the generators under multiplication.
inline MatrixGroup group_closure(const std::vector<QMat>& generators, std::size_t cap = 1024) {
    for (const auto& g : generators)
        if (g.det().is_zero()) throw PreconditionError("group_closure: singular generator " + g.str());
    std::vector<QMat> elems{QMat::identity()};
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
        QMat e = elems[frontier.front()];
        frontier.pop_front();
        for (const auto& g : generators) {
            QMat p = e * g;
            bool seen = false;
            for (const auto& f : elems)
                if (f == p) {
                    seen = true;
                    break;
                }
            if (seen) continue;
            if (elems.size() >= cap)
                throw GroupTooLargeError("group closure exceeded " + std::to_string(cap) + " elements");
            elems.push_back(std::move(p));
            frontier.push_back(elems.size() - 1);
        }
    }
    return MatrixGroup(std::move(elems), generators);
}

/// A rational function num/den over Q in one variable with a cached
/// power-series prefix.
struct RationalFunctionSeries {
    UPoly<Rational> num;
    UPoly<Rational> den;
    std::vector<Rational> prefix;

    /// Exact equality of rational functions by cross-multiplication.
    bool equals(const UPoly<Rational>& n2, const UPoly<Rational>& d2) const { return num * d2 == n2 * den; }

    Rational coefficient(std::size_t k) const {
        if (k < prefix.size()) return prefix[k];
        return series_quotient(num, den, k + 1)[k];
    }

    std::string str() const { return "(" + num.str("λ") + ")/(" + den.str("λ") + ")"; }
};

/// Thrown when the Molien sum keeps a sqrt(D) component, which only happens
/// if the element list is not a group.
class IrrationalResidueError : public Error {
   public:
    using Error::Error;
};

/// (1/|G|) sum_A 1/det(I - lambda A) as a reduced rational function.
inline RationalFunctionSeries molien_series(const MatrixGroup& g, std::size_t terms) {
    if (terms < 1) throw PreconditionError("molien_series: terms must be >= 1");
    // det(I - lambda A) = 1 - tr(A) lambda + det(A) lambda^2; elements with
    // equal (trace, det) contribute the same summand.
    std::vector<std::pair<UPoly<QuadElem>, long>> classes;
    for (const auto& a : g.elements()) {
        UPoly<QuadElem> f{QuadElem(1), -a.trace(), a.det()};
        bool found = false;
        for (auto& [h, cnt] : classes)
            if (h == f) {
                ++cnt;
                found = true;
                break;
            }
        if (!found) classes.emplace_back(std::move(f), 1);
    }
    UPoly<QuadElem> num, den = UPoly<QuadElem>::constant(QuadElem(static_cast<long>(g.order())));
    for (std::size_t k = 0; k < classes.size(); ++k) {
        UPoly<QuadElem> term = UPoly<QuadElem>::constant(QuadElem(classes[k].second));
        for (std::size_t j = 0; j < classes.size(); ++j)
            if (j != k) term = term * classes[j].first;
        num += term;
        den = den * classes[k].first;
    }
    auto conj_poly = [](const UPoly<QuadElem>& p) {
        std::vector<QuadElem> c;
        for (const auto& v : p.coeffs()) c.push_back(v.conj());
        return UPoly<QuadElem>(std::move(c));
    };
    bool den_rational = true;
    for (const auto& v : den.coeffs()) den_rational = den_rational && v.is_rational();
    if (!den_rational) {
        UPoly<QuadElem> dc = conj_poly(den);
        num = num * dc;
        den = den * dc;
    }
    auto to_rat = [](const UPoly<QuadElem>& p) {
        std::vector<Rational> c;
        for (const auto& v : p.coeffs()) {
            if (!v.is_rational()) throw IrrationalResidueError("Molien sum has irrational coefficient " + v.str());
            c.push_back(v.rational_part());
        }
        return UPoly<Rational>(std::move(c));
    };
    UPoly<Rational> n = to_rat(num), d = to_rat(den);
    UPoly<Rational> common = gcd(n, d);
    n = divmod(n, common).first;
    d = divmod(d, common).first;
    Rational lead = d.coeff(0);
    n = n * lead.inverse();
    d = d * lead.inverse();
    RationalFunctionSeries out{n, d, {}};
    out.prefix = series_quotient(out.num, out.den, terms);
    return out;
}

/// 1 / ((1 - lambda^a)(1 - lambda^b)).
inline std::pair<UPoly<Rational>, UPoly<Rational>> two_generator_molien(int a, int b) {
    auto one_minus = [](int k) {
        return UPoly<Rational>::constant(Rational(1)) - UPoly<Rational>::monomial(Rational(1), static_cast<std::size_t>(k));
    };
    return {UPoly<Rational>::constant(Rational(1)), one_minus(a) * one_minus(b)};
}

enum class GroupName { TypeIMinus, TypeIVMinus, Q43Minus, Q43 };

inline std::vector<GroupName> all_groups() {
    return {GroupName::TypeIMinus, GroupName::TypeIVMinus, GroupName::Q43Minus, GroupName::Q43};
}

inline std::string group_id(GroupName g) {
    switch (g) {
        case GroupName::TypeIMinus: return "g1";
        case GroupName::TypeIVMinus: return "g4";
        case GroupName::Q43Minus: return "g43m";
        case GroupName::Q43: return "g43";
    }
    return {};
}

inline GroupName parse_group(std::string_view id) {
    for (auto g : all_groups())
        if (group_id(g) == id) return g;
    throw ParseError("unknown group '" + std::string(id) + "' (expected g1, g4, g43m or g43)");
}

/// Generators: <s2 t s2, t>, <s4 t s4, t>, <eta, t>, <s_{4/3}, t>.
inline std::vector<QMat> group_generators(GroupName g) {
    const QMat t = tau_matrix();
    switch (g) {
        case GroupName::TypeIMinus: {
            QMat s = macwilliams_matrix(Rational(2));
            return {s * t * s, t};
        }
        case GroupName::TypeIVMinus: {
            QMat s = macwilliams_matrix(Rational(4));
            return {s * t * s, t};
        }
        case GroupName::Q43Minus: {
            QuadElem h(Rational(1, 2));
            QMat eta{h, h, QuadElem(Rational(-3, 2)), h};
            return {eta, t};
        }
        case GroupName::Q43: return {macwilliams_matrix(Rational(4, 3)), t};
    }
    return {};
}

/// Degrees (a, b) of the two algebraically independent invariants.
inline std::pair<int, int> invariant_degrees(GroupName g) {
    switch (g) {
        case GroupName::TypeIMinus: return {2, 4};
        case GroupName::TypeIVMinus: return {2, 3};
        case GroupName::Q43Minus: return {2, 6};
        case GroupName::Q43: return {2, 12};
    }
    return {0, 0};
}

inline MatrixGroup named_group(GroupName g) { return group_closure(group_generators(g)); }

}  // namespace fwe
