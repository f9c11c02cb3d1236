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
 * Text, LaTeX and JSON forms of homogeneous polynomials.
 *
 * Text grammar (whitespace ignored):
 *
 *     poly   := ['+'|'-'] term (('+'|'-') term)*
 *     term   := factor ('*' factor)*
 *     factor := INT ['/' INT] | ('x'|'y') ['^' INT]
 *
 * e.g. `x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12` or `x^2 + 1/3*y^2`.
 * All terms must share one total degree. Printing lists terms by increasing
 * y-exponent and elides unit coefficients and exponents 0 and 1, so print
 * followed by parse is the identity.
 */

#include <fwe/homopoly.hpp>

#include <json.hpp>

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace fwe {

namespace detail {

class PolyParser {
   public:
    explicit PolyParser(std::string_view s) {
        for (char ch : s)
            if (!std::isspace(static_cast<unsigned char>(ch))) src_.push_back(ch);
    }

    RPoly parse() {
        if (src_.empty()) throw ParseError("empty polynomial");
        std::map<int, Rational> by_y;
        std::optional<int> degree;
        bool first = true;
        while (pos_ < src_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [c, xe, ye] = term();
            if (degree && *degree != xe + ye) fail("polynomial is not homogeneous");
            degree = xe + ye;
            by_y[ye] += sign > 0 ? c : -c;
        }
        RPoly out(*degree);
        for (auto& [ye, c] : by_y) out.set_coeff(ye, c);
        return out;
    }

   private:
    struct Term {
        Rational c;
        int xe;
        int ye;
    };

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + src_ + "'");
    }

    std::string digits() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return src_.substr(start, pos_ - start);
    }

    Term term() {
        Term t{Rational(1), 0, 0};
        for (;;) {
            char ch = peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::string num = digits();
                if (peek() == '/') {
                    ++pos_;
                    std::string den = digits();
                    t.c *= Rational::parse(num + "/" + den);
                } else {
                    t.c *= Rational::parse(num);
                }
            } else if (ch == 'x' || ch == 'y') {
                ++pos_;
                int e = 1;
                if (peek() == '^') {
                    ++pos_;
                    e = std::stoi(digits());
                }
                (ch == 'x' ? t.xe : t.ye) += e;
            } else {
                fail("expected a coefficient, 'x' or 'y'");
            }
            if (peek() != '*') break;
            ++pos_;
        }
        return t;
    }

    std::string src_;
    std::size_t pos_ = 0;
};

template <class S>
std::string coeff_text(const S& c) {
    std::string s = c.str();
    if constexpr (std::is_same_v<S, QuadElem>) {
        if (!c.is_rational()) s = "(" + s + ")";
    }
    return s;
}

}  // namespace detail

inline RPoly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

template <class S>
std::string to_text(const HomPoly<S>& f) {
    const int n = f.degree();
    std::string out;
    for (int i = 0; i <= n; ++i) {
        const S& c = f.coeff(i);
        if (c.is_zero()) continue;
        std::string cs;
        bool neg = false;
        if constexpr (std::is_same_v<S, Rational>) {
            neg = c.sign() < 0;
            cs = abs(c).str();
        } else {
            neg = c.is_rational() && c.sign() < 0;
            cs = detail::coeff_text(neg ? -c : c);
        }
        std::string vars;
        auto add = [&](char v, int e) {
            if (e == 0) return;
            if (!vars.empty()) vars += "*";
            vars += v;
            if (e > 1) vars += "^" + std::to_string(e);
        };
        add('x', n - i);
        add('y', i);
        std::string term = vars.empty() ? cs : (cs == "1" ? vars : cs + "*" + vars);
        if (out.empty()) out = (neg ? "-" : "") + term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

inline std::string to_latex(const RPoly& f) {
    const int n = f.degree();
    std::string out;
    for (int i = 0; i <= n; ++i) {
        const Rational& c = f.coeff(i);
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rational m = abs(c);
        std::string cs;
        if (!m.is_integer()) cs = "\\frac{" + m.num().get_str() + "}{" + m.den().get_str() + "}";
        else if (m != Rational(1) || n == 0) cs = m.str();
        std::string vars;
        if (n - i > 0) vars += n - i == 1 ? std::string("x") : "x^{" + std::to_string(n - i) + "}";
        if (i > 0) vars += i == 1 ? std::string("y") : "y^{" + std::to_string(i) + "}";
        if (vars.empty() && cs.empty()) cs = "1";
        std::string term = cs + vars;
        if (out.empty()) out = (neg ? "-" : "") + term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

inline nlohmann::json to_json(const RPoly& f) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(c.str());
    return {{"degree", f.degree()}, {"coeffs", coeffs}};
}

inline RPoly poly_from_json(const nlohmann::json& j) {
    if (!j.contains("degree") || !j.contains("coeffs")) throw ParseError("polynomial JSON needs degree and coeffs");
    int n = j.at("degree").get<int>();
    const auto& cs = j.at("coeffs");
    if (!cs.is_array() || static_cast<int>(cs.size()) != n + 1)
        throw ParseError("polynomial JSON: coeffs must have degree+1 entries");
    RPoly f(n);
    for (int i = 0; i <= n; ++i) f.set_coeff(i, Rational::parse(cs[static_cast<std::size_t>(i)].get<std::string>()));
    return f;
}

}  // namespace fwe
