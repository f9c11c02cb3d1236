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

#include <fwe/families.hpp>
#include <fwe/rh.hpp>
#include <fwe/zeta.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <cstdlib>

using namespace fwe;

namespace {

using Z = UPoly<Rational>;
Rational R(long n, long d = 1) { return Rational(n, d); }
double num(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

}  // namespace

TEST(Real, Arithmetic) {
    mp::Real a(200, 2.0), b(200, Rational(1, 3));
    EXPECT_NEAR((a * b).to_double(), 2.0 / 3, 1e-15);
    EXPECT_NEAR((a / b - a).to_double(), 4.0, 1e-15);
    EXPECT_NEAR(sqrt(a).to_double(), std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(hypot(mp::Real(64, 3.0), mp::Real(64, 4.0)).to_double(), 5.0, 1e-15);
    EXPECT_NEAR(mp::Real::pi(300).to_double(), M_PI, 1e-15);
    EXPECT_TRUE(b < a);
    EXPECT_EQ(mp::Real(100, Rational(1, 4)).str(5), "2.5000e-01");
    mp::Real c = a;
    c = -c;
    EXPECT_EQ(c.to_double(), -2.0);
    EXPECT_EQ(a.to_double(), 2.0);
}

TEST(Real, PrecisionIsPerValue) {
    mp::Real lo(24, Rational(1, 3)), hi(400, Rational(1, 3));
    EXPECT_NE(lo.str(40), hi.str(40));
    EXPECT_EQ(hi.str(40).substr(0, 20), "3.333333333333333333");
}

TEST(RH, ExtremalType1Degree12) {
    ZetaPoly z = zeta_from_genfunc(generator(Generator::W12), 2);
    RHReport r = rh_check(z);
    EXPECT_TRUE(r.converged);
    EXPECT_TRUE(r.pass);
    ASSERT_EQ(r.roots.size(), 6u);
    EXPECT_LT(r.max_abs_deviation, 1e-9);
    EXPECT_LT(r.max_residual, 1e-20);
    EXPECT_NEAR(r.target_modulus, 1 / std::sqrt(2.0), 1e-15);
    EXPECT_EQ(r.fe_sign, std::optional<int>(-1));
    for (const auto& root : r.roots) EXPECT_NEAR(root.modulus, r.target_modulus, 1e-12);
}

TEST(RH, RootsAreRootsInDoublePrecision) {
    Z p({-1, -2, -2, 0, 4, 8, 8});
    RHReport r = rh_check(p, 2);
    ASSERT_TRUE(r.converged);
    for (const auto& root : r.roots) {
        std::complex<double> z(num(root.re), num(root.im)), acc(0);
        for (int k = 6; k >= 0; --k) acc = acc * z + p.coeff(static_cast<std::size_t>(k)).to_double();
        EXPECT_LT(std::abs(acc), 1e-12);
    }
}

TEST(RH, SortedByArgument) {
    RHReport r = rh_check(Z({3, -6, 4}), R(4, 3));
    ASSERT_EQ(r.roots.size(), 2u);
    EXPECT_TRUE(r.pass);
    // roots (3 +- i sqrt 3)/4
    EXPECT_LT(num(r.roots[0].im), 0);
    EXPECT_GT(num(r.roots[1].im), 0);
    EXPECT_NEAR(num(r.roots[1].re), 0.75, 1e-15);
    EXPECT_NEAR(num(r.roots[1].im), std::sqrt(3.0) / 4, 1e-15);
}

TEST(RH, ExactlyKnownRoots) {
    // 1 - q^2 T^4 = (1 - sqrt(q) T)(1 + sqrt(q) T)(1 + q T^2)
    for (Rational q : {R(2), R(4), R(4, 3), R(5, 7)}) {
        RHReport r = rh_check(Z({1, 0, 0, 0, -q * q}), q);
        EXPECT_TRUE(r.pass);
        EXPECT_LT(r.max_abs_deviation, 1e-14) << q.str();
    }
    RHReport r = rh_check(Z({3, -6, 4}), R(4, 3));
    EXPECT_LT(r.max_abs_deviation, 1e-14);
    EXPECT_NEAR(r.target_modulus, std::sqrt(3.0) / 2, 1e-15);
}

TEST(RH, DetectsOffCircleRoots) {
    // (1 - T)(1 - 3T): roots 1 and 1/3, target 1/sqrt 2
    RHReport r = rh_check(Z({1, -4, 3}), 2);
    EXPECT_TRUE(r.converged);
    EXPECT_FALSE(r.pass);
    EXPECT_NEAR(r.max_abs_deviation, 1 / std::sqrt(2.0) - 1.0 / 3, 1e-12);
    EXPECT_EQ(r.fe_sign, std::nullopt);
}

TEST(RH, Deterministic) {
    ZetaPoly z = zeta_from_genfunc(extremal(family_spec(Family::TypeI), 36), 2);
    RHReport a = rh_check(z), b = rh_check(z);
    ASSERT_EQ(a.roots.size(), b.roots.size());
    for (std::size_t i = 0; i < a.roots.size(); ++i) {
        EXPECT_EQ(a.roots[i].re, b.roots[i].re);
        EXPECT_EQ(a.roots[i].im, b.roots[i].im);
    }
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(RH, ExtremalFamiliesSample) {
    struct Case {
        Family f;
        int n;
    };
    for (Case c : {Case{Family::TypeI, 44}, Case{Family::TypeIV, 27}, Case{Family::Q43Even, 36}, Case{Family::Q43Odd, 30},
                   Case{Family::Ozeki, 36}}) {
        const FamilySpec& s = family_spec(c.f);
        ZetaPoly z = zeta_from_genfunc(extremal(s, c.n), s.q);
        RHReport r = rh_check(z);
        EXPECT_TRUE(r.pass) << family_id(c.f) << " n=" << c.n << " dev=" << r.max_abs_deviation;
        EXPECT_LT(r.max_residual, 1e-20) << family_id(c.f) << " n=" << c.n;
        EXPECT_EQ(r.roots.size(), static_cast<std::size_t>(z.degree()));
    }
}

TEST(RH, PrecisionEnvironment) {
    ::setenv("FWE_PRECISION_BITS", "512", 1);
    EXPECT_EQ(default_precision_bits(), 512u);
    ::setenv("FWE_PRECISION_BITS", "junk", 1);
    EXPECT_EQ(default_precision_bits(), 128u);
    ::unsetenv("FWE_PRECISION_BITS");
    EXPECT_EQ(default_precision_bits(), 128u);
    RHOptions opt;
    opt.precision_bits = 512;
    RHReport r = rh_check(Z({3, -6, 4}), R(4, 3), opt);
    EXPECT_GE(r.precision_bits, 1024u);
}

TEST(RH, NoEscalationRoomFails) {
    RHOptions opt;
    opt.precision_bits = 128;
    opt.max_precision_bits = 128;
    RHReport r = rh_check(Z({3, -6, 4}), R(4, 3), opt);
    EXPECT_FALSE(r.converged);
    EXPECT_FALSE(r.pass);
    EXPECT_FALSE(r.failure.empty());
}

TEST(RH, Errors) {
    EXPECT_THROW(rh_check(Z({5}), 2), PreconditionError);
    EXPECT_THROW(rh_check(Z({1, 1}), 1), PreconditionError);
}
