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

#include <fwe/scalar.hpp>

#include <gtest/gtest.h>

#include "gen.hpp"

using namespace fwe;

TEST(Rational, LowestTermsPositiveDenominator) {
    Rational r(6, -8);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 4);
    EXPECT_EQ(r.str(), "-3/4");
    EXPECT_EQ(Rational(10, 5).str(), "2");
}

TEST(Rational, Parse) {
    EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
    EXPECT_EQ(Rational::parse("-14065/81"), Rational(-14065, 81));
    EXPECT_EQ(Rational::parse("42"), Rational(42));
    EXPECT_THROW(Rational::parse("1/0"), ParseError);
    EXPECT_THROW(Rational::parse("abc"), ParseError);
    EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, PowBinomialFactorial) {
    EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
    EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
    EXPECT_EQ(pow(Rational(5), 0), Rational(1));
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_EQ(binomial(5, 7), 0);
    EXPECT_EQ(factorial(6), 720);
}

TEST(Rational, DivisionByZeroThrows) {
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(Rational, FieldAxiomsRandom) {
    testgen::Gen g(20260101);
    for (int k = 0; k < 500; ++k) {
        Rational a = g.rational(), b = g.rational(), c = g.rational();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a - a, Rational(0));
        if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Rational(1));
    }
}

TEST(SqrtRational, Examples) {
    QuadElem four = sqrt_rational(4);
    EXPECT_TRUE(four.is_rational());
    EXPECT_EQ(four.to_rational(), Rational(2));
    EXPECT_EQ(four.radicand(), 1);

    QuadElem r43 = sqrt_rational(Rational(4, 3));
    EXPECT_EQ(r43.rational_part(), Rational(0));
    EXPECT_EQ(r43.surd_part(), Rational(2, 3));
    EXPECT_EQ(r43.radicand(), 3);
    EXPECT_EQ(r43.str(), "2/3*sqrt(3)");

    QuadElem r2 = sqrt_rational(2);
    EXPECT_EQ(r2.surd_part(), Rational(1));
    EXPECT_EQ(r2.radicand(), 2);
}

TEST(SqrtRational, SquaresBackRandom) {
    testgen::Gen g(7);
    for (int k = 0; k < 1000; ++k) {
        Rational q = g.positive_rational(60);
        QuadElem r = sqrt_rational(q);
        EXPECT_EQ((r * r).to_rational(), q);
        EXPECT_GT(r.sign(), 0);
    }
}

TEST(QuadElem, RingLawsRandom) {
    testgen::Gen g(99);
    for (std::int64_t d : {2, 3, 5}) {
        for (int k = 0; k < 200; ++k) {
            QuadElem x = g.quad(d), y = g.quad(d), z = g.quad(d);
            EXPECT_EQ((x * y) * z, x * (y * z));
            EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
            EXPECT_EQ((x + y).conj(), x.conj() + y.conj());
            EXPECT_EQ((x * y).norm(), x.norm() * y.norm());
            EXPECT_EQ(Rational(x.norm()), (x * x.conj()).to_rational());
            if (!x.is_zero()) EXPECT_EQ(x * (QuadElem(1) / x), QuadElem(1));
        }
    }
}

TEST(QuadElem, MixedExtensionsRejected) {
    QuadElem a = sqrt_rational(2), b = sqrt_rational(3);
    EXPECT_THROW(a + b, IncompatibleFieldError);
    EXPECT_THROW(a * b, IncompatibleFieldError);
    EXPECT_NO_THROW(a + QuadElem(1));
}

TEST(QuadElem, ToRationalOnlyWithoutSurd) {
    EXPECT_THROW(sqrt_rational(2).to_rational(), NotRationalError);
    EXPECT_EQ((sqrt_rational(2) * sqrt_rational(2)).to_rational(), Rational(2));
}

TEST(QuadElem, ExactSign) {
    QuadElem r2 = sqrt_rational(2);
    EXPECT_LT((QuadElem(1) - r2).sign(), 0);
    EXPECT_GT((QuadElem(Rational(3, 2)) - r2).sign(), 0);
    EXPECT_LT((QuadElem(Rational(-3, 2)) + r2).sign(), 0);
    EXPECT_GT((QuadElem(Rational(-7, 5)) + r2).sign(), 0);
    EXPECT_EQ(QuadElem(0).sign(), 0);
}
