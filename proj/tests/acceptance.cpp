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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <fwe/fwe.hpp>

#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace fwe;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

struct Checker {
    std::vector<std::string> failures;
    int checks = 0;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

const RPoly& G(Generator g) {
    static std::map<Generator, RPoly> cache;
    auto it = cache.find(g);
    if (it == cache.end()) it = cache.emplace(g, generator(g)).first;
    return it->second;
}

const FamilySpec& S(Family f) { return family_spec(f); }

RPoly q43_w22() {
    const RPoly w = w2(R(4, 3));
    return (pow(w, 11) * R(25) + pow(w, 5) * pow(G(Generator::Phi6), 2) * R(11)) * R(1, 36);
}

RPoly w20_prime() {
    const RPoly w = w2(2), p = G(Generator::Phi4);
    return (pow(w, 8) * p * R(15) + pow(p, 5)) * R(1, 16);
}

RPoly w11() {
    return (pow(w2(4), 4) * G(Generator::Phi3) * R(8) + w2(4) * pow(G(Generator::Phi3), 3)) * R(1, 9);
}

void reference_enumerators(Checker& c) {
    const RPoly w = w2(2), p4 = G(Generator::Phi4);
    const RPoly w12 = extremal(S(Family::TypeI), 12);
    c.expect(w12 == parse_poly("x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12"), "type1 n=12");
    c.expect(w12 == (pow(w, 4) * p4 * R(9) - pow(p4, 3)) * R(1, 8), "type1 n=12 combination");
    const RPoly w14 = extremal(S(Family::TypeI), 14);
    c.expect(w14 == parse_poly("x^14 - 26*x^10*y^4 - 39*x^8*y^6 - 39*x^6*y^8 - 26*x^4*y^10 + y^14"), "type1 n=14");
    c.expect(w14 == (pow(w, 5) * p4 * R(17) - w * pow(p4, 3)) * R(1, 16), "type1 n=14 combination");
    const RPoly w20 = extremal(S(Family::TypeI), 20);
    c.expect(w20 == parse_poly("x^20 - 190*x^14*y^6 + 95*x^12*y^8 - 836*x^10*y^10 + 95*x^8*y^12 - 190*x^6*y^14 + y^20"),
             "type1 n=20");
    c.expect(w20 == (pow(w, 8) * p4 * R(235) + pow(w, 4) * pow(p4, 3) * R(10) + pow(p4, 5) * R(11)) * R(1, 256),
             "type1 n=20 combination");
    c.expect(w20_prime() == parse_poly("x^20 + 5*x^16*y^4 - 240*x^14*y^6 + 250*x^12*y^8 - 1056*x^10*y^10 + "
                                       "250*x^8*y^12 - 240*x^6*y^14 + 5*x^4*y^16 + y^20"),
             "W'20");
    const RPoly e11 = extremal(S(Family::TypeIV), 11);
    c.expect(e11 == parse_poly("x^11 - 30*x^7*y^4 - 336*x^5*y^6 - 1035*x^3*y^8 - 648*x*y^10"), "type4 n=11");
    c.expect(e11 == w11(), "type4 n=11 combination");
    const RPoly e12 = extremal(S(Family::Q43Even), 12);
    c.expect(e12 == parse_poly("x^12 + 55/9*x^8*y^4 - 176/81*x^6*y^6 + 55/81*x^4*y^8 + 1/729*y^12"), "q43 n=12");
    c.expect(e12 == (pow(w2(R(4, 3)), 6) * R(5) + pow(G(Generator::Phi6), 2)) * R(1, 6), "q43 n=12 combination");
    c.expect(extremal(S(Family::Q43Even), 10) == pow(w2(R(4, 3)), 5), "q43 n=10");
    const RPoly e22 = q43_w22();
    c.expect(e22 == parse_poly("x^22 + 220/27*x^18*y^4 + 2497/243*x^16*y^6 + 2750/729*x^14*y^8 + 484/2187*x^12*y^10 + "
                               "484/6561*x^10*y^12 + 2750/19683*x^8*y^14 + 2497/59049*x^6*y^16 + "
                               "220/59049*x^4*y^18 + 1/177147*y^22"),
             "q43 n=22");
    c.expect(e22 == extremal(S(Family::Q43Even), 22), "q43 n=22 is extremal");
}

void differential_identities(Checker& c) {
    const RPoly p1 = divisibility_operator(Family::TypeI), a1 = divisibility_base(Family::TypeI);
    const RPoly p4 = G(Generator::Phi4), w = w2(2);
    const RPoly w12 = G(Generator::W12);
    c.expect(diff_op(p1, w12) == a1 * p4 * R(-6336), "p(D)W12");
    const RPoly w14 = extremal(S(Family::TypeI), 14);
    c.expect(diff_op(p1, w14) == a1 * p4 * w * R(-6240), "p(D)W14");
    const RPoly w20 = extremal(S(Family::TypeI), 20);
    c.expect(diff_op(p1, w20) == pow(a1, 3) * p4 * R(-319200), "p(D)W20");
    const RPoly octic = parse_poly("x^8 - 238*x^6*y^2 + 490*x^4*y^4 - 238*x^2*y^6 + y^8");
    DivisibilityResult r = verify_divisibility_prop(w20_prime(), Family::TypeI);
    c.expect(r.holds(), "W'20 divisibility");
    c.expect(r.reduced && divide_exact(octic, *r.reduced).has_value(), "W'20 cofactor contains the octic");
    c.expect(r.image == a1 * p4 * octic * R(1920), "p(D)W'20");
    c.expect(octic * R(8) == pow(p4, 2) * R(121) - pow(w, 4) * R(113), "octic combination");
    c.expect(macwilliams_rational(octic, 2) == octic, "octic invariant under sigma_2");
    const RPoly p3 = divisibility_operator(Family::TypeIV), a3 = divisibility_base(Family::TypeIV);
    c.expect(diff_op(p3, w11()) == a3 * G(Generator::Phi3) * w2(4) * R(-720), "p(D)W11");
}

void groups_and_molien(Checker& c) {
    const unsigned orders[] = {8, 6, 12, 24};
    const UPoly<Rational> one{1}, l2{1, 0, -1};
    auto den = [&](int b) { return l2 * (UPoly<Rational>::constant(1) - UPoly<Rational>::monomial(1, static_cast<std::size_t>(b))); };
    const int second[] = {4, 3, 6, 12};
    int k = 0;
    for (auto id : all_groups()) {
        MatrixGroup g = named_group(id);
        c.expect(g.order() == orders[k], group_id(id) + " order");
        RationalFunctionSeries s = molien_series(g, 8);
        c.expect(s.equals(one, den(second[k])), group_id(id) + " Molien closed form");
        ++k;
    }
}

int bound_formula(Family f, int n) {
    auto fl = [](int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); };
    switch (f) {
        case Family::TypeI: return 2 * fl(n - 4, 8) + 2;
        case Family::TypeIV: return 2 * fl(n - 3, 6) + 2;
        case Family::Q43Even: return 2 * fl(n, 12) + 2;
        case Family::Q43Odd: return 2 * fl(n - 6, 12) + 2;
        case Family::Ozeki: return 4 * fl(n - 12, 24) + 4;
    }
    return -1;
}

void bounds(Checker& c) {
    for (auto f : all_families()) {
        for (int n = 1; n <= 100; ++n) {
            if (basis(S(f), n).empty()) continue;
            if (f == Family::Q43Odd && n % 12 != 6) continue;
            const std::string tag = family_id(f) + " n=" + std::to_string(n);
            try {
                // extremal_solution throws unless the solution space is a single point
                ExtremalSolution sol = extremal_solution(S(f), n);
                c.expect(sol.bound.d_max == bound_formula(f, n), tag + " bound");
                c.expect(weight_profile(sol.poly, S(f).q).d == bound_formula(f, n), tag + " d");
            } catch (const Error& e) {
                c.expect(false, tag + ": " + e.what());
            }
        }
    }
}

void burmann(Checker& c) {
    c.expect(burmann_coefficient(Family::Q43Even, 1, 5) == R(220, 27), "220/27");
    c.expect(q43_w22().coeff(4) == R(220, 27), "220/27 in the degree-22 polynomial");
    c.expect(burmann_coefficient(Family::Q43Odd, 2) == R(-14065, 81), "-14065/81");
    for (int mu = 0; mu <= 8; ++mu) {
        for (int nu = 0; nu <= 5; ++nu) {
            if (mu == 0 && nu == 0) continue;
            Rational a = burmann_coefficient(Family::Q43Even, mu, nu);
            c.expect(a.sign() > 0, "q43 sign mu=" + std::to_string(mu));
            c.expect(extremal(S(Family::Q43Even), 12 * mu + 2 * nu).coeff(2 * mu + 2) == a,
                     "q43 mu=" + std::to_string(mu) + " nu=" + std::to_string(nu));
        }
        if (mu < 2) continue;
        Rational a = burmann_coefficient(Family::Q43Odd, mu);
        c.expect(a.sign() < 0, "q43-odd sign mu=" + std::to_string(mu));
        c.expect(extremal(S(Family::Q43Odd), 12 * mu + 6).coeff(2 * mu + 2) == a, "q43-odd mu=" + std::to_string(mu));
    }
}

void zeta(Checker& c) {
    using Z = UPoly<Rational>;
    const Rational q43(4, 3);
    ZetaPoly z12 = zeta_from_genfunc(extremal(S(Family::Q43Even), 12), q43);
    c.expect(z12.P == Z({189, 504, 846, 1092, 1128, 896, 448}) * Z::constant(R(1, 5103)), "P12E");
    int instances = 0;
    for (auto f : all_families()) {
        for (int n = 1; n <= 60; ++n) {
            if (basis(S(f), n).empty()) continue;
            RPoly w;
            try {
                w = extremal(S(f), n);
            } catch (const ExtremalError&) {
                continue;
            }
            WeightProfile wp = weight_profile(w, S(f).q);
            if (!wp.d || *wp.d < 2 || !wp.d_perp || *wp.d_perp < 2) continue;
            const std::string tag = family_id(f) + " n=" + std::to_string(n);
            ZetaPoly a = zeta_from_genfunc(w, S(f).q), b = zeta_from_mds(w, S(f).q);
            c.expect(a.P == b.P, tag + " genfunc vs mds");
            c.expect(functional_equation_check(a) == std::optional<int>(S(f).sign), tag + " functional equation");
            c.expect(Rational(a.degree()) == a.genus * R(2), tag + " deg P = 2g");
            ++instances;
        }
    }
    c.expect(instances >= 50, "at least 50 instances (" + std::to_string(instances) + ")");
    for (Family f : {Family::TypeI, Family::TypeIV, Family::Q43Even}) {
        for (int n = 1; n <= 60; ++n) {
            if (!star_admissible(f, n)) continue;
            StarCheck s = verify_star(f, n);
            c.expect(s.is_extremal && s.zeta_relation, family_id(f) + " star n=" + std::to_string(n));
        }
    }
    c.expect(star_zeta_factor(Family::TypeI) == Z({1, -2, 2}), "type1 factor");
    c.expect(star_zeta_factor(Family::TypeIV) == Z({1, -2, 4}) * Z::constant(R(1, 3)), "type4 factor");
    c.expect(star_zeta_factor(Family::Q43Even) == Z({3, -6, 4}), "q43 factor");
    ZetaPoly z28 = zeta_from_genfunc(extremal(S(Family::Q43Odd), 28), q43);
    ZetaPoly z30 = zeta_from_genfunc(extremal(S(Family::Q43Odd), 30), q43);
    c.expect(z28.d == 4 && z30.d == 6, "degree-28 / degree-30 minimum weights");
    c.expect(z28.P == Z({3, -6, 4}) * z30.P, "P28 = (4T^2 - 6T + 3) P30");
}

void theorem_verifiers(Checker& c) {
    for (Family f : {Family::TypeI, Family::TypeIV}) {
        for (int n = 1; n <= 60; ++n) {
            if (basis(S(f), n).empty()) continue;
            const int d = bound(S(f), n).d_max;
            if (d < 4 || d % 2 != 0) continue;
            RPoly w = extremal(S(f), n);
            const std::string tag = family_id(f) + " n=" + std::to_string(n);
            c.expect(verify_extremal_diff_identity(w, f), tag + " differential identity");
            c.expect(verify_zeta_binomial_identity(w, f), tag + " binomial zeta identity");
        }
    }
    const char* names[] = {"part (i)", "part (ii)", "part (iii)", "lemma"};
    for (int part = 1; part <= 4; ++part) {
        PropertyRun run = run_duursma_okuda_samples(part, 100, 0x5eed0000u + static_cast<std::uint64_t>(part));
        c.expect(run.samples == 100 && run.ok(),
                 std::string(names[part - 1]) + ": " + std::to_string(run.passed) + "/" + std::to_string(run.samples));
    }
}

void rh_scans(Checker& c) {
    struct Range {
        Family f;
        int hi;
    };
    std::string first_pass;
    for (int pass = 0; pass < 2; ++pass) {
        std::string dump;
        for (Range r : {Range{Family::TypeI, 60}, Range{Family::TypeIV, 45}, Range{Family::Q43Even, 60}}) {
            ScanConfig cfg;
            cfg.family = r.f;
            cfg.n_min = 1;
            cfg.n_max = r.hi;
            cfg.rh.precision_bits = default_precision_bits();
            ScanReport rep = run_scan(cfg);
            c.expect(rep.hard_ok(), family_id(r.f) + " hard invariants");
            for (const ScanRow& row : rep.rows) {
                const std::string tag = family_id(r.f) + " n=" + std::to_string(row.n);
                if (!row.rh) {
                    c.expect(row.zeta_degree == 0, tag + " missing RH report");
                    continue;
                }
                c.expect(row.rh->converged, tag + " converged");
                c.expect(row.rh->max_abs_deviation < 1e-9, tag + " deviation");
                c.expect(row.rh->max_residual < 1e-20, tag + " residual");
                dump += to_json(*row.rh).dump();
            }
        }
        if (pass == 0) first_pass = dump;
        else c.expect(dump == first_pass, "scan output differs between runs");
    }
}

void molien_vs_basis(Checker& c) {
    struct Case {
        GroupName g;
        Family f;
        Parity p;
    };
    for (auto k : {Case{GroupName::TypeIMinus, Family::TypeI, Parity::Any},
                   Case{GroupName::TypeIVMinus, Family::TypeIV, Parity::Any},
                   Case{GroupName::Q43Minus, Family::Q43Odd, Parity::Any},
                   Case{GroupName::Q43, Family::Q43Even, Parity::Even}}) {
        RationalFunctionSeries s = molien_series(named_group(k.g), 41);
        for (int n = 1; n <= 40; ++n)
            c.expect(s.coefficient(static_cast<std::size_t>(n)) ==
                         Rational(static_cast<long>(basis(S(k.f), n, k.p).size())),
                     group_id(k.g) + " n=" + std::to_string(n));
    }
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<void(Checker&)> run;
    };
    const Criterion criteria[] = {
        {"reference enumerators", reference_enumerators},
        {"differential identities", differential_identities},
        {"group orders and Molien closed forms", groups_and_molien},
        {"extremal bounds up to n = 100", bounds},
        {"Burmann coefficients", burmann},
        {"zeta polynomials", zeta},
        {"theorem verifiers", theorem_verifiers},
        {"Riemann hypothesis scans", rh_scans},
        {"Molien / basis dimensions up to n = 40", molien_vs_basis},
    };
    int failed = 0, k = 0;
    for (const auto& cr : criteria) {
        ++k;
        Checker c;
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = c.failures.empty();
        std::printf("%s %d %s (%d checks)\n", ok ? "PASS" : "FAIL", k, cr.name, c.checks);
        for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) std::printf("    %s\n", c.failures[i].c_str());
        std::fflush(stdout);
        if (!ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
