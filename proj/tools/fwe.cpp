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

// Command-line front end.

#include <fwe/fwe.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace fwe;
using nlohmann::json;

namespace {

enum class Format { Text, Json, Latex };

// Exit codes: 0 ok, 1 hard failure, 2 bad input, 3 conjecture failure under --strict.
constexpr int kHardFailure = 1;
constexpr int kBadInput = 2;
constexpr int kConjecture = 3;

struct Output {
    Format format = Format::Text;
    std::ostringstream text;
    json doc = json::object();
};

std::string upoly_latex(const UPoly<Rational>& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const Rational& v = p.coeff(k);
        if (v.is_zero()) continue;
        const bool neg = v.sign() < 0;
        const Rational m = abs(v);
        std::string cs;
        if (!m.is_integer()) cs = "\\frac{" + m.num().get_str() + "}{" + m.den().get_str() + "}";
        else if (m != Rational(1) || k == 0) cs = m.str();
        std::string var = k == 0 ? "" : (k == 1 ? "T" : "T^{" + std::to_string(k) + "}");
        s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        s += cs + var;
    }
    return s;
}

std::string show(const RPoly& f, Format fmt) { return fmt == Format::Latex ? to_latex(f) : to_text(f); }
std::string show(const UPoly<Rational>& p, Format fmt) { return fmt == Format::Latex ? upoly_latex(p) : p.str("T"); }

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::pair<int, int> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            int n = std::stoi(s);
            return {n, n};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::logic_error&) {
        throw ParseError("bad degree range '" + s + "' (expected N or A..B)");
    }
}

RPoly family_extremal(const std::string& family, int n) { return extremal(family_spec(parse_family(family)), n); }

// ---------------------------------------------------------------- gen

struct GenArgs {
    std::string family, name, q = "2";
    int n = 0;
    bool extremal = false, basis = false;
};

int cmd_gen(const GenArgs& a, Output& out) {
    if (!a.name.empty()) {
        const Generator g = parse_generator(a.name);
        const RPoly f = g == Generator::W2 ? w2(Rational::parse(a.q)) : generator(g);
        out.text << show(f, out.format) << "\n";
        out.doc = {{"name", a.name}, {"poly", to_json(f)}, {"text", to_text(f)}};
        return 0;
    }
    if (a.family.empty() || a.n < 1) throw PreconditionError("gen: need --name, or --family with -n");
    const FamilySpec& spec = family_spec(parse_family(a.family));
    if (a.basis) {
        auto b = fwe::basis(spec, a.n);
        if (b.empty()) throw PreconditionError("gen: empty basis in degree " + std::to_string(a.n));
        json items = json::array();
        for (const auto& e : b) {
            out.text << "l=" << e.l << " m=" << e.m << ": " << show(e.poly, out.format) << "\n";
            items.push_back({{"l", e.l}, {"m", e.m}, {"poly", to_json(e.poly)}, {"text", to_text(e.poly)}});
        }
        out.doc = {{"family", a.family}, {"n", a.n}, {"basis", items}};
        return 0;
    }
    ExtremalSolution sol = extremal_solution(spec, a.n);
    out.text << show(sol.poly, out.format) << "\n";
    json coords = json::array();
    for (const auto& c : sol.coords) coords.push_back(c.str());
    out.doc = {{"family", a.family},     {"n", a.n},
               {"d", sol.bound.d_max},   {"bound_proven", sol.bound.proven},
               {"coords", coords},       {"poly", to_json(sol.poly)},
               {"text", to_text(sol.poly)}};
    return 0;
}

// ---------------------------------------------------------------- zeta

struct ZetaArgs {
    std::string poly, family, q;
    int n = 0;
    bool extremal = false, rh = false, strict = false;
    double tolerance = 1e-9;
    unsigned precision = 0;
};

RHOptions rh_options(double tolerance, unsigned precision) {
    RHOptions opt;
    opt.tolerance = tolerance;
    opt.precision_bits = precision ? precision : default_precision_bits();
    opt.max_precision_bits = std::max(opt.max_precision_bits, opt.precision_bits * 4);
    return opt;
}

int cmd_zeta(const ZetaArgs& a, Output& out) {
    RPoly w;
    Rational q;
    std::optional<int> expected_sign;
    if (!a.poly.empty()) {
        w = parse_poly(a.poly);
        q = a.q.empty() ? Rational(2) : Rational::parse(a.q);
    } else {
        if (a.family.empty() || a.n < 1) throw PreconditionError("zeta: need --poly, or --family with -n");
        const FamilySpec& spec = family_spec(parse_family(a.family));
        w = extremal(spec, a.n);
        q = a.q.empty() ? spec.q : Rational::parse(a.q);
        if (q == spec.q) expected_sign = spec.sign;
    }
    ZetaPoly z = zeta_from_genfunc(w, q);
    ZetaPoly zm = zeta_from_mds(w, q);
    const bool agree = z.P == zm.P;
    int rc = 0;
    out.doc = to_json(z);
    out.doc["methods_agree"] = agree;
    out.text << "P(T) = " << show(z.P, out.format) << "\n";
    out.text << "n = " << z.n << ", d = " << z.d << ", q = " << q.str() << ", genus = " << z.genus.str()
             << ", deg P = " << z.degree() << "\n";
    out.text << "functional equation sign: " << (z.sign ? std::to_string(z.sign) : std::string("fails")) << "\n";
    if (!agree) {
        out.text << "HARD FAILURE: generating-function and MDS zeta polynomials differ: " << zm.P.str() << "\n";
        rc = kHardFailure;
    }
    if (expected_sign && z.sign != *expected_sign) {
        out.text << "HARD FAILURE: expected functional equation sign " << *expected_sign << "\n";
        out.doc["expected_sign"] = *expected_sign;
        rc = kHardFailure;
    }
    if (a.rh) {
        if (z.degree() < 1) {
            out.text << "RH: P is constant, nothing to check\n";
        } else {
            RHReport r = rh_check(z, rh_options(a.tolerance, a.precision));
            out.doc["rh"] = to_json(r);
            if (!r.converged) {
                out.text << "RH: HARD FAILURE " << r.failure << "\n";
                rc = kHardFailure;
            } else {
                out.text << "RH: " << (r.pass ? "pass" : "FAIL") << " (max deviation " << fmt_double(r.max_abs_deviation)
                         << ", residual " << fmt_double(r.max_residual) << ", " << r.precision_bits << " bits)\n";
                for (const auto& root : r.roots) out.text << "  " << root.re << "  " << root.im << "\n";
                if (!r.pass && a.strict && rc == 0) rc = kConjecture;
            }
        }
    }
    return rc;
}

// ---------------------------------------------------------------- scan

struct ScanArgs {
    std::string family = "type1", range;
    double tolerance = 1e-9;
    unsigned jobs = 1, precision = 0;
    bool strict = false, timing = false, no_rh = false;
};

int cmd_scan(const ScanArgs& a, Output& out) {
    ScanConfig cfg;
    cfg.family = parse_family(a.family);
    std::tie(cfg.n_min, cfg.n_max) = parse_range(a.range);
    cfg.rh = rh_options(a.tolerance, a.precision);
    cfg.jobs = a.jobs;
    cfg.run_rh = !a.no_rh;
    ScanReport rep = run_scan(cfg);

    json rows = json::array();
    out.text << "family " << a.family << ", n = " << cfg.n_min << ".." << cfg.n_max << ", tolerance "
             << fmt_double(cfg.rh.tolerance) << ", precision " << cfg.rh.precision_bits << " bits\n";
    out.text << "    n  bound  d   degP  genus  sign  rh_deviation  status\n";
    for (const ScanRow& r : rep.rows) {
        json row{{"n", r.n},
                 {"bound", r.bound.d_max},
                 {"bound_proven", r.bound.proven},
                 {"hard_ok", r.hard_ok},
                 {"conjecture_ok", r.conjecture_ok}};
        if (r.d) row["d"] = *r.d;
        if (r.zeta_degree) {
            row["zeta_degree"] = *r.zeta_degree;
            row["genus"] = r.genus.str();
        }
        if (r.fe_sign) row["fe_sign"] = *r.fe_sign;
        if (r.rh) {
            row["rh_max_deviation"] = r.rh->max_abs_deviation;
            row["rh_max_residual"] = r.rh->max_residual;
            row["rh_precision_bits"] = r.rh->precision_bits;
            row["rh_pass"] = r.rh->pass;
        }
        if (!r.reason.empty()) row["reason"] = r.reason;
        rows.push_back(row);

        char line[160];
        std::snprintf(line, sizeof line, "%5d  %4d%s %3s  %4s  %5s  %4s  %12s  ", r.n, r.bound.d_max,
                      r.bound.proven ? " " : "?", r.d ? std::to_string(*r.d).c_str() : "-",
                      r.zeta_degree ? std::to_string(*r.zeta_degree).c_str() : "-",
                      r.zeta_degree ? r.genus.str().c_str() : "-",
                      r.fe_sign ? (*r.fe_sign > 0 ? "+1" : "-1") : "-",
                      r.rh ? fmt_double(r.rh->max_abs_deviation).c_str() : "-");
        out.text << line << (r.hard_ok ? (r.conjecture_ok ? "ok" : "conjecture-fail") : "HARD-FAIL");
        if (!r.reason.empty()) out.text << " (" << r.reason << ")";
        out.text << "\n";
    }
    out.text << "hard invariants: " << (rep.hard_ok() ? "ok" : "FAILED")
             << ", conjectures: " << (rep.conjecture_ok() ? "ok" : "FAILED") << "\n";
    out.doc = {{"family", a.family},
               {"n_min", cfg.n_min},
               {"n_max", cfg.n_max},
               {"tolerance", cfg.rh.tolerance},
               {"precision_bits", cfg.rh.precision_bits},
               {"rh", cfg.run_rh},
               {"rows", rows},
               {"hard_ok", rep.hard_ok()},
               {"conjecture_ok", rep.conjecture_ok()}};
    if (a.timing) {
        out.doc["seconds"] = rep.seconds;
        out.text << "time: " << rep.seconds << " s\n";
    }
    if (!rep.hard_ok()) return kHardFailure;
    if (a.strict && !rep.conjecture_ok()) return kConjecture;
    return 0;
}

// ---------------------------------------------------------------- molien

struct MolienArgs {
    std::string group;
    int terms = 13;
};

int cmd_molien(const MolienArgs& a, Output& out) {
    const GroupName id = parse_group(a.group);
    MatrixGroup g = named_group(id);
    RationalFunctionSeries s = molien_series(g, static_cast<std::size_t>(std::max(1, a.terms)));
    auto [da, db] = invariant_degrees(id);
    auto [num, den] = two_generator_molien(da, db);
    const bool closed = s.equals(num, den);
    const std::string form =
        "1/((1-λ^" + std::to_string(da) + ")(1-λ^" + std::to_string(db) + "))";
    json prefix = json::array();
    for (const auto& c : s.prefix) prefix.push_back(c.str());
    out.text << "group " << a.group << ", order " << g.order() << "\n";
    out.text << "Molien series " << (closed ? "= " : "!= ") << form << "\n";
    out.text << "reduced: " << s.str() << "\n";
    out.text << "coefficients:";
    for (const auto& c : s.prefix) out.text << " " << c.str();
    out.text << "\n";
    out.doc = {{"group", a.group},
               {"order", g.order()},
               {"closed_form", form},
               {"matches_closed_form", closed},
               {"reduced", s.str()},
               {"coefficients", prefix}};
    return closed ? 0 : kHardFailure;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string family = "type1", poly;
    int n = 0, samples = 100, part = 0, mu = 1, nu = 0;
    std::uint64_t seed = 1;
};

int verify_duursma(const VerifyArgs& a, Output& out) {
    const char* names[] = {"part (i)", "part (ii)", "part (iii)", "lemma"};
    json parts = json::array();
    bool ok = true;
    for (int part = 1; part <= 4; ++part) {
        if (a.part && a.part != part) continue;
        PropertyRun run = run_duursma_okuda_samples(part, a.samples, a.seed + static_cast<std::uint64_t>(part));
        out.text << names[part - 1] << ": " << run.passed << "/" << run.samples << " pass\n";
        for (std::size_t i = 0; i < run.failures.size() && i < 5; ++i) out.text << "  " << run.failures[i] << "\n";
        parts.push_back({{"part", names[part - 1]}, {"samples", run.samples}, {"passed", run.passed}});
        ok = ok && run.ok();
    }
    out.doc = {{"theorem", "th-duursma-okuda"}, {"seed", a.seed}, {"parts", parts}, {"ok", ok}};
    return ok ? 0 : kHardFailure;
}

int verify_star_cmd(const VerifyArgs& a, Output& out) {
    const Family f = parse_family(a.family);
    StarCheck s = verify_star(f, a.n);
    const UPoly<Rational> factor = star_zeta_factor(f);
    out.text << "W* = " << show(s.star, out.format) << "\n";
    out.text << "W* is the extremal member of degree " << a.n - 2 << ": " << (s.is_extremal ? "yes" : "no") << "\n";
    out.text << "zeta(W*) = (" << factor.str() << ") zeta(W): " << (s.zeta_relation ? "confirmed" : "FAILS") << "\n";
    out.doc = {{"theorem", "star"},          {"family", a.family},     {"n", a.n},
               {"star", to_json(s.star)},    {"is_extremal", s.is_extremal},
               {"zeta_factor", factor.str()}, {"zeta_relation", s.zeta_relation}};
    const bool ok = s.is_extremal && s.zeta_relation;
    if (ok) return 0;
    // the odd 4/3 case is only conjectured
    return f == Family::Q43Odd ? 0 : kHardFailure;
}

int verify_divisibility_cmd(const VerifyArgs& a, Output& out) {
    const Family f = parse_family(a.family);
    const RPoly w = a.poly.empty() ? family_extremal(a.family, a.n) : parse_poly(a.poly);
    DivisibilityResult r = verify_divisibility_prop(w, f);
    out.text << "p(D)W = " << show(r.image, out.format) << "\n";
    out.text << "a = (" << to_text(divisibility_base(f)) << ")^" << r.d - 3 << " divides: " << (r.cofactor ? "yes" : "no")
             << "\n";
    if (r.cofactor) out.text << "odd generator divides the cofactor: " << (r.reduced ? "yes" : "no") << "\n";
    if (r.reduced) out.text << "p(D)W / (a * odd generator) = " << show(*r.reduced, out.format) << "\n";
    out.doc = {{"theorem", "divisibility"}, {"family", a.family}, {"d", r.d}, {"image", to_json(r.image)},
               {"holds", r.holds()}};
    if (r.reduced) out.doc["reduced"] = to_json(*r.reduced);
    return r.holds() ? 0 : kHardFailure;
}

int verify_extremal_identities(const VerifyArgs& a, Output& out) {
    const Family f = parse_family(a.family);
    const RPoly w = family_extremal(a.family, a.n);
    const bool diff = verify_extremal_diff_identity(w, f);
    out.text << "differential identity: " << (diff ? "holds" : "FAILS") << "\n";
    out.doc = {{"theorem", "extremal-identity"}, {"family", a.family}, {"n", a.n}, {"differential", diff}};
    bool ok = diff;
    const int d = *weight_profile(w, family_spec(f).q).d;
    if (d % 2 == 0) {
        const bool bin = verify_zeta_binomial_identity(w, f);
        out.text << "binomial zeta identity: " << (bin ? "holds" : "FAILS") << "\n";
        out.doc["binomial"] = bin;
        ok = ok && bin;
    } else {
        out.text << "binomial zeta identity: not applicable (d - 2 odd)\n";
    }
    return ok ? 0 : kHardFailure;
}

int verify_burmann(const VerifyArgs& a, Output& out) {
    const Family f = parse_family(a.family);
    const Rational v = burmann_coefficient(f, a.mu, a.nu);
    const int n = f == Family::Q43Odd ? 12 * a.mu + 6 : 12 * a.mu + 2 * a.nu;
    const Rational coeff = extremal(family_spec(f), n).coeff(2 * a.mu + 2);
    const bool ok = v == coeff;
    out.text << "A_" << 2 * a.mu + 2 << " (n = " << n << ") = " << v.str() << ", extremal coefficient "
             << coeff.str() << ": " << (ok ? "match" : "MISMATCH") << "\n";
    out.doc = {{"theorem", "burmann"}, {"family", a.family}, {"mu", a.mu}, {"nu", a.nu}, {"n", n},
               {"value", v.str()},     {"extremal", coeff.str()}, {"match", ok}};
    return ok ? 0 : kHardFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Formal weight enumerators: construction, zeta polynomials, invariant theory checks"};
    app.require_subcommand(1);
    std::string format = "text", output;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    app.add_option("--output,-o", output, "Write the report to this file instead of stdout");

    std::function<int(Output&)> run;

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Print a generator, a graded basis or an extremal enumerator");
    g->add_option("--family,-f", gen.family, "type1, type4, q43, q43-odd or ozeki");
    g->add_option("-n", gen.n, "Degree");
    g->add_flag("--extremal", gen.extremal, "Extremal enumerator (default)");
    g->add_flag("--basis", gen.basis, "List the graded basis");
    g->add_option("--name", gen.name, "Generator: phi4, phi3, phi6, w2, wh8, w12, w12p");
    g->add_option("-q", gen.q, "q for w2");
    g->callback([&] { run = [&](Output& o) { return cmd_gen(gen, o); }; });

    ZetaArgs zeta;
    auto* z = app.add_subcommand("zeta", "Zeta polynomial, functional equation and RH check");
    z->add_option("--poly", zeta.poly, "Enumerator, e.g. \"x^2+1/3*y^2\"");
    z->add_option("-q", zeta.q, "Field size q (rational)");
    z->add_option("--family,-f", zeta.family, "Use the extremal member of this family");
    z->add_flag("--extremal", zeta.extremal, "Extremal member (default with --family)");
    z->add_option("-n", zeta.n, "Degree");
    z->add_flag("--rh", zeta.rh, "Locate the roots of P");
    z->add_option("--tolerance", zeta.tolerance, "RH deviation tolerance");
    z->add_option("--precision", zeta.precision, "Starting precision in bits (default FWE_PRECISION_BITS or 128)");
    z->add_flag("--strict", zeta.strict, "Nonzero exit when the RH check fails");
    z->callback([&] { run = [&](Output& o) { return cmd_zeta(zeta, o); }; });

    ScanArgs scan;
    auto* s = app.add_subcommand("scan", "Scan extremal enumerators over a degree range");
    s->add_option("--family,-f", scan.family, "Family id");
    s->add_option("-n", scan.range, "Degrees, N or A..B")->required();
    s->add_option("--tolerance", scan.tolerance, "RH deviation tolerance");
    s->add_option("--jobs,-j", scan.jobs, "Worker threads");
    s->add_option("--precision", scan.precision, "Starting precision in bits");
    s->add_flag("--strict", scan.strict, "Nonzero exit on conjecture failures");
    s->add_flag("--timing", scan.timing, "Report wall time (makes output non-reproducible)");
    s->add_flag("--no-rh", scan.no_rh, "Skip the root location step");
    s->callback([&] { run = [&](Output& o) { return cmd_scan(scan, o); }; });

    MolienArgs molien;
    auto* m = app.add_subcommand("molien", "Group order and Molien series");
    m->add_option("--group,-g", molien.group, "g1, g4, g43m or g43")->required();
    m->add_option("--terms", molien.terms, "Number of series coefficients to print");
    m->callback([&] { run = [&](Output& o) { return cmd_molien(molien, o); }; });

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "Run a theorem verifier");
    v->require_subcommand(1);
    auto* vdo = v->add_subcommand("th-duursma-okuda", "Randomized check of the transformation theorem and lemma");
    vdo->add_option("--samples", ver.samples, "Samples per part");
    vdo->add_option("--seed", ver.seed, "Base seed");
    vdo->add_option("--part", ver.part, "1, 2, 3 (theorem parts) or 4 (lemma); default all");
    vdo->callback([&] { run = [&](Output& o) { return verify_duursma(ver, o); }; });
    auto* vst = v->add_subcommand("star", "Star operator on the extremal enumerator");
    vst->add_option("--family,-f", ver.family)->required();
    vst->add_option("-n", ver.n)->required();
    vst->callback([&] { run = [&](Output& o) { return verify_star_cmd(ver, o); }; });
    auto* vdv = v->add_subcommand("divisibility", "Divisibility of p(D)W for type1/type4 with d >= 4");
    vdv->add_option("--family,-f", ver.family)->required();
    vdv->add_option("-n", ver.n, "Degree of the extremal member");
    vdv->add_option("--poly", ver.poly, "Explicit enumerator instead of the extremal one");
    vdv->callback([&] { run = [&](Output& o) { return verify_divisibility_cmd(ver, o); }; });
    auto* vex = v->add_subcommand("extremal-identity", "Differential and binomial zeta identities");
    vex->add_option("--family,-f", ver.family)->required();
    vex->add_option("-n", ver.n)->required();
    vex->callback([&] { run = [&](Output& o) { return verify_extremal_identities(ver, o); }; });
    auto* vbu = v->add_subcommand("burmann", "Closed-form coefficient against the extremal construction");
    vbu->add_option("--family,-f", ver.family)->required();
    vbu->add_option("--mu", ver.mu)->required();
    vbu->add_option("--nu", ver.nu);
    vbu->callback([&] { run = [&](Output& o) { return verify_burmann(ver, o); }; });

    CLI11_PARSE(app, argc, argv);

    Output out;
    out.format = format == "json" ? Format::Json : format == "latex" ? Format::Latex : Format::Text;
    int rc = 0;
    try {
        rc = run(out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const ZetaError& e) {
        // input is not an enumerator with d, dual d >= 2
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kHardFailure;
    }
    const std::string body = out.format == Format::Json ? out.doc.dump(2) + "\n" : out.text.str();
    if (output.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(output);
        if (!f) {
            std::cerr << "error: cannot write " << output << "\n";
            return kBadInput;
        }
        f << body;
    }
    return rc;
}
