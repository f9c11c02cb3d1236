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
 * Degree scans over a family. Each row records extremal construction, bound
 * saturation, both zeta routes, the functional equation and the numerical
 * RH check. Hard failures (proven statements) and conjecture failures (RH,
 * unproven bounds) are kept apart so callers can choose an exit policy.
 */

#include <fwe/families.hpp>
#include <fwe/rh.hpp>
#include <fwe/zeta.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace fwe {

struct ScanRow {
    int n = 0;
    BoundResult bound{0, true};
    std::optional<int> d;
    std::optional<int> zeta_degree;
    Rational genus;
    std::optional<int> fe_sign;
    std::optional<RHReport> rh;  // absent for constant P
    bool hard_ok = false;
    bool conjecture_ok = false;
    std::string reason;  // why hard_ok or conjecture_ok is false
};

struct ScanConfig {
    Family family = Family::TypeI;
    int n_min = 1;
    int n_max = 1;
    RHOptions rh;
    unsigned jobs = 1;
    bool run_rh = true;
};

struct ScanReport {
    ScanConfig config;
    std::vector<ScanRow> rows;  // ordered by degree
    double seconds = 0;

    bool hard_ok() const {
        return std::all_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.hard_ok; });
    }
    bool conjecture_ok() const {
        return std::all_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.conjecture_ok; });
    }
};

inline ScanRow scan_degree(const FamilySpec& spec, int n, const ScanConfig& cfg) {
    ScanRow row;
    row.n = n;
    row.bound = bound(spec, n);
    auto fail = [&](const std::string& why, bool hard) {
        (hard ? row.hard_ok : row.conjecture_ok) = false;
        if (!row.reason.empty()) row.reason += "; ";
        row.reason += why;
    };
    row.hard_ok = row.conjecture_ok = true;
    RPoly w;
    try {
        w = extremal(spec, n);
    } catch (const ExtremalError& e) {
        fail(e.what(), row.bound.proven);
        return row;
    }
    row.d = *weight_profile(w, spec.q).d;
    try {
        ZetaPoly z = zeta_from_genfunc(w, spec.q);
        ZetaPoly zm = zeta_from_mds(w, spec.q);
        if (!(z.P == zm.P)) fail("zeta methods disagree", true);
        row.zeta_degree = z.degree();
        row.genus = z.genus;
        row.fe_sign = z.sign == 0 ? std::nullopt : std::optional<int>(z.sign);
        if (z.sign != spec.sign) fail("functional equation sign is not " + std::to_string(spec.sign), true);
        if (Rational(z.degree()) != z.genus * Rational(2)) fail("deg P != 2g", true);
        if (cfg.run_rh && z.degree() >= 1) {
            row.rh = rh_check(z, cfg.rh);
            if (!row.rh->converged) fail(row.rh->failure, true);
            else if (!row.rh->pass) fail("root off the critical circle", false);
        }
    } catch (const Error& e) {
        fail(e.what(), true);
    }
    return row;
}

/// Rows for every degree in [n_min, n_max] with a nonempty basis.
inline ScanReport run_scan(const ScanConfig& cfg) {
    if (cfg.n_min < 1 || cfg.n_max < cfg.n_min) throw PreconditionError("scan: invalid degree range");
    const auto start = std::chrono::steady_clock::now();
    const FamilySpec& spec = family_spec(cfg.family);
    std::vector<int> degrees;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n)
        if (!basis(spec, n).empty()) degrees.push_back(n);
    ScanReport rep;
    rep.config = cfg;
    rep.rows.resize(degrees.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < degrees.size(); i = next++) rep.rows[i] = scan_degree(spec, degrees[i], cfg);
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(degrees.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace fwe
