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

// Library walk-through: build extremal enumerators, compute their zeta
// polynomials both ways and locate the roots.
//
//   demo_extremal [family] [degree]     defaults: q43 12

#include <fwe/fwe.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    using namespace fwe;
    const Family fam = parse_family(argc > 1 ? argv[1] : "q43");
    const int n = argc > 2 ? std::atoi(argv[2]) : 12;
    const FamilySpec& spec = family_spec(fam);

    try {
        ExtremalSolution sol = extremal_solution(spec, n);
        std::cout << family_id(fam) << ", degree " << n << ", q = " << spec.q.str() << "\n";
        std::cout << "basis:\n";
        for (const auto& e : basis(spec, n)) std::cout << "  W^" << e.l << " * g^" << e.m << "\n";
        std::cout << "extremal enumerator (d = " << sol.bound.d_max << (sol.bound.proven ? "" : ", bound unproven")
                  << "):\n  " << to_text(sol.poly) << "\n";

        ZetaPoly z = zeta_from_genfunc(sol.poly, spec.q);
        ZetaPoly zm = zeta_from_mds(sol.poly, spec.q);
        std::cout << "zeta polynomial:\n  " << z.P.str() << "\n";
        std::cout << "MDS expansion agrees: " << (z.P == zm.P ? "yes" : "no") << "\n";
        std::cout << "genus " << z.genus.str() << ", functional equation sign " << z.sign << "\n";

        if (z.degree() >= 1) {
            RHReport r = rh_check(z);
            std::cout << "roots on |T| = " << r.target_modulus << ": " << (r.pass ? "yes" : "no")
                      << " (max deviation " << r.max_abs_deviation << ")\n";
        }

        if (star_admissible(fam, n)) {
            StarCheck s = verify_star(fam, n);
            std::cout << "star image is extremal of degree " << n - 2 << ": " << (s.is_extremal ? "yes" : "no")
                      << ", zeta factor " << star_zeta_factor(fam).str() << ": "
                      << (s.zeta_relation ? "yes" : "no") << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
