#pragma once

#include "eulerian/moments.hpp"
#include "eulerian/numeric.hpp"
#include "eulerian/signed_permutations.hpp"

#include <string>
#include <vector>

namespace eulerian {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct CheckOptions {
    int n_max_triangles = 30;
    int n_max_identities = 20;
    int n_max_worpitzky = 15;
    int n_max_egf = 20;
    int pde_order = 8;
    int n_max_moments = 10;
    int n_max_conjectures = 25;
    int hankel_order = 6;
    int brute_n = 6;  // brute-force cross-checks inside the triangles suite
    std::vector<Rational> moment_ts = {Rational(1, 4), Rational(1, 2), Rational(3, 4),
                                       Rational(1),    Rational(2),    Rational(3)};
    Rational tol = Rational(1, 1000000000);
    std::uint64_t budget = kDefaultEnumerationBudget;

    // Applies a single user-supplied depth to every per-suite cap.
    void override_n_max(int n);
};

std::vector<CheckResult> check_triangles(const CheckOptions& opt);
std::vector<CheckResult> check_identities(const CheckOptions& opt);
std::vector<CheckResult> check_moments(const CheckOptions& opt);
std::vector<CheckResult> check_conjectures(const CheckOptions& opt);
std::vector<CheckResult> check_all(const CheckOptions& opt);

inline bool all_passed(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace eulerian
