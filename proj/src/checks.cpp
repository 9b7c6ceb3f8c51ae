#include "eulerian/checks.hpp"

#include "eulerian/polynomials.hpp"

#include <algorithm>

namespace eulerian {

void CheckOptions::override_n_max(int n) {
    n_max_triangles = n;
    n_max_identities = n;
    n_max_worpitzky = std::min(n, 15);
    n_max_egf = n;
    n_max_moments = std::min(n, 12);
    n_max_conjectures = n;
}

namespace {

std::string nk(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

const std::vector<Rational>& worpitzky_xs() {
    static const std::vector<Rational> xs = [] {
        std::vector<Rational> v;
        for (int i = -6; i <= 6; ++i) v.push_back(Rational(i));
        v.push_back(Rational(1, 2));
        v.push_back(Rational(-3, 2));
        return v;
    }();
    return xs;
}

const std::vector<Rational>& egf_ts() {
    static const std::vector<Rational> ts = {Rational(0), Rational(1, 3), Rational(1, 2),
                                             Rational(2), Rational(7, 2)};
    return ts;
}

CheckResult route_equivalence_a(int n_max) {
    CheckResult r{"triangles/route-a-recurrence-vs-closed", true, "n<=" + std::to_string(n_max)};
    for (int n = 0; n <= n_max && r.pass; ++n) {
        Row row = row_a(n);
        for (int k = 0; k <= n; ++k)
            if (row[static_cast<size_t>(k)] != closed_form_a(n, k)) {
                r.pass = false;
                r.detail = nk(n, k);
                break;
            }
    }
    return r;
}

CheckResult route_equivalence_b(int n_max) {
    CheckResult r{"triangles/route-b-recurrence-vs-closed", true, "n<=" + std::to_string(n_max)};
    for (int n = 0; n <= n_max && r.pass; ++n) {
        Row row = row_b(n);
        for (int k = 0; k <= n; ++k)
            if (row[static_cast<size_t>(k)] != closed_form_b(n, k)) {
                r.pass = false;
                r.detail = nk(n, k);
                break;
            }
    }
    return r;
}

CheckResult route_equivalence_d(int n_max) {
    CheckResult r{"triangles/route-d-coupled-vs-independent-vs-b", true,
                  "n<=" + std::to_string(n_max)};
    for (int n = 0; n <= n_max && r.pass; ++n) {
        auto [d, dt] = coupled_rows_d(n);
        Row di = independent_row_d(n, Family::D);
        Row dti = independent_row_d(n, Family::Dtilde);
        for (int k = 0; k <= n; ++k) {
            const size_t ks = static_cast<size_t>(k);
            if (d[ks] != di[ks] || dt[ks] != dti[ks] || d[ks] != d_from_b(n, k, Family::D) ||
                dt[ks] != d_from_b(n, k, Family::Dtilde)) {
                r.pass = false;
                r.detail = nk(n, k);
                break;
            }
        }
    }
    return r;
}

CheckResult row_sums(int n_max) {
    CheckResult r{"triangles/row-sums", true, "n<=" + std::to_string(n_max)};
    for (int n = 0; n <= n_max && r.pass; ++n) {
        const BigInt half_order =
            n == 0 ? BigInt(1) : pow_bigint(2, static_cast<unsigned>(n - 1)) * factorial(n);
        auto sum = [](const Row& row) {
            BigInt s = 0;
            for (const BigInt& v : row) s += v;
            return s;
        };
        auto [d, dt] = coupled_rows_d(n);
        if (sum(row_a(n)) != factorial(n) ||
            sum(row_b(n)) != pow_bigint(2, static_cast<unsigned>(n)) * factorial(n) ||
            sum(d) != (n == 0 ? BigInt(1) : half_order) || sum(dt) != (n == 0 ? BigInt(0) : half_order)) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n);
        }
    }
    return r;
}

CheckResult structural_invariants(int n_max) {
    CheckResult r{"triangles/structural-invariants", true, "n<=" + std::to_string(n_max)};
    try {
        for (Family f : {Family::A, Family::B, Family::D, Family::Dtilde})
            build_triangle(f, n_max).validate();
    } catch (const std::logic_error& e) {
        r.pass = false;
        r.detail = e.what();
    }
    return r;
}

CheckResult difference_identity(int n_max) {
    CheckResult r{"triangles/difference-binomial", true, "n<=" + std::to_string(n_max)};
    for (int n = 0; n <= n_max; ++n)
        if (!difference_check(n)) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n);
            break;
        }
    return r;
}

CheckResult reversal_d(int n_max) {
    CheckResult r{"triangles/row-reversal-d", true, "n<=" + std::to_string(n_max)};
    for (int n = 0; n <= n_max; ++n)
        if (!symmetry_check_d(n)) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n);
            break;
        }
    return r;
}

CheckResult reversal_a(int n_max) {
    CheckResult r{"triangles/row-reversal-a", true, "n<=" + std::to_string(n_max)};
    for (int n = 1; n <= n_max && r.pass; ++n) {
        Row row = row_a(n);
        for (int k = 0; k < n; ++k)
            if (row[static_cast<size_t>(k)] != row[static_cast<size_t>(n - 1 - k)]) {
                r.pass = false;
                r.detail = nk(n, k);
                break;
            }
    }
    return r;
}

CheckResult b_splits(int n_max) {
    CheckResult r{"triangles/b-equals-d-plus-dtilde", true, "n<=" + std::to_string(n_max)};
    for (int n = 0; n <= n_max && r.pass; ++n) {
        Row b = row_b(n);
        auto [d, dt] = coupled_rows_d(n);
        for (int k = 0; k <= n; ++k)
            if (b[static_cast<size_t>(k)] != d[static_cast<size_t>(k)] + dt[static_cast<size_t>(k)]) {
                r.pass = false;
                r.detail = nk(n, k);
                break;
            }
    }
    return r;
}

CheckResult brute_cross_check(int brute_n, std::uint64_t budget) {
    CheckResult r{"triangles/brute-force-histograms", true,
                  "n<=" + std::to_string(brute_n)};
    for (int n = 0; n <= brute_n && r.pass; ++n) {
        auto [d, dt] = coupled_rows_d(n);
        if (brute_triangle(Family::A, n, budget) != row_a(n) ||
            brute_triangle(Family::B, n, budget) != row_b(n) ||
            brute_triangle(Family::D, n, budget) != d ||
            brute_triangle(Family::Dtilde, n, budget) != dt) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n);
        }
    }
    return r;
}

}  // namespace

std::vector<CheckResult> check_triangles(const CheckOptions& opt) {
    std::vector<CheckResult> out;
    out.push_back(route_equivalence_a(opt.n_max_triangles));
    out.push_back(route_equivalence_b(opt.n_max_triangles));
    out.push_back(route_equivalence_d(opt.n_max_triangles));
    out.push_back(row_sums(opt.n_max_triangles));
    out.push_back(structural_invariants(opt.n_max_triangles));
    out.push_back(difference_identity(opt.n_max_triangles));
    out.push_back(reversal_d(opt.n_max_triangles));
    out.push_back(reversal_a(opt.n_max_triangles));
    out.push_back(b_splits(opt.n_max_triangles));
    out.push_back(brute_cross_check(opt.brute_n, opt.budget));
    return out;
}

namespace {

CheckResult worpitzky_family(Family f, int n_max) {
    CheckResult r{"identities/worpitzky-" + family_name(f), true, "n<=" + std::to_string(n_max)};
    for (int n = 0; n <= n_max && r.pass; ++n)
        for (const Rational& x : worpitzky_xs()) {
            WorpitzkyValues v = worpitzky(f, n, x);
            if (v.lhs != v.rhs) {
                r.pass = false;
                r.detail = "n=" + std::to_string(n) + " x=" + to_string(x);
                break;
            }
        }
    return r;
}

CheckResult alternating_binomial(int n_max) {
    CheckResult r{"identities/alternating-binomial", true, "n<=" + std::to_string(n_max)};
    for (int n = 0; n <= n_max && r.pass; ++n)
        for (const Rational& x : worpitzky_xs())
            if (!binomial_alternating_identity_check(n, x)) {
                r.pass = false;
                r.detail = "n=" + std::to_string(n) + " x=" + to_string(x);
                break;
            }
    return r;
}

CheckResult ab_relation(int n_max) {
    CheckResult r{"identities/a-to-b-substitution", true, "n<=" + std::to_string(n_max)};
    for (int n = 0; n <= n_max; ++n)
        if (!ab_relation_check(n)) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n);
            break;
        }
    return r;
}

CheckResult db_relation(int n_max) {
    CheckResult r{"identities/d-from-b-halving", true, "n<=" + std::to_string(n_max)};
    for (int n = 0; n <= n_max; ++n)
        if (!db_relation_check(n)) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n);
            break;
        }
    return r;
}

CheckResult coefficient_symmetry(int n_max) {
    CheckResult r{"identities/coefficient-symmetry-ab", true, "n<=" + std::to_string(n_max)};
    for (int n = 0; n <= n_max; ++n) {
        if (n >= 1 && !symmetry_identity_check(Family::A, n)) {
            r.pass = false;
            r.detail = "family=A n=" + std::to_string(n);
            break;
        }
        if (!symmetry_identity_check(Family::B, n)) {
            r.pass = false;
            r.detail = "family=B n=" + std::to_string(n);
            break;
        }
    }
    return r;
}

CheckResult evaluation_symmetry(int n_max) {
    CheckResult r{"identities/evaluation-symmetry-ab", true, "n<=" + std::to_string(n_max)};
    const std::vector<Rational> ts = {Rational(2), Rational(1, 2), Rational(-3), Rational(7, 5)};
    for (int n = 1; n <= n_max && r.pass; ++n) {
        Polynomial pa = eulerian_poly(Family::A, n);
        Polynomial pb = eulerian_poly(Family::B, n);
        for (const Rational& t : ts) {
            if (pow_rational(t, n - 1) * pa(1 / t) != pa(t) ||
                pow_rational(t, n) * pb(1 / t) != pb(t)) {
                r.pass = false;
                r.detail = "n=" + std::to_string(n) + " t=" + to_string(t);
                break;
            }
        }
    }
    return r;
}

CheckResult derivative_recurrence(Family f, int n_max) {
    CheckResult r{"identities/derivative-recurrence-" + family_name(f), true,
                  "n<=" + std::to_string(n_max)};
    Polynomial p = eulerian_poly(f, 0);
    for (int n = 1; n <= n_max; ++n) {
        p = poly_step_d(f, p, n);
        if (!p.same_as(eulerian_poly(f, n))) {
            r.pass = false;
            r.detail = "n=" + std::to_string(n);
            break;
        }
    }
    return r;
}

CheckResult egf_coefficients(Family f, int n_max) {
    CheckResult r{"identities/egf-coefficients-" + family_name(f), true,
                  "n<=" + std::to_string(n_max)};
    for (const Rational& t : egf_ts()) {
        PowerSeries s = egf_series(f, t, n_max);
        Rational fact = 1;
        for (int n = 0; n <= n_max; ++n) {
            if (n > 0) fact *= n;
            if (s.coeff(n) * fact != eulerian_poly(f, n)(t)) {
                r.pass = false;
                r.detail = "t=" + to_string(t) + " n=" + std::to_string(n);
                return r;
            }
        }
    }
    return r;
}

CheckResult egf_pde(Family f, int order) {
    CheckResult r{"identities/egf-pde-" + family_name(f), true, "order=" + std::to_string(order)};
    for (const Rational& t : egf_ts())
        if (!egf_pde_check(f, t, order)) {
            r.pass = false;
            r.detail = "t=" + to_string(t);
            break;
        }
    return r;
}

CheckResult euler_summation(const Rational& tol) {
    CheckResult r{"identities/geometric-power-summation-ab", true, "terms=120 n<=5"};
    const std::vector<Rational> ts = {Rational(1, 2), Rational(1, 3)};
    for (const Rational& t : ts)
        for (int n = 0; n <= 5; ++n) {
            const Rational denom = pow_rational(1 - t, n + 1);
            const Rational closed_a = t * eulerian_poly(Family::A, n)(t) / denom;
            const Rational closed_b = eulerian_poly(Family::B, n)(t) / denom;
            if (abs(summation_partial(Family::A, t, n, 120) - closed_a) > tol ||
                abs(summation_partial(Family::B, t, n, 120) - closed_b) > tol) {
                r.pass = false;
                r.detail = "t=" + to_string(t) + " n=" + std::to_string(n);
                return r;
            }
        }
    return r;
}

}  // namespace

std::vector<CheckResult> check_identities(const CheckOptions& opt) {
    std::vector<CheckResult> out;
    for (Family f : {Family::A, Family::B, Family::D, Family::Dtilde})
        out.push_back(worpitzky_family(f, opt.n_max_worpitzky));
    out.push_back(alternating_binomial(opt.n_max_identities));
    out.push_back(ab_relation(opt.n_max_identities));
    out.push_back(db_relation(opt.n_max_identities));
    out.push_back(coefficient_symmetry(opt.n_max_identities));
    out.push_back(evaluation_symmetry(opt.n_max_identities));
    out.push_back(derivative_recurrence(Family::D, opt.n_max_identities));
    out.push_back(derivative_recurrence(Family::Dtilde, opt.n_max_identities));
    for (Family f : {Family::A, Family::B, Family::D, Family::Dtilde})
        out.push_back(egf_coefficients(f, opt.n_max_egf));
    out.push_back(egf_pde(Family::D, opt.pde_order));
    out.push_back(egf_pde(Family::Dtilde, opt.pde_order));
    out.push_back(euler_summation(opt.tol));
    return out;
}

namespace {

std::string deviation_note(const MomentReport& rep) {
    std::string dev = rep.max_deviation == 0 ? "dev=0" : "dev<=" + decimal_magnitude(rep.max_deviation);
    std::string bound = rep.max_bound == 0 ? "bound=0" : "bound<=" + decimal_magnitude(rep.max_bound);
    return dev + " " + bound;
}

CheckResult moment_match(MeasureFamily mf, const std::string& tag, const Rational& t,
                         const CheckOptions& opt) {
    CheckResult r{"moments/match-" + tag, true, "t=" + to_string(t)};
    MomentReport rep = moment_theorem_check(mf, t, opt.n_max_moments, opt.tol);
    r.pass = rep.pass;
    r.detail = "t=" + to_string(t) + " n<=" + std::to_string(opt.n_max_moments) + " " +
               deviation_note(rep);
    if (!rep.pass) r.detail += " first-fail-n=" + std::to_string(rep.first_fail_n);
    return r;
}

CheckResult nu_match(const Rational& t, const CheckOptions& opt) {
    CheckResult r{"moments/match-Nu", true, ""};
    MomentReport rep = nu_check(t, opt.n_max_moments, opt.tol);
    r.pass = rep.pass;
    r.detail = "t=" + to_string(t) + " n<=" + std::to_string(opt.n_max_moments) + " " +
               deviation_note(rep);
    if (!rep.pass) r.detail += " first-fail-n=" + std::to_string(rep.first_fail_n);
    return r;
}

CheckResult atom_streams(const CheckOptions& opt) {
    CheckResult r{"moments/atom-streams", true, "weights>0 locations-increasing"};
    for (MeasureFamily mf : {MeasureFamily::A, MeasureFamily::B, MeasureFamily::D, MeasureFamily::Nu})
        for (const Rational& t : opt.moment_ts) {
            if (mf == MeasureFamily::Nu && t < 1) continue;
            Measure mu = measure_for(mf, t);
            if (!mu.stream) continue;
            Rational prev_loc;
            for (std::uint64_t k = 0; k < 30; ++k) {
                Atom a = mu.stream->atom(k);
                if (a.weight <= 0 || (k > 0 && a.location <= prev_loc)) {
                    r.pass = false;
                    r.detail = "t=" + to_string(t) + " k=" + std::to_string(k);
                    return r;
                }
                prev_loc = a.location;
            }
        }
    return r;
}

// mu_D must equal the half-half mixture of mu_B and the point mass at 1-t
// after merging coincident locations.
CheckResult d_mixture(const CheckOptions& opt) {
    CheckResult r{"moments/d-is-half-b-plus-point-mass", true, ""};
    const int atoms_checked = 24;
    for (const Rational& t : opt.moment_ts) {
        if (t == 1) continue;  // density branch; covered by the moment match
        Measure d = measure_for(MeasureFamily::D, t);
        Measure b = measure_for(MeasureFamily::B, t);

        std::vector<Atom> mixture;
        mixture.push_back({1 - t, Rational(1, 2)});
        if (b.stream)
            for (int k = 0; k < atoms_checked; ++k) {
                Atom a = b.stream->atom(static_cast<std::uint64_t>(k));
                mixture.push_back({a.location, a.weight / 2});
            }
        else
            for (const Atom& a : b.atoms) mixture.push_back({a.location, a.weight / 2});
        std::sort(mixture.begin(), mixture.end(),
                  [](const Atom& x, const Atom& y) { return x.location < y.location; });
        std::vector<Atom> merged;
        for (const Atom& a : mixture)
            if (!merged.empty() && merged.back().location == a.location)
                merged.back().weight += a.weight;
            else
                merged.push_back(a);

        std::vector<Atom> direct = d.atoms;
        if (d.stream)
            for (int k = 0; direct.size() < merged.size(); ++k)
                direct.push_back(d.stream->atom(static_cast<std::uint64_t>(k)));
        for (size_t i = 0; i < merged.size() && i < direct.size(); ++i)
            if (merged[i].location != direct[i].location || merged[i].weight != direct[i].weight) {
                r.pass = false;
                r.detail = "t=" + to_string(t) + " atom=" + std::to_string(i);
                return r;
            }
    }
    r.detail = "atoms<=24 per t";
    return r;
}

CheckResult hankel_positivity(Family f, const CheckOptions& opt) {
    CheckResult r{"moments/hankel-positivity-" + family_name(f), true,
                  "m<=" + std::to_string(opt.hankel_order)};
    const std::vector<Rational> ts = {Rational(1, 2), Rational(1), Rational(2)};
    for (const Rational& t : ts) {
        PositivityReport rep = positive_definite_check(f, t, opt.hankel_order);
        if (!rep.all_positive) {
            r.pass = false;
            r.detail = "t=" + to_string(t);
            break;
        }
    }
    return r;
}

CheckResult dtilde_witness_check() {
    CheckResult r{"moments/dtilde-negative-minor-witness", true, ""};
    for (const Rational& t : {Rational(1, 2), Rational(2)}) {
        std::vector<Rational> one{t};
        auto w = dtilde_not_pd_witness(one);
        if (!w || w->m != 2 || !(w->minor < 0)) {
            r.pass = false;
            r.detail = "t=" + to_string(t) + " no negative minor found";
            return r;
        }
    }
    r.detail = "t=1/2,2 m=2";
    return r;
}

}  // namespace

std::vector<CheckResult> check_moments(const CheckOptions& opt) {
    std::vector<CheckResult> out;
    for (const Rational& t : opt.moment_ts) {
        out.push_back(moment_match(MeasureFamily::A, "A", t, opt));
        out.push_back(moment_match(MeasureFamily::B, "B", t, opt));
        out.push_back(moment_match(MeasureFamily::D, "D", t, opt));
    }
    for (const Rational& t : opt.moment_ts)
        if (t >= 1) out.push_back(nu_match(t, opt));
    out.push_back(atom_streams(opt));
    out.push_back(d_mixture(opt));
    out.push_back(hankel_positivity(Family::A, opt));
    out.push_back(hankel_positivity(Family::B, opt));
    out.push_back(hankel_positivity(Family::D, opt));
    out.push_back(dtilde_witness_check());
    return out;
}

std::vector<CheckResult> check_conjectures(const CheckOptions& opt) {
    ConjectureScan scan = scan_conjectures(opt.n_max_conjectures);
    std::vector<CheckResult> out;
    CheckResult rows{"conjectures/rows-unimodal", true,
                     std::to_string(scan.rows_checked) + " rows n<=" +
                         std::to_string(opt.n_max_conjectures) + " (empirical support, not proof)"};
    CheckResult diag{"conjectures/diagonals-strictly-increasing", true,
                     std::to_string(scan.diagonals_checked) + " diagonals n<=" +
                         std::to_string(opt.n_max_conjectures) + " (empirical support, not proof)"};
    for (const std::string& v : scan.violations) {
        if (v.find("not unimodal") != std::string::npos) {
            rows.pass = false;
            rows.detail = v;
        } else {
            diag.pass = false;
            diag.detail = v;
        }
    }
    if (!scan.weak_ties.empty()) {
        diag.pass = false;
        diag.detail = "weak tie: " + scan.weak_ties.front();
    }
    out.push_back(rows);
    out.push_back(diag);
    return out;
}

std::vector<CheckResult> check_all(const CheckOptions& opt) {
    std::vector<CheckResult> out = check_triangles(opt);
    for (auto&& r : check_identities(opt)) out.push_back(std::move(r));
    for (auto&& r : check_moments(opt)) out.push_back(std::move(r));
    for (auto&& r : check_conjectures(opt)) out.push_back(std::move(r));
    return out;
}

}  // namespace eulerian
