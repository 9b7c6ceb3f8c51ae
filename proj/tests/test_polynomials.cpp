#include "eulerian/polynomials.hpp"

#include <doctest.h>

using namespace eulerian;

namespace {
Rational R(long num, long den = 1) { return Rational(num, den); }
}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    Polynomial p({R(1), R(2), R(3)});  // 1 + 2t + 3t^2
    CHECK(p(R(2)) == 17);
    CHECK(p(R(-1, 2)) == R(3, 4));
    CHECK(p.degree() == 2);
    CHECK(p.derivative().same_as(Polynomial({R(2), R(6)})));
    CHECK(p.substitute_square().same_as(Polynomial({R(1), R(0), R(2), R(0), R(3)})));
    CHECK(Polynomial({R(1), R(1)}).pow(2).same_as(Polynomial({R(1), R(2), R(1)})));
    CHECK(Polynomial({R(1), R(0), R(0)}).same_as(Polynomial({R(1)})));
    CHECK((p * Polynomial({R(0)})).degree() == -1);
    CHECK((R(2) * p)(R(1)) == 12);
}

TEST_CASE("Eulerian polynomials from triangle rows") {
    CHECK(eulerian_poly(Family::B, 2).same_as(Polynomial({R(1), R(6), R(1)})));
    CHECK(eulerian_poly(Family::D, 1).same_as(Polynomial({R(1), R(0)})));
    CHECK(eulerian_poly(Family::A, 3)(R(1)) == 6);
    CHECK(eulerian_poly(Family::D, 4)(R(0)) == 1);
    CHECK(eulerian_poly(Family::B, 2)(R(1)) == 8);
    CHECK_THROWS_AS(eulerian_poly(Family::BrentiD, 2), std::invalid_argument);
}

TEST_CASE("evaluation at 1 gives the group orders") {
    for (int n = 1; n <= 12; ++n) {
        const Rational half = Rational(pow_bigint(2, static_cast<unsigned>(n - 1)) * factorial(n));
        CHECK(eulerian_poly(Family::A, n)(R(1)) == Rational(factorial(n)));
        CHECK(eulerian_poly(Family::B, n)(R(1)) == 2 * half);
        CHECK(eulerian_poly(Family::D, n)(R(1)) == half);
        CHECK(eulerian_poly(Family::Dtilde, n)(R(1)) == half);
    }
}

TEST_CASE("coefficient symmetry") {
    CHECK(symmetry_identity_check(Family::A, 4));
    CHECK(symmetry_identity_check(Family::B, 4));
    CHECK(symmetry_identity_check(Family::A, 1));
    for (int n = 0; n <= 20; ++n) {
        if (n >= 1) CHECK(symmetry_identity_check(Family::A, n));
        CHECK(symmetry_identity_check(Family::B, n));
    }
    CHECK_THROWS_AS(symmetry_identity_check(Family::A, 0), std::out_of_range);
    CHECK_THROWS_AS(symmetry_identity_check(Family::D, 3), std::invalid_argument);
}

TEST_CASE("evaluation symmetry under t -> 1/t") {
    const std::vector<Rational> ts = {R(2), R(1, 2), R(-3), R(7, 5), R(13, 4)};
    for (int n = 1; n <= 20; ++n) {
        Polynomial pa = eulerian_poly(Family::A, n);
        Polynomial pb = eulerian_poly(Family::B, n);
        for (const Rational& t : ts) {
            CHECK(pow_rational(t, n - 1) * pa(1 / t) == pa(t));
            CHECK(pow_rational(t, n) * pb(1 / t) == pb(t));
        }
    }
}

TEST_CASE("A-to-B substitution relation") {
    CHECK(ab_relation_check(0));
    CHECK(ab_relation_check(2));
    for (int n = 0; n <= 20; ++n) CHECK(ab_relation_check(n));
    // The n=2 left side expands to the B polynomial in t^2.
    Polynomial pa = eulerian_poly(Family::A, 2);
    Polynomial lhs = Polynomial({R(1), R(1)}).pow(3) * pa -
                     R(4) * (Polynomial({R(0), R(1)}) * pa.substitute_square());
    CHECK(lhs.same_as(Polynomial({R(1), R(0), R(6), R(0), R(1)})));
}

TEST_CASE("D polynomials from halved B polynomials") {
    for (int n : {0, 3, 15}) CHECK(db_relation_check(n));
    for (int n = 0; n <= 20; ++n) CHECK(db_relation_check(n));
}

TEST_CASE("derivative recurrence steps") {
    CHECK(poly_step_d(Family::D, Polynomial({R(1)}), 1).same_as(Polynomial({R(1)})));
    CHECK(poly_step_d(Family::D, eulerian_poly(Family::D, 2), 3)
              .same_as(Polynomial({R(1), R(10), R(13), R(0)})));
    CHECK(poly_step_d(Family::Dtilde, eulerian_poly(Family::Dtilde, 3), 4)
              .same_as(Polynomial({R(0), R(40), R(112), R(40), R(0)})));
    for (Family f : {Family::D, Family::Dtilde}) {
        Polynomial p = eulerian_poly(f, 0);
        for (int n = 1; n <= 20; ++n) {
            p = poly_step_d(f, p, n);
            CHECK(p.same_as(eulerian_poly(f, n)));
        }
    }
    CHECK_THROWS_AS(poly_step_d(Family::B, Polynomial({R(1)}), 1), std::invalid_argument);
    CHECK_THROWS_AS(poly_step_d(Family::D, Polynomial({R(1)}), 0), std::out_of_range);
}

TEST_CASE("Worpitzky identities") {
    // Spot values computed by hand from the displayed rows.
    WorpitzkyValues d21 = worpitzky(Family::D, 2, R(1));
    CHECK(d21.lhs == 5);
    CHECK(d21.rhs == 5);
    WorpitzkyValues b32 = worpitzky(Family::B, 3, R(2));
    CHECK(b32.rhs == 125);
    CHECK(b32.lhs == 125);
    for (int n = 0; n <= 8; ++n) {
        WorpitzkyValues a = worpitzky(Family::A, n, R(1));
        CHECK(a.lhs == 1);
        CHECK(a.rhs == 1);
    }

    std::vector<Rational> xs;
    for (int i = -6; i <= 6; ++i) xs.push_back(R(i));
    xs.push_back(R(1, 2));
    xs.push_back(R(-3, 2));
    for (Family f : {Family::A, Family::B, Family::D, Family::Dtilde})
        for (int n = 0; n <= 15; ++n)
            for (const Rational& x : xs) {
                WorpitzkyValues v = worpitzky(f, n, x);
                CHECK(v.lhs == v.rhs);
            }
}

TEST_CASE("alternating binomial identity") {
    CHECK(binomial_alternating_identity_check(0, R(5)));
    CHECK(binomial_alternating_identity_check(3, R(2)));
    CHECK(binomial_alternating_identity_check(10, R(-5, 2)));
    for (int n = 0; n <= 20; ++n) {
        CHECK(binomial_alternating_identity_check(n, R(1, 2)));
        CHECK(binomial_alternating_identity_check(n, R(-3, 2)));
        CHECK(binomial_alternating_identity_check(n, R(4)));
    }
}

TEST_CASE("power series arithmetic is exact") {
    PowerSeries ea = PowerSeries::exp_cz(R(2, 3), 10);
    PowerSeries eb = PowerSeries::exp_cz(R(-1, 4), 10);
    PowerSeries prod = ea * eb;
    PowerSeries direct = PowerSeries::exp_cz(R(2, 3) + R(-1, 4), 10);
    for (int i = 0; i <= 10; ++i) CHECK(prod.coeff(i) == direct.coeff(i));

    PowerSeries back = prod.divide_by(eb);
    for (int i = 0; i <= 10; ++i) CHECK(back.coeff(i) == ea.coeff(i));

    CHECK(ea.derivative_z().coeff(3) == R(4) * ea.coeff(4));
    CHECK_THROWS_AS(PowerSeries::zero(4).divide_by(PowerSeries::zero(4)), DegenerateParameterError);
}

TEST_CASE("generating function coefficients match polynomial evaluations") {
    // At t=0 the B series collapses to e^z.
    PowerSeries b0 = egf_series(Family::B, R(0), 8);
    Rational fact = 1;
    for (int n = 0; n <= 8; ++n) {
        if (n > 0) fact *= n;
        CHECK(b0.coeff(n) * fact == 1);
    }

    const std::vector<Rational> ts = {R(0), R(1, 3), R(1, 2), R(2), R(7, 2)};
    for (Family f : {Family::A, Family::B, Family::D, Family::Dtilde})
        for (const Rational& t : ts) {
            PowerSeries s = egf_series(f, t, 20);
            Rational nf = 1;
            for (int n = 0; n <= 20; ++n) {
                if (n > 0) nf *= n;
                CHECK(s.coeff(n) * nf == eulerian_poly(f, n)(t));
            }
        }

    CHECK_THROWS_AS(egf_series(Family::A, R(1), 5), DegenerateParameterError);
    CHECK_THROWS_AS(egf_series(Family::D, R(1), 5), DegenerateParameterError);
}

TEST_CASE("generating function differential equation") {
    CHECK(egf_pde_check(Family::D, R(1, 2), 8));
    CHECK(egf_pde_check(Family::Dtilde, R(2), 8));
    CHECK(egf_pde_check(Family::D, R(0), 4));
    for (Family f : {Family::D, Family::Dtilde})
        for (const Rational& t : {R(0), R(1, 3), R(1, 2), R(2), R(7, 2)})
            CHECK(egf_pde_check(f, t, 8));
    CHECK_THROWS_AS(egf_pde_check(Family::D, R(1, 2), 1), std::out_of_range);
    CHECK_THROWS_AS(egf_pde_check(Family::A, R(1, 2), 8), std::invalid_argument);
    CHECK_THROWS_AS(egf_pde_check(Family::D, R(1), 8), DegenerateParameterError);
}

TEST_CASE("partial geometric power sums approach the closed forms") {
    const Rational tol = R(1, 1000000000);

    // Geometric case: sum_{j=1..K} (1/2)^j = 1 - 2^-K.
    Rational partial = summation_partial(Family::A, R(1, 2), 0, 60);
    CHECK(abs(partial - 1) <= tol);
    CHECK(partial == 1 - pow_rational(R(1, 2), 60));

    CHECK(abs(summation_partial(Family::A, R(1, 2), 2, 60) - 6) <= tol);
    CHECK(abs(summation_partial(Family::B, R(1, 3), 1, 60) - 3) <= tol);

    // P^A_4(1/2) = 75/8, so the full sum is 16 * 75/8 = 150.
    CHECK(eulerian_poly(Family::A, 4)(R(1, 2)) == R(75, 8));
    CHECK(abs(summation_partial(Family::A, R(1, 2), 4, 80) - 150) <= tol);

    CHECK_THROWS_AS(summation_partial(Family::A, R(1), 2, 10), std::out_of_range);
    CHECK_THROWS_AS(summation_partial(Family::B, R(-1, 2), 2, 10), std::out_of_range);
    CHECK_THROWS_AS(summation_partial(Family::A, R(1, 2), 2, 0), std::out_of_range);
    CHECK_THROWS_AS(summation_partial(Family::D, R(1, 2), 2, 10), std::invalid_argument);
}
