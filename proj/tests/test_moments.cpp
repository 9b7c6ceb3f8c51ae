#include "eulerian/moments.hpp"

#include <doctest.h>

using namespace eulerian;

namespace {
Rational R(long num, long den = 1) { return Rational(num, den); }
const Rational kTol = R(1, 1000000000);
}  // namespace

TEST_CASE("measure structure per branch") {
    Measure a0 = measure_for(MeasureFamily::A, R(0));
    REQUIRE(a0.atoms.size() == 1);
    CHECK(a0.atoms[0].location == 1);
    CHECK(a0.atoms[0].weight == 1);
    CHECK(a0.finite());

    Measure d1 = measure_for(MeasureFamily::D, R(1));
    REQUIRE(d1.atoms.size() == 1);
    CHECK(d1.atoms[0].location == 0);
    CHECK(d1.atoms[0].weight == R(1, 2));
    REQUIRE(d1.density.has_value());
    CHECK(d1.density->c == R(1, 4));
    CHECK(d1.density->p == 0);
    CHECK(d1.density->s == 2);

    Measure b2 = measure_for(MeasureFamily::B, R(2));
    REQUIRE(b2.stream.has_value());
    for (int k = 0; k < 6; ++k) {
        Atom atom = b2.stream->atom(static_cast<std::uint64_t>(k));
        CHECK(atom.location == 2 * k + 1);
        CHECK(atom.weight == pow_rational(R(1, 2), k + 1));
    }

    CHECK_THROWS_AS(measure_for(MeasureFamily::Nu, R(1, 2)), std::domain_error);
    CHECK_THROWS_AS(measure_for(MeasureFamily::A, R(-1)), std::out_of_range);
}

TEST_CASE("atom streams have positive weights and increasing locations") {
    for (MeasureFamily f :
         {MeasureFamily::A, MeasureFamily::B, MeasureFamily::D, MeasureFamily::Nu})
        for (const Rational& t : {R(1, 4), R(2, 3), R(3, 2), R(5)}) {
            if (f == MeasureFamily::Nu && t < 1) continue;
            Measure mu = measure_for(f, t);
            if (!mu.stream) continue;
            Rational prev;
            for (std::uint64_t k = 0; k < 40; ++k) {
                Atom atom = mu.stream->atom(k);
                CHECK(atom.weight > 0);
                if (k > 0) CHECK(atom.location > prev);
                prev = atom.location;
            }
        }
}

TEST_CASE("density moments are closed-form gamma integrals") {
    // Exponential weight e^-x: moments n!.
    Measure a1 = measure_for(MeasureFamily::A, R(1));
    for (int n = 0; n <= 10; ++n) {
        CertifiedValue cv = moment(a1, n, kTol);
        CHECK(cv.bound == 0);
        CHECK(cv.value == Rational(factorial(n)));
    }
    // Half-weight e^(-x/2): moments 2^n n!.
    Measure b1 = measure_for(MeasureFamily::B, R(1));
    for (int n = 0; n <= 10; ++n)
        CHECK(moment(b1, n, kTol).value ==
              Rational(pow_bigint(2, static_cast<unsigned>(n)) * factorial(n)));
    // Point mass at zero plus quarter-weight density.
    Measure d1 = measure_for(MeasureFamily::D, R(1));
    CHECK(moment(d1, 0, kTol).value == 1);
    for (int n = 1; n <= 10; ++n)
        CHECK(moment(d1, n, kTol).value ==
              Rational(pow_bigint(2, static_cast<unsigned>(n - 1)) * factorial(n)));
    // x e^(-x/2)/4: moments 2^n (n+1)!.
    Measure nu1 = measure_for(MeasureFamily::Nu, R(1));
    for (int n = 0; n <= 8; ++n)
        CHECK(moment(nu1, n, kTol).value ==
              Rational(pow_bigint(2, static_cast<unsigned>(n)) * factorial(n + 1)));
}

TEST_CASE("certified intervals contain the true moments") {
    // The exact n-th moment is the polynomial evaluation, so the certified
    // interval must bracket it.
    for (const Rational& t : {R(1, 4), R(1, 2), R(3, 4), R(2), R(3)}) {
        for (int n = 0; n <= 8; ++n) {
            CertifiedValue a = moment(measure_for(MeasureFamily::A, t), n, kTol);
            CHECK(abs(a.value - eulerian_poly(Family::A, n)(t)) <= a.bound);
            CHECK(a.bound <= kTol);
            CertifiedValue b = moment(measure_for(MeasureFamily::B, t), n, kTol);
            CHECK(abs(b.value - eulerian_poly(Family::B, n)(t)) <= b.bound);
            CertifiedValue d = moment(measure_for(MeasureFamily::D, t), n, kTol);
            CHECK(abs(d.value - eulerian_poly(Family::D, n)(t)) <= d.bound);
        }
    }
    for (const Rational& t : {R(3, 2), R(2), R(3)})
        for (int n = 0; n <= 8; ++n) {
            CertifiedValue v = moment(measure_for(MeasureFamily::Nu, t), n, kTol);
            CHECK(abs(v.value - eulerian_poly(Family::Dtilde, n + 1)(t) / t) <= v.bound);
        }
}

TEST_CASE("first moment of the dilated geometric measure") {
    CertifiedValue cv = moment(measure_for(MeasureFamily::A, R(1, 2)), 1, R(1, 1000000000000));
    CHECK(abs(cv.value - 1) <= cv.bound);
}

TEST_CASE("moment theorem reports") {
    CHECK(moment_theorem_check(MeasureFamily::A, R(1, 2), 8, kTol).pass);
    CHECK(moment_theorem_check(MeasureFamily::B, R(3), 8, kTol).pass);
    MomentReport exact = moment_theorem_check(MeasureFamily::D, R(0), 8, kTol);
    CHECK(exact.pass);
    CHECK(exact.max_deviation == 0);
    CHECK(exact.max_bound == 0);
    for (const Rational& t : {R(1, 4), R(3, 4), R(1), R(2)})
        for (MeasureFamily f : {MeasureFamily::A, MeasureFamily::B, MeasureFamily::D})
            CHECK(moment_theorem_check(f, t, 10, kTol).pass);
}

TEST_CASE("shifted complementary sequence checks") {
    CHECK(nu_check(R(1), 6, kTol).pass);
    CHECK(nu_check(R(2), 8, kTol).pass);
    CHECK(nu_check(R(3), 8, kTol).pass);
    // Mass and first moment, pinned by hand: P^Dtilde_1(t)/t = 1 and
    // P^Dtilde_2(2)/2 = 4.
    CHECK(nu_moment_sequence(R(2), 2)[0] == 1);
    CHECK(nu_moment_sequence(R(2), 2)[1] == 4);
    CertifiedValue first = moment(measure_for(MeasureFamily::Nu, R(2)), 1, kTol);
    CHECK(abs(first.value - 4) <= first.bound);
}

TEST_CASE("D measure is the half-half mixture with the point mass") {
    for (const Rational& t : {R(1, 3), R(1, 2), R(3, 4), R(2), R(3)}) {
        Measure d = measure_for(MeasureFamily::D, t);
        Measure b = measure_for(MeasureFamily::B, t);
        REQUIRE(b.stream.has_value());

        std::vector<Atom> mixture{{1 - t, R(1, 2)}};
        for (std::uint64_t k = 0; k < 20; ++k) {
            Atom atom = b.stream->atom(k);
            mixture.push_back({atom.location, atom.weight / 2});
        }
        std::sort(mixture.begin(), mixture.end(),
                  [](const Atom& x, const Atom& y) { return x.location < y.location; });
        std::vector<Atom> merged;
        for (const Atom& atom : mixture)
            if (!merged.empty() && merged.back().location == atom.location)
                merged.back().weight += atom.weight;
            else
                merged.push_back(atom);

        std::vector<Atom> direct = d.atoms;
        REQUIRE(d.stream.has_value());
        for (std::uint64_t k = 0; direct.size() < merged.size(); ++k)
            direct.push_back(d.stream->atom(k));
        for (size_t i = 0; i < merged.size(); ++i) {
            CHECK(direct[i].location == merged[i].location);
            CHECK(direct[i].weight == merged[i].weight);
        }
    }
}

TEST_CASE("moment argument validation") {
    Measure mu = measure_for(MeasureFamily::A, R(1, 2));
    CHECK_THROWS_AS(moment(mu, -1, kTol), std::out_of_range);
    CHECK_THROWS_AS(moment(mu, 2, R(0)), std::invalid_argument);
    CHECK_THROWS_AS(moment(mu, 5, Rational(1, pow_bigint(10, 50)), 4), ResourceError);
}

TEST_CASE("hankel minors by fraction-free elimination") {
    // Factorials: the 2x2 minor is det [[1,1],[1,2]] = 1.
    std::vector<Rational> facts;
    for (int n = 0; n < 7; ++n) facts.push_back(Rational(factorial(n)));
    std::vector<Rational> minors = hankel_minors(facts, 2);
    CHECK(minors[0] == 1);
    CHECK(minors[1] == 1);

    // Constant sequence: point-mass moments, rank one.
    std::vector<Rational> ones(5, R(1));
    minors = hankel_minors(ones, 3);
    CHECK(minors == std::vector<Rational>{R(1), R(0), R(0)});

    // Zero leading pivot exercises the row-swap path: [[0,1],[1,0]] etc.
    std::vector<Rational> alt = {R(0), R(1), R(0), R(1), R(0)};
    minors = hankel_minors(alt, 3);
    CHECK(minors == std::vector<Rational>{R(0), R(-1), R(0)});

    // Rational entries: known small case det [[1/2,1],[1,1/2]] = -3/4.
    std::vector<Rational> halves = {R(1, 2), R(1), R(1, 2)};
    minors = hankel_minors(halves, 2);
    CHECK(minors[1] == R(-3, 4));

    std::vector<Rational> pb;
    for (int n = 0; n < 7; ++n) pb.push_back(eulerian_poly(Family::B, n)(R(1, 2)));
    for (const Rational& m4 : hankel_minors(pb, 4)) CHECK(m4 > 0);

    CHECK_THROWS_AS(hankel_minors(std::vector<Rational>{R(1)}, 2), std::out_of_range);
    CHECK_THROWS_AS(hankel_minors(facts, 0), std::out_of_range);
}

TEST_CASE("hankel positivity of the polynomial sequences") {
    CHECK(positive_definite_check(Family::A, R(1), 5).ok());
    CHECK(positive_definite_check(Family::D, R(1, 2), 5).ok());
    for (Family f : {Family::A, Family::B, Family::D})
        for (const Rational& t : {R(1, 2), R(1), R(2)}) {
            PositivityReport rep = positive_definite_check(f, t, 6);
            CHECK(rep.ok());
            CHECK(rep.all_positive);
        }
    // The point mass at t=0 gives a rank-one moment matrix.
    PositivityReport degenerate = positive_definite_check(Family::A, R(0), 3);
    CHECK(degenerate.ok());
    CHECK(!degenerate.all_positive);
    CHECK(degenerate.zero_orders == std::vector<int>{2, 3});
    CHECK_THROWS_AS(positive_definite_check(Family::Dtilde, R(1), 3), std::invalid_argument);
}

TEST_CASE("complementary sequence is not positive definite") {
    auto w = dtilde_not_pd_witness();
    REQUIRE(w.has_value());
    CHECK(w->minor < 0);
    CHECK(w->m == 2);

    // The 2x2 minor is -t^2: -1/4 at t=1/2 and -4 at t=2.
    std::vector<Rational> half{R(1, 2)};
    auto wh = dtilde_not_pd_witness(half);
    REQUIRE(wh.has_value());
    CHECK(wh->m == 2);
    CHECK(wh->minor == R(-1, 4));
    std::vector<Rational> two{R(2)};
    auto wt = dtilde_not_pd_witness(two);
    REQUIRE(wt.has_value());
    CHECK(wt->m == 2);
    CHECK(wt->minor == R(-4));

    // Exhausted search reports nothing instead of fabricating: at t=0 the
    // complementary polynomials vanish identically.
    std::vector<Rational> zero{R(0)};
    CHECK(!dtilde_not_pd_witness(zero).has_value());
}
