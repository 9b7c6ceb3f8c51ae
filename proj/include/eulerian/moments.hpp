#pragma once

#include "eulerian/errors.hpp"
#include "eulerian/numeric.hpp"
#include "eulerian/polynomials.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace eulerian {

struct Atom {
    Rational location;
    Rational weight;
};

/// Exponential density  c * x^p * e^(-x/s)  on [0, +inf), p in {0, 1};
/// its moments are the closed-form gamma integrals c * s^(n+p+1) * (n+p)!.
struct ExpDensity {
    Rational c;
    int p = 0;
    Rational s;
};

/// Infinite atom family with geometric weight decay: the k-th atom (k >= 0)
/// sits at loc0 + loc_step*k and weighs (w0 + w1*k) * ratio^k. All
/// parameters are nonnegative and 0 < ratio < 1, so truncated moment sums
/// admit certified geometric tail bounds.
struct AtomStream {
    Rational loc0;
    Rational loc_step;
    Rational w0;
    Rational w1;  // zero except for the measure with linearly growing weights
    Rational ratio;

    Atom atom(std::uint64_t k) const;
};

/// A probability measure as a finite atom list, an optional exponential
/// density, and an optional infinite atom stream.
struct Measure {
    std::vector<Atom> atoms;
    std::optional<ExpDensity> density;
    std::optional<AtomStream> stream;

    bool finite() const { return !stream.has_value(); }
};

enum class MeasureFamily { A, B, D, Nu };

// The explicit probability measure whose n-th moment is the family's
// Eulerian polynomial at t (for Nu: the shifted complementary polynomial
// over t). Branches: t = 0 (point mass at 1), 0 < t < 1, t = 1 (exponential
// density), t > 1. Nu is defined only for t >= 1.
Measure measure_for(MeasureFamily family, const Rational& t);

struct CertifiedValue {
    Rational value;  // exact partial sum plus closed-form parts
    Rational bound;  // certified tail bound; zero for finite measures

    Rational low() const { return value - bound; }
    Rational high() const { return value + bound; }
};

// n-th moment with certified error at most tol. Finite atoms and densities
// contribute exactly; stream contributions are truncated once the certified
// geometric tail bound drops below tol. Throws ResourceError if the bound
// cannot be met within atom_cap stream terms.
CertifiedValue moment(const Measure& m, int n, const Rational& tol,
                      std::uint64_t atom_cap = 1'000'000);

struct MomentReport {
    bool pass = true;
    int n_max = 0;
    Rational max_deviation;  // max |moment value - polynomial value|
    Rational max_bound;      // largest certified tail bound encountered
    int first_fail_n = -1;
};

// Checks |moment(mu_t, n) - P_n(t)| <= tol + certified bound for all
// n <= n_max; family Nu compares against P^Dtilde_(n+1)(t)/t.
MomentReport moment_theorem_check(MeasureFamily family, const Rational& t, int n_max,
                                  const Rational& tol);
MomentReport nu_check(const Rational& t, int n_max, const Rational& tol);

// Leading principal minors (orders 1..m) of the Hankel matrix (seq[i+j]),
// by fraction-free integer elimination after clearing denominators.
// Needs at least 2m-1 sequence entries.
std::vector<Rational> hankel_minors(std::span<const Rational> seq, int m);

// {P_n(t)} for n = 0..count-1.
std::vector<Rational> polynomial_moment_sequence(Family family, const Rational& t, int count);

// {P^Dtilde_(n+1)(t)/t} for n = 0..count-1 (t != 0).
std::vector<Rational> nu_moment_sequence(const Rational& t, int count);

struct PositivityReport {
    std::vector<Rational> minors;
    bool all_nonnegative = true;
    bool all_positive = true;
    std::vector<int> zero_orders;  // minors that vanish exactly (degenerate point masses)

    bool ok() const { return all_nonnegative; }
};

// Hankel positivity of {P_n(t)} through order m; family must be A, B or D.
PositivityReport positive_definite_check(Family family, const Rational& t, int m);

struct DtildeWitness {
    Rational t;
    int m;
    Rational minor;
};

// Searches for a negative leading principal minor of {P^Dtilde_n(t)},
// certifying that the sequence is not positive definite. Returns the first
// hit over the candidate t values and orders up to m_cap, or nullopt if the
// search is exhausted (reported, never fabricated).
std::optional<DtildeWitness> dtilde_not_pd_witness(std::span<const Rational> t_candidates,
                                                   int m_cap = 4);
std::optional<DtildeWitness> dtilde_not_pd_witness();

}  // namespace eulerian
