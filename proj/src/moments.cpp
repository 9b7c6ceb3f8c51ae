#include "eulerian/moments.hpp"

#include <algorithm>

namespace eulerian {

Atom AtomStream::atom(std::uint64_t k) const {
    return {loc0 + loc_step * Rational(k), (w0 + w1 * Rational(k)) * pow_rational(ratio, static_cast<int>(k))};
}

Measure measure_for(MeasureFamily family, const Rational& t) {
    if (t < 0) throw std::out_of_range("measure_for: t must be nonnegative");
    if (family == MeasureFamily::Nu && t < 1)
        throw std::domain_error("measure_for: the Nu measure is defined only for t >= 1");

    Measure m;
    if (family != MeasureFamily::Nu && t == 0) {
        m.atoms.push_back({Rational(1), Rational(1)});  // point mass at 1
        return m;
    }
    const Rational u = 1 - t;  // positive below 1, negative above
    switch (family) {
        case MeasureFamily::A:
            if (t < 1) {
                m.stream = AtomStream{u, u, u, Rational(0), t};
            } else if (t == 1) {
                m.density = ExpDensity{Rational(1), 0, Rational(1)};
            } else {
                m.stream = AtomStream{Rational(0), t - 1, (t - 1) / t, Rational(0), 1 / t};
            }
            break;
        case MeasureFamily::B:
            if (t < 1) {
                m.stream = AtomStream{u, 2 * u, u, Rational(0), t};
            } else if (t == 1) {
                m.density = ExpDensity{Rational(1, 2), 0, Rational(2)};
            } else {
                m.stream = AtomStream{t - 1, 2 * (t - 1), (t - 1) / t, Rational(0), 1 / t};
            }
            break;
        case MeasureFamily::D:
            // Half the B measure plus half a point mass at 1-t; in the
            // branch below 1 the point mass lands on the first B atom, so
            // the merged head atom weighs (2-t)/2 and the stream starts at
            // the second B location.
            if (t < 1) {
                m.atoms.push_back({u, (2 - t) / 2});
                m.stream = AtomStream{3 * u, 2 * u, u * t / 2, Rational(0), t};
            } else if (t == 1) {
                m.atoms.push_back({Rational(0), Rational(1, 2)});
                m.density = ExpDensity{Rational(1, 4), 0, Rational(2)};
            } else {
                m.atoms.push_back({u, Rational(1, 2)});
                m.stream = AtomStream{t - 1, 2 * (t - 1), (t - 1) / (2 * t), Rational(0), 1 / t};
            }
            break;
        case MeasureFamily::Nu:
            if (t == 1) {
                m.density = ExpDensity{Rational(1, 4), 1, Rational(2)};
            } else {
                const Rational d = t - 1;
                m.atoms.push_back({u, d / (2 * t)});
                m.stream = AtomStream{d, 2 * d, d * d / (2 * t * t), d * d / (t * t), 1 / t};
            }
            break;
    }
    return m;
}

namespace {

// Rational u with sqrt(x) < u < 1, for 0 < x < 1: u = (isqrt(p q 4^s)+1)/(q 2^s).
Rational sqrt_upper_bound(const Rational& x) {
    if (!(x > 0 && x < 1)) throw std::logic_error("sqrt_upper_bound: needs 0 < x < 1");
    const BigInt p = numerator(x), q = denominator(x);
    for (unsigned s = 16; s <= 4096; s *= 2) {
        const BigInt scale = pow_bigint(2, s);
        const BigInt radicand = p * q * scale * scale;
        Rational u(boost::multiprecision::sqrt(radicand) + 1, q * scale);
        if (u < 1) return u;
    }
    throw std::logic_error("sqrt_upper_bound: failed to converge below 1");
}

// Smallest admissible truncation index for the canonical tail: K with
// K >= 2m/(1 - rho), which implies K >= 2m/ln(1/rho).
std::uint64_t canonical_k_min(int m, const Rational& rho) {
    Rational r = Rational(2 * m) / (1 - rho);
    BigInt k = numerator(r) / denominator(r) + 1;
    if (k < 1) k = 1;
    return k.convert_to<std::uint64_t>();
}

// Certified bound for sum_{j>K} j^m rho^(j-1), 0 < rho < 1, valid for
// K >= canonical_k_min(m, rho): each term is at most
// K^m rho^(K-1) rho^((j-K)/2), so the tail is below
// K^m rho^(K-1) sqrt(rho)/(1 - sqrt(rho)).
Rational canonical_tail_bound(int m, const Rational& rho, std::uint64_t K) {
    Rational u = sqrt_upper_bound(rho);
    Rational geom = u / (1 - u);
    return Rational(pow_bigint(BigInt(K), static_cast<unsigned>(m))) *
           pow_rational(rho, static_cast<int>(K - 1)) * geom;
}

// Truncated stream moment with a certified tail bound. The tail
// sum_{k>K} (w0 + w1 k)(loc0 + step k)^n rho^k is bounded, for k >= 1, by
// (w0 + w1)(loc0 + step)^n k^(n+q) rho^k with q = [w1 > 0], which reduces
// to the canonical tail above.
CertifiedValue stream_moment(const AtomStream& s, int n, const Rational& tol,
                             std::uint64_t atom_cap) {
    const int q = s.w1 > 0 ? 1 : 0;
    const int m = n + q;
    const Rational prefix = (s.w0 + s.w1) * pow_rational(s.loc0 + s.loc_step, n) * s.ratio;

    std::uint64_t K = std::max<std::uint64_t>(canonical_k_min(m, s.ratio), 2);
    Rational bound;
    for (;;) {
        bound = prefix * canonical_tail_bound(m, s.ratio, K);
        if (bound <= tol) break;
        if (K > atom_cap)
            throw ResourceError("stream_moment: tail bound did not reach tolerance within " +
                                std::to_string(atom_cap) + " atoms");
        K *= 2;
    }

    Rational value = 0;
    Rational ratio_pow = 1;
    for (std::uint64_t k = 0; k <= K; ++k) {
        const Rational w = (s.w0 + s.w1 * Rational(k)) * ratio_pow;
        value += w * pow_rational(s.loc0 + s.loc_step * Rational(k), n);
        ratio_pow *= s.ratio;
    }
    return {value, bound};
}

}  // namespace

CertifiedValue moment(const Measure& m, int n, const Rational& tol, std::uint64_t atom_cap) {
    if (n < 0) throw std::out_of_range("moment: negative order");
    if (!(tol > 0)) throw std::invalid_argument("moment: tolerance must be positive");

    Rational value = 0;
    for (const Atom& a : m.atoms) value += a.weight * pow_rational(a.location, n);
    if (m.density) {
        const ExpDensity& d = *m.density;
        value += d.c * pow_rational(d.s, n + d.p + 1) * Rational(factorial(n + d.p));
    }
    Rational bound = 0;
    if (m.stream) {
        CertifiedValue sv = stream_moment(*m.stream, n, tol, atom_cap);
        value += sv.value;
        bound = sv.bound;
    }
    return {value, bound};
}

namespace {

Family polynomial_family(MeasureFamily f) {
    switch (f) {
        case MeasureFamily::A: return Family::A;
        case MeasureFamily::B: return Family::B;
        case MeasureFamily::D: return Family::D;
        case MeasureFamily::Nu: break;
    }
    throw std::logic_error("polynomial_family: no direct polynomial family");
}

MomentReport run_moment_check(const Measure& mu, int n_max, const Rational& tol,
                              const std::vector<Rational>& expected) {
    MomentReport rep;
    rep.n_max = n_max;
    rep.max_deviation = 0;
    rep.max_bound = 0;
    for (int n = 0; n <= n_max; ++n) {
        CertifiedValue cv = moment(mu, n, tol);
        Rational dev = abs(cv.value - expected[static_cast<size_t>(n)]);
        rep.max_deviation = std::max(rep.max_deviation, dev);
        rep.max_bound = std::max(rep.max_bound, cv.bound);
        if (dev > tol + cv.bound) {
            rep.pass = false;
            if (rep.first_fail_n < 0) rep.first_fail_n = n;
        }
    }
    return rep;
}

}  // namespace

MomentReport moment_theorem_check(MeasureFamily family, const Rational& t, int n_max,
                                  const Rational& tol) {
    if (n_max < 0) throw std::out_of_range("moment_theorem_check: negative n_max");
    Measure mu = measure_for(family, t);
    std::vector<Rational> expected =
        polynomial_moment_sequence(polynomial_family(family), t, n_max + 1);
    return run_moment_check(mu, n_max, tol, expected);
}

MomentReport nu_check(const Rational& t, int n_max, const Rational& tol) {
    if (n_max < 0) throw std::out_of_range("nu_check: negative n_max");
    Measure mu = measure_for(MeasureFamily::Nu, t);
    return run_moment_check(mu, n_max, tol, nu_moment_sequence(t, n_max + 1));
}

std::vector<Rational> polynomial_moment_sequence(Family family, const Rational& t, int count) {
    if (count < 1) throw std::out_of_range("polynomial_moment_sequence: count must be >= 1");
    Triangle tri = build_triangle(family, count - 1);
    std::vector<Rational> seq;
    seq.reserve(static_cast<size_t>(count));
    for (int n = 0; n < count; ++n) seq.push_back(Polynomial::from_row(tri.row(n))(t));
    return seq;
}

std::vector<Rational> nu_moment_sequence(const Rational& t, int count) {
    if (t == 0) throw std::domain_error("nu_moment_sequence: t must be nonzero");
    std::vector<Rational> shifted = polynomial_moment_sequence(Family::Dtilde, t, count + 1);
    std::vector<Rational> seq(static_cast<size_t>(count));
    for (int n = 0; n < count; ++n) seq[static_cast<size_t>(n)] = shifted[static_cast<size_t>(n + 1)] / t;
    return seq;
}

namespace {

// Exact determinant by fraction-free (Bareiss) elimination with row swaps.
BigInt det_bareiss(std::vector<std::vector<BigInt>> a) {
    const int n = static_cast<int>(a.size());
    BigInt prev = 1;
    int sign = 1;
    for (int col = 0; col + 1 < n; ++col) {
        if (a[static_cast<size_t>(col)][static_cast<size_t>(col)] == 0) {
            int p = -1;
            for (int r = col + 1; r < n; ++r)
                if (a[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                    p = r;
                    break;
                }
            if (p < 0) return 0;
            std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(p)]);
            sign = -sign;
        }
        const auto& pivot_row = a[static_cast<size_t>(col)];
        for (int r = col + 1; r < n; ++r) {
            for (int c = col + 1; c < n; ++c) {
                BigInt v = pivot_row[static_cast<size_t>(col)] * a[static_cast<size_t>(r)][static_cast<size_t>(c)] -
                           a[static_cast<size_t>(r)][static_cast<size_t>(col)] * pivot_row[static_cast<size_t>(c)];
                a[static_cast<size_t>(r)][static_cast<size_t>(c)] = v / prev;  // exact by Sylvester's identity
            }
            a[static_cast<size_t>(r)][static_cast<size_t>(col)] = 0;
        }
        prev = pivot_row[static_cast<size_t>(col)];
    }
    BigInt det = a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    return sign > 0 ? det : -det;
}

}  // namespace

std::vector<Rational> hankel_minors(std::span<const Rational> seq, int m) {
    if (m < 1) throw std::out_of_range("hankel_minors: m must be >= 1");
    if (static_cast<int>(seq.size()) < 2 * m - 1)
        throw std::out_of_range("hankel_minors: need at least 2m-1 entries");

    // Clear denominators once: with every entry scaled by L, the order-k
    // minor picks up a factor L^k.
    BigInt L = 1;
    for (int i = 0; i < 2 * m - 1; ++i)
        L = boost::multiprecision::lcm(L, denominator(seq[static_cast<size_t>(i)]));
    std::vector<BigInt> scaled(static_cast<size_t>(2 * m - 1));
    for (int i = 0; i < 2 * m - 1; ++i) {
        const Rational v = seq[static_cast<size_t>(i)] * Rational(L);
        scaled[static_cast<size_t>(i)] = numerator(v);  // denominator is 1 by construction
    }

    std::vector<Rational> minors;
    minors.reserve(static_cast<size_t>(m));
    Rational scale = 1;
    for (int k = 1; k <= m; ++k) {
        std::vector<std::vector<BigInt>> mat(static_cast<size_t>(k), std::vector<BigInt>(static_cast<size_t>(k)));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) mat[static_cast<size_t>(i)][static_cast<size_t>(j)] = scaled[static_cast<size_t>(i + j)];
        scale *= L;
        minors.push_back(Rational(det_bareiss(std::move(mat))) / scale);
    }
    return minors;
}

PositivityReport positive_definite_check(Family family, const Rational& t, int m) {
    if (m < 1) throw std::out_of_range("positive_definite_check: m must be >= 1");
    if (family != Family::A && family != Family::B && family != Family::D)
        throw std::invalid_argument("positive_definite_check: family must be A, B or D");
    std::vector<Rational> seq = polynomial_moment_sequence(family, t, 2 * m - 1);
    PositivityReport rep;
    rep.minors = hankel_minors(seq, m);
    for (int k = 0; k < m; ++k) {
        const Rational& v = rep.minors[static_cast<size_t>(k)];
        if (v < 0) {
            rep.all_nonnegative = false;
            rep.all_positive = false;
        } else if (v == 0) {
            rep.all_positive = false;
            rep.zero_orders.push_back(k + 1);
        }
    }
    return rep;
}

std::optional<DtildeWitness> dtilde_not_pd_witness(std::span<const Rational> t_candidates,
                                                   int m_cap) {
    if (m_cap < 1) throw std::out_of_range("dtilde_not_pd_witness: m_cap must be >= 1");
    for (const Rational& t : t_candidates) {
        std::vector<Rational> seq = polynomial_moment_sequence(Family::Dtilde, t, 2 * m_cap - 1);
        std::vector<Rational> minors = hankel_minors(seq, m_cap);
        for (int k = 0; k < m_cap; ++k)
            if (minors[static_cast<size_t>(k)] < 0)
                return DtildeWitness{t, k + 1, minors[static_cast<size_t>(k)]};
    }
    return std::nullopt;
}

std::optional<DtildeWitness> dtilde_not_pd_witness() {
    const std::vector<Rational> ts{Rational(1, 2), Rational(2), Rational(1), Rational(3)};
    return dtilde_not_pd_witness(ts);
}

}  // namespace eulerian
