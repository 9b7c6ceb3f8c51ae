#pragma once

#include "eulerian/errors.hpp"
#include "eulerian/numeric.hpp"
#include "eulerian/triangles.hpp"

#include <vector>

namespace eulerian {

/// Dense polynomial in t over Rational; index = degree. The stored length
/// may include trailing zeros (the A triangle rows do); degree() and
/// equality ignore them.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
    Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {}

    static Polynomial from_row(const Row& row);
    static Polynomial constant(const Rational& c) { return Polynomial({c}); }

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const;
    int degree() const;  // -1 for the zero polynomial

    Rational operator()(const Rational& t) const;  // exact Horner evaluation

    Polynomial derivative() const;
    Polynomial substitute_square() const;  // p(t) -> p(t^2)
    Polynomial pow(int e) const;

    bool same_as(const Polynomial& other) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

private:
    std::vector<Rational> coeffs_;
};

// Generating polynomial of triangle row n; family must be A, B, D or Dtilde.
Polynomial eulerian_poly(Family family, int n);

inline Rational eval(const Polynomial& p, const Rational& t) { return p(t); }

// Coefficient symmetry of the A and B rows: A reverses its first n
// coefficients (the trailing zero stands apart), B is a full palindrome.
bool symmetry_identity_check(Family family, int n);

// (1+t)^(n+1) P^A_n(t) - 2^n t P^A_n(t^2) == P^B_n(t^2), exactly in t.
bool ab_relation_check(int n);

// P^D_n == (P^B_n + (1-t)^n)/2 and P^Dtilde_n == (P^B_n - (1-t)^n)/2.
bool db_relation_check(int n);

// One step of the derivative recurrence for the D families: from the
// family's polynomial at n-1 to the one at n.
Polynomial poly_step_d(Family family, const Polynomial& p_prev, int n);

struct WorpitzkyValues {
    Rational lhs;
    Rational rhs;
};

// lhs = sum_k C(x+k, n) T(n,k) with C the degree-n falling-factorial
// binomial; rhs is the closed form: x^n for A, (1+2x)^n for B, and
// ((2x+1)^n +/- (-1)^n)/2 for D / Dtilde.
WorpitzkyValues worpitzky(Family family, int n, const Rational& x);

// sum_k C(x+k, n) C(n,k) (-1)^k == (-1)^n.
bool binomial_alternating_identity_check(int n, const Rational& x);

/// Truncated power series in z over Rational; arithmetic is exact through
/// the truncation order.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

    static PowerSeries zero(int order);
    static PowerSeries constant(const Rational& c, int order);
    static PowerSeries exp_cz(const Rational& c, int order);  // e^(c z)

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    PowerSeries derivative_z() const;  // order drops by one

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const Rational& c, const PowerSeries& s);

    // Quotient through min(order); the divisor needs an invertible constant
    // term, otherwise DegenerateParameterError.
    PowerSeries divide_by(const PowerSeries& den) const;

private:
    std::vector<Rational> coeffs_;
};

// Taylor coefficients in z, through `order`, of the closed-form exponential
// generating function of the family at parameter t. Coefficient n times n!
// equals the family's polynomial evaluated at t. Refuses t = 1, where the
// closed forms degenerate to 0/0.
PowerSeries egf_series(Family family, const Rational& t, int order);

// Verifies the first-order PDE satisfied by the D / Dtilde generating
// functions, coefficient-wise through order-1 in z. The z-series comes from
// the closed form; the t-derivative term is evaluated symbolically, since
// coefficient n is the degree-n polynomial in t divided by n!.
bool egf_pde_check(Family family, const Rational& t, int order);

// Partial sum of the classical summation identities: family A sums
// t^j j^n over j = 1..terms, family B sums (2k+1)^n t^k over k = 0..terms-1.
// Requires 0 < t < 1.
Rational summation_partial(Family family, const Rational& t, int n, int terms);

}  // namespace eulerian
