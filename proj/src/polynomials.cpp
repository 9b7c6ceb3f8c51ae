#include "eulerian/polynomials.hpp"

#include <algorithm>

namespace eulerian {

Polynomial Polynomial::from_row(const Row& row) {
    std::vector<Rational> c(row.size());
    for (size_t i = 0; i < row.size(); ++i) c[i] = Rational(row[i]);
    return Polynomial(std::move(c));
}

Rational Polynomial::coeff(int i) const {
    if (i < 0) throw std::out_of_range("Polynomial::coeff: negative index");
    return static_cast<size_t>(i) < coeffs_.size() ? coeffs_[static_cast<size_t>(i)] : Rational(0);
}

int Polynomial::degree() const {
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i)
        if (coeffs_[static_cast<size_t>(i)] != 0) return i;
    return -1;
}

Rational Polynomial::operator()(const Rational& t) const {
    Rational acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial({Rational(0)});
    std::vector<Rational> c(coeffs_.size() - 1);
    for (size_t i = 0; i + 1 < coeffs_.size(); ++i) c[i] = Rational(i + 1) * coeffs_[i + 1];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::substitute_square() const {
    std::vector<Rational> c(coeffs_.empty() ? 1 : 2 * coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[2 * i] = coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::out_of_range("Polynomial::pow: negative exponent");
    Polynomial r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool Polynomial::same_as(const Polynomial& other) const {
    const size_t m = std::max(coeffs_.size(), other.coeffs_.size());
    for (size_t i = 0; i < m; ++i)
        if (coeff(static_cast<int>(i)) != other.coeff(static_cast<int>(i))) return false;
    return true;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return Polynomial({Rational(0)});
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    std::vector<Rational> out(p.coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = c * p.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial eulerian_poly(Family family, int n) {
    switch (family) {
        case Family::A: return Polynomial::from_row(row_a(n));
        case Family::B: return Polynomial::from_row(row_b(n));
        case Family::D: return Polynomial::from_row(coupled_rows_d(n).first);
        case Family::Dtilde: return Polynomial::from_row(coupled_rows_d(n).second);
        case Family::BrentiD: break;
    }
    throw std::invalid_argument("eulerian_poly: family must be A, B, D or Dtilde");
}

bool symmetry_identity_check(Family family, int n) {
    if (family == Family::A) {
        if (n < 1) throw std::out_of_range("symmetry_identity_check: A needs n >= 1");
        Row r = row_a(n);
        for (int k = 0; k < n; ++k)
            if (r[static_cast<size_t>(k)] != r[static_cast<size_t>(n - 1 - k)]) return false;
        return true;
    }
    if (family == Family::B) {
        if (n < 0) throw std::out_of_range("symmetry_identity_check: negative n");
        Row r = row_b(n);
        for (int k = 0; k <= n; ++k)
            if (r[static_cast<size_t>(k)] != r[static_cast<size_t>(n - k)]) return false;
        return true;
    }
    throw std::invalid_argument("symmetry_identity_check: family must be A or B");
}

bool ab_relation_check(int n) {
    if (n < 0) throw std::out_of_range("ab_relation_check: negative n");
    Polynomial pa = eulerian_poly(Family::A, n);
    Polynomial pb = eulerian_poly(Family::B, n);
    Polynomial one_plus_t({Rational(1), Rational(1)});
    Polynomial t({Rational(0), Rational(1)});
    Polynomial lhs = one_plus_t.pow(n + 1) * pa -
                     Rational(pow_bigint(2, static_cast<unsigned>(n))) * (t * pa.substitute_square());
    return lhs.same_as(pb.substitute_square());
}

bool db_relation_check(int n) {
    if (n < 0) throw std::out_of_range("db_relation_check: negative n");
    Polynomial pb = eulerian_poly(Family::B, n);
    Polynomial pd = eulerian_poly(Family::D, n);
    Polynomial pdt = eulerian_poly(Family::Dtilde, n);
    Polynomial one_minus_t_n = Polynomial({Rational(1), Rational(-1)}).pow(n);
    const Rational half(1, 2);
    return pd.same_as(half * pb + half * one_minus_t_n) &&
           pdt.same_as(half * pb - half * one_minus_t_n);
}

Polynomial poly_step_d(Family family, const Polynomial& p_prev, int n) {
    if (n < 1) throw std::out_of_range("poly_step_d: needs n >= 1");
    if (family != Family::D && family != Family::Dtilde)
        throw std::invalid_argument("poly_step_d: family must be D or Dtilde");
    Polynomial linear({Rational(1), Rational(2 * n - 1)});           // 1 + (2n-1)t
    Polynomial two_t_one_minus_t({Rational(0), Rational(2), Rational(-2)});
    Polynomial tail = Polynomial({Rational(0), Rational(1)}) *
                      Polynomial({Rational(1), Rational(-1)}).pow(n - 1);  // t (1-t)^(n-1)
    Polynomial next = linear * p_prev + two_t_one_minus_t * p_prev.derivative();
    return family == Family::D ? next - tail : next + tail;
}

WorpitzkyValues worpitzky(Family family, int n, const Rational& x) {
    if (n < 0) throw std::out_of_range("worpitzky: negative n");
    Row row;
    switch (family) {
        case Family::A: row = row_a(n); break;
        case Family::B: row = row_b(n); break;
        case Family::D: row = coupled_rows_d(n).first; break;
        case Family::Dtilde: row = coupled_rows_d(n).second; break;
        case Family::BrentiD:
            throw std::invalid_argument("worpitzky: family must be A, B, D or Dtilde");
    }
    Rational lhs = 0;
    for (int k = 0; k <= n; ++k)
        lhs += rational_binomial(x + k, n) * Rational(row[static_cast<size_t>(k)]);

    Rational rhs;
    const Rational sign(n % 2 == 0 ? 1 : -1);
    switch (family) {
        case Family::A: rhs = pow_rational(x, n); break;
        case Family::B: rhs = pow_rational(1 + 2 * x, n); break;
        case Family::D: rhs = (pow_rational(2 * x + 1, n) + sign) / 2; break;
        case Family::Dtilde: rhs = (pow_rational(2 * x + 1, n) - sign) / 2; break;
        case Family::BrentiD: break;  // unreachable
    }
    return {lhs, rhs};
}

bool binomial_alternating_identity_check(int n, const Rational& x) {
    if (n < 0) throw std::out_of_range("binomial_alternating_identity_check: negative n");
    Rational sum = 0;
    for (int k = 0; k <= n; ++k) {
        Rational term = rational_binomial(x + k, n) * Rational(binomial(n, k));
        sum += k % 2 == 0 ? term : -term;
    }
    return sum == Rational(n % 2 == 0 ? 1 : -1);
}

// --- power series -----------------------------------------------------------

PowerSeries PowerSeries::zero(int order) {
    if (order < 0) throw std::out_of_range("PowerSeries: negative order");
    return PowerSeries(std::vector<Rational>(static_cast<size_t>(order) + 1, Rational(0)));
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
    PowerSeries s = zero(order);
    s.coeffs_[0] = c;
    return s;
}

PowerSeries PowerSeries::exp_cz(const Rational& c, int order) {
    PowerSeries s = zero(order);
    Rational term = 1;  // c^n / n!
    s.coeffs_[0] = term;
    for (int n = 1; n <= order; ++n) {
        term *= c;
        term /= n;
        s.coeffs_[static_cast<size_t>(n)] = term;
    }
    return s;
}

const Rational& PowerSeries::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size())
        throw std::out_of_range("PowerSeries::coeff: index beyond truncation order");
    return coeffs_[static_cast<size_t>(i)];
}

PowerSeries PowerSeries::derivative_z() const {
    if (coeffs_.size() <= 1) return PowerSeries({Rational(0)});
    std::vector<Rational> c(coeffs_.size() - 1);
    for (size_t i = 0; i + 1 < coeffs_.size(); ++i) c[i] = Rational(i + 1) * coeffs_[i + 1];
    return PowerSeries(std::move(c));
}

namespace {
size_t common_len(const PowerSeries& a, const PowerSeries& b) {
    return std::min(a.coeffs().size(), b.coeffs().size());
}
}  // namespace

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    std::vector<Rational> c(common_len(a, b));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs()[i] + b.coeffs()[i];
    return PowerSeries(std::move(c));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    std::vector<Rational> c(common_len(a, b));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs()[i] - b.coeffs()[i];
    return PowerSeries(std::move(c));
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    std::vector<Rational> c(common_len(a, b), Rational(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; i + j < c.size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return PowerSeries(std::move(c));
}

PowerSeries operator*(const Rational& c, const PowerSeries& s) {
    std::vector<Rational> out(s.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = c * s.coeffs()[i];
    return PowerSeries(std::move(out));
}

PowerSeries PowerSeries::divide_by(const PowerSeries& den) const {
    if (den.coeffs_.empty() || den.coeffs_[0] == 0)
        throw DegenerateParameterError("series quotient needs an invertible constant term");
    const size_t len = std::min(coeffs_.size(), den.coeffs_.size());
    std::vector<Rational> q(len);
    for (size_t n = 0; n < len; ++n) {
        Rational acc = coeffs_[n];
        for (size_t i = 1; i <= n; ++i) acc -= den.coeffs_[i] * q[n - i];
        q[n] = acc / den.coeffs_[0];
    }
    return PowerSeries(std::move(q));
}

PowerSeries egf_series(Family family, const Rational& t, int order) {
    if (order < 0) throw std::out_of_range("egf_series: negative order");
    if (t == 1)
        throw DegenerateParameterError("egf_series: closed forms degenerate at t = 1");
    const Rational u = 1 - t;
    switch (family) {
        case Family::A: {
            // (t - 1) / (t - e^((t-1) z))
            PowerSeries den = PowerSeries::constant(t, order) - PowerSeries::exp_cz(t - 1, order);
            return PowerSeries::constant(t - 1, order).divide_by(den);
        }
        case Family::B: {
            // (1-t) e^((1-t) z) / (1 - t e^(2(1-t) z))
            PowerSeries num = u * PowerSeries::exp_cz(u, order);
            PowerSeries den =
                PowerSeries::constant(1, order) - t * PowerSeries::exp_cz(2 * u, order);
            return num.divide_by(den);
        }
        case Family::D:
        case Family::Dtilde: {
            PowerSeries e1 = PowerSeries::exp_cz(u, order);
            PowerSeries e3 = PowerSeries::exp_cz(3 * u, order);
            PowerSeries den =
                PowerSeries::constant(2, order) - (2 * t) * PowerSeries::exp_cz(2 * u, order);
            PowerSeries num = family == Family::D ? (2 - t) * e1 - t * e3 : t * e3 - t * e1;
            return num.divide_by(den);
        }
        case Family::BrentiD: break;
    }
    throw std::invalid_argument("egf_series: family must be A, B, D or Dtilde");
}

bool egf_pde_check(Family family, const Rational& t, int order) {
    if (family != Family::D && family != Family::Dtilde)
        throw std::invalid_argument("egf_pde_check: family must be D or Dtilde");
    if (order < 2) throw std::out_of_range("egf_pde_check: order must be >= 2");
    if (t == 1) throw DegenerateParameterError("egf_pde_check: degenerate at t = 1");

    PowerSeries f = egf_series(family, t, order);
    PowerSeries fz = f.derivative_z();  // known through order-1

    // The t-derivative, coefficient-wise: coefficient n of the series is the
    // family polynomial at n over n!, so d/dt of it is the polynomial
    // derivative evaluated at t, over n!.
    std::vector<Rational> dfdt(static_cast<size_t>(order));
    Rational inv_fact = 1;
    for (int n = 0; n < order; ++n) {
        if (n > 0) inv_fact /= n;
        dfdt[static_cast<size_t>(n)] = eulerian_poly(family, n).derivative()(t) * inv_fact;
    }

    const Rational rhs_scale = family == Family::D ? t : -t;
    Rational one_minus_t_pow = 1;
    Rational fact = 1;
    for (int n = 0; n < order; ++n) {
        if (n > 0) {
            one_minus_t_pow *= 1 - t;
            fact *= n;
        }
        Rational lhs = (1 + t) * f.coeff(n);
        lhs -= fz.coeff(n);
        if (n >= 1) lhs += 2 * t * fz.coeff(n - 1);
        lhs += 2 * t * (1 - t) * dfdt[static_cast<size_t>(n)];
        Rational rhs = rhs_scale * one_minus_t_pow / fact;
        if (lhs != rhs) return false;
    }
    return true;
}

Rational summation_partial(Family family, const Rational& t, int n, int terms) {
    if (family != Family::A && family != Family::B)
        throw std::invalid_argument("summation_partial: family must be A or B");
    if (!(t > 0 && t < 1)) throw std::out_of_range("summation_partial: t must be in (0, 1)");
    if (n < 0 || terms < 1) throw std::out_of_range("summation_partial: bad n or terms");
    Rational sum = 0;
    if (family == Family::A) {
        Rational tp = 1;
        for (int j = 1; j <= terms; ++j) {
            tp *= t;  // t^j
            sum += tp * pow_rational(Rational(j), n);
        }
    } else {
        Rational tp = 1;
        for (int k = 0; k < terms; ++k) {
            sum += pow_rational(Rational(2 * k + 1), n) * tp;
            tp *= t;
        }
    }
    return sum;
}

}  // namespace eulerian
