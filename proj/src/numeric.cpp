#include "eulerian/numeric.hpp"

#include <cctype>

namespace eulerian {

BigInt factorial(int n) {
    if (n < 0) throw std::out_of_range("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact at every step: r is C(n, i+1) * (i+1)! / (i+1)!
    }
    return r;
}

BigInt pow_bigint(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

Rational pow_rational(const Rational& base, int exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("pow_rational: 0 to a negative power");
        return 1 / pow_rational(base, -exp);
    }
    Rational r = 1;
    Rational b = base;
    unsigned e = static_cast<unsigned>(exp);
    while (e > 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

Rational rational_binomial(const Rational& x, int n) {
    if (n < 0) throw std::out_of_range("rational_binomial: negative order");
    Rational r = 1;
    for (int i = 0; i < n; ++i) r *= x - i;
    return r / Rational(factorial(n));
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_integer(const std::string& s) {
    std::string body = s;
    bool neg = false;
    if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
        neg = body[0] == '-';
        body.erase(0, 1);
    }
    if (!all_digits(body)) throw std::invalid_argument("not an integer literal: '" + s + "'");
    BigInt v(body);
    return neg ? -v : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (text.find('.') != std::string::npos)
        throw std::invalid_argument("decimal literals are not accepted, use p/q: '" + text + "'");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num = parse_integer(text.substr(0, slash));
        BigInt den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
        return Rational(num, den);
    }
    auto e = text.find_first_of("eE");
    if (e != std::string::npos) {
        BigInt mant = parse_integer(text.substr(0, e));
        BigInt ex = parse_integer(text.substr(e + 1));
        if (ex > 4096 || ex < -4096) throw std::invalid_argument("exponent out of range: '" + text + "'");
        BigInt scale = pow_bigint(10, static_cast<unsigned>(abs(ex).convert_to<long>()));
        return ex < 0 ? Rational(mant, scale) : Rational(mant * scale);
    }
    return Rational(parse_integer(text));
}

std::string to_decimal(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

std::string decimal_magnitude(const Rational& v) {
    if (v == 0) return "0";
    Rational a = abs(v);
    int e = 0;
    Rational p = 1;
    if (a <= 1) {
        while (p >= a) {
            p /= 10;
            --e;
        }
        ++e;  // p slid one step below a
    } else {
        while (p < a) {
            p *= 10;
            ++e;
        }
    }
    return "1e" + std::to_string(e);
}

}  // namespace eulerian
