#ifndef WDC2D_RATIONAL_HPP
#define WDC2D_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace wdc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Exact conversion: every finite double is a dyadic rational.
inline Rational rational_from_double(double x)
{
    if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite value");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double mant = std::frexp(x, &exp);           // x = mant * 2^exp, |mant| in [0.5, 1)
    long long m = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    Rational r(m);
    if (exp >= 0) {
        r *= Rational(BigInt(1) << exp);
    } else {
        r /= Rational(BigInt(1) << (-exp));
    }
    return r;
}

/// Parses "p", "-p" or "p/q" with integer p, q.
inline Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (text.find('.') != std::string::npos) {
                // decimal literal: keep it exact via the dyadic double route only
                // when it is exactly representable; otherwise scale by a power of ten
                std::string digits = text;
                const auto dot = digits.find('.');
                digits.erase(dot, 1);
                const std::size_t frac_len = text.size() - dot - 1;
                BigInt num(digits);
                BigInt den = 1;
                for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
                return Rational(num, den);
            }
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    }
}

inline std::string format_rational(const Rational& q)
{
    const BigInt num = numerator(q);
    const BigInt den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

} // namespace wdc

#endif
