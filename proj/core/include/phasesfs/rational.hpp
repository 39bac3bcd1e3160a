#pragma once

#include <cstdint>
#include <numeric>

#include "phasesfs/errors.hpp"

namespace phasesfs {

/// Exact fraction with 64-bit numerator and denominator, 128-bit
/// intermediates. Large enough for harmonic sums and estimator coefficients
/// up to the supported sample sizes; overflow throws rather than wrapping.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) {
            throw ValidationError("Rational: zero denominator");
        }
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double to_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(static_cast<__int128>(a.num) * b.den +
                             static_cast<__int128>(b.num) * a.den,
                         static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_i128(static_cast<__int128>(a.num) * b.den -
                             static_cast<__int128>(b.num) * a.den,
                         static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(static_cast<__int128>(a.num) * b.num,
                         static_cast<__int128>(a.den) * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) {
            throw ValidationError("Rational: division by zero");
        }
        return from_i128(static_cast<__int128>(a.num) * b.den,
                         static_cast<__int128>(a.den) * b.num);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }

private:
    static __int128 gcd_i128(__int128 a, __int128 b) {
        while (b != 0) {
            const __int128 r = a % b;
            a = b;
            b = r;
        }
        return a;
    }

    static Rational from_i128(__int128 n, __int128 d) {
        if (d == 0) {
            throw ValidationError("Rational: zero denominator");
        }
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const __int128 an = n < 0 ? -n : n;
        const __int128 g = an == 0 ? d : gcd_i128(an, d);
        n /= g;
        d /= g;
        constexpr __int128 kMax = INT64_MAX;
        if (n > kMax || -n > kMax || d > kMax) {
            throw NumericalError("Rational: overflow after reduction");
        }
        Rational r;
        r.num = static_cast<std::int64_t>(n);
        r.den = static_cast<std::int64_t>(d);
        return r;
    }
};

}  // namespace phasesfs
