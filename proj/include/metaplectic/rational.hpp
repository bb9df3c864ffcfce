#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

namespace metaplectic {

/// Exact rational with normalized sign and gcd-reduced terms.  Scaling
/// dimensions live here (denominators divide 8 and 2(2p+1)).
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend Rational operator+(Rational a, Rational b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(Rational a, Rational b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend bool operator==(const Rational&, const Rational&) = default;
    friend auto operator<=>(Rational a, Rational b) { return a.num * b.den <=> b.num * a.den; }

    /// Representative of this value mod 2 in [0, 2) -- the period of x -> exp(i pi x).
    Rational mod_two() const {
        long long m = num % (2 * den);
        if (m < 0) m += 2 * den;
        return Rational(m, den);
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace metaplectic
