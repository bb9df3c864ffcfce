#include "metaplectic/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace metaplectic {

int jacobi(long long j, long long n) {
    if (n <= 0 || n % 2 == 0)
        throw std::invalid_argument("jacobi: modulus must be a positive odd integer");
    long long a = j % n;
    if (a < 0) a += n;
    int sign = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long m = n % 8;
            if (m == 3 || m == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

long long half_residue(long long a, long long n) {
    if (n <= 0 || n % 2 == 0)
        throw std::invalid_argument("half_residue: modulus must be a positive odd integer");
    long long m = a % n;
    if (m < 0) m += n;
    return std::min(m, n - m);
}

OddModulus::OddModulus(long long n) : n_(n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("OddModulus: need an odd integer >= 3, got " + std::to_string(n));
}

HalfUnitGroup::HalfUnitGroup(OddModulus n) : n_(n.value()) {
    for (long long a = 1; a <= (n_ - 1) / 2; ++a)
        if (std::gcd(a, n_) == 1) reps_.push_back(a);
}

long long HalfUnitGroup::mul(long long a, long long b) const {
    return half_residue(a * b, n_);
}

std::vector<long long> square_orbit(long long r, OddModulus n) {
    const long long m = n.value();
    if (std::gcd(((r % m) + m) % m, m) != 1)
        throw std::invalid_argument("square_orbit: r must be coprime to the modulus");
    HalfUnitGroup g(n);
    std::vector<long long> orbit;
    for (long long z : g.reps()) {
        long long v = half_residue(((r % m) + m) % m * ((z * z) % m) % m, m);
        if (std::find(orbit.begin(), orbit.end(), v) == orbit.end()) orbit.push_back(v);
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

bool minus_one_is_square(long long n) {
    for (long long b = 1; b < n; ++b)
        if (b * b % n == n - 1) return true;
    return false;
}

long long monoidal_class_count(OddModulus n) {
    const auto factors = factorize(n.value());
    const long long l = static_cast<long long>(factors.size());
    return minus_one_is_square(n.value()) ? (1LL << (l + 1)) : (1LL << l);
}

std::complex<double> quadratic_gauss_sum(long long r, OddModulus n) {
    const long long m = n.value();
    long long rr = ((r % m) + m) % m;
    if (std::gcd(rr, m) != 1)
        throw std::invalid_argument("quadratic_gauss_sum: r must be coprime to the modulus");
    std::complex<double> sum = 0.0;
    for (long long l = 0; l < m; ++l) {
        long long e = rr * (l * l % m) % m;  // phase is -2 pi e / m
        double ang = -2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(m);
        sum += std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return sum;
}

double eisenstein_product(long long q, OddModulus n) {
    const long long m = n.value();
    long long qq = ((q % m) + m) % m;
    if (std::gcd(qq, m) != 1)
        throw std::invalid_argument("eisenstein_product: q must be coprime to the modulus");
    double prod = 1.0;
    for (long long k = 1; k <= (m - 1) / 2; ++k) {
        double num = std::sin(2.0 * std::numbers::pi * static_cast<double>(qq * k % m) / static_cast<double>(m));
        double den = std::sin(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
        prod *= num / den;
    }
    return prod;
}

int sp_sign(long long p) {
    if (p < 1) throw std::invalid_argument("sp_sign: p must be >= 1");
    long long t = p * (p + 1) / 2;
    int via_parity = (t % 2 == 0) ? -1 : 1;  // -(-1)^t
    int via_jacobi = -jacobi(2, 2 * p + 1);
    if (via_parity != via_jacobi)
        throw std::logic_error("sp_sign: the two closed forms disagree");
    return via_parity;
}

}  // namespace metaplectic
