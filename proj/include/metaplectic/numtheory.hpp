#pragma once

#include <complex>
#include <utility>
#include <vector>

namespace metaplectic {

/// Jacobi symbol (j|n) for n a positive odd integer. (j|1) = 1 by the
/// empty-product convention; 0 exactly when gcd(j,n) > 1.
int jacobi(long long j, long long n);

/// Representative of a mod n in {-(n-1)/2, ..., (n-1)/2}, absolute value.
/// n must be a positive odd integer.
long long half_residue(long long a, long long n);

/// A validated odd modulus n >= 3 (the ring sizes 2p+1 live here).
struct OddModulus {
    explicit OddModulus(long long n);
    long long value() const { return n_; }

private:
    long long n_;
};

/// Z_n^x / {+-1}, represented by the integers 1 <= a <= (n-1)/2 coprime to n.
struct HalfUnitGroup {
    explicit HalfUnitGroup(OddModulus n);

    long long modulus() const { return n_; }
    const std::vector<long long>& reps() const { return reps_; }
    std::size_t order() const { return reps_.size(); }

    /// Group law: half_residue(a*b mod n).
    long long mul(long long a, long long b) const;

private:
    long long n_;
    std::vector<long long> reps_;
};

/// {half_residue(r * z^2) : z in HalfUnitGroup(n)}, sorted ascending.
/// Requires gcd(r, n) = 1.
std::vector<long long> square_orbit(long long r, OddModulus n);

/// Number of monoidal equivalence classes for modulus n = p1^a1 ... pl^al:
/// 2^(l+1) when -1 is a square mod n, else 2^l.
long long monoidal_class_count(OddModulus n);

/// Trial-division factorization, (prime, exponent) pairs in ascending order.
std::vector<std::pair<long long, int>> factorize(long long n);

bool minus_one_is_square(long long n);

/// sum_{l=0}^{n-1} exp(-2 pi i r l^2 / n).  Requires gcd(r, n) = 1.
/// Equals eps_n * sqrt(n) * (-r|n) with eps_n = 1 for n = 1 mod 4, i otherwise.
std::complex<double> quadratic_gauss_sum(long long r, OddModulus n);

/// Eisenstein's product formula: prod_{m=1}^{(n-1)/2} sin(2 pi q m / n) / sin(2 pi m / n).
/// Equals the Jacobi symbol (q|n).  Requires gcd(q, n) = 1.
double eisenstein_product(long long q, OddModulus n);

/// s_p = -(-1)^{p(p+1)/2} = -(2|2p+1).  Both closed forms are evaluated and
/// must agree.
int sp_sign(long long p);

}  // namespace metaplectic
