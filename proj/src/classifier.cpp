#include "metaplectic/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "metaplectic/numtheory.hpp"

namespace metaplectic {

InvariantProfile invariant_profile(const Params& params) {
    params.validate();
    const long long n = params.n();
    InvariantProfile out;
    out.kappa = params.kappa;
    for (int i = 0; i <= params.p; ++i) {
        long long e = static_cast<long long>(i) * i % (2 * n) * params.r % (2 * n);
        double x = std::cos(std::numbers::pi * static_cast<double>(e) / static_cast<double>(n));
        out.x.push_back((i % 2 == 0 ? 1.0 : -1.0) * x);
    }
    out.orbit = square_orbit(params.r, OddModulus(n));
    return out;
}

bool equivalent(int p, int r1, int kappa1, int r2, int kappa2) {
    Params{p, r1, kappa1, 1}.validate();
    Params{p, r2, kappa2, 1}.validate();
    if (kappa1 != kappa2) return false;
    const long long n = 2LL * p + 1;
    auto orbit = square_orbit(r1, OddModulus(n));
    return std::binary_search(orbit.begin(), orbit.end(), half_residue(r2, n));
}

std::vector<int> valid_r_values(int p) {
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    std::vector<int> out;
    const long long n = 2LL * p + 1;
    for (int r = 1; r < n; r += 2)
        if (std::gcd(static_cast<long long>(r), n) == 1) out.push_back(r);
    return out;
}

std::vector<ClassRep> enumerate_classes(int p) {
    const long long n = 2LL * p + 1;
    std::vector<ClassRep> out;
    for (int kappa : {1, -1}) {
        std::vector<std::vector<long long>> seen;
        for (int r : valid_r_values(p)) {
            const long long gr = half_residue(r, n);
            bool covered = false;
            for (const auto& orbit : seen)
                if (std::binary_search(orbit.begin(), orbit.end(), gr)) { covered = true; break; }
            if (covered) continue;
            auto orbit = square_orbit(r, OddModulus(n));
            seen.push_back(orbit);
            out.push_back({r, kappa, std::move(orbit)});
        }
    }
    return out;
}

}  // namespace metaplectic
