#pragma once

namespace metaplectic {

/// Solution parameters.  A fusion system is indexed by (p, r, kappa) with r an
/// odd integer, 1 <= r < 2p+1, gcd(r, 2p+1) = 1 and kappa = +-1; lambda = +-1
/// selects one of the two mutually inverse braidings.
struct Params {
    int p = 1;
    int r = 1;
    int kappa = 1;
    int lambda = 1;

    long long n() const { return 2LL * p + 1; }

    /// Throws std::invalid_argument naming the violated constraint.
    void validate() const;
};

}  // namespace metaplectic
