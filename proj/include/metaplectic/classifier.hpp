#pragma once

#include <vector>

#include "metaplectic/params.hpp"

namespace metaplectic {

/// Gauge-invariant profile of a solution: kappa, the (p+1)-tuple
/// X(i) = (-1)^{i^2} cos(i^2 r pi / (2p+1)), and the square orbit of g(r).
struct InvariantProfile {
    int kappa = 1;
    std::vector<double> x;           // i = 0..p; x[0] = 1
    std::vector<long long> orbit;    // sorted coset of the squares
};

InvariantProfile invariant_profile(const Params& params);

/// Monoidal equivalence criterion: kappa agreement plus square-orbit
/// membership of g(r').  Pure integer arithmetic.
bool equivalent(int p, int r1, int kappa1, int r2, int kappa2);

struct ClassRep {
    int r = 1;
    int kappa = 1;
    std::vector<long long> orbit;
};

/// One representative (smallest valid odd r) per equivalence class,
/// kappa = +1 classes first.  The count equals monoidal_class_count(2p+1).
std::vector<ClassRep> enumerate_classes(int p);

/// Valid odd coprime r values for this p, ascending.
std::vector<int> valid_r_values(int p);

}  // namespace metaplectic
