#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "metaplectic/f_symbols.hpp"
#include "metaplectic/r_symbols.hpp"

namespace metaplectic {

struct Violation {
    std::string equation;     // "pentagon", "hexagon-R1", "hexagon-R2", ...
    std::vector<int> labels;  // canonical indices, equation-specific ordering
    double residual = 0;

    std::string pretty(int p) const;
};

struct VerificationReport {
    std::size_t equations_checked = 0;
    double max_residual = 0;
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }
    void merge(VerificationReport&& other);
    void sort_canonical();
};

/// Pentagon identity over every admissible labeling:
///   F_{fcd}^{e;hj} F_{abj}^{e;fi} = sum_g F_{abc}^{h;fg} F_{agd}^{e;hi} F_{bcd}^{i;gj}
/// with the sum over the b(x)c channel g.  A missing F-matrix for an
/// admissible quadruple is a store bug and throws; numerical violations are
/// reported.  The report is independent of the worker count.
VerificationReport check_pentagon(const FStore& f, double tolerance, int jobs = 1);

/// Both hexagon identities,
///   R_{ac}^g F_{acb}^{d;gf} R_{bc}^f         = sum_e F_{cab}^{d;ge} R_{ec}^d F_{abc}^{d;ef}
///   (R_{ac}^g)^-1 F_{acb}^{d;gf} (R_{bc}^f)^-1 = sum_e F_{cab}^{d;ge} (R_{ec}^d)^-1 F_{abc}^{d;ef}
/// for every admissible (a,b,c,d,g,f), summing over e in a(x)b.
VerificationReport check_hexagon(const FStore& f, const RStore& r, double tolerance, int jobs = 1);

/// max-norm of M^T M - I per F-matrix.
VerificationReport check_orthogonality(const FStore& f, double tolerance);

/// (r | 2p+1) = det H(2r+2p+1) * det G(2r+2p+1), evaluated at kappa = +1.
bool check_jacobi_det(int p, int r, double tolerance, double* residual = nullptr);

/// Residuals of the four Gauss-sum identity classes at a specific (i1, i2);
/// class 2 uses i1 only, class 1 neither.
std::array<double, 4> appendix_identity_residuals(int p, int r, int kappa, int i1, int i2);

/// The identity classes swept over all i1, i2 in 1..p.
VerificationReport check_appendix_identities(int p, int r, int kappa, double tolerance);

}  // namespace metaplectic
