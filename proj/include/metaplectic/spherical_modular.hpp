#pragma once

#include <complex>
#include <vector>

#include "metaplectic/f_symbols.hpp"
#include "metaplectic/r_symbols.hpp"

namespace metaplectic {

/// A solution of the pivotal equation, one sign per label (canonical index).
struct PivotalSolution {
    std::vector<int> eps;

    int at(Label a, int p) const { return eps[a.index(p)]; }
    int psi_sign_common() const { return eps[eps.size() - 1]; }
};

/// All sign assignments satisfying
///   eps_c^{-1} eps_a eps_b = F_{abc}^{1;ca} F_{bca}^{1;ab} F_{cab}^{1;bc}
/// over every admissible triple.  Exactly two solutions exist, differing in
/// the common sign of eps_{psi+-}; anything else aborts.  The all-positive
/// assignment is listed first.
std::vector<PivotalSolution> solve_pivotal(const FStore& f);

/// Picks the solution with positive quantum dimensions (eps_psi = kappa).
const PivotalSolution& positive_pivot(const FStore& f, const std::vector<PivotalSolution>& sols);

/// q_a = eps_a / F_{aaa}^{a;11}; left and right traces coincide here.
std::vector<double> quantum_dims(const FStore& f, const PivotalSolution& pivotal);

struct ModularData {
    std::vector<int> pivotal;
    std::vector<double> qdims;
    std::vector<std::vector<std::complex<double>>> s_hat;  // from F and R
    std::vector<std::vector<std::complex<double>>> s;      // S = D s_hat D
    std::vector<std::complex<double>> t;                   // twists theta_a
    double total_dim = 0;                                  // sum q_a^2
    double s_det_abs = 0;
};

/// Modular data from the stores:
///   s_hat_{ab} = sum_c [F_{abb}^a]_{c,1} R_{ab}^c R_{ba}^c [(F_{abb}^a)^{-1}]_{1,c}
///   theta_a    = q_a^{-1} sum_c q_c R_{aa}^c
ModularData compute_modular(const FStore& f, const RStore& r, const PivotalSolution& pivotal);

/// The same data from the closed forms, for the pivotal structure with
/// eps_{psi+-} = eps_psi.  The psi-psi block of S carries the sign consistent
/// with the s_hat formula above: S_{psi_s psi_s} = (2|2p+1) eps_psi q_psi and
/// S_{psi_s psi_-s} the negative.
ModularData closed_form_modular(const Params& params, int eps_psi);

/// Largest entrywise deviation across qdims, S and T.
double modular_deviation(const ModularData& a, const ModularData& b);

}  // namespace metaplectic
