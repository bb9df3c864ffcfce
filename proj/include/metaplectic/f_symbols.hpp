#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "metaplectic/fusion_ring.hpp"
#include "metaplectic/label.hpp"
#include "metaplectic/params.hpp"

namespace metaplectic {

using Matrixd = std::vector<std::vector<double>>;

/// Thrown when a 6J-symbol is requested at an inadmissible channel.  Distinct
/// from a stored value that happens to be zero.
struct channel_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// J(i,j) = 2^{zeta(i,j)} kappa / sqrt(2p+1) * exp(i pi r i j / (2p+1)),
/// zeta(i,j) = (2 - [i==0] - [j==0]) / 2.
std::complex<double> j_coeff(int i, int j, int p, int r, int kappa);

/// H(i,j)  = (-1)^{ij} Re J(i,j), indices 0..p, and
/// H'(i,j) = (-1)^{[i==0]+[j==0]+1} H(i,j).
/// Orthogonal exactly when r is odd and coprime to 2p+1 (not enforced here;
/// the determinant identity evaluates them at arguments outside that range).
std::pair<Matrixd, Matrixd> h_matrices(int p, int r, int kappa);

/// G(i,j) = (-1)^{(i-1)(j-1)} Im J(i,j), indices 1..p (stored 0-based).
Matrixd g_matrix(int p, int r, int kappa);

/// (1/sqrt 2) [[s1,s2],[s3,s4]]; requires s1 s2 s3 s4 = -1.
Matrixd block_a(int s1, int s2, int s3, int s4);
Matrixd block_b();
Matrixd block_c();
/// [[s1 Re, s2 Im],[s3 Im, s4 Re]] of exp(i pi r t / (2p+1)); s1 s2 s3 s4 = -1.
Matrixd block_d(int p, int r, long long t, int s1, int s2, int s3, int s4);
/// [[s1 Im, s2 Re],[s3 Re, s4 Im]] of the same phase; s1 s2 s3 s4 = -1.
Matrixd block_e(int p, int r, long long t, int s1, int s2, int s3, int s4);

/// One F-matrix F_{abc}^d.  Rows are the channels e with (a,b,e) and (e,c,d)
/// admissible, columns the f with (b,c,f) and (a,f,d) admissible, both in
/// canonical label order.  All entries are real in this family.
struct FMatrix {
    std::vector<Label> rows, cols;
    std::vector<double> v;  // row-major, rows.size() x cols.size()

    int nrows() const { return static_cast<int>(rows.size()); }
    int ncols() const { return static_cast<int>(cols.size()); }
    double at(int i, int j) const { return v[static_cast<std::size_t>(i) * cols.size() + j]; }
    double& at(int i, int j) { return v[static_cast<std::size_t>(i) * cols.size() + j]; }
    int row_pos(Label e) const;  // -1 if absent
    int col_pos(Label f) const;
    FMatrix transposed() const;
};

/// Immutable table of every F-matrix of a solution, keyed by the admissible
/// quadruple (a,b,c,d).  Built from the closed-form classes and closed under
/// the rotation rule F_{bcd}^a = (F_{abc}^d)^T; construction fails loudly if
/// any admissible quadruple is left uncovered or two derivations disagree.
class FStore {
public:
    static FStore build(const Params& params);

    const Params& params() const { return params_; }
    const FusionRing& ring() const { return ring_; }

    static std::uint64_t key(int a, int b, int c, int d) {
        return (std::uint64_t(a) << 48) | (std::uint64_t(b) << 32) | (std::uint64_t(c) << 16) |
               std::uint64_t(d);
    }
    std::uint64_t key_of(Label a, Label b, Label c, Label d) const {
        const int p = params_.p;
        return key(a.index(p), b.index(p), c.index(p), d.index(p));
    }

    /// Null when the quadruple is inadmissible.
    const FMatrix* find(Label a, Label b, Label c, Label d) const;
    const FMatrix& matrix(Label a, Label b, Label c, Label d) const;

    /// The 6J-symbol F_{abc}^{d;ef}.  Throws channel_error when any of the
    /// four participating triples is inadmissible.
    double symbol(Label a, Label b, Label c, Label d, Label e, Label f) const;

    const std::unordered_map<std::uint64_t, FMatrix>& table() const { return table_; }
    std::size_t size() const { return table_.size(); }

    /// Copy with a single entry's sign flipped (mutation testing / --mutate).
    FStore with_sign_flipped(Label a, Label b, Label c, Label d, int i, int j) const;

    /// The relabeling action (F^nu)_{abc}^{d;ef} = F_{nu(a)nu(b)nu(c)}^{nu(d);nu(e)nu(f)}.
    FStore relabeled(const RingAutomorphism& nu) const;

    std::vector<Label> labels_of_key(std::uint64_t k) const;

private:
    FStore(Params params, FusionRing ring) : params_(params), ring_(std::move(ring)) {}

    Params params_;
    FusionRing ring_;
    std::unordered_map<std::uint64_t, FMatrix> table_;
};

}  // namespace metaplectic
