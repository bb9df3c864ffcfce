#pragma once

#include <vector>

#include "metaplectic/label.hpp"

namespace metaplectic {

/// A fusion-rule-preserving relabeling, stored as a permutation of canonical
/// indices.  The full group is generated by phi_i -> phi_{g(z i)} for units z
/// and by the psi swap.
struct RingAutomorphism {
    std::vector<int> perm;  // canonical index -> canonical index

    Label apply(Label a, int p) const { return Label::from_index(perm[a.index(p)], p); }
};

/// The SO(2p+1)_2 Grothendieck ring: labels {1, eps, phi_1..phi_p, psi+-},
/// multiplicity-free fusion coefficients, Frobenius-Perron dimensions.
/// Immutable after construction.
class FusionRing {
public:
    explicit FusionRing(int p);

    int p() const { return p_; }
    int size() const { return p_ + 4; }  // number of simple objects
    const std::vector<Label>& labels() const { return labels_; }

    bool admissible(Label a, Label b, Label c) const {
        return n_[(a.index(p_) * size() + b.index(p_)) * size() + c.index(p_)] != 0;
    }
    bool admissible_idx(int a, int b, int c) const {
        return n_[(a * size() + b) * size() + c] != 0;
    }

    /// Decomposition of a (x) b, in canonical label order.
    const std::vector<Label>& fuse(Label a, Label b) const {
        return chan_[a.index(p_) * size() + b.index(p_)];
    }

    /// Recursively extended structure constant N_{x1...xk}^y.
    long long chain_multiplicity(const std::vector<Label>& chain, Label total) const;

    double fp_dim(Label a) const;
    double fp_total() const;  // sum of squared FP dimensions = 4(2p+1)

    /// The full automorphism group, |HalfUnitGroup(2p+1)| x Z_2 elements.
    /// Identity first, then ordered by (unit rep, psi swap).
    std::vector<RingAutomorphism> automorphisms() const;

private:
    int p_;
    std::vector<char> n_;                  // dense L^3 fusion coefficients
    std::vector<std::vector<Label>> chan_; // L^2 channel lists
    std::vector<Label> labels_;
};

}  // namespace metaplectic
