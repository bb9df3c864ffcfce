#include "metaplectic/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "metaplectic/numtheory.hpp"

namespace metaplectic {

FusionRing::FusionRing(int p) : p_(p) {
    if (p < 1) throw std::invalid_argument("FusionRing: p must be >= 1");
    const int L = size();
    const long long n = 2LL * p + 1;
    n_.assign(static_cast<std::size_t>(L) * L * L, 0);

    labels_.push_back(Label::one());
    labels_.push_back(Label::eps());
    for (int i = 1; i <= p; ++i) labels_.push_back(Label::phi(i));
    labels_.push_back(Label::psi_plus());
    labels_.push_back(Label::psi_minus());

    auto set = [&](Label a, Label b, Label c) {
        n_[(a.index(p_) * L + b.index(p_)) * L + c.index(p_)] = 1;
        n_[(b.index(p_) * L + a.index(p_)) * L + c.index(p_)] = 1;
    };

    for (Label x : labels_) {
        set(Label::one(), x, x);
    }
    set(Label::eps(), Label::eps(), Label::one());
    for (int i = 1; i <= p; ++i) set(Label::eps(), Label::phi(i), Label::phi(i));
    set(Label::eps(), Label::psi_plus(), Label::psi_minus());
    set(Label::eps(), Label::psi_minus(), Label::psi_plus());

    for (int i = 1; i <= p; ++i) {
        for (int j = i; j <= p; ++j) {
            if (i == j) {
                set(Label::phi(i), Label::phi(i), Label::one());
                set(Label::phi(i), Label::phi(i), Label::eps());
                set(Label::phi(i), Label::phi(i), Label::phi((int)half_residue(2 * i, n)));
            } else {
                set(Label::phi(i), Label::phi(j), Label::phi((int)half_residue(i - j, n)));
                set(Label::phi(i), Label::phi(j), Label::phi((int)half_residue(i + j, n)));
            }
        }
        for (Label psi : {Label::psi_plus(), Label::psi_minus()}) {
            set(Label::phi(i), psi, Label::psi_plus());
            set(Label::phi(i), psi, Label::psi_minus());
        }
    }
    for (Label s : {Label::psi_plus(), Label::psi_minus()}) {
        set(s, s, Label::one());
        set(s, s.psi_flipped(), Label::eps());
        for (int j = 1; j <= p; ++j) {
            set(s, s, Label::phi(j));
            set(s, s.psi_flipped(), Label::phi(j));
        }
    }

    chan_.resize(static_cast<std::size_t>(L) * L);
    for (int a = 0; a < L; ++a)
        for (int b = 0; b < L; ++b) {
            auto& out = chan_[a * L + b];
            for (int c = 0; c < L; ++c)
                if (admissible_idx(a, b, c)) out.push_back(Label::from_index(c, p_));
        }
}

long long FusionRing::chain_multiplicity(const std::vector<Label>& chain, Label total) const {
    if (chain.empty()) throw std::invalid_argument("chain_multiplicity: empty chain");
    const int L = size();
    std::vector<long long> counts(L, 0);
    counts[chain[0].index(p_)] = 1;
    for (std::size_t k = 1; k < chain.size(); ++k) {
        std::vector<long long> next(L, 0);
        const int x = chain[k].index(p_);
        for (int z = 0; z < L; ++z) {
            if (counts[z] == 0) continue;
            for (int y = 0; y < L; ++y)
                if (admissible_idx(z, x, y)) next[y] += counts[z];
        }
        counts.swap(next);
    }
    return counts[total.index(p_)];
}

double FusionRing::fp_dim(Label a) const {
    if (a.is_one() || a.is_eps()) return 1.0;
    if (a.is_phi()) return 2.0;
    return std::sqrt(2.0 * p_ + 1.0);
}

double FusionRing::fp_total() const {
    double s = 0;
    for (Label a : labels_) s += fp_dim(a) * fp_dim(a);
    return s;
}

std::vector<RingAutomorphism> FusionRing::automorphisms() const {
    const long long n = 2LL * p_ + 1;
    HalfUnitGroup g{OddModulus(n)};
    std::vector<RingAutomorphism> out;
    const int L = size();
    for (long long z : g.reps()) {
        for (int swap = 0; swap < 2; ++swap) {
            RingAutomorphism nu;
            nu.perm.resize(L);
            nu.perm[0] = 0;
            nu.perm[1] = 1;
            for (int i = 1; i <= p_; ++i)
                nu.perm[1 + i] = 1 + static_cast<int>(half_residue(z * i, n));
            nu.perm[p_ + 2] = swap ? p_ + 3 : p_ + 2;
            nu.perm[p_ + 3] = swap ? p_ + 2 : p_ + 3;
            out.push_back(std::move(nu));
        }
    }
    return out;
}

}  // namespace metaplectic
