#pragma once

#include <complex>
#include <cstdint>
#include <unordered_map>
#include <utility>

#include "metaplectic/f_symbols.hpp"
#include "metaplectic/fusion_ring.hpp"
#include "metaplectic/label.hpp"
#include "metaplectic/params.hpp"
#include "metaplectic/rational.hpp"

namespace metaplectic {

/// Scaling dimension h_a: h_1 = 0, h_eps = 1,
/// h_{phi_i} = r i (2p+1-i) / (2(2p+1)),
/// h_{psi+} = r (p + kappa s_p - (2p+1|r) + 2) / 8, h_{psi-} the +6 variant.
Rational scaling_dimension(Label a, const Params& params);

/// The sign pair (sigma_1, sigma_2) for an admissible triple, with both tables
/// closed under cyclic rotation (a,b,c) -> (b,c,a).  Conflicting cyclic
/// derivations abort (none exist for valid parameters).
std::pair<int, int> sigma_signs(Label a, Label b, Label c, const Params& params,
                                const FusionRing& ring);

/// Immutable table of R-symbols R_{ab}^c = sigma_1 sigma_2 exp(i pi lambda (h_a+h_b-h_c)),
/// unit modulus by construction; lambda = -1 is the entrywise inverse of +1.
class RStore {
public:
    static RStore build(const Params& params);

    const Params& params() const { return params_; }
    const FusionRing& ring() const { return ring_; }

    /// R_{ab}^c; throws channel_error for inadmissible triples.
    std::complex<double> symbol(Label a, Label b, Label c) const;

    Rational h(Label a) const;

    const std::unordered_map<std::uint64_t, std::complex<double>>& table() const { return table_; }

    /// Copy with one symbol negated (mutation testing / --mutate).
    RStore with_negated(Label a, Label b, Label c) const;

    /// Copy with every R_{ab}^c negated for a, b both psi labels.
    RStore with_psi_sector_negated() const;

    /// The relabeling action (R^nu)_{ab}^c = R_{nu(a)nu(b)}^{nu(c)}.
    RStore relabeled(const RingAutomorphism& nu) const;

    std::uint64_t key_of(Label a, Label b, Label c) const {
        const int p = params_.p;
        return (std::uint64_t(a.index(p)) << 32) | (std::uint64_t(b.index(p)) << 16) |
               std::uint64_t(c.index(p));
    }

private:
    RStore(Params params, FusionRing ring) : params_(params), ring_(std::move(ring)) {}

    Params params_;
    FusionRing ring_;
    std::unordered_map<std::uint64_t, std::complex<double>> table_;
    std::vector<Rational> h_;
};

}  // namespace metaplectic
