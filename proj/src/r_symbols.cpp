#include "metaplectic/r_symbols.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "metaplectic/numtheory.hpp"

namespace metaplectic {

namespace {

int pm1(long long e) { return e % 2 == 0 ? 1 : -1; }

// sigma_1 case table for (phi_i, psi, psi) triples; depends on i mod 4 and p mod 2.
int sigma1_phi_psi(int i, int p) {
    int m = i % 4;
    if (p % 2 == 1 && (m == 1 || m == 2)) return -1;
    if (p % 2 == 0 && (m == 2 || m == 3)) return -1;
    return 1;
}

std::optional<int> sigma1_base(Label x, Label y, Label z, const Params& P) {
    if (x.is_phi() && y.is_psi() && z.is_psi()) return sigma1_phi_psi(x.i, P.p);
    if (x.is_phi() && y.is_phi() && z.is_phi() &&
        z.i == half_residue(static_cast<long long>(x.i) + y.i, P.n()))
        return pm1(static_cast<long long>(x.i) * y.i);
    return std::nullopt;
}

std::optional<int> sigma2_base(Label x, Label y, Label z, const Params& P) {
    if ((x.is_eps() || x.is_phi()) && y.is_psi() && z.is_psi() && z.psi_sign() == -y.psi_sign())
        return pm1((P.r - 1) / 2);
    return std::nullopt;
}

template <typename BaseFn>
int close_cyclically(Label a, Label b, Label c, const Params& P, BaseFn base, const char* which) {
    std::optional<int> value;
    Label t[3] = {a, b, c};
    for (int k = 0; k < 3; ++k) {
        auto v = base(t[k % 3], t[(k + 1) % 3], t[(k + 2) % 3], P);
        if (!v) continue;
        if (value && *value != *v)
            throw std::logic_error(std::string(which) + " sign table cyclically inconsistent at (" +
                                   a.name() + "," + b.name() + "," + c.name() + ")");
        value = v;
    }
    return value.value_or(1);
}

}  // namespace

Rational scaling_dimension(Label a, const Params& params) {
    const long long n = params.n(), r = params.r, p = params.p;
    switch (a.kind) {
        case Label::Kind::One: return Rational(0);
        case Label::Kind::Eps: return Rational(1);
        case Label::Kind::Phi: return Rational(r * a.i * (n - a.i), 2 * n);
        case Label::Kind::PsiPlus:
            return Rational(r * (p + params.kappa * sp_sign(p) - jacobi(n, r) + 2), 8);
        default:
            return Rational(r * (p + params.kappa * sp_sign(p) - jacobi(n, r) + 6), 8);
    }
}

std::pair<int, int> sigma_signs(Label a, Label b, Label c, const Params& params,
                                const FusionRing& ring) {
    if (!ring.admissible(a, b, c))
        throw channel_error("sigma_signs: inadmissible triple (" + a.name() + "," + b.name() + "," +
                            c.name() + ")");
    int s1 = close_cyclically(a, b, c, params, [](Label x, Label y, Label z, const Params& P) {
        return sigma1_base(x, y, z, P);
    }, "sigma_1");
    int s2 = close_cyclically(a, b, c, params, [](Label x, Label y, Label z, const Params& P) {
        return sigma2_base(x, y, z, P);
    }, "sigma_2");
    return {s1, s2};
}

RStore RStore::build(const Params& params) {
    params.validate();
    RStore store(params, FusionRing(params.p));
    const FusionRing& ring = store.ring_;

    for (Label a : ring.labels()) store.h_.push_back(scaling_dimension(a, params));

    // One exponential per distinct reduced phase keeps the table reproducible.
    std::map<std::pair<long long, long long>, std::complex<double>> phases;
    auto unit_phase = [&](Rational x) {
        Rational m = x.mod_two();
        auto it = phases.find({m.num, m.den});
        if (it != phases.end()) return it->second;
        double ang = std::numbers::pi * m.to_double();
        std::complex<double> v(std::cos(ang), std::sin(ang));
        phases.emplace(std::make_pair(m.num, m.den), v);
        return v;
    };

    const int p = params.p;
    for (Label a : ring.labels())
        for (Label b : ring.labels())
            for (Label c : ring.fuse(a, b)) {
                auto [s1, s2] = sigma_signs(a, b, c, params, ring);
                Rational x = store.h_[a.index(p)] + store.h_[b.index(p)] - store.h_[c.index(p)];
                if (params.lambda < 0) x = Rational(0) - x;
                store.table_.emplace(store.key_of(a, b, c),
                                     static_cast<double>(s1 * s2) * unit_phase(x));
            }
    return store;
}

std::complex<double> RStore::symbol(Label a, Label b, Label c) const {
    auto it = table_.find(key_of(a, b, c));
    if (it == table_.end())
        throw channel_error("no R-symbol for inadmissible triple (" + a.name() + "," + b.name() +
                            "," + c.name() + ")");
    return it->second;
}

Rational RStore::h(Label a) const { return h_[a.index(params_.p)]; }

RStore RStore::with_negated(Label a, Label b, Label c) const {
    RStore out = *this;
    auto it = out.table_.find(key_of(a, b, c));
    if (it == out.table_.end())
        throw std::invalid_argument("with_negated: triple (" + a.name() + "," + b.name() + "," +
                                    c.name() + ") is not in the store");
    it->second = -it->second;
    return out;
}

RStore RStore::relabeled(const RingAutomorphism& nu) const {
    const int p = params_.p;
    RStore out(params_, ring_);
    out.h_ = h_;
    std::vector<int> inv(nu.perm.size());
    for (std::size_t i = 0; i < nu.perm.size(); ++i) inv[nu.perm[i]] = static_cast<int>(i);
    auto pre = [&](Label x) { return Label::from_index(inv[x.index(p)], p); };
    for (Label a : ring_.labels())
        for (Label b : ring_.labels())
            for (Label c : ring_.fuse(a, b))
                out.table_.emplace(out.key_of(pre(a), pre(b), pre(c)), symbol(a, b, c));
    return out;
}

RStore RStore::with_psi_sector_negated() const {
    RStore out = *this;
    for (Label a : ring_.labels())
        for (Label b : ring_.labels()) {
            if (!(a.is_psi() && b.is_psi())) continue;
            for (Label c : ring_.fuse(a, b)) {
                auto it = out.table_.find(key_of(a, b, c));
                it->second = -it->second;
            }
        }
    return out;
}

}  // namespace metaplectic
