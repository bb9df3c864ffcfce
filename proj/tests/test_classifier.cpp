#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "metaplectic/classifier.hpp"
#include "metaplectic/f_symbols.hpp"
#include "metaplectic/numtheory.hpp"

using namespace metaplectic;

TEST_CASE("x-tuple closed-form values") {
    auto prof = invariant_profile({2, 1, 1, 1});
    REQUIRE(prof.x.size() == 3);
    CHECK(prof.x[0] == doctest::Approx(1.0));
    CHECK(prof.x[1] == doctest::Approx(-(1 + std::sqrt(5.0)) / 4).epsilon(1e-13));
    CHECK(prof.x[2] == doctest::Approx(-(1 + std::sqrt(5.0)) / 4).epsilon(1e-13));
    auto prof3 = invariant_profile({2, 3, 1, 1});
    CHECK(prof3.x[1] == doctest::Approx((std::sqrt(5.0) - 1) / 4).epsilon(1e-13));
    CHECK(prof3.x[2] == doctest::Approx((std::sqrt(5.0) - 1) / 4).epsilon(1e-13));
    CHECK(prof.kappa == 1);
    CHECK(prof.orbit == std::vector<long long>{1});
    CHECK(prof3.orbit == std::vector<long long>{2});
}

TEST_CASE("x-tuples transform by the index permutation under the orbit action") {
    for (int p : {2, 3, 4, 5, 7, 10}) {
        const long long n = 2LL * p + 1;
        HalfUnitGroup g{OddModulus(n)};
        for (int r : valid_r_values(p)) {
            auto base = invariant_profile({p, r, 1, 1});
            for (long long z : g.reps()) {
                // odd representative of r z^2 mod 2p+1
                long long rz = r * z % n * z % n;
                if (rz % 2 == 0) rz = n - rz;  // the other preimage of g(rz^2)
                // rz may equal n - r z^2; both give the same X-tuple
                auto acted = invariant_profile({p, static_cast<int>(rz), 1, 1});
                for (int i = 0; i <= p; ++i) {
                    long long gi = half_residue(z * i, n);
                    CHECK(acted.x[i] ==
                          doctest::Approx(base.x[static_cast<int>(gi)]).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("equivalence criterion examples") {
    CHECK(!equivalent(2, 1, 1, 3, 1));
    CHECK(equivalent(4, 1, 1, 5, 1));
    CHECK(!equivalent(4, 1, 1, 1, -1));
    CHECK(equivalent(3, 1, 1, 3, 1));  // G_7 squares act transitively
    CHECK_THROWS_AS(equivalent(2, 2, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("equivalence is an equivalence relation") {
    for (int p : {2, 4, 7, 12}) {
        auto rs = valid_r_values(p);
        for (int a : rs) {
            CHECK(equivalent(p, a, 1, a, 1));
            for (int b : rs) {
                CHECK(equivalent(p, a, 1, b, 1) == equivalent(p, b, 1, a, 1));
                for (int c : rs)
                    if (equivalent(p, a, 1, b, 1) && equivalent(p, b, 1, c, 1))
                        CHECK(equivalent(p, a, 1, c, 1));
            }
        }
    }
}

TEST_CASE("class enumeration and counts") {
    CHECK(enumerate_classes(1).size() == 2);
    CHECK(enumerate_classes(2).size() == 4);
    CHECK(enumerate_classes(3).size() == 2);
    CHECK(enumerate_classes(4).size() == 2);
    CHECK(enumerate_classes(7).size() == 4);   // 2p+1 = 15
    CHECK(enumerate_classes(12).size() == 4);  // 2p+1 = 25
    for (int p = 1; p <= 200; ++p)
        CHECK(enumerate_classes(p).size() ==
              static_cast<std::size_t>(monoidal_class_count(OddModulus(2LL * p + 1))));
    // representatives: smallest valid odd r, kappa = +1 block first
    auto cls = enumerate_classes(2);
    REQUIRE(cls.size() == 4);
    CHECK(cls[0].r == 1);
    CHECK(cls[0].kappa == 1);
    CHECK(cls[1].r == 3);
    CHECK(cls[1].kappa == 1);
    CHECK(cls[2].r == 1);
    CHECK(cls[2].kappa == -1);
    CHECK(cls[3].r == 3);
    CHECK(cls[3].kappa == -1);
}

TEST_CASE("profiles separate inequivalent solutions") {
    for (int p = 1; p <= 30; ++p) {
        auto rs = valid_r_values(p);
        for (int a : rs)
            for (int b : rs) {
                if (equivalent(p, a, 1, b, 1)) continue;
                auto pa = invariant_profile({p, a, 1, 1});
                auto pb = invariant_profile({p, b, 1, 1});
                double diff = 0;
                for (int i = 0; i <= p; ++i) diff = std::max(diff, std::abs(pa.x[i] - pb.x[i]));
                CHECK(diff > 1e-6);
            }
    }
}

namespace {

// Gauge-invariant closed-loop products read straight off an F-store:
// P_0 = [F_{psi+psi+psi+}^{psi+}]_{1,1},
// P_i = [F_{psi+psi+psi+}^{psi+}]_{phi_i,phi_i} * [F_{psi+phi_i psi+}^{phi_i}]_{psi+,psi+}.
std::vector<double> loop_profile(const FStore& fs) {
    const int p = fs.params().p;
    const Label pp = Label::psi_plus(), one = Label::one();
    std::vector<double> out;
    out.push_back(fs.symbol(pp, pp, pp, pp, one, one));
    for (int i = 1; i <= p; ++i) {
        Label f = Label::phi(i);
        out.push_back(fs.symbol(pp, pp, pp, pp, f, f) * fs.symbol(pp, f, pp, f, pp, pp));
    }
    return out;
}

}  // namespace

TEST_CASE("orbit criterion matches the F-store gauge invariants") {
    // equivalent(r,k; r',k') iff some ring automorphism carries one loop
    // profile onto the other (the profiles are gauge-invariant, so this is a
    // store-level statement).
    for (int p = 1; p <= 4; ++p) {
        const long long n = 2LL * p + 1;
        HalfUnitGroup g{OddModulus(n)};
        auto rvals = valid_r_values(p);
        std::vector<std::pair<Params, std::vector<double>>> profiles;
        for (int r : rvals)
            for (int kappa : {1, -1}) {
                Params P{p, r, kappa, 1};
                profiles.emplace_back(P, loop_profile(FStore::build(P)));
            }
        for (const auto& [Pa, profa] : profiles)
            for (const auto& [Pb, profb] : profiles) {
                bool matched = false;
                for (long long z : g.reps()) {
                    double diff = 0;
                    for (int i = 0; i <= p; ++i) {
                        long long gi = half_residue(z * i, n);
                        diff = std::max(diff, std::abs(profa[static_cast<int>(gi)] - profb[i]));
                    }
                    if (diff < 1e-9) { matched = true; break; }
                }
                CHECK(matched == equivalent(p, Pa.r, Pa.kappa, Pb.r, Pb.kappa));
            }
    }
}
