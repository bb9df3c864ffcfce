#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "metaplectic/f_symbols.hpp"
#include "metaplectic/numtheory.hpp"

using namespace metaplectic;

namespace {
const double S3 = std::sqrt(3.0);
}

TEST_CASE("params validation") {
    CHECK_NOTHROW((Params{3, 5, -1, 1}.validate()));
    CHECK_THROWS_AS((Params{0, 1, 1, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Params{2, 2, 1, 1}.validate()), std::invalid_argument);   // even r
    CHECK_THROWS_AS((Params{3, 9, 1, 1}.validate()), std::invalid_argument);   // out of range
    CHECK_THROWS_AS((Params{4, 3, 1, 1}.validate()), std::invalid_argument);   // gcd(3,9) > 1
    CHECK_THROWS_AS((Params{1, 1, 2, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((Params{1, 1, 1, 0}.validate()), std::invalid_argument);
}

TEST_CASE("j_coeff values at p=1") {
    auto j00 = j_coeff(0, 0, 1, 1, 1);
    CHECK(j00.real() == doctest::Approx(1.0 / S3).epsilon(1e-14));
    CHECK(j00.imag() == doctest::Approx(0.0));
    auto j11 = j_coeff(1, 1, 1, 1, 1);
    CHECK(std::abs(j11 - 2.0 / S3 * std::polar(1.0, std::numbers::pi / 3)) < 1e-14);
    auto j01 = j_coeff(0, 1, 1, 1, 1);
    CHECK(j01.real() == doctest::Approx(std::numbers::sqrt2 / S3).epsilon(1e-14));
    CHECK(j01.imag() == doctest::Approx(0.0));
    // kappa scales the whole coefficient
    CHECK(std::abs(j_coeff(1, 1, 1, 1, -1) + j11) < 1e-15);
}

TEST_CASE("H, H' and G at p=1") {
    auto [h, hp] = h_matrices(1, 1, 1);
    CHECK(h[0][0] == doctest::Approx(1 / S3).epsilon(1e-14));
    CHECK(h[0][1] == doctest::Approx(std::numbers::sqrt2 / S3).epsilon(1e-14));
    CHECK(h[1][0] == doctest::Approx(std::numbers::sqrt2 / S3).epsilon(1e-14));
    CHECK(h[1][1] == doctest::Approx(-1 / S3).epsilon(1e-14));
    CHECK(hp[0][0] == doctest::Approx(-1 / S3).epsilon(1e-14));
    CHECK(hp[0][1] == doctest::Approx(std::numbers::sqrt2 / S3).epsilon(1e-14));
    CHECK(hp[1][1] == doctest::Approx(1 / S3).epsilon(1e-14));
    auto g = g_matrix(1, 1, 1);
    CHECK(g[0][0] == doctest::Approx(1.0).epsilon(1e-14));
    // shifted argument used by the determinant identity: sin(5 pi / 3) < 0
    CHECK(g_matrix(1, 5, 1)[0][0] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("H and G orthogonality for valid odd arguments") {
    for (int p : {1, 2, 3, 4, 5, 6}) {
        const long long n = 2LL * p + 1;
        for (int r = 1; r < n; r += 2) {
            if (std::gcd(static_cast<long long>(r), n) != 1) continue;
            for (int kappa : {1, -1}) {
                auto [h, hp] = h_matrices(p, r, kappa);
                auto g = g_matrix(p, r, kappa);
                auto check_orth = [](const Matrixd& m) {
                    const int d = static_cast<int>(m.size());
                    for (int i = 0; i < d; ++i)
                        for (int j = 0; j < d; ++j) {
                            double dot = 0;
                            for (int k = 0; k < d; ++k) dot += m[k][i] * m[k][j];
                            CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-12);
                        }
                };
                check_orth(h);
                check_orth(hp);
                check_orth(g);
            }
        }
    }
}

TEST_CASE("block builders") {
    auto a = block_a(1, 1, 1, -1);
    CHECK(a[0][0] == doctest::Approx(1 / std::numbers::sqrt2));
    CHECK(a[1][1] == doctest::Approx(-1 / std::numbers::sqrt2));
    CHECK_THROWS_AS(block_a(1, 1, 1, 1), std::invalid_argument);
    auto c = block_c();
    CHECK(c[0][0] == doctest::Approx(0.5));
    CHECK(c[0][2] == doctest::Approx(std::numbers::sqrt2 / 2));
    CHECK(c[2][2] == doctest::Approx(0.0));
    // D(1; 1; -1,1,1,1) at p=2
    auto d = block_d(2, 1, 1, -1, 1, 1, 1);
    CHECK(d[0][0] == doctest::Approx(-std::cos(std::numbers::pi / 5)).epsilon(1e-14));
    CHECK(d[0][1] == doctest::Approx(std::sin(std::numbers::pi / 5)).epsilon(1e-14));
    CHECK(d[1][1] == doctest::Approx(std::cos(std::numbers::pi / 5)).epsilon(1e-14));
    CHECK_THROWS_AS(block_d(2, 1, 1, 1, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(block_e(2, 1, 1, 1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("store: listed classes and unit normalization") {
    Params P{1, 1, 1, 1};
    FStore fs = FStore::build(P);
    const Label one = Label::one(), eps = Label::eps(), phi = Label::phi(1);
    const Label pp = Label::psi_plus();

    // rows of F_{eps eps phi}^{phi} are the eps(x)eps channel {1}, cols {phi}
    CHECK(fs.symbol(eps, eps, phi, phi, one, phi) == doctest::Approx(-1.0));

    const FMatrix& h = fs.matrix(pp, pp, pp, pp);
    REQUIRE((h.rows == std::vector<Label>{one, phi}));
    REQUIRE((h.cols == std::vector<Label>{one, phi}));
    CHECK(h.at(0, 0) == doctest::Approx(1 / S3));
    CHECK(h.at(0, 1) == doctest::Approx(std::numbers::sqrt2 / S3));
    CHECK(h.at(1, 1) == doctest::Approx(-1 / S3));

    // kappa flips the psi-sector normalization
    FStore fneg = FStore::build({1, 1, -1, 1});
    CHECK(fneg.symbol(pp, pp, pp, pp, one, one) == doctest::Approx(-1 / S3));

    // F1: all unit-label matrices are exactly (1)
    for (const auto& [k, m] : fs.table()) {
        auto q = fs.labels_of_key(k);
        if (q[0].is_one() || q[1].is_one() || q[2].is_one() || q[3].is_one()) {
            REQUIRE(m.v.size() == 1);
            CHECK(m.v[0] == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("otherwise-class all-phi matrices are 1x1 with entry 1") {
    FStore fs = FStore::build({3, 1, 1, 1});
    CHECK(fs.symbol(Label::phi(1), Label::phi(2), Label::phi(3), Label::phi(2), Label::phi(1),
                    Label::phi(1)) == doctest::Approx(1.0));
}

TEST_CASE("F2: diagonal unit entries never vanish") {
    for (int p : {1, 2, 3}) {
        FStore fs = FStore::build({p, 1, 1, 1});
        for (Label a : fs.ring().labels())
            CHECK(std::abs(fs.symbol(a, a, a, a, Label::one(), Label::one())) > 1e-9);
    }
}

TEST_CASE("channel errors are distinct from zero values") {
    FStore fs = FStore::build({2, 1, 1, 1});
    // B-matrix has honest zero entries
    const Label phi1 = Label::phi(1), phi2 = Label::phi(2);
    CHECK(fs.symbol(phi1, phi2, phi1, phi2, phi1, phi1) == doctest::Approx(0.0));
    // inadmissible quadruple
    CHECK_THROWS_AS(fs.symbol(Label::eps(), Label::eps(), Label::eps(), Label::phi(1), Label::one(),
                              Label::one()),
                    channel_error);
    // admissible quadruple, inadmissible channel
    CHECK_THROWS_AS(
        fs.symbol(Label::psi_plus(), Label::psi_plus(), Label::psi_plus(), Label::psi_plus(),
                  Label::eps(), Label::one()),
        channel_error);
}

TEST_CASE("rotation involution: four rotations return the original") {
    for (int p : {1, 2, 3}) {
        FStore fs = FStore::build({p, 1, p == 1 ? 1 : -1, 1});
        for (const auto& [k, m] : fs.table()) {
            auto q = fs.labels_of_key(k);
            const FMatrix* r1 = fs.find(q[1], q[2], q[3], q[0]);
            REQUIRE(r1 != nullptr);
            // one rotation is the transpose
            for (int i = 0; i < m.nrows(); ++i)
                for (int j = 0; j < m.ncols(); ++j)
                    CHECK(m.at(i, j) == doctest::Approx(r1->at(j, i)).epsilon(1e-12));
            // four rotations are the identity
            const FMatrix* r4 = &m;
            for (int rot = 0; rot < 4; ++rot) r4 = fs.find(q[(rot + 1) % 4], q[(rot + 2) % 4],
                                                           q[(rot + 3) % 4], q[rot % 4]);
            REQUIRE(r4 != nullptr);
            CHECK(r4->v == m.v);
        }
    }
}

TEST_CASE("store covers exactly the admissible quadruples") {
    for (int p : {1, 2, 4}) {
        FStore fs = FStore::build({p, 1, 1, 1});
        const FusionRing& ring = fs.ring();
        std::size_t admissible = 0;
        for (Label a : ring.labels())
            for (Label b : ring.labels())
                for (Label c : ring.labels())
                    for (Label d : ring.labels()) {
                        bool adm = ring.chain_multiplicity({a, b, c}, d) > 0;
                        admissible += adm;
                        CHECK((fs.find(a, b, c, d) != nullptr) == adm);
                    }
        CHECK(fs.size() == admissible);
    }
}

TEST_CASE("diag(H) separates the (r,kappa) solutions") {
    for (int p : {1, 2, 3, 4, 5, 6, 7}) {
        const long long n = 2LL * p + 1;
        std::vector<std::vector<double>> diags;
        for (int r = 1; r < n; r += 2) {
            if (std::gcd(static_cast<long long>(r), n) != 1) continue;
            for (int kappa : {1, -1}) {
                auto [h, hp] = h_matrices(p, r, kappa);
                std::vector<double> d;
                for (int i = 0; i <= p; ++i) d.push_back(h[i][i]);
                diags.push_back(std::move(d));
            }
        }
        for (std::size_t x = 0; x < diags.size(); ++x)
            for (std::size_t y = x + 1; y < diags.size(); ++y) {
                double diff = 0;
                for (std::size_t i = 0; i < diags[x].size(); ++i)
                    diff = std::max(diff, std::abs(diags[x][i] - diags[y][i]));
                CHECK(diff > 1e-6);
            }
    }
}

TEST_CASE("mutation helper flips exactly one entry") {
    FStore fs = FStore::build({1, 1, 1, 1});
    const Label pp = Label::psi_plus();
    FStore mut = fs.with_sign_flipped(pp, pp, pp, pp, 0, 0);
    CHECK(mut.symbol(pp, pp, pp, pp, Label::one(), Label::one()) ==
          doctest::Approx(-fs.symbol(pp, pp, pp, pp, Label::one(), Label::one())));
    CHECK_THROWS_AS(fs.with_sign_flipped(pp, pp, pp, pp, 5, 0), std::invalid_argument);
    CHECK_THROWS_AS(fs.with_sign_flipped(Label::eps(), Label::eps(), Label::eps(), Label::phi(1), 0, 0),
                    std::invalid_argument);
}
