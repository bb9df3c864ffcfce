#include "metaplectic/f_symbols.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <numbers>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "metaplectic/numtheory.hpp"

namespace metaplectic {

namespace {

int pm1(long long e) { return e % 2 == 0 ? 1 : -1; }

Matrixd scaled(Matrixd m, double f) {
    for (auto& row : m)
        for (double& x : row) x *= f;
    return m;
}

std::string quad_name(Label a, Label b, Label c, Label d) {
    return a.name() + "," + b.name() + "," + c.name() + "," + d.name();
}

}  // namespace

std::complex<double> j_coeff(int i, int j, int p, int r, int kappa) {
    const long long n = 2LL * p + 1;
    const int zeta2 = 2 - (i == 0) - (j == 0);  // 2 * zeta(i,j)
    double amp = (zeta2 == 0 ? 1.0 : (zeta2 == 1 ? std::numbers::sqrt2 : 2.0));
    amp *= kappa / std::sqrt(static_cast<double>(n));
    long long e = (static_cast<long long>(r) * i % (2 * n)) * j % (2 * n);  // phase mod 2 pi
    double ang = std::numbers::pi * static_cast<double>(e) / static_cast<double>(n);
    return amp * std::complex<double>(std::cos(ang), std::sin(ang));
}

std::pair<Matrixd, Matrixd> h_matrices(int p, int r, int kappa) {
    Matrixd h(p + 1, std::vector<double>(p + 1));
    Matrixd hp(p + 1, std::vector<double>(p + 1));
    for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= p; ++j) {
            h[i][j] = pm1(static_cast<long long>(i) * j) * j_coeff(i, j, p, r, kappa).real();
            hp[i][j] = pm1((i == 0) + (j == 0) + 1) * h[i][j];
        }
    return {h, hp};
}

Matrixd g_matrix(int p, int r, int kappa) {
    Matrixd g(p, std::vector<double>(p));
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= p; ++j)
            g[i - 1][j - 1] =
                pm1(static_cast<long long>(i - 1) * (j - 1)) * j_coeff(i, j, p, r, kappa).imag();
    return g;
}

Matrixd block_a(int s1, int s2, int s3, int s4) {
    if (s1 * s2 * s3 * s4 != -1)
        throw std::invalid_argument("block_a: sign quadruple must have product -1");
    const double w = 1.0 / std::numbers::sqrt2;
    return {{s1 * w, s2 * w}, {s3 * w, s4 * w}};
}

Matrixd block_b() { return {{0, 1}, {1, 0}}; }

Matrixd block_c() {
    const double h = 0.5, w = std::numbers::sqrt2 / 2.0;
    return {{h, -h, w}, {-h, h, w}, {w, w, 0}};
}

namespace {
std::pair<double, double> re_im_phase(int p, int r, long long t) {
    const long long n = 2LL * p + 1;
    long long e = (static_cast<long long>(r) % (2 * n)) * (t % (2 * n)) % (2 * n);
    if (e < 0) e += 2 * n;
    double ang = std::numbers::pi * static_cast<double>(e) / static_cast<double>(n);
    return {std::cos(ang), std::sin(ang)};
}
}  // namespace

Matrixd block_d(int p, int r, long long t, int s1, int s2, int s3, int s4) {
    if (s1 * s2 * s3 * s4 != -1)
        throw std::invalid_argument("block_d: sign quadruple must have product -1");
    auto [re, im] = re_im_phase(p, r, t);
    return {{s1 * re, s2 * im}, {s3 * im, s4 * re}};
}

Matrixd block_e(int p, int r, long long t, int s1, int s2, int s3, int s4) {
    if (s1 * s2 * s3 * s4 != -1)
        throw std::invalid_argument("block_e: sign quadruple must have product -1");
    auto [re, im] = re_im_phase(p, r, t);
    return {{s1 * im, s2 * re}, {s3 * re, s4 * im}};
}

int FMatrix::row_pos(Label e) const {
    for (std::size_t k = 0; k < rows.size(); ++k)
        if (rows[k] == e) return static_cast<int>(k);
    return -1;
}

int FMatrix::col_pos(Label f) const {
    for (std::size_t k = 0; k < cols.size(); ++k)
        if (cols[k] == f) return static_cast<int>(k);
    return -1;
}

FMatrix FMatrix::transposed() const {
    FMatrix t;
    t.rows = cols;
    t.cols = rows;
    t.v.resize(v.size());
    for (int i = 0; i < nrows(); ++i)
        for (int j = 0; j < ncols(); ++j) t.at(j, i) = at(i, j);
    return t;
}

namespace {

// The closed-form classes.  Returns the raw matrix in the canonical basis, or
// nothing when the quadruple is only reachable through the rotation rule.
std::optional<Matrixd> direct_values(const Params& P, Label a, Label b, Label c, Label d,
                                     const std::vector<Label>& rows) {
    const int p = P.p, r = P.r, kappa = P.kappa;
    const long long n = P.n();
    auto g = [n](long long x) { return half_residue(x, n); };

    if (a.is_one() || b.is_one() || c.is_one() || d.is_one()) return Matrixd{{1.0}};

    const int npsi = a.is_psi() + b.is_psi() + c.is_psi() + d.is_psi();

    if (npsi == 0) {
        // Rep(D_{2p+1}) sector.
        if (a.is_eps()) {
            if (b.is_eps() && c.is_eps() && d.is_eps()) return Matrixd{{1.0}};
            if (b.is_phi() && c.is_eps() && d.is_phi()) return Matrixd{{1.0}};
            if (b.is_eps() && c.is_phi() && d.is_phi()) return Matrixd{{-1.0}};
            if (b.is_phi() && c.is_phi() && d.is_phi()) {
                const int i = b.i, j = c.i, k = d.i;
                if (j <= i) return Matrixd{{static_cast<double>(pm1(j))}};
                if (k == g(i + j)) return Matrixd{{static_cast<double>(pm1(j))}};
                return Matrixd{{static_cast<double>(pm1(j - 1))}};  // k == g(i-j)
            }
            return std::nullopt;
        }
        if (a.is_phi() && b.is_phi() && c.is_phi() && d.is_phi()) {
            const int i = a.i, j = b.i, k = c.i, l = d.i;
            if (i == j && j == k && k == l) return block_c();
            if (i == k && j == l && i != j) return block_b();
            if (i == j && k == l && i != k) return block_a(1, 1, pm1(k - i + 1), pm1(k - i));
            if (rows.size() == 1) return Matrixd{{1.0}};
            return std::nullopt;
        }
        return std::nullopt;
    }

    if (npsi == 4) {
        const int sa = a.psi_sign(), sb = b.psi_sign(), sc = c.psi_sign(), sd = d.psi_sign();
        if (sa == sb && sb == sc && sc == sd) return h_matrices(p, r, kappa).first;
        if (sa == sc && sb == sd && sb == -sa) return scaled(h_matrices(p, r, kappa).first, -1.0);
        if (sa == sb && sc == sd && sc == -sa) return h_matrices(p, r, kappa).second;
        if (sa == sb && sb == sc && sd == -sa)
            return sa > 0 ? g_matrix(p, r, kappa) : scaled(g_matrix(p, r, kappa), -1.0);
        return std::nullopt;
    }

    if (npsi == 2 && a.is_phi() && b.is_psi() && c.is_phi() && d.is_psi()) {
        const int i = a.i, j = c.i, s = b.psi_sign(), t = d.psi_sign();
        const long long ij = static_cast<long long>(i) * j;
        if (t == s) {
            double f = (s > 0 ? -1.0 : 1.0) * pm1(ij);
            return scaled(block_d(p, r, ij, -1, pm1(i + j), pm1(i + j), 1), f);
        }
        double f = -1.0 * pm1(ij);
        return scaled(block_e(p, r, ij, pm1(i + j), 1, 1, pm1(i + j + 1)), f);
    }

    if (npsi == 2 && a.is_phi() && b.is_phi() && c.is_psi() && d.is_psi()) {
        const int i = a.i, j = b.i, s = c.psi_sign(), t = d.psi_sign();
        if (t == s) {
            if (i == j) return block_a(1, 1, 1, -1);
            if ((i - j) % 2 == 0) return s > 0 ? block_a(1, 1, 1, -1) : block_a(-1, -1, 1, -1);
            return s > 0 ? block_a(1, -1, 1, 1) : block_a(1, -1, -1, -1);
        }
        if (i == j) return block_a(-1, -1, pm1(i), pm1(i + 1));
        if (i < j && s > 0) return block_a(pm1(j + 1), pm1(i + 1), pm1(j), pm1(i + 1));
        if (i < j && s < 0) return block_a(pm1(i), pm1(j), pm1(i), pm1(j + 1));
        if (i > j && s > 0) return block_a(pm1(j), pm1(i), pm1(j), pm1(i + 1));
        return block_a(pm1(i + 1), pm1(j + 1), pm1(i), pm1(j + 1));
    }

    if (npsi == 2 && a.is_eps()) {
        if (b.is_phi() && c.is_psi() && d.is_psi()) return Matrixd{{1.0}};
        if (b.is_psi() && c.is_phi() && d.is_psi())
            return Matrixd{{d.psi_sign() == b.psi_sign() ? 1.0 : -1.0}};
        if (b.is_psi() && c.is_psi() && d.is_phi()) return Matrixd{{1.0}};
        if (b.is_eps() && c.is_psi() && d.is_psi()) return Matrixd{{-1.0}};
        if (b.is_psi() && c.is_eps() && d.is_psi()) return Matrixd{{-1.0}};
        return std::nullopt;
    }

    return std::nullopt;
}

}  // namespace

const FMatrix* FStore::find(Label a, Label b, Label c, Label d) const {
    auto it = table_.find(key_of(a, b, c, d));
    return it == table_.end() ? nullptr : &it->second;
}

const FMatrix& FStore::matrix(Label a, Label b, Label c, Label d) const {
    const FMatrix* m = find(a, b, c, d);
    if (!m)
        throw channel_error("no F-matrix for inadmissible quadruple (" + quad_name(a, b, c, d) + ")");
    return *m;
}

double FStore::symbol(Label a, Label b, Label c, Label d, Label e, Label f) const {
    const FMatrix& m = matrix(a, b, c, d);
    int i = m.row_pos(e), j = m.col_pos(f);
    if (i < 0 || j < 0)
        throw channel_error("inadmissible channel (" + e.name() + "," + f.name() +
                            ") in F-matrix (" + quad_name(a, b, c, d) + ")");
    return m.at(i, j);
}

std::vector<Label> FStore::labels_of_key(std::uint64_t k) const {
    const int p = params_.p;
    return {Label::from_index(int(k >> 48) & 0xffff, p), Label::from_index(int(k >> 32) & 0xffff, p),
            Label::from_index(int(k >> 16) & 0xffff, p), Label::from_index(int(k) & 0xffff, p)};
}

FStore FStore::build(const Params& params) {
    params.validate();
    FStore store(params, FusionRing(params.p));
    const FusionRing& ring = store.ring_;

    auto basis_rows = [&](Label a, Label b, Label c, Label d) {
        std::vector<Label> out;
        for (Label e : ring.fuse(a, b))
            if (ring.admissible(e, c, d)) out.push_back(e);
        return out;
    };
    auto basis_cols = [&](Label a, Label b, Label c, Label d) {
        std::vector<Label> out;
        for (Label f : ring.fuse(b, c))
            if (ring.admissible(a, f, d)) out.push_back(f);
        return out;
    };

    // All admissible quadruples, via the fusion channels.
    std::vector<std::array<Label, 4>> quads;
    std::unordered_set<std::uint64_t> seen;
    for (Label a : ring.labels())
        for (Label b : ring.labels())
            for (Label e : ring.fuse(a, b))
                for (Label c : ring.labels())
                    for (Label d : ring.fuse(e, c)) {
                        std::uint64_t k = store.key_of(a, b, c, d);
                        if (seen.insert(k).second) quads.push_back({a, b, c, d});
                    }

    // Seed with the closed-form classes.
    for (const auto& [a, b, c, d] : quads) {
        auto rows = basis_rows(a, b, c, d);
        auto cols = basis_cols(a, b, c, d);
        if (rows.size() != cols.size() || rows.empty())
            throw std::logic_error("F-matrix channel space is not square at (" +
                                   quad_name(a, b, c, d) + ")");
        auto vals = direct_values(params, a, b, c, d, rows);
        if (!vals) continue;
        if (vals->size() != rows.size() || (*vals)[0].size() != cols.size())
            throw std::logic_error("closed form has wrong shape at (" + quad_name(a, b, c, d) +
                                   "): expected " + std::to_string(rows.size()) + "x" +
                                   std::to_string(cols.size()));
        FMatrix m;
        m.rows = rows;
        m.cols = cols;
        m.v.reserve(rows.size() * cols.size());
        for (const auto& row : *vals)
            for (double x : row) m.v.push_back(x);
        store.table_.emplace(store.key_of(a, b, c, d), std::move(m));
    }

    // Close under F_{bcd}^a = (F_{abc}^d)^T.
    std::deque<std::array<Label, 4>> work;
    for (const auto& q : quads)
        if (store.table_.count(store.key_of(q[0], q[1], q[2], q[3]))) work.push_back(q);

    auto max_abs_diff = [](const FMatrix& x, const FMatrix& y) {
        double m = 0;
        for (std::size_t k = 0; k < x.v.size(); ++k) m = std::max(m, std::abs(x.v[k] - y.v[k]));
        return m;
    };

    while (!work.empty()) {
        auto [a, b, c, d] = work.front();
        work.pop_front();
        FMatrix t = store.table_.at(store.key_of(a, b, c, d)).transposed();
        // target quadruple (b,c,d,a)
        auto trows = basis_rows(b, c, d, a);
        auto tcols = basis_cols(b, c, d, a);
        if (t.rows != trows || t.cols != tcols)
            throw std::logic_error("rotation basis mismatch at (" + quad_name(b, c, d, a) + ")");
        auto it = store.table_.find(store.key_of(b, c, d, a));
        if (it == store.table_.end()) {
            store.table_.emplace(store.key_of(b, c, d, a), std::move(t));
            work.push_back({b, c, d, a});
        } else if (max_abs_diff(it->second, t) > 1e-12) {
            throw std::logic_error("conflicting derivations for F-matrix (" +
                                   quad_name(b, c, d, a) + ")");
        }
    }

    // Every admissible quadruple must now be covered.
    std::vector<std::string> missing;
    for (const auto& q : quads)
        if (!store.table_.count(store.key_of(q[0], q[1], q[2], q[3])))
            missing.push_back(quad_name(q[0], q[1], q[2], q[3]));
    if (!missing.empty()) {
        std::ostringstream os;
        os << "F-store incomplete after rotation closure, " << missing.size() << " missing:";
        for (std::size_t k = 0; k < missing.size() && k < 8; ++k) os << " (" << missing[k] << ")";
        throw std::logic_error(os.str());
    }

    return store;
}

FStore FStore::relabeled(const RingAutomorphism& nu) const {
    const int p = params_.p;
    std::vector<int> inv(nu.perm.size());
    for (std::size_t i = 0; i < nu.perm.size(); ++i) inv[nu.perm[i]] = static_cast<int>(i);
    auto pre = [&](Label x) { return Label::from_index(inv[x.index(p)], p); };

    FStore out(params_, ring_);
    for (const auto& [k, m] : table_) {
        auto q = labels_of_key(k);
        std::vector<Label> rlabels(m.rows.size()), clabels(m.cols.size());
        for (std::size_t i = 0; i < m.rows.size(); ++i) rlabels[i] = pre(m.rows[i]);
        for (std::size_t j = 0; j < m.cols.size(); ++j) clabels[j] = pre(m.cols[j]);
        std::vector<std::size_t> rorder(rlabels.size()), corder(clabels.size());
        for (std::size_t i = 0; i < rorder.size(); ++i) rorder[i] = i;
        for (std::size_t j = 0; j < corder.size(); ++j) corder[j] = j;
        std::sort(rorder.begin(), rorder.end(),
                  [&](std::size_t x, std::size_t y) { return rlabels[x] < rlabels[y]; });
        std::sort(corder.begin(), corder.end(),
                  [&](std::size_t x, std::size_t y) { return clabels[x] < clabels[y]; });

        FMatrix s;
        s.v.resize(m.v.size());
        for (std::size_t i = 0; i < rorder.size(); ++i) s.rows.push_back(rlabels[rorder[i]]);
        for (std::size_t j = 0; j < corder.size(); ++j) s.cols.push_back(clabels[corder[j]]);
        for (std::size_t i = 0; i < rorder.size(); ++i)
            for (std::size_t j = 0; j < corder.size(); ++j)
                s.v[i * corder.size() + j] =
                    m.at(static_cast<int>(rorder[i]), static_cast<int>(corder[j]));
        out.table_.emplace(
            key(pre(q[0]).index(p), pre(q[1]).index(p), pre(q[2]).index(p), pre(q[3]).index(p)),
            std::move(s));
    }
    return out;
}

FStore FStore::with_sign_flipped(Label a, Label b, Label c, Label d, int i, int j) const {
    FStore out = *this;
    auto it = out.table_.find(key_of(a, b, c, d));
    if (it == out.table_.end())
        throw std::invalid_argument("with_sign_flipped: quadruple (" + quad_name(a, b, c, d) +
                                    ") is not in the store");
    FMatrix& m = it->second;
    if (i < 0 || i >= m.nrows() || j < 0 || j >= m.ncols())
        throw std::invalid_argument("with_sign_flipped: entry index out of range");
    m.at(i, j) = -m.at(i, j);
    return out;
}

}  // namespace metaplectic
