#include "metaplectic/spherical_modular.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "metaplectic/numtheory.hpp"

namespace metaplectic {

namespace {

using cplx = std::complex<double>;

// Inverse of a real F-matrix by Gauss-Jordan; row/col bases swap.
struct InverseMatrix {
    std::vector<Label> rows, cols;  // rows = original cols
    std::vector<double> v;
    double at(int i, int j) const { return v[static_cast<std::size_t>(i) * cols.size() + j]; }
};

InverseMatrix invert(const FMatrix& m) {
    const int n = m.nrows();
    if (n != m.ncols()) throw std::logic_error("invert: non-square F-matrix");
    std::vector<double> a(m.v);
    std::vector<double> inv(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) inv[i * n + i] = 1.0;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
        if (std::abs(a[piv * n + c]) < 1e-14) throw std::logic_error("invert: singular F-matrix");
        for (int k = 0; k < n; ++k) {
            std::swap(a[piv * n + k], a[c * n + k]);
            std::swap(inv[piv * n + k], inv[c * n + k]);
        }
        const double d = a[c * n + c];
        for (int k = 0; k < n; ++k) { a[c * n + k] /= d; inv[c * n + k] /= d; }
        for (int r = 0; r < n; ++r) {
            if (r == c) continue;
            const double f = a[r * n + c];
            if (f == 0) continue;
            for (int k = 0; k < n; ++k) {
                a[r * n + k] -= f * a[c * n + k];
                inv[r * n + k] -= f * inv[c * n + k];
            }
        }
    }
    return {m.cols, m.rows, std::move(inv)};
}

int pos_of(const std::vector<Label>& v, Label x) {
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] == x) return static_cast<int>(k);
    return -1;
}

cplx det(std::vector<std::vector<cplx>> m) {
    const int n = static_cast<int>(m.size());
    cplx d = 1;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        if (std::abs(m[piv][c]) < 1e-300) return 0;
        if (piv != c) { std::swap(m[piv], m[c]); d = -d; }
        d *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            cplx f = m[r][c] / m[c][c];
            for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

int pm1(long long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

std::vector<PivotalSolution> solve_pivotal(const FStore& fs) {
    const FusionRing& ring = fs.ring();
    const int p = fs.params().p;
    const int L = ring.size();
    const Label one = Label::one();

    // One GF(2) row per admissible triple: x_a + x_b + x_c = [rhs < 0].
    std::vector<std::vector<int>> eqs;
    for (Label a : ring.labels())
        for (Label b : ring.labels())
            for (Label c : ring.fuse(a, b)) {
                double rhs = fs.symbol(a, b, c, one, c, a) * fs.symbol(b, c, a, one, a, b) *
                             fs.symbol(c, a, b, one, b, c);
                if (std::abs(std::abs(rhs) - 1.0) > 1e-9)
                    throw std::logic_error("pivotal equation right-hand side is not a sign");
                std::vector<int> row(L + 1, 0);
                row[a.index(p)] ^= 1;
                row[b.index(p)] ^= 1;
                row[c.index(p)] ^= 1;
                row[L] = rhs < 0 ? 1 : 0;
                eqs.push_back(std::move(row));
            }

    // Gaussian elimination over GF(2).
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < L && rank < static_cast<int>(eqs.size()); ++col) {
        int sel = -1;
        for (int r = rank; r < static_cast<int>(eqs.size()); ++r)
            if (eqs[r][col]) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(eqs[rank], eqs[sel]);
        for (int r = 0; r < static_cast<int>(eqs.size()); ++r)
            if (r != rank && eqs[r][col])
                for (int k = col; k <= L; ++k) eqs[r][k] ^= eqs[rank][k];
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < static_cast<int>(eqs.size()); ++r)
        if (eqs[r][L]) throw std::logic_error("pivotal equations are inconsistent");

    std::vector<int> free_cols;
    for (int col = 0; col < L; ++col)
        if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end())
            free_cols.push_back(col);
    if (free_cols.size() != 1)
        throw std::logic_error("expected exactly 2 pivotal structures, found 2^" +
                               std::to_string(free_cols.size()));

    std::vector<PivotalSolution> out;
    for (int choice = 0; choice < 2; ++choice) {
        std::vector<int> x(L, 0);
        x[free_cols[0]] = choice;
        for (int r = rank - 1; r >= 0; --r) {
            int v = eqs[r][L];
            for (int col = pivot_col[r] + 1; col < L; ++col) v ^= eqs[r][col] & x[col];
            x[pivot_col[r]] = v;
        }
        PivotalSolution sol;
        for (int k = 0; k < L; ++k) sol.eps.push_back(x[k] ? -1 : 1);
        out.push_back(std::move(sol));
    }
    if (out[0].eps[L - 1] < 0) std::swap(out[0], out[1]);
    return out;
}

const PivotalSolution& positive_pivot(const FStore& fs, const std::vector<PivotalSolution>& sols) {
    for (const auto& s : sols)
        if (s.eps.back() == fs.params().kappa) return s;
    throw std::logic_error("no positive-dimension pivotal solution");
}

std::vector<double> quantum_dims(const FStore& fs, const PivotalSolution& pivotal) {
    const FusionRing& ring = fs.ring();
    const int p = fs.params().p;
    std::vector<double> q;
    for (Label a : ring.labels()) {
        const double f = fs.symbol(a, a, a, a, Label::one(), Label::one());
        q.push_back(pivotal.at(a, p) / f);
    }
    return q;
}

ModularData compute_modular(const FStore& fs, const RStore& rs, const PivotalSolution& pivotal) {
    const FusionRing& ring = fs.ring();
    const int p = fs.params().p;
    const int L = ring.size();
    const Label one = Label::one();

    ModularData md;
    md.pivotal = pivotal.eps;
    md.qdims = quantum_dims(fs, pivotal);
    md.total_dim = 0;
    for (double q : md.qdims) md.total_dim += q * q;

    md.s_hat.assign(L, std::vector<cplx>(L, 0));
    md.s.assign(L, std::vector<cplx>(L, 0));
    for (Label a : ring.labels())
        for (Label b : ring.labels()) {
            const FMatrix& m = fs.matrix(a, b, b, a);
            const InverseMatrix mi = invert(m);
            const int col1 = pos_of(m.cols, one);
            const int irow1 = pos_of(mi.rows, one);
            if (col1 < 0 || irow1 < 0)
                throw std::logic_error("unit channel missing in F_{abb}^a");
            cplx sum = 0;
            for (int ci = 0; ci < m.nrows(); ++ci) {
                Label c = m.rows[ci];
                sum += m.at(ci, col1) * rs.symbol(a, b, c) * rs.symbol(b, a, c) *
                       mi.at(irow1, pos_of(mi.cols, c));
            }
            const int ai = a.index(p), bi = b.index(p);
            md.s_hat[ai][bi] = sum;
            md.s[ai][bi] = md.qdims[ai] * md.qdims[bi] * sum;
        }

    md.t.assign(L, 0);
    for (Label a : ring.labels()) {
        cplx sum = 0;
        for (Label c : ring.fuse(a, a)) sum += md.qdims[c.index(p)] * rs.symbol(a, a, c);
        md.t[a.index(p)] = sum / md.qdims[a.index(p)];
    }

    md.s_det_abs = std::abs(det(md.s));
    if (md.s_det_abs < 1e-6)
        throw std::logic_error("degenerate S-matrix; the family should be modular");
    return md;
}

ModularData closed_form_modular(const Params& params, int eps_psi) {
    params.validate();
    if (eps_psi != 1 && eps_psi != -1)
        throw std::invalid_argument("closed_form_modular: eps_psi must be +1 or -1");
    const int p = params.p, r = params.r, kappa = params.kappa, lambda = params.lambda;
    const long long n = params.n();
    FusionRing ring(p);
    const int L = ring.size();
    const double pi = std::numbers::pi;

    ModularData md;
    md.pivotal.assign(L, 1);
    md.pivotal[L - 1] = md.pivotal[L - 2] = eps_psi;

    const double qpsi = eps_psi * kappa * std::sqrt(static_cast<double>(n));
    md.qdims.assign(L, 1.0);
    for (int i = 1; i <= p; ++i) md.qdims[1 + i] = 2.0;
    md.qdims[L - 2] = md.qdims[L - 1] = qpsi;
    md.total_dim = 0;
    for (double q : md.qdims) md.total_dim += q * q;

    const int two_n = jacobi(2, n);
    md.s.assign(L, std::vector<cplx>(L, 0));
    auto set_sym = [&](int a, int b, cplx v) { md.s[a][b] = v; md.s[b][a] = v; };
    set_sym(0, 0, 1);
    set_sym(0, 1, 1);
    set_sym(1, 1, 1);
    for (int i = 1; i <= p; ++i) {
        set_sym(0, 1 + i, 2);
        set_sym(1, 1 + i, 2);
        for (int j = i; j <= p; ++j)
            set_sym(1 + i, 1 + j,
                    4.0 * std::cos(2.0 * pi *
                                   static_cast<double>((static_cast<long long>(i) * j % n) * r % n) /
                                   static_cast<double>(n)));
        set_sym(1 + i, L - 2, 0);
        set_sym(1 + i, L - 1, 0);
    }
    for (int s : {L - 2, L - 1}) {
        set_sym(0, s, qpsi);
        set_sym(1, s, -qpsi);
    }
    set_sym(L - 2, L - 2, two_n * eps_psi * qpsi);
    set_sym(L - 1, L - 1, two_n * eps_psi * qpsi);
    set_sym(L - 2, L - 1, -two_n * eps_psi * qpsi);

    md.s_hat.assign(L, std::vector<cplx>(L, 0));
    for (int a = 0; a < L; ++a)
        for (int b = 0; b < L; ++b) md.s_hat[a][b] = md.s[a][b] / (md.qdims[a] * md.qdims[b]);

    md.t.assign(L, 1.0);
    for (int i = 1; i <= p; ++i) {
        const long long e = static_cast<long long>(lambda) * r * i % (2 * n) * i % (2 * n);
        md.t[1 + i] = static_cast<double>(pm1(i)) *
                      cplx(std::cos(pi * e / static_cast<double>(n)), std::sin(pi * e / static_cast<double>(n)));
    }
    {
        // theta_{psi+-} = -+ exp(i pi kappa lambda r / 2) exp(i pi lambda r ((n|r) + kappa (2|n) - p)/4),
        // times eps_psi kappa for the negative-dimension pivot.
        const double arg = pi * lambda * r * 0.5 * kappa +
                           pi * lambda * r * 0.25 * (jacobi(n, r) + kappa * two_n - p);
        const cplx base(std::cos(arg), std::sin(arg));
        md.t[L - 2] = -static_cast<double>(eps_psi * kappa) * base;
        md.t[L - 1] = static_cast<double>(eps_psi * kappa) * base;
    }

    md.s_det_abs = std::abs(det(md.s));
    return md;
}

double modular_deviation(const ModularData& a, const ModularData& b) {
    double m = 0;
    for (std::size_t i = 0; i < a.qdims.size(); ++i)
        m = std::max(m, std::abs(a.qdims[i] - b.qdims[i]));
    for (std::size_t i = 0; i < a.s.size(); ++i)
        for (std::size_t j = 0; j < a.s.size(); ++j)
            m = std::max(m, std::abs(a.s[i][j] - b.s[i][j]));
    for (std::size_t i = 0; i < a.t.size(); ++i) m = std::max(m, std::abs(a.t[i] - b.t[i]));
    return m;
}

}  // namespace metaplectic
