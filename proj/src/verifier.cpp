#include "metaplectic/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "metaplectic/numtheory.hpp"

namespace metaplectic {

namespace {

using cplx = std::complex<double>;

int pm1(long long e) { return e % 2 == 0 ? 1 : -1; }

// Adjacency view of the admissible-triple set, by canonical index.
struct RingIndex {
    int L = 0;
    std::vector<std::array<int, 3>> triples;
    std::vector<std::vector<std::pair<int, int>>> by_first;  // x -> {(y,z)}
    std::vector<std::vector<int>> chan;                      // a*L+b -> channels
    std::vector<char> adm;

    explicit RingIndex(const FusionRing& ring) : L(ring.size()) {
        by_first.resize(L);
        chan.resize(static_cast<std::size_t>(L) * L);
        adm.assign(static_cast<std::size_t>(L) * L * L, 0);
        for (int a = 0; a < L; ++a)
            for (int b = 0; b < L; ++b)
                for (int c = 0; c < L; ++c)
                    if (ring.admissible_idx(a, b, c)) {
                        triples.push_back({a, b, c});
                        by_first[a].emplace_back(b, c);
                        chan[a * L + b].push_back(c);
                        adm[(a * L + b) * L + c] = 1;
                    }
    }
    bool ok(int a, int b, int c) const { return adm[(a * L + b) * L + c] != 0; }
};

// Dense (a,b,c,d) -> FMatrix* lookup plus per-matrix label->position tables.
struct FTable {
    int L;
    std::vector<const FMatrix*> dense;
    std::vector<std::vector<int>> rpos, cpos;  // indexed like dense

    FTable(const FStore& fs, int L) : L(L) {
        const std::size_t total = static_cast<std::size_t>(L) * L * L * L;
        dense.assign(total, nullptr);
        rpos.resize(total);
        cpos.resize(total);
        const int p = fs.params().p;
        for (const auto& [k, m] : fs.table()) {
            int a = int(k >> 48) & 0xffff, b = int(k >> 32) & 0xffff;
            int c = int(k >> 16) & 0xffff, d = int(k) & 0xffff;
            std::size_t idx = ((static_cast<std::size_t>(a) * L + b) * L + c) * L + d;
            dense[idx] = &m;
            auto& rp = rpos[idx];
            auto& cp = cpos[idx];
            rp.assign(L, -1);
            cp.assign(L, -1);
            for (int i = 0; i < m.nrows(); ++i) rp[m.rows[i].index(p)] = i;
            for (int j = 0; j < m.ncols(); ++j) cp[m.cols[j].index(p)] = j;
        }
    }
    std::size_t slot(int a, int b, int c, int d) const {
        return ((static_cast<std::size_t>(a) * L + b) * L + c) * L + d;
    }
    const FMatrix* get(int a, int b, int c, int d) const { return dense[slot(a, b, c, d)]; }
    double entry(std::size_t s, int e, int f) const { return dense[s]->at(rpos[s][e], cpos[s][f]); }
};

const FMatrix* require(const FTable& t, int a, int b, int c, int d) {
    const FMatrix* m = t.get(a, b, c, d);
    if (!m) {
        std::ostringstream os;
        os << "missing F-matrix for admissible quadruple, indices (" << a << "," << b << "," << c
           << "," << d << ")";
        throw std::logic_error(os.str());
    }
    return m;
}

template <typename WorkFn>
VerificationReport run_partitioned(std::size_t items, int jobs, WorkFn work) {
    jobs = std::max(1, std::min(jobs, 64));
    if (items == 0) return {};
    jobs = static_cast<int>(std::min<std::size_t>(jobs, items));
    std::vector<VerificationReport> parts(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> threads;
    const std::size_t chunk = (items + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
        std::size_t lo = w * chunk, hi = std::min(items, lo + chunk);
        threads.emplace_back([&, w, lo, hi] {
            try {
                work(lo, hi, parts[w]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    VerificationReport out;
    for (auto& p : parts) out.merge(std::move(p));
    out.sort_canonical();
    return out;
}

}  // namespace

std::string Violation::pretty(int p) const {
    std::ostringstream os;
    os << equation << " [";
    for (std::size_t k = 0; k < labels.size(); ++k) {
        if (k) os << ",";
        os << Label::from_index(labels[k], p).name();
    }
    os << "] residual " << residual;
    return os.str();
}

void VerificationReport::merge(VerificationReport&& other) {
    equations_checked += other.equations_checked;
    max_residual = std::max(max_residual, other.max_residual);
    violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                      std::make_move_iterator(other.violations.end()));
}

void VerificationReport::sort_canonical() {
    std::sort(violations.begin(), violations.end(), [](const Violation& a, const Violation& b) {
        if (a.equation != b.equation) return a.equation < b.equation;
        return a.labels < b.labels;
    });
}

VerificationReport check_pentagon(const FStore& fs, double tolerance, int jobs) {
    const RingIndex idx(fs.ring());
    const FTable ft(fs, idx.L);

    return run_partitioned(idx.triples.size(), jobs, [&](std::size_t lo, std::size_t hi,
                                                         VerificationReport& rep) {
        for (std::size_t t = lo; t < hi; ++t) {
            const auto [a, b, f] = idx.triples[t];
            for (const auto& [c, h] : idx.by_first[f]) {
                require(ft, a, b, c, h);  // exists whenever used below
                for (const auto& [d, e] : idx.by_first[h]) {
                    const std::size_t s_fcd = ft.slot(f, c, d, e);
                    require(ft, f, c, d, e);
                    for (int j : idx.chan[c * idx.L + d]) {
                        if (!idx.ok(f, j, e)) continue;
                        const std::size_t s_abj = ft.slot(a, b, j, e);
                        require(ft, a, b, j, e);
                        for (int i : idx.chan[b * idx.L + j]) {
                            if (!idx.ok(a, i, e)) continue;
                            const double lhs = ft.entry(s_fcd, h, j) * ft.entry(s_abj, f, i);
                            double rhs = 0;
                            for (int g : idx.chan[b * idx.L + c]) {
                                if (!idx.ok(a, g, h) || !idx.ok(g, d, i)) continue;
                                const std::size_t s1 = ft.slot(a, b, c, h);
                                const std::size_t s2 = ft.slot(a, g, d, e);
                                const std::size_t s3 = ft.slot(b, c, d, i);
                                require(ft, a, g, d, e);
                                require(ft, b, c, d, i);
                                rhs += ft.entry(s1, f, g) * ft.entry(s2, h, i) * ft.entry(s3, g, j);
                            }
                            const double res = std::abs(lhs - rhs);
                            ++rep.equations_checked;
                            rep.max_residual = std::max(rep.max_residual, res);
                            if (res > tolerance)
                                rep.violations.push_back(
                                    {"pentagon", {a, b, c, d, e, f, h, i, j}, res});
                        }
                    }
                }
            }
        }
    });
}

VerificationReport check_hexagon(const FStore& fs, const RStore& rs, double tolerance, int jobs) {
    const RingIndex idx(fs.ring());
    const FTable ft(fs, idx.L);
    const int p = fs.params().p;

    // Dense R lookup.
    std::vector<cplx> rsym(static_cast<std::size_t>(idx.L) * idx.L * idx.L, cplx(0));
    for (const auto& t : idx.triples) {
        Label a = Label::from_index(t[0], p), b = Label::from_index(t[1], p),
              c = Label::from_index(t[2], p);
        rsym[(t[0] * idx.L + t[1]) * static_cast<std::size_t>(idx.L) + t[2]] = rs.symbol(a, b, c);
    }
    auto R = [&](int a, int b, int c) {
        return rsym[(a * idx.L + b) * static_cast<std::size_t>(idx.L) + c];
    };

    return run_partitioned(idx.triples.size(), jobs, [&](std::size_t lo, std::size_t hi,
                                                         VerificationReport& rep) {
        for (std::size_t t = lo; t < hi; ++t) {
            const auto [a, c, g] = idx.triples[t];
            for (const auto& [b, d] : idx.by_first[g]) {
                const std::size_t s_acb = ft.slot(a, c, b, d);
                require(ft, a, c, b, d);
                for (int f : idx.chan[c * idx.L + b]) {
                    if (!idx.ok(a, f, d)) continue;
                    const double fmid = ft.entry(s_acb, g, f);
                    const cplx lhs1 = R(a, c, g) * fmid * R(b, c, f);
                    const cplx lhs2 = fmid / (R(a, c, g) * R(b, c, f));
                    cplx rhs1 = 0, rhs2 = 0;
                    for (int e : idx.chan[a * idx.L + b]) {
                        if (!idx.ok(e, c, d)) continue;
                        const std::size_t s_cab = ft.slot(c, a, b, d);
                        const std::size_t s_abc = ft.slot(a, b, c, d);
                        require(ft, c, a, b, d);
                        require(ft, a, b, c, d);
                        const double pre = ft.entry(s_cab, g, e) * ft.entry(s_abc, e, f);
                        rhs1 += pre * R(e, c, d);
                        rhs2 += pre / R(e, c, d);
                    }
                    const double res1 = std::abs(lhs1 - rhs1);
                    const double res2 = std::abs(lhs2 - rhs2);
                    rep.equations_checked += 2;
                    rep.max_residual = std::max({rep.max_residual, res1, res2});
                    if (res1 > tolerance)
                        rep.violations.push_back({"hexagon-R1", {a, b, c, d, g, f}, res1});
                    if (res2 > tolerance)
                        rep.violations.push_back({"hexagon-R2", {a, b, c, d, g, f}, res2});
                }
            }
        }
    });
}

VerificationReport check_orthogonality(const FStore& fs, double tolerance) {
    std::vector<std::uint64_t> keys;
    keys.reserve(fs.table().size());
    for (const auto& [k, m] : fs.table()) keys.push_back(k);
    std::sort(keys.begin(), keys.end());

    VerificationReport rep;
    for (std::uint64_t k : keys) {
        const FMatrix& m = fs.table().at(k);
        const int nr = m.nrows(), nc = m.ncols();
        double worst = 0;
        for (int i = 0; i < nc; ++i)
            for (int j = 0; j < nc; ++j) {
                double dot = 0;
                for (int l = 0; l < nr; ++l) dot += m.at(l, i) * m.at(l, j);
                worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
            }
        ++rep.equations_checked;
        rep.max_residual = std::max(rep.max_residual, worst);
        if (worst > tolerance) {
            auto q = fs.labels_of_key(k);
            const int p = fs.params().p;
            rep.violations.push_back({"orthogonality",
                                      {q[0].index(p), q[1].index(p), q[2].index(p), q[3].index(p)},
                                      worst});
        }
    }
    rep.sort_canonical();
    return rep;
}

namespace {
double det(Matrixd m) {
    const int n = static_cast<int>(m.size());
    double d = 1;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
        if (std::abs(m[piv][c]) < 1e-300) return 0;
        if (piv != c) { std::swap(m[piv], m[c]); d = -d; }
        d *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            double f = m[r][c] / m[c][c];
            for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}
}  // namespace

bool check_jacobi_det(int p, int r, double tolerance, double* residual) {
    const long long n = 2LL * p + 1;
    const int arg = static_cast<int>(2LL * r + n);
    auto [h, hprime] = h_matrices(p, arg, 1);
    (void)hprime;
    double lhs = det(std::move(h)) * (p >= 1 ? det(g_matrix(p, arg, 1)) : 1.0);
    double rhs = jacobi(r, n);
    double res = std::abs(lhs - rhs);
    if (residual) *residual = res;
    return res <= tolerance;
}

std::array<double, 4> appendix_identity_residuals(int p, int r, int kappa, int i1, int i2) {
    const double n = 2.0 * p + 1.0;
    const double pi = std::numbers::pi;
    const double jac_nr = jacobi(2LL * p + 1, r);
    const double ipp = pm1(static_cast<long long>(p) * (p + 1) / 2);  // i^{p(p+1)}
    const double bracket = 2.0 - kappa * ipp + p - jac_nr;

    auto phase = [&](double x) { return cplx(std::cos(x), std::sin(x)); };
    // common right-hand summand exponent
    auto esum = [&](int j) {
        double ex = (j * pi / 2.0) * (j - pm1(p) + r - j * static_cast<double>(r) / n);
        return phase(ex);
    };
    auto aexp = [&](int i) {
        return i * (i - static_cast<double>(pm1(p))) - static_cast<double>(r) * i +
               r * static_cast<double>(i) * i / n;
    };

    std::array<double, 4> out{};

    {  // class 1
        cplx lhs = kappa / std::sqrt(n) * phase((r * pi / 2.0) * bracket);
        cplx rhs = 1.0 / n;
        for (int j = 1; j <= p; ++j) rhs += 2.0 / n * esum(j);
        out[0] = std::abs(lhs - rhs);
    }
    {  // class 2, i2 = 0 specialization of class 3
        cplx lhs = std::numbers::sqrt2 * kappa / std::sqrt(n) *
                   phase((pi / 2.0) * (aexp(i1) + r * bracket));
        cplx rhs = std::numbers::sqrt2 / n;
        for (int j = 1; j <= p; ++j)
            rhs += 2.0 * std::numbers::sqrt2 / n * pm1(static_cast<long long>(j) * i1) *
                   std::cos(r * i1 * j * pi / n) * esum(j);
        out[1] = std::abs(lhs - rhs);
    }
    {  // class 3
        cplx lhs = 2.0 * kappa * pm1(static_cast<long long>(i1) * i2) *
                   std::cos(r * i1 * static_cast<double>(i2) * pi / n) / std::sqrt(n) *
                   phase((pi / 2.0) * (aexp(i1) + aexp(i2) + r * bracket));
        cplx rhs = 2.0 / n;
        for (int j = 1; j <= p; ++j)
            rhs += 4.0 / n * pm1(static_cast<long long>(j) * (i1 + i2)) *
                   std::cos(r * i1 * j * pi / n) * std::cos(r * i2 * j * pi / n) * esum(j);
        out[2] = std::abs(lhs - rhs);
    }
    {  // class 4
        cplx lhs = 2.0 * kappa * pm1(static_cast<long long>(i1 - 1) * (i2 - 1)) *
                   std::sin(r * i1 * static_cast<double>(i2) * pi / n) / std::sqrt(n) *
                   phase((pi / 2.0) * (aexp(i1) + aexp(i2) + r * bracket));
        cplx rhs = 0;
        for (int j = 1; j <= p; ++j)
            rhs += pm1(static_cast<long long>(j) * (i1 + i2 - 2)) * std::sin(r * i1 * j * pi / n) *
                   std::sin(r * i2 * j * pi / n) * esum(j);
        rhs *= cplx(0, -4.0 / n) * static_cast<double>(pm1(i1 + i2));
        out[3] = std::abs(lhs - rhs);
    }
    return out;
}

VerificationReport check_appendix_identities(int p, int r, int kappa, double tolerance) {
    VerificationReport rep;
    auto record = [&](int cls, int i1, int i2, double res) {
        ++rep.equations_checked;
        rep.max_residual = std::max(rep.max_residual, res);
        if (res > tolerance)
            rep.violations.push_back({"gauss-identity-" + std::to_string(cls), {i1, i2}, res});
    };
    for (int i1 = 1; i1 <= p; ++i1)
        for (int i2 = 1; i2 <= p; ++i2) {
            auto res = appendix_identity_residuals(p, r, kappa, i1, i2);
            if (i1 == 1 && i2 == 1) record(1, 0, 0, res[0]);
            if (i2 == 1) record(2, i1, 0, res[1]);
            record(3, i1, i2, res[2]);
            record(4, i1, i2, res[3]);
        }
    rep.sort_canonical();
    return rep;
}

}  // namespace metaplectic
