#include "metaplectic/cli.hpp"

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "metaplectic/classifier.hpp"
#include "metaplectic/f_symbols.hpp"
#include "metaplectic/model_io.hpp"
#include "metaplectic/numtheory.hpp"
#include "metaplectic/r_symbols.hpp"
#include "metaplectic/spherical_modular.hpp"
#include "metaplectic/verifier.hpp"

namespace metaplectic::cli {

namespace {

struct Mutation {
    bool is_f = true;
    std::vector<std::string> labels;
    int i = 0, j = 0;
};

Mutation parse_mutation(const std::string& spec) {
    // "F:<a>,<b>,<c>,<d>:<i>,<j>"  or  "R:<a>,<b>,<c>"
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, sep)) out.push_back(item);
        return out;
    };
    auto parts = split(spec, ':');
    Mutation m;
    if (parts.size() >= 2 && parts[0] == "F") {
        m.is_f = true;
        m.labels = split(parts[1], ',');
        if (m.labels.size() != 4 || parts.size() != 3)
            throw std::invalid_argument("--mutate F form is F:<a>,<b>,<c>,<d>:<i>,<j>");
        auto ij = split(parts[2], ',');
        if (ij.size() != 2) throw std::invalid_argument("--mutate F needs an entry index <i>,<j>");
        m.i = std::stoi(ij[0]);
        m.j = std::stoi(ij[1]);
        return m;
    }
    if (parts.size() == 2 && parts[0] == "R") {
        m.is_f = false;
        m.labels = split(parts[1], ',');
        if (m.labels.size() != 3) throw std::invalid_argument("--mutate R form is R:<a>,<b>,<c>");
        return m;
    }
    throw std::invalid_argument("unrecognized --mutate spec: " + spec);
}

Label parse_label_or_throw(const std::string& s, int p) {
    auto l = Label::parse(s, p);
    if (!l) throw std::invalid_argument("unknown label name: " + s);
    return *l;
}

std::string fmt_cplx(std::complex<double> z) {
    std::ostringstream os;
    os.precision(15);
    os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

int cmd_generate(int p, int r, int kappa, int lambda, const std::string& out_path,
                 std::ostream& out) {
    Params P{p, r, kappa, lambda};
    P.validate();
    FStore fs = FStore::build(P);
    RStore rs = RStore::build(P);
    auto pivots = solve_pivotal(fs);
    ModularData md = compute_modular(fs, rs, positive_pivot(fs, pivots));
    nlohmann::json j = model_json(fs, rs, &md);

    if (out_path == "-") {
        out << j.dump(2) << "\n";
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
        file << j.dump(2) << "\n";
    }

    ClassRep rep;
    for (const auto& c : enumerate_classes(p))
        if (c.kappa == kappa &&
            std::binary_search(c.orbit.begin(), c.orbit.end(), half_residue(r, P.n()))) {
            rep = c;
            break;
        }
    out << "p=" << p << " r=" << r << " kappa=" << kappa << " lambda=" << lambda << "\n";
    out << "labels: " << fs.ring().size() << "\n";
    out << "F-matrices: " << fs.size() << "\n";
    out << "R-symbols: " << rs.table().size() << "\n";
    out << "class representative: (r=" << rep.r << ", kappa=" << rep.kappa << ")\n";
    if (out_path != "-") out << "wrote " << out_path << "\n";
    return 0;
}

int cmd_verify(int p, int r, int kappa, int lambda, bool all, double tolerance, int jobs,
               bool appendix, bool as_json, const std::string& mutate, std::ostream& out) {
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    struct Target {
        int r, kappa;
    };
    std::vector<Target> targets;
    std::vector<int> lambdas;
    if (all) {
        if (!mutate.empty())
            throw std::invalid_argument("--mutate requires a single parameter point, not --all");
        for (int rr : valid_r_values(p))
            for (int k : {1, -1}) targets.push_back({rr, k});
        lambdas = {1, -1};
    } else {
        Params{p, r, kappa, lambda}.validate();
        targets.push_back({r, kappa});
        lambdas = {lambda};
    }

    bool ok = true;
    nlohmann::json jout = nlohmann::json::array();
    for (const auto& t : targets) {
        Params P{p, t.r, t.kappa, 1};
        FStore fs = FStore::build(P);
        if (!mutate.empty()) {
            Mutation m = parse_mutation(mutate);
            if (m.is_f)
                fs = fs.with_sign_flipped(parse_label_or_throw(m.labels[0], p),
                                          parse_label_or_throw(m.labels[1], p),
                                          parse_label_or_throw(m.labels[2], p),
                                          parse_label_or_throw(m.labels[3], p), m.i, m.j);
        }
        auto pent = check_pentagon(fs, tolerance, jobs);
        auto orth = check_orthogonality(fs, std::min(tolerance, 1e-10));
        ok = ok && pent.passed() && orth.passed();

        nlohmann::json jt;
        jt["params"] = {{"p", p}, {"r", t.r}, {"kappa", t.kappa}};
        jt["pentagon"] = report_json(pent, p);
        jt["orthogonality"] = report_json(orth, p);
        if (!as_json) {
            out << "p=" << p << " r=" << t.r << " kappa=" << t.kappa << "  pentagon: "
                << pent.equations_checked << " equations, max residual " << pent.max_residual
                << (pent.passed() ? " [ok]" : " [FAIL]") << "\n";
            for (std::size_t v = 0; v < pent.violations.size() && v < 8; ++v)
                out << "    " << pent.violations[v].pretty(p) << "\n";
            out << "  orthogonality: " << orth.equations_checked << " matrices, max "
                << orth.max_residual << (orth.passed() ? " [ok]" : " [FAIL]") << "\n";
        }
        for (int l : lambdas) {
            Params PL{p, t.r, t.kappa, l};
            RStore rs = RStore::build(PL);
            if (!mutate.empty()) {
                Mutation m = parse_mutation(mutate);
                if (!m.is_f)
                    rs = rs.with_negated(parse_label_or_throw(m.labels[0], p),
                                         parse_label_or_throw(m.labels[1], p),
                                         parse_label_or_throw(m.labels[2], p));
            }
            auto hex = check_hexagon(fs, rs, tolerance, jobs);
            ok = ok && hex.passed();
            jt["hexagon_lambda_" + std::to_string(l)] = report_json(hex, p);
            if (!as_json)
                out << "  hexagon (lambda=" << l << "): " << hex.equations_checked
                    << " equations, max residual " << hex.max_residual
                    << (hex.passed() ? " [ok]" : " [FAIL]") << "\n";
            if (!as_json)
                for (std::size_t v = 0; v < hex.violations.size() && v < 8; ++v)
                    out << "    " << hex.violations[v].pretty(p) << "\n";
        }
        if (appendix) {
            auto app = check_appendix_identities(p, t.r, t.kappa, tolerance);
            double jres = 0;
            bool jok = check_jacobi_det(p, t.r, 1e-8, &jres);
            ok = ok && app.passed() && jok;
            jt["gauss_identities"] = report_json(app, p);
            jt["jacobi_det"] = {{"passed", jok}, {"residual", jres}};
            if (!as_json) {
                out << "  gauss-sum identities: " << app.equations_checked << " checked, max "
                    << app.max_residual << (app.passed() ? " [ok]" : " [FAIL]") << "\n";
                out << "  jacobi determinant identity: residual " << jres
                    << (jok ? " [ok]" : " [FAIL]") << "\n";
            }
        }
        jout.push_back(jt);
    }
    if (as_json) out << jout.dump(2) << "\n";
    if (!as_json) out << (ok ? "all checks passed\n" : "violations found\n");
    return ok ? 0 : 1;
}

int cmd_classify(int p, bool as_json, std::ostream& out) {
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    const long long n = 2LL * p + 1;
    auto classes = enumerate_classes(p);
    auto expected = monoidal_class_count(OddModulus(n));

    std::ostringstream fact;
    auto factors = factorize(n);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) fact << " * ";
        fact << factors[i].first;
        if (factors[i].second > 1) fact << "^" << factors[i].second;
    }

    if (as_json) {
        nlohmann::json j;
        j["p"] = p;
        j["n"] = n;
        j["factorization"] = fact.str();
        j["count"] = classes.size();
        j["count_formula"] = expected;
        nlohmann::json cl = nlohmann::json::array();
        for (const auto& c : classes) {
            nlohmann::json orbit = nlohmann::json::array();
            for (long long v : c.orbit) orbit.push_back(v);
            cl.push_back({{"r", c.r}, {"kappa", c.kappa}, {"orbit", orbit}});
        }
        j["classes"] = cl;
        out << j.dump(2) << "\n";
    } else {
        out << "p = " << p << ", 2p+1 = " << n << " = " << fact.str() << "\n";
        out << "monoidal classes: " << classes.size() << " (formula: " << expected << ")\n";
        for (const auto& c : classes) {
            out << "  (r=" << c.r << ", kappa=" << c.kappa << ")  orbit {";
            for (std::size_t i = 0; i < c.orbit.size(); ++i)
                out << (i ? "," : "") << c.orbit[i];
            out << "}\n";
        }
    }
    return static_cast<long long>(classes.size()) == expected ? 0 : 1;
}

int cmd_modular(int p, int r, int kappa, int lambda, const std::string& pivot, bool as_json,
                bool as_csv, std::ostream& out) {
    Params P{p, r, kappa, lambda};
    P.validate();
    FStore fs = FStore::build(P);
    RStore rs = RStore::build(P);
    auto pivots = solve_pivotal(fs);
    const PivotalSolution* chosen = nullptr;
    if (pivot == "pos") {
        chosen = &positive_pivot(fs, pivots);
    } else if (pivot == "neg") {
        for (const auto& s : pivots)
            if (s.eps.back() == -kappa) chosen = &s;
    } else {
        throw std::invalid_argument("--pivot must be pos or neg");
    }
    if (!chosen) throw std::logic_error("pivotal solution not found");

    ModularData md = compute_modular(fs, rs, *chosen);
    ModularData cf = closed_form_modular(P, chosen->eps.back());
    double dev = modular_deviation(md, cf);

    if (as_json) {
        nlohmann::json j = model_json(fs, rs, &md)["modular"];
        j["closed_form_deviation"] = dev;
        out << j.dump(2) << "\n";
        return 0;
    }
    if (as_csv) {
        out << csv_s_matrix(md, fs.ring()) << "\n" << csv_t_diagonal(md, fs.ring());
        return 0;
    }
    out << "pivotal:";
    for (Label a : fs.ring().labels()) out << " " << a.name() << "=" << chosen->at(a, p);
    out << "\nquantum dimensions:";
    for (Label a : fs.ring().labels()) out << " " << md.qdims[a.index(p)];
    out << "\ntotal dimension: " << md.total_dim << "\n";
    out << "T diagonal:\n";
    for (Label a : fs.ring().labels())
        out << "  " << a.name() << ": " << fmt_cplx(md.t[a.index(p)]) << "\n";
    out << "closed-form deviation: " << dev << "\n";
    return 0;
}

int cmd_jacobi(long long j, long long n, std::ostream& out) {
    out << jacobi(j, n) << "\n";
    return 0;
}

int cmd_gauss(long long r, long long n, std::ostream& out) {
    auto sum = quadratic_gauss_sum(r, OddModulus(n));
    double eps_re = (n % 4 == 1) ? 1.0 : 0.0;
    double eps_im = (n % 4 == 1) ? 0.0 : 1.0;
    std::complex<double> closed =
        std::complex<double>(eps_re, eps_im) * std::sqrt(static_cast<double>(n)) *
        static_cast<double>(jacobi(-r, n));
    out << "sum:         " << fmt_cplx(sum) << "\n";
    out << "closed form: " << fmt_cplx(closed) << "\n";
    out << "residual:    " << std::abs(sum - closed) << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"metaplectic SO(2p+1)_2 fusion/modular data toolkit"};
    app.require_subcommand(1);

    int p = 1, r = 1, kappa = 1, lambda = 1, jobs = 1;
    double tolerance = 1e-9;
    bool all = false, as_json = false, as_csv = false, appendix = false;
    std::string out_path, mutate, pivot = "pos";
    long long jj = 0, nn = 1;

    auto add_params = [&](CLI::App* sub, bool with_lambda) {
        sub->add_option("--p", p, "rank parameter p >= 1")->required();
        sub->add_option("--r", r, "odd integer coprime to 2p+1, 1 <= r < 2p+1");
        sub->add_option("--kappa", kappa, "+1 or -1");
        if (with_lambda) sub->add_option("--lambda", lambda, "braiding direction, +1 or -1");
    };

    CLI::App* gen = app.add_subcommand("generate", "build a solution and write the model JSON");
    add_params(gen, true);
    gen->add_option("--out", out_path, "output path, or - for stdout")->required();

    CLI::App* ver = app.add_subcommand("verify", "pentagon/hexagon/orthogonality verification");
    add_params(ver, true);
    ver->add_flag("--all", all, "verify every (r,kappa,lambda) for this p");
    ver->add_option("--tolerance", tolerance, "residual tolerance (default 1e-9)");
    ver->add_option("--jobs", jobs, "worker threads (does not affect output)");
    ver->add_flag("--appendix", appendix, "also run the Gauss-sum identity suite");
    ver->add_flag("--json", as_json, "machine-readable report on stdout");
    ver->add_option("--mutate", mutate, "fault injection: F:<a>,<b>,<c>,<d>:<i>,<j> or R:<a>,<b>,<c>");

    CLI::App* cls = app.add_subcommand("classify", "monoidal equivalence classes for a given p");
    cls->add_option("--p", p, "rank parameter p >= 1")->required();
    cls->add_flag("--json", as_json, "machine-readable output");

    CLI::App* mod = app.add_subcommand("modular", "quantum dimensions, S and T data");
    add_params(mod, true);
    mod->add_option("--pivot", pivot, "pos (default) or neg quantum-dimension pivot");
    mod->add_flag("--json", as_json, "machine-readable output");
    mod->add_flag("--csv", as_csv, "CSV tables for S and T");

    CLI::App* jac = app.add_subcommand("jacobi", "Jacobi symbol (j|n)");
    jac->add_option("j", jj, "integer")->required();
    jac->add_option("n", nn, "positive odd integer")->required();

    CLI::App* gau = app.add_subcommand("gauss", "quadratic Gauss sum and its closed form");
    gau->add_option("r", jj, "integer coprime to n")->required();
    gau->add_option("n", nn, "odd integer >= 3")->required();

    std::vector<const char*> argv;
    argv.push_back("metaplectic");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_generate(p, r, kappa, lambda, out_path, out);
        if (ver->parsed())
            return cmd_verify(p, r, kappa, lambda, all, tolerance, jobs, appendix, as_json, mutate,
                              out);
        if (cls->parsed()) return cmd_classify(p, as_json, out);
        if (mod->parsed()) return cmd_modular(p, r, kappa, lambda, pivot, as_json, as_csv, out);
        if (jac->parsed()) return cmd_jacobi(jj, nn, out);
        if (gau->parsed()) return cmd_gauss(jj, nn, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace metaplectic::cli
