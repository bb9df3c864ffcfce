#include "metaplectic/model_io.hpp"

#include <algorithm>
#include <sstream>

namespace metaplectic {

namespace {

nlohmann::json cplx_json(std::complex<double> z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

std::complex<double> cplx_from(const nlohmann::json& j) {
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

}  // namespace

bool models_equal(const ModelFile& a, const ModelFile& b) {
    return a.schema_version == b.schema_version && a.params.p == b.params.p &&
           a.params.r == b.params.r && a.params.kappa == b.params.kappa &&
           a.params.lambda == b.params.lambda && a.labels == b.labels && a.fusion == b.fusion &&
           a.f == b.f && a.r == b.r && a.h == b.h && a.modular == b.modular;
}

nlohmann::json model_json(const FStore& fs, const RStore& rs, const ModularData* modular) {
    const FusionRing& ring = fs.ring();
    const Params& P = fs.params();
    nlohmann::json j;
    j["schema_version"] = "1";
    j["params"] = {{"p", P.p}, {"r", P.r}, {"kappa", P.kappa}, {"lambda", rs.params().lambda}};

    nlohmann::json labels = nlohmann::json::array();
    for (Label a : ring.labels()) labels.push_back(a.name());
    j["labels"] = labels;

    nlohmann::json fusion = nlohmann::json::array();
    for (Label a : ring.labels())
        for (Label b : ring.labels())
            for (Label c : ring.fuse(a, b))
                fusion.push_back(nlohmann::json::array({a.name(), b.name(), c.name()}));
    j["fusion"] = fusion;

    // Sorted by packed key so the object is built canonically (nlohmann sorts
    // object keys anyway; this keeps the construction order stable too).
    std::vector<std::uint64_t> keys;
    for (const auto& [k, m] : fs.table()) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    nlohmann::json f = nlohmann::json::object();
    for (std::uint64_t k : keys) {
        const FMatrix& m = fs.table().at(k);
        auto q = fs.labels_of_key(k);
        nlohmann::json rows = nlohmann::json::array(), cols = nlohmann::json::array();
        for (Label e : m.rows) rows.push_back(e.name());
        for (Label g : m.cols) cols.push_back(g.name());
        nlohmann::json entries = nlohmann::json::array();
        for (double x : m.v) entries.push_back(cplx_json({x, 0.0}));
        f[q[0].name() + "," + q[1].name() + "," + q[2].name() + "," + q[3].name()] = {
            {"rows", rows}, {"cols", cols}, {"entries", entries}};
    }
    j["F"] = f;

    nlohmann::json r = nlohmann::json::object();
    nlohmann::json h = nlohmann::json::object();
    for (Label a : ring.labels())
        for (Label b : ring.labels())
            for (Label c : ring.fuse(a, b))
                r[a.name() + "," + b.name() + "," + c.name()] = cplx_json(rs.symbol(a, b, c));
    for (Label a : ring.labels()) h[a.name()] = rs.h(a).str();
    j["R"] = r;
    j["h"] = h;

    if (modular) {
        nlohmann::json md;
        nlohmann::json piv = nlohmann::json::object(), qd = nlohmann::json::object();
        for (Label a : ring.labels()) {
            piv[a.name()] = modular->pivotal[a.index(P.p)];
            qd[a.name()] = modular->qdims[a.index(P.p)];
        }
        md["pivotal"] = piv;
        md["qdims"] = qd;
        nlohmann::json s = nlohmann::json::array();
        for (const auto& row : modular->s) {
            nlohmann::json jr = nlohmann::json::array();
            for (auto z : row) jr.push_back(cplx_json(z));
            s.push_back(jr);
        }
        md["S"] = s;
        nlohmann::json t = nlohmann::json::array();
        for (auto z : modular->t) t.push_back(cplx_json(z));
        md["T"] = t;
        md["total_dim"] = modular->total_dim;
        j["modular"] = md;
    }
    return j;
}

ModelFile parse_model_json(const nlohmann::json& j) {
    ModelFile m;
    m.schema_version = j.at("schema_version").get<std::string>();
    m.params.p = j.at("params").at("p").get<int>();
    m.params.r = j.at("params").at("r").get<int>();
    m.params.kappa = j.at("params").at("kappa").get<int>();
    m.params.lambda = j.at("params").at("lambda").get<int>();
    for (const auto& l : j.at("labels")) m.labels.push_back(l.get<std::string>());
    for (const auto& t : j.at("fusion"))
        m.fusion.push_back({t.at(0).get<std::string>(), t.at(1).get<std::string>(),
                            t.at(2).get<std::string>()});
    for (const auto& [k, v] : j.at("F").items()) {
        ModelFile::FEntry e;
        for (const auto& s : v.at("rows")) e.rows.push_back(s.get<std::string>());
        for (const auto& s : v.at("cols")) e.cols.push_back(s.get<std::string>());
        for (const auto& z : v.at("entries")) e.entries.push_back(cplx_from(z));
        m.f.emplace(k, std::move(e));
    }
    for (const auto& [k, v] : j.at("R").items()) m.r.emplace(k, cplx_from(v));
    for (const auto& [k, v] : j.at("h").items()) m.h.emplace(k, v.get<std::string>());
    if (j.contains("modular")) {
        ModelFile::Modular md;
        for (const auto& [k, v] : j.at("modular").at("pivotal").items()) md.pivotal[k] = v.get<int>();
        for (const auto& [k, v] : j.at("modular").at("qdims").items()) md.qdims[k] = v.get<double>();
        for (const auto& row : j.at("modular").at("S")) {
            std::vector<std::complex<double>> r;
            for (const auto& z : row) r.push_back(cplx_from(z));
            md.s.push_back(std::move(r));
        }
        for (const auto& z : j.at("modular").at("T")) md.t.push_back(cplx_from(z));
        md.total_dim = j.at("modular").at("total_dim").get<double>();
        m.modular = std::move(md);
    }
    return m;
}

nlohmann::json report_json(const VerificationReport& rep, int p, std::size_t max_violations) {
    nlohmann::json j;
    j["equations_checked"] = rep.equations_checked;
    j["max_residual"] = rep.max_residual;
    j["passed"] = rep.passed();
    j["violation_count"] = rep.violations.size();
    nlohmann::json v = nlohmann::json::array();
    for (std::size_t k = 0; k < rep.violations.size() && k < max_violations; ++k) {
        const Violation& viol = rep.violations[k];
        nlohmann::json labels = nlohmann::json::array();
        for (int idx : viol.labels) labels.push_back(Label::from_index(idx, p).name());
        v.push_back({{"equation", viol.equation}, {"labels", labels}, {"residual", viol.residual}});
    }
    j["violations"] = v;
    return j;
}

namespace {
std::string fmt_complex(std::complex<double> z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}
}  // namespace

std::string csv_s_matrix(const ModularData& md, const FusionRing& ring) {
    std::ostringstream os;
    os << "label";
    for (Label b : ring.labels()) os << "," << b.name();
    os << "\n";
    for (Label a : ring.labels()) {
        os << a.name();
        for (Label b : ring.labels())
            os << "," << fmt_complex(md.s[a.index(ring.p())][b.index(ring.p())]);
        os << "\n";
    }
    return os.str();
}

std::string csv_t_diagonal(const ModularData& md, const FusionRing& ring) {
    std::ostringstream os;
    os << "label,re,im\n";
    os.precision(17);
    for (Label a : ring.labels()) {
        auto z = md.t[a.index(ring.p())];
        os << a.name() << "," << z.real() << "," << z.imag() << "\n";
    }
    return os.str();
}

}  // namespace metaplectic
