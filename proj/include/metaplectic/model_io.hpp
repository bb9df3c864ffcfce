#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "metaplectic/f_symbols.hpp"
#include "metaplectic/r_symbols.hpp"
#include "metaplectic/spherical_modular.hpp"
#include "metaplectic/verifier.hpp"

namespace metaplectic {

/// Parsed form of a serialized model, used for round-trip checks.
struct ModelFile {
    std::string schema_version;
    Params params;
    std::vector<std::string> labels;
    std::vector<std::array<std::string, 3>> fusion;

    struct FEntry {
        std::vector<std::string> rows, cols;
        std::vector<std::complex<double>> entries;  // row-major
        friend bool operator==(const FEntry&, const FEntry&) = default;
    };
    std::map<std::string, FEntry> f;
    std::map<std::string, std::complex<double>> r;
    std::map<std::string, std::string> h;

    struct Modular {
        std::map<std::string, int> pivotal;
        std::map<std::string, double> qdims;
        std::vector<std::vector<std::complex<double>>> s;
        std::vector<std::complex<double>> t;
        double total_dim = 0;
        friend bool operator==(const Modular&, const Modular&) = default;
    };
    std::optional<Modular> modular;
};

bool models_equal(const ModelFile& a, const ModelFile& b);

/// Complete model serialization; keys are sorted, complex numbers are [re, im]
/// pairs, values survive a round trip at full double precision.
nlohmann::json model_json(const FStore& f, const RStore& r, const ModularData* modular);

ModelFile parse_model_json(const nlohmann::json& j);

nlohmann::json report_json(const VerificationReport& rep, int p, std::size_t max_violations = 16);

std::string csv_s_matrix(const ModularData& md, const FusionRing& ring);
std::string csv_t_diagonal(const ModularData& md, const FusionRing& ring);

}  // namespace metaplectic
