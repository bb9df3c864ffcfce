#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "metaplectic/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = metaplectic::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("generate writes a complete model file") {
    fs::path path = fs::temp_directory_path() / "metaplectic_cli_test_model.json";
    auto res = run({"generate", "--p", "1", "--r", "1", "--kappa", "1", "--lambda", "1", "--out",
                    path.string()});
    CHECK(res.code == 0);
    CHECK(res.out.find("labels: 5") != std::string::npos);
    CHECK(res.out.find("class representative: (r=1, kappa=1)") != std::string::npos);
    std::ifstream in(path);
    REQUIRE(in.good());
    nlohmann::json j = nlohmann::json::parse(in);
    CHECK(j["labels"].size() == 5);
    CHECK(j.contains("modular"));
    CHECK(j["params"]["p"] == 1);
    fs::remove(path);
}

TEST_CASE("generate rejects invalid parameters with exit 2") {
    auto even_r = run({"generate", "--p", "2", "--r", "2", "--kappa", "1", "--out", "-"});
    CHECK(even_r.code == 2);
    CHECK(even_r.err.find("odd") != std::string::npos);
    auto out_of_range = run({"generate", "--p", "3", "--r", "9", "--kappa", "1", "--out", "-"});
    CHECK(out_of_range.code == 2);
    auto not_coprime = run({"generate", "--p", "4", "--r", "3", "--kappa", "1", "--out", "-"});
    CHECK(not_coprime.code == 2);
    auto bad_kappa = run({"generate", "--p", "1", "--r", "1", "--kappa", "7", "--out", "-"});
    CHECK(bad_kappa.code == 2);
    auto missing = run({"generate"});
    CHECK(missing.code == 2);
    auto unknown = run({"frobnicate"});
    CHECK(unknown.code == 2);
}

TEST_CASE("verify exit codes") {
    auto ok = run({"verify", "--p", "1", "--r", "1", "--kappa", "1", "--lambda", "1"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("all checks passed") != std::string::npos);

    auto all2 = run({"verify", "--p", "2", "--all"});
    CHECK(all2.code == 0);

    auto bad = run({"verify", "--p", "1", "--r", "1", "--kappa", "1", "--lambda", "1", "--mutate",
                    "F:psi+,psi+,psi+,psi+:0,0"});
    CHECK(bad.code == 1);

    auto badr = run({"verify", "--p", "1", "--r", "1", "--kappa", "1", "--lambda", "1", "--mutate",
                     "R:psi+,psi+,phi1"});
    CHECK(badr.code == 1);

    auto p0 = run({"verify", "--p", "0"});
    CHECK(p0.code == 2);

    auto mutate_all = run({"verify", "--p", "1", "--all", "--mutate", "R:psi+,psi+,phi1"});
    CHECK(mutate_all.code == 2);

    auto appendix = run({"verify", "--p", "2", "--r", "1", "--kappa", "1", "--appendix"});
    CHECK(appendix.code == 0);
    CHECK(appendix.out.find("gauss-sum identities") != std::string::npos);
}

TEST_CASE("verify output is independent of --jobs and repeatable") {
    auto a = run({"verify", "--p", "2", "--r", "3", "--kappa", "-1", "--json", "--jobs", "1"});
    auto b = run({"verify", "--p", "2", "--r", "3", "--kappa", "-1", "--json", "--jobs", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto c = run({"verify", "--p", "2", "--r", "3", "--kappa", "-1", "--json", "--jobs", "1"});
    CHECK(a.out == c.out);
}

TEST_CASE("classify") {
    auto res = run({"classify", "--p", "2"});
    CHECK(res.code == 0);
    CHECK(res.out.find("monoidal classes: 4") != std::string::npos);
    auto res7 = run({"classify", "--p", "7"});
    CHECK(res7.out.find("monoidal classes: 4") != std::string::npos);
    auto res12 = run({"classify", "--p", "12"});
    CHECK(res12.out.find("monoidal classes: 4") != std::string::npos);
    auto j = run({"classify", "--p", "4", "--json"});
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["count"] == 2);
    CHECK(parsed["count_formula"] == 2);
    CHECK(parsed["factorization"] == "3^2");
    auto bad = run({"classify", "--p", "0"});
    CHECK(bad.code == 2);
}

TEST_CASE("modular command") {
    auto res = run({"modular", "--p", "1", "--r", "1", "--kappa", "1", "--lambda", "1"});
    CHECK(res.code == 0);
    CHECK(res.out.find("closed-form deviation") != std::string::npos);
    auto neg = run({"modular", "--p", "1", "--r", "1", "--kappa", "1", "--pivot", "neg"});
    CHECK(neg.code == 0);
    auto csv = run({"modular", "--p", "1", "--r", "1", "--kappa", "1", "--csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out.find("label,1,eps,phi1,psi+,psi-") != std::string::npos);
    auto j = run({"modular", "--p", "2", "--r", "3", "--kappa", "-1", "--json"});
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["closed_form_deviation"].get<double>() < 1e-9);
    auto badpivot = run({"modular", "--p", "1", "--r", "1", "--pivot", "sideways"});
    CHECK(badpivot.code == 2);
}

TEST_CASE("jacobi and gauss commands") {
    auto j = run({"jacobi", "2", "15"});
    CHECK(j.code == 0);
    CHECK(j.out == "1\n");
    auto jneg = run({"jacobi", "2", "3"});
    CHECK(jneg.out == "-1\n");
    auto jbad = run({"jacobi", "2", "4"});
    CHECK(jbad.code == 2);
    auto g = run({"gauss", "1", "5"});
    CHECK(g.code == 0);
    CHECK(g.out.find("residual") != std::string::npos);
    auto gbad = run({"gauss", "3", "9"});
    CHECK(gbad.code == 2);
}

TEST_CASE("help exits cleanly") {
    auto res = run({"--help"});
    CHECK(res.code == 0);
    auto sub = run({"verify", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--tolerance") != std::string::npos);
}

TEST_CASE("generate to stdout is byte-identical across runs") {
    auto a = run({"generate", "--p", "2", "--r", "1", "--kappa", "-1", "--lambda", "1", "--out", "-"});
    auto b = run({"generate", "--p", "2", "--r", "1", "--kappa", "-1", "--lambda", "1", "--out", "-"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}
