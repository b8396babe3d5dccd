// Copyright 2026 the jbe authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: curve evaluation (cdf), eigenvalue sampling
// (sample) and the numerical validation suites (validate).
//
// Exit codes: 0 success, 1 failed validation check, 2 invalid
// parameters, 3 mode/parameter mismatch.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jbe/io.hpp"
#include "jbe/jbe.hpp"

namespace {

struct GridFlag {
    double lo = 0.0, hi = 10.0;
    int count = 201;
};

GridFlag parse_grid(const std::string& s) {
    GridFlag g;
    if (s.empty()) return g;
    if (std::sscanf(s.c_str(), "%lf:%lf:%d", &g.lo, &g.hi, &g.count) != 3 || g.count < 1 ||
        !(g.hi >= g.lo))
        throw CLI::ValidationError("--grid", "expected lo:hi:count with hi >= lo, count >= 1");
    return g;
}

jbe::CdfMode parse_mode(const std::string& s) {
    if (s == "exact") return jbe::CdfMode::exact;
    if (s == "two-term") return jbe::CdfMode::two_term;
    if (s == "limit") return jbe::CdfMode::limit;
    if (s == "jue-det") return jbe::CdfMode::jue_det;
    if (s == "recentred") return jbe::CdfMode::recentred;
    throw CLI::ValidationError("--mode", "unknown mode " + s);
}

int run_cdf(const jbe::EnsembleParams& params, const std::string& edge_s,
            const std::string& mode_s, const std::string& grid_s, const std::string& scale_s,
            const std::string& out, const std::string& format) {
    jbe::Edge edge = (edge_s == "largest") ? jbe::Edge::largest : jbe::Edge::smallest;
    jbe::CdfMode mode = parse_mode(mode_s);
    GridFlag g = parse_grid(grid_s);
    jbe::CurveScale scale =
        (scale_s == "raw") ? jbe::CurveScale::raw_xi : jbe::CurveScale::hard_edge;

    jbe::EdgeCurve curve =
        jbe::tabulate_curve(params, edge, mode, {g.lo, g.hi, g.count}, scale);

    jbe::RunManifest manifest;
    manifest.command = "cdf";
    manifest.parameters = {{"N", std::to_string(params.N)},
                           {"beta", jbe::format_double(params.beta)},
                           {"alpha1", jbe::format_double(params.alpha1)},
                           {"alpha2", jbe::format_double(params.alpha2)},
                           {"edge", edge_s},
                           {"mode", mode_s},
                           {"grid", grid_s.empty() ? "0:10:201" : grid_s},
                           {"scale", scale_s},
                           {"format", format}};
    if (format == "json")
        jbe::write_curve_json(out, curve, manifest);
    else
        jbe::write_curve_csv(out, curve, manifest);
    std::printf("wrote %s (%d points)\n", out.c_str(), g.count);
    return 0;
}

int run_sample(const jbe::SamplerConfig& config, int count, const std::string& out,
               const std::string& format, const std::string& method_s,
               const std::string& want_s) {
    jbe::SampleBatch batch = jbe::draw_samples(config, count);
    jbe::RunManifest manifest;
    manifest.command = "sample";
    manifest.parameters = {{"N", std::to_string(config.params.N)},
                           {"beta", jbe::format_double(config.params.beta)},
                           {"alpha1", jbe::format_double(config.params.alpha1)},
                           {"alpha2", jbe::format_double(config.params.alpha2)},
                           {"method", method_s},
                           {"count", std::to_string(count)},
                           {"seed", std::to_string(config.seed)},
                           {"want", want_s},
                           {"batch_size", std::to_string(config.batch_size)},
                           {"format", format}};
    if (format == "json")
        jbe::write_samples_json(out, batch, manifest);
    else
        jbe::write_samples_csv(out, batch, manifest);
    std::printf("wrote %s (%d draws", out.c_str(), count);
    if (batch.cholesky_retries) std::printf(", %lld resampled", batch.cholesky_retries);
    std::printf(")\n");
    return 0;
}

int run_validate(const std::string& suite, std::uint64_t seed, const std::string& report) {
    std::vector<jbe::CheckResult> results;
    if (suite == "identities")
        results = jbe::checks::identity_suite();
    else if (suite == "figures")
        results = jbe::checks::figures_suite(seed);
    else if (suite == "convergence")
        results = jbe::checks::convergence_suite();
    else
        throw CLI::ValidationError("--suite", "unknown suite " + suite);

    for (const auto& r : results)
        std::printf("%-34s %s  observed=%.6g threshold=%.6g\n", r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.observed, r.threshold);

    if (!report.empty()) {
        nlohmann::ordered_json data;
        data["kind"] = "validation";
        data["suite"] = suite;
        data["seed"] = seed;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : results)
            arr.push_back({{"name", r.name},
                           {"pass", r.pass},
                           {"observed", r.observed},
                           {"threshold", r.threshold},
                           {"detail", r.detail}});
        data["checks"] = arr;
        data["all_pass"] = jbe::all_pass(results);
        jbe::RunManifest manifest;
        manifest.command = "validate";
        manifest.parameters = {{"suite", suite}, {"seed", std::to_string(seed)}};
        manifest.payload_checksum = jbe::hex64(jbe::fnv1a64(data.dump()));
        nlohmann::ordered_json j;
        j["schema_version"] = 1;
        j["manifest"] = manifest.to_json();
        j["data"] = data;
        jbe::detail::write_file(report, j.dump(2) + "\n");
        std::printf("report written to %s\n", report.c_str());
    }
    return jbe::all_pass(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobi beta-ensemble extreme-eigenvalue laws: exact finite-N curves, "
                 "two-term hard-edge asymptotics, matrix-model samplers and validation."};
    app.require_subcommand(1);

    // cdf ------------------------------------------------------------
    auto* cdf = app.add_subcommand("cdf", "tabulate a distribution curve");
    jbe::EnsembleParams params;
    std::string edge_s = "smallest", mode_s = "two-term", grid_s, scale_s = "hard-edge";
    std::string out = "curve.csv", format = "csv";
    cdf->add_option("--N", params.N, "matrix size")->required();
    cdf->add_option("--beta", params.beta, "Dyson-type parameter, beta > 0")->required();
    cdf->add_option("--alpha1", params.alpha1, "exponent at the lower edge")->required();
    cdf->add_option("--alpha2", params.alpha2, "exponent at the upper edge")->required();
    cdf->add_option("--edge", edge_s, "smallest|largest")
        ->check(CLI::IsMember({"smallest", "largest"}));
    cdf->add_option("--mode", mode_s, "exact|two-term|limit|jue-det|recentred")
        ->check(CLI::IsMember({"exact", "two-term", "limit", "jue-det", "recentred"}));
    cdf->add_option("--grid", grid_s, "lo:hi:count (default 0:10:201)");
    cdf->add_option("--scale", scale_s, "hard-edge (x = N^2 xi) or raw (xi)")
        ->check(CLI::IsMember({"hard-edge", "raw"}));
    cdf->add_option("--out", out, "output path");
    cdf->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    // sample ----------------------------------------------------------
    auto* sample = app.add_subcommand("sample", "draw eigenvalue samples");
    jbe::SamplerConfig scfg;
    int count = 1000;
    std::string method_s = "killip-nenciu", want_s = "smallest", sout = "samples.csv",
                sformat = "csv";
    sample->add_option("--N", scfg.params.N, "matrix size")->required();
    sample->add_option("--beta", scfg.params.beta, "beta > 0")->required();
    sample->add_option("--alpha1", scfg.params.alpha1, "exponent at the lower edge")->required();
    sample->add_option("--alpha2", scfg.params.alpha2, "exponent at the upper edge")->required();
    sample->add_option("--method", method_s, "killip-nenciu|double-wishart")
        ->check(CLI::IsMember({"killip-nenciu", "double-wishart"}));
    sample->add_option("--count", count, "number of draws");
    sample->add_option("--seed", scfg.seed, "RNG seed");
    sample->add_option("--want", want_s, "smallest|all")
        ->check(CLI::IsMember({"smallest", "all"}));
    sample->add_option("--batch-size", scfg.batch_size, "draws per RNG stream");
    sample->add_option("--out", sout, "output path");
    sample->add_option("--format", sformat, "csv|json")->check(CLI::IsMember({"csv", "json"}));

    // validate ----------------------------------------------------------
    auto* validate = app.add_subcommand("validate", "run a validation suite");
    std::string suite = "identities", report;
    std::uint64_t vseed = 0;
    validate->add_option("--suite", suite, "identities|figures|convergence")
        ->check(CLI::IsMember({"identities", "figures", "convergence"}));
    validate->add_option("--seed", vseed, "base seed for sampled suites");
    validate->add_option("--report", report, "JSON report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cdf->parsed()) return run_cdf(params, edge_s, mode_s, grid_s, scale_s, out, format);
        if (sample->parsed()) {
            scfg.method = (method_s == "double-wishart") ? jbe::SamplerMethod::double_wishart
                                                         : jbe::SamplerMethod::killip_nenciu;
            scfg.want = (want_s == "all") ? jbe::SampleWant::all_eigenvalues
                                          : jbe::SampleWant::smallest_only;
            return run_sample(scfg, count, sout, sformat, method_s, want_s);
        }
        if (validate->parsed()) return run_validate(suite, vseed, report);
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
