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

#ifndef JBE_IO_HPP
#define JBE_IO_HPP

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "jbe/edge_laws.hpp"
#include "jbe/montecarlo.hpp"
#include "jbe/version.hpp"

namespace jbe {

/// Shortest decimal rendering that round-trips to the same double.
inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[v & 0xf];
        v >>= 4;
    }
    return out;
}

/// Wall-clock stamps are opt-in (JBE_TIMESTAMP) so that identical runs
/// produce byte-identical files; reproducibility outranks provenance of
/// the invocation time.
inline std::string manifest_timestamp() {
    if (const char* env = std::getenv("JBE_TIMESTAMP")) return env;
    return "";
}

/// Embedded in every output file; sufficient to reproduce the run.
struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string library_version = version_string;
    std::string rng_algorithms = "splitmix-ctr/v1;box-muller;marsaglia-tsang";
    std::string timestamp = manifest_timestamp();
    std::string payload_checksum;  // fnv1a-64 of the data section

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["command"] = command;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (auto& [k, v] : parameters) params[k] = v;
        j["parameters"] = params;
        j["library_version"] = library_version;
        j["rng_algorithms"] = rng_algorithms;
        if (!timestamp.empty()) j["timestamp"] = timestamp;
        j["payload_checksum"] = payload_checksum;
        return j;
    }
};

namespace detail {

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline std::string csv_field(double v) { return std::isnan(v) ? "" : format_double(v); }

inline const char* edge_name(Edge e) { return e == Edge::smallest ? "smallest" : "largest"; }
inline const char* mode_name(CdfMode m) {
    switch (m) {
        case CdfMode::exact: return "exact";
        case CdfMode::two_term: return "two-term";
        case CdfMode::limit: return "limit";
        case CdfMode::jue_det: return "jue-det";
        case CdfMode::recentred: return "recentred";
    }
    return "?";
}
inline const char* scale_name(CurveScale s) {
    return s == CurveScale::hard_edge ? "hard-edge" : "raw";
}

inline nlohmann::ordered_json params_json(const EnsembleParams& p) {
    return {{"N", p.N}, {"beta", p.beta}, {"alpha1", p.alpha1}, {"alpha2", p.alpha2}};
}

}  // namespace detail

/// CSV: `# manifest: {...}` comment, header row, one row per grid point.
/// Missing columns are left empty.
inline void write_curve_csv(const std::string& path, const EdgeCurve& curve,
                            RunManifest manifest) {
    std::string payload = "x_or_xi,leading,correction,total,exact\n";
    for (const auto& pt : curve.points) {
        payload += format_double(pt.abscissa);
        payload += ',';
        payload += detail::csv_field(pt.leading);
        payload += ',';
        payload += detail::csv_field(pt.correction);
        payload += ',';
        payload += detail::csv_field(pt.total);
        payload += ',';
        payload += detail::csv_field(pt.exact);
        payload += '\n';
    }
    manifest.payload_checksum = hex64(fnv1a64(payload));
    detail::write_file(path, "# manifest: " + manifest.to_json().dump() + "\n" + payload);
}

inline void write_curve_json(const std::string& path, const EdgeCurve& curve,
                             RunManifest manifest) {
    nlohmann::ordered_json data;
    data["kind"] = "curve";
    data["params"] = detail::params_json(curve.params);
    data["edge"] = detail::edge_name(curve.edge);
    data["mode"] = detail::mode_name(curve.mode);
    data["scale"] = detail::scale_name(curve.scale);
    data["columns"] = {"x_or_xi", "leading", "correction", "total", "exact"};
    auto rows = nlohmann::ordered_json::array();
    for (const auto& pt : curve.points) {
        auto row = nlohmann::ordered_json::array();
        for (double v : {pt.abscissa, pt.leading, pt.correction, pt.total, pt.exact}) {
            if (std::isnan(v))
                row.push_back(nullptr);
            else
                row.push_back(v);
        }
        rows.push_back(row);
    }
    data["points"] = rows;
    manifest.payload_checksum = hex64(fnv1a64(data.dump()));

    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["manifest"] = manifest.to_json();
    j["data"] = data;
    detail::write_file(path, j.dump(2) + "\n");
}

inline void write_samples_csv(const std::string& path, const SampleBatch& batch,
                              RunManifest manifest) {
    const bool all = batch.config.want == SampleWant::all_eigenvalues;
    std::string payload = all ? "draw,rank,value\n" : "draw,value\n";
    if (all) {
        for (std::size_t d = 0; d < batch.spectra.size(); ++d)
            for (std::size_t r = 0; r < batch.spectra[d].size(); ++r)
                payload += std::to_string(d) + ',' + std::to_string(r) + ',' +
                           format_double(batch.spectra[d][r]) + '\n';
    } else {
        for (std::size_t d = 0; d < batch.smallest.size(); ++d)
            payload += std::to_string(d) + ',' + format_double(batch.smallest[d]) + '\n';
    }
    manifest.payload_checksum = hex64(fnv1a64(payload));
    detail::write_file(path, "# manifest: " + manifest.to_json().dump() + "\n" + payload);
}

inline void write_samples_json(const std::string& path, const SampleBatch& batch,
                               RunManifest manifest) {
    nlohmann::ordered_json data;
    data["kind"] = "samples";
    data["params"] = detail::params_json(batch.config.params);
    data["method"] = batch.config.method == SamplerMethod::killip_nenciu ? "killip-nenciu"
                                                                         : "double-wishart";
    data["seed"] = batch.config.seed;
    data["want"] = batch.config.want == SampleWant::all_eigenvalues ? "all" : "smallest";
    data["cholesky_retries"] = batch.cholesky_retries;
    if (batch.config.want == SampleWant::all_eigenvalues)
        data["spectra"] = batch.spectra;
    else
        data["smallest"] = batch.smallest;
    manifest.payload_checksum = hex64(fnv1a64(data.dump()));

    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["manifest"] = manifest.to_json();
    j["data"] = data;
    detail::write_file(path, j.dump(2) + "\n");
}

/// Experiment report: predictions, empirical CDF and KS distances.
inline void write_report_json(const std::string& path, const ExperimentReport& rep,
                              RunManifest manifest) {
    nlohmann::ordered_json data;
    data["kind"] = "experiment";
    data["params"] = detail::params_json(rep.config.sampler.params);
    data["method"] = rep.config.sampler.method == SamplerMethod::killip_nenciu
                         ? "killip-nenciu"
                         : "double-wishart";
    data["seed"] = rep.config.sampler.seed;
    data["count"] = rep.config.count;
    data["ks_limit"] = rep.ks_limit;
    data["ks_two_term"] = rep.ks_two_term;
    data["cholesky_retries"] = rep.cholesky_retries;
    data["scaled_samples"] = rep.scaled_samples;
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rep.curve.points.size(); ++i) {
        const auto& pt = rep.curve.points[i];
        rows.push_back({pt.abscissa, pt.leading, pt.correction, pt.total, rep.empirical[i]});
    }
    data["columns"] = {"x", "leading", "correction", "two_term_total", "empirical"};
    data["points"] = rows;
    manifest.payload_checksum = hex64(fnv1a64(data.dump()));

    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["manifest"] = manifest.to_json();
    j["data"] = data;
    detail::write_file(path, j.dump(2) + "\n");
}

}  // namespace jbe

#endif  // JBE_IO_HPP
