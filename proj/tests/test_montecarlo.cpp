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

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "jbe/io.hpp"
#include "jbe/montecarlo.hpp"
#include "jbe/validate.hpp"

using namespace jbe;

TEST_CASE("empirical cdf basics") {
    CHECK_THROWS_AS(EmpiricalCdf(std::vector<double>{}), std::invalid_argument);
    EmpiricalCdf f({1.0, 2.0, 3.0});
    CHECK(f(0.5) == 0.0);
    CHECK(f(2.0) == Catch::Approx(2.0 / 3.0));
    CHECK(f(3.0) == 1.0);
    CHECK(f(10.0) == 1.0);
}

TEST_CASE("ks distance examples") {
    EmpiricalCdf single({0.5});
    double d = ks_distance(single, [](double x) { return std::min(1.0, std::max(0.0, x)); });
    CHECK(d == Catch::Approx(0.5));

    // a sample against itself has zero two-sample distance; against its
    // own step function the left-limit term caps the gap at 1/n
    std::vector<double> v{0.1, 0.4, 0.9, 1.3};
    CHECK(ks_two_sample(v, v) == 0.0);
    EmpiricalCdf self(v);
    CHECK(ks_distance(self, [&](double x) { return self(x); }) == Catch::Approx(0.25));
}

TEST_CASE("ks calibration against the uniform law") {
    // with 1000 draws the 5% critical value should reject about 5% of
    // clean-uniform runs; over 100 fixed seeds at least 94 must pass
    int pass = 0;
    for (int seed = 0; seed < 100; ++seed) {
        std::vector<double> u(1000);
        CounterRng rng(seed, 0, 0);
        for (double& v : u) v = rng.uniform();
        EmpiricalCdf ecdf(std::move(u));
        double d = ks_distance(ecdf, [](double x) { return std::min(1.0, std::max(0.0, x)); });
        if (d < ks_critical_one_sample(1000)) ++pass;
    }
    CHECK(pass >= 94);
}

TEST_CASE("two-sample statistic on disjoint samples") {
    CHECK(ks_two_sample({1.0, 2.0}, {5.0, 6.0}) == Catch::Approx(1.0));
    CHECK(ks_two_sample({1.0, 2.0}, {1.0, 2.0}) == Catch::Approx(0.0));
}

TEST_CASE("experiment reports are reproducible") {
    ExperimentConfig cfg;
    cfg.sampler = {{10, 2.0, 1.0, 0.5}, SamplerMethod::killip_nenciu, 31, 128,
                   SampleWant::smallest_only};
    cfg.count = 400;
    cfg.grid = {0.0, 10.0, 51};
    ExperimentReport a = run_experiment(cfg);
    ExperimentReport b = run_experiment(cfg);
    CHECK(a.ks_limit == b.ks_limit);
    CHECK(a.ks_two_term == b.ks_two_term);
    REQUIRE(a.scaled_samples.size() == b.scaled_samples.size());
    for (std::size_t i = 0; i < a.scaled_samples.size(); ++i)
        CHECK(a.scaled_samples[i] == b.scaled_samples[i]);

    // serialized reports are byte-identical
    RunManifest m;
    m.command = "experiment";
    std::string pa = "mc_report_a.json";
    std::string pb = "mc_report_b.json";
    write_report_json(pa, a, m);
    write_report_json(pb, b, m);
    std::ifstream fa(pa), fb(pb);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
    std::remove(pa.c_str());
    std::remove(pb.c_str());
}

TEST_CASE("experiment ks fields match a manual recomputation") {
    ExperimentConfig cfg;
    cfg.sampler = {{8, 1.0, 0.0, 1.0}, SamplerMethod::killip_nenciu, 12, 128,
                   SampleWant::smallest_only};
    cfg.count = 500;
    ExperimentReport rep = run_experiment(cfg);
    TwoTermLaw law(cfg.sampler.params);
    EmpiricalCdf ecdf(rep.scaled_samples);
    CHECK(rep.ks_two_term ==
          Catch::Approx(ks_distance(ecdf, [&](double x) { return law.eval(x).total(); })));
    CHECK(rep.ks_limit ==
          Catch::Approx(ks_distance(ecdf, [&](double x) { return law.limit(x); })));
    CHECK(rep.curve.points.size() == rep.empirical.size());
    // empirical column is the ecdf sampled on the grid
    for (std::size_t i = 0; i < rep.empirical.size(); ++i)
        CHECK(rep.empirical[i] == Catch::Approx(ecdf(rep.curve.points[i].abscissa)));
}

TEST_CASE("median KS improves with the correction at moderate N") {
    std::vector<CheckResult> fig = checks::figure1a(500);
    REQUIRE(fig.size() == 2);
    INFO(fig[0].detail << ": " << fig[0].observed);
    CHECK(fig[0].pass);
    INFO(fig[1].detail << ": " << fig[1].observed << " vs " << fig[1].threshold);
    CHECK(fig[1].pass);
}
