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

#ifndef JBE_MONTECARLO_HPP
#define JBE_MONTECARLO_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "jbe/edge_laws.hpp"
#include "jbe/sampling.hpp"

namespace jbe {

/// Right-continuous empirical distribution function of a sample.
class EmpiricalCdf {
  public:
    explicit EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
        if (sorted_.empty()) throw std::invalid_argument("EmpiricalCdf: empty sample");
        std::sort(sorted_.begin(), sorted_.end());
    }

    double operator()(double x) const {
        auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
        return static_cast<double>(it - sorted_.begin()) / sorted_.size();
    }

    const std::vector<double>& sorted() const { return sorted_; }
    std::size_t size() const { return sorted_.size(); }

  private:
    std::vector<double> sorted_;
};

/// Kolmogorov-Smirnov distance between an empirical CDF and a reference
/// CDF: the supremum over jump points of both one-sided gaps.
template <typename CdfFn>
double ks_distance(const EmpiricalCdf& ecdf, const CdfFn& cdf) {
    const auto& xs = ecdf.sorted();
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double f = cdf(xs[i]);
        d = std::max(d, std::fabs((i + 1) / n - f));
        d = std::max(d, std::fabs(i / n - f));
    }
    return d;
}

/// Two-sample Kolmogorov-Smirnov statistic.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::fabs(static_cast<double>(i) / a.size() -
                                  static_cast<double>(j) / b.size()));
    }
    return d;
}

/// Asymptotic 5% critical values.
inline double ks_critical_one_sample(std::size_t n) { return 1.358 / std::sqrt(static_cast<double>(n)); }
inline double ks_critical_two_sample(std::size_t n, std::size_t m) {
    return 1.358 * std::sqrt((static_cast<double>(n) + m) / (static_cast<double>(n) * m));
}

struct ExperimentConfig {
    SamplerConfig sampler;
    int count = 1000;
    GridSpec grid{0.0, 10.0, 201};
};

/// One validation experiment: samples, their hard-edge rescaling, the
/// limiting and two-term predictions on a grid, and the KS distances of
/// the empirical law against both predictions.
struct ExperimentReport {
    ExperimentConfig config;
    std::vector<double> scaled_samples;  // N^2 * smallest eigenvalue, sorted
    EdgeCurve curve;                     // columns: leading, correction, total
    std::vector<double> empirical;       // empirical CDF on the same grid
    double ks_limit = 0.0;
    double ks_two_term = 0.0;
    long long cholesky_retries = 0;
};

inline ExperimentReport run_experiment(const ExperimentConfig& cfg) {
    ExperimentReport rep;
    rep.config = cfg;

    SampleBatch batch = draw_samples(cfg.sampler, cfg.count);
    rep.cholesky_retries = batch.cholesky_retries;
    const double n2 = static_cast<double>(cfg.sampler.params.N) * cfg.sampler.params.N;
    rep.scaled_samples.reserve(batch.smallest.size());
    for (double v : batch.smallest) rep.scaled_samples.push_back(n2 * v);
    EmpiricalCdf ecdf(rep.scaled_samples);
    rep.scaled_samples = ecdf.sorted();

    TwoTermLaw law(cfg.sampler.params);
    rep.ks_limit = ks_distance(ecdf, [&](double x) { return law.limit(x); });
    rep.ks_two_term = ks_distance(ecdf, [&](double x) { return law.eval(x).total(); });

    rep.curve = tabulate_curve(cfg.sampler.params, Edge::smallest, CdfMode::two_term, cfg.grid);
    rep.empirical.resize(rep.curve.points.size());
    for (std::size_t i = 0; i < rep.curve.points.size(); ++i)
        rep.empirical[i] = ecdf(rep.curve.points[i].abscissa);
    return rep;
}

}  // namespace jbe

#endif  // JBE_MONTECARLO_HPP
