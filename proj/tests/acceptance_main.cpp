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

// End-to-end acceptance suite.  Each numbered criterion prints exactly
// one PASS/FAIL line; the process exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "jbe/io.hpp"
#include "jbe/jbe.hpp"

using namespace jbe;

namespace {

int failures = 0;

class Criterion {
  public:
    Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)), start_(clock::now()) {}

    void finish(bool pass, const std::string& detail) {
        double secs =
            std::chrono::duration<double>(clock::now() - start_).count();
        std::printf("[%d] %-34s %s  (%s; %.1fs)\n", number_, title_.c_str(),
                    pass ? "PASS" : "FAIL", detail.c_str(), secs);
        std::fflush(stdout);
        if (!pass) ++failures;
    }

  private:
    using clock = std::chrono::steady_clock;
    int number_;
    std::string title_;
    clock::time_point start_;
};

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return buf;
}

void criterion1_figure1a() {
    Criterion c(1, "figure 1(a) replica");
    auto results = checks::figure1a(1000);
    bool pass = results[0].pass && results[1].pass;
    c.finish(pass, fmt("median KS two-term %.4f < %.4f, median KS limit %.4f",
                       results[0].observed, results[0].threshold, results[1].threshold));
}

void criterion2_figure2a() {
    Criterion c(2, "figure 2(a) replica");
    CheckResult r = checks::figure2a(2000);
    c.finish(r.pass, fmt("median KS two-term %.4f < %.4f", r.observed, r.threshold));
}

void criterion3_rate() {
    Criterion c(3, "two-term convergence rate");
    struct Case {
        double beta, a1, a2;
    };
    bool pass = true;
    std::string detail = "E(16)/E(32):";
    for (const Case& t : {Case{1, 1, 0}, Case{2, 2, 1}, Case{3, 1, 1.7}}) {
        double e16 = checks::two_term_gap({16, t.beta, t.a1, t.a2});
        double e32 = checks::two_term_gap({32, t.beta, t.a1, t.a2});
        double ratio = e16 / e32;
        pass = pass && ratio >= 3.0 && ratio <= 5.0;
        detail += fmt(" %.2f", ratio);
    }
    c.finish(pass, detail + " all in [3,5]");
}

void criterion4_triple_agreement() {
    Criterion c(4, "beta=2 exact-path agreement");
    double worst = 0.0;
    for (int N : {2, 5, 12, 20})
        for (int a1 : {0, 1, 2, 3})
            for (double a2 : {0.0, 1.3}) {
                EnsembleParams p{N, 2.0, static_cast<double>(a1), a2};
                SmallestExactLaw series(p);
                double xi_hi = std::min(0.9, 4.0 / N);
                for (int i = 1; i <= 50; ++i) {
                    double xi = xi_hi * i / 50.0;
                    double a = series.cdf(xi);
                    double b = cdf_exact_jue_determinant(p, xi);
                    double jr = 1.0 - jacobi_poly_representation(p, xi);
                    worst = std::max({worst, std::fabs(a - b), std::fabs(a - jr),
                                      std::fabs(b - jr)});
                }
            }
    c.finish(worst <= 1e-9,
             fmt("max pairwise gap %.2e <= 1e-9 over N<=20, alpha1<=3, 50-point grids", worst));
}

void criterion5_bessel_forms() {
    Criterion c(5, "beta=2 and alpha1=1 closed forms");
    double worst = 0.0;
    for (int a1 : {0, 1, 2, 3})
        for (double a2 : {0.0, 1.0, 2.5}) {
            EnsembleParams p{25, 2.0, static_cast<double>(a1), a2};
            TwoTermLaw law(p);
            for (int i = 1; i <= 40; ++i) {
                double x = 0.25 * i;
                TwoTermCdf a = law.eval(x);
                TwoTermCdf b = cdf_two_term_jue_bessel(a1, a2, p.N, x);
                worst = std::max({worst, std::fabs(a.leading - b.leading),
                                  std::fabs(a.correction - b.correction)});
            }
        }
    double worst1 = 0.0;
    for (double beta : {1.0, 2.0, 3.0}) {
        EnsembleParams p{25, beta, 1.0, 1.4};
        TwoTermLaw law(p);
        for (int i = 1; i <= 40; ++i) {
            double x = 0.25 * i;
            TwoTermCdf a = law.eval(x);
            TwoTermCdf b = cdf_alpha1_one_bessel(beta, p.alpha2, p.N, x);
            worst1 = std::max({worst1, std::fabs(a.leading - b.leading),
                               std::fabs(a.correction - b.correction)});
        }
    }
    c.finish(worst <= 1e-10 && worst1 <= 1e-10,
             fmt("Bessel-determinant gap %.2e, alpha1=1 gap %.2e, both <= 1e-10", worst, worst1));
}

void criterion6_identities() {
    Criterion c(6, "identity suite");
    auto results = checks::identity_suite();
    bool pass = all_pass(results);
    int bad = 0;
    for (const auto& r : results)
        if (!r.pass) {
            ++bad;
            std::printf("    identity FAILED: %s observed=%.3e threshold=%.3e\n",
                        r.name.c_str(), r.observed, r.threshold);
        }
    c.finish(pass, fmt("%zu checks, %d failed", results.size(), bad));
}

void criterion7_density() {
    Criterion c(7, "density normalisation");
    double worst_mass = 0.0, worst_deriv = 0.0;
    for (int N : {1, 2, 5, 10})
        for (double beta : {1.0, 2.0, 3.0})
            for (int a1 : {0, 1, 2})
                for (double a2 : {0.0, 1.7}) {
                    EnsembleParams p{N, beta, static_cast<double>(a1), a2};
                    SmallestExactLaw law(p);
                    double mass =
                        integrate([&](double t) { return law.density(t); }, 0.0, 1.0, 1e-11);
                    worst_mass = std::max(worst_mass, std::fabs(mass - 1.0));
                    double n2 = static_cast<double>(N) * N;
                    for (double xh : {0.8, 2.5}) {
                        double xi = xh / n2, h = 1e-6 * xi;
                        double numeric =
                            -(law.survival(xi + h) - law.survival(xi - h)) / (2.0 * h);
                        double analytic = law.density(xi);
                        worst_deriv =
                            std::max(worst_deriv, std::fabs(numeric - analytic) /
                                                      std::max(1e-12, std::fabs(analytic)));
                    }
                }
    c.finish(worst_mass <= 1e-8 && worst_deriv <= 1e-6,
             fmt("mass defect %.2e <= 1e-8, derivative mismatch %.2e <= 1e-6", worst_mass,
                 worst_deriv));
}

void criterion8_sampler_gates() {
    Criterion c(8, "sampler gates");
    // single-site Beta law
    EnsembleParams p1{1, 2.3, 1.4, 2.2};
    const int M = 100000;
    double mean = 0.0;
    for (int i = 0; i < M; ++i) {
        CounterRng rng(3000, 0, i);
        mean += killip_nenciu_eigs(p1, rng, false)[0];
    }
    mean /= M;
    double a = p1.alpha1 + 1.0, b = p1.alpha2 + 1.0;
    double want = a / (a + b);
    double se = std::sqrt(a * b / ((a + b) * (a + b) * (a + b + 1.0)) / M);
    bool beta_ok = std::fabs(mean - want) < 3.0 * se;

    // the two samplers agree at beta in {1, 2}
    double crit2 = ks_critical_two_sample(1000, 1000);
    EnsembleParams pb2{10, 2.0, 1.0, 2.0};
    double d2 = ks_two_sample(
        draw_samples({pb2, SamplerMethod::killip_nenciu, 3100, 256, SampleWant::smallest_only},
                     1000)
            .smallest,
        draw_samples({pb2, SamplerMethod::double_wishart, 3200, 256, SampleWant::smallest_only},
                     1000)
            .smallest);
    EnsembleParams pb1{10, 1.0, 1.0, 2.0};
    double d1 = ks_two_sample(
        draw_samples({pb1, SamplerMethod::killip_nenciu, 3300, 256, SampleWant::smallest_only},
                     1000)
            .smallest,
        draw_samples({pb1, SamplerMethod::double_wishart, 3400, 256, SampleWant::smallest_only},
                     1000)
            .smallest);
    bool agree_ok = d1 < crit2 && d2 < crit2;

    // byte-exact determinism
    SamplerConfig det{{12, 1.3, 0.7, 1.9}, SamplerMethod::killip_nenciu, 77, 64,
                      SampleWant::smallest_only};
    SampleBatch da = draw_samples(det, 256);
    SampleBatch db = draw_samples(det, 256);
    bool det_ok = da.smallest == db.smallest;

    c.finish(beta_ok && agree_ok && det_ok,
             fmt("Beta-law |mean err| %.1f se, two-sample KS %.4f/%.4f < %.4f, determinism %s",
                 std::fabs(mean - want) / se, d1, d2, crit2, det_ok ? "ok" : "BROKEN"));
}

}  // namespace

int main() {
    std::printf("acceptance suite, library version %s\n", version_string);
    criterion1_figure1a();
    criterion2_figure2a();
    criterion3_rate();
    criterion4_triple_agreement();
    criterion5_bessel_forms();
    criterion6_identities();
    criterion7_density();
    criterion8_sampler_gates();
    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
