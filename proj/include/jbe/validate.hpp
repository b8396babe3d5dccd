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

#ifndef JBE_VALIDATE_HPP
#define JBE_VALIDATE_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "jbe/montecarlo.hpp"
#include "jbe/quadrature.hpp"
#include "jbe/rng.hpp"

// Numerical cross-checks of the analytic layer: every identity the
// library relies on, checked against an independent route (quadrature,
// finite differences, a second closed form, or sampling).  The
// `identities`, `figures` and `convergence` suites back the validate CLI
// subcommand and the acceptance tests.

namespace jbe {

struct CheckResult {
    std::string name;
    bool pass = false;
    double observed = 0.0;   // measured deviation or statistic
    double threshold = 0.0;  // bound it must satisfy
    std::string detail;
};

namespace checks {

inline CheckResult bounded(const std::string& name, double observed, double threshold,
                           const std::string& detail = "") {
    return {name, observed <= threshold, observed, threshold, detail};
}

// ------------------------------------------------------------------
// identities

inline CheckResult jack_normalization() {
    double worst = 0.0;
    CounterRng rng(2024, 0, 0);
    for (int n = 1; n <= 4; ++n)
        for (double sigma : {0.5, 1.0, 1.5, 2.0})
            for (int k = 1; k <= 6; ++k)
                for (int pt = 0; pt < 20; ++pt) {
                    std::vector<double> x(n);
                    double p1 = 0.0;
                    for (double& v : x) {
                        v = 2.0 * rng.uniform() - 0.5;
                        p1 += v;
                    }
                    double sum = 0.0, scale = 1.0;
                    for (const auto& lam : enumerate_partitions(k, n)) {
                        double c = jack_at(lam, sigma, x);
                        sum += c;
                        scale = std::max(scale, std::fabs(c));
                    }
                    worst = std::max(worst, std::fabs(sum - std::pow(p1, k)) / scale);
                }
    return bounded("jack_normalization", worst, 1e-12,
                   "weight-k sums reproduce (x1+...+xn)^k, n<=4, k<=6");
}

inline CheckResult pfaff_identity() {
    double worst = 0.0;
    struct Case {
        double a, b, c, sigma;
        int n;
        double x;
    };
    for (const Case& t : {Case{-3, -5.2, 2.1, 1.5, 2, 0.3}, Case{-3, -5.2, 2.1, 1.5, 2, -0.4},
                          Case{-4, 1.3, 3.7, 0.5, 3, 0.25}, Case{-5, 2.2, 1.9, 1.0, 1, 0.5},
                          Case{-6, -1.5, 2.6, 2.0, 2, 0.55}}) {
        HypergeomSpec lhs{{t.a, t.b}, {t.c}, t.sigma, t.n, {}};
        double l = mhg_equal_args(lhs, t.x).value;
        double r = pfaff_transform(t.a, t.b, t.c, t.sigma, t.n, t.x);
        worst = std::max(worst, std::fabs(l - r) / std::max(1.0, std::fabs(l)));
    }
    return bounded("pfaff_identity", worst, 1e-12,
                   "argument map x -> -x/(1-x) with prefactor (1-x)^(-a n)");
}

inline CheckResult survival_derivative_identity() {
    double worst = 0.0;
    struct Case {
        double beta, a1, a2;
    };
    for (int N : {5, 10, 15})
        for (const Case& c : {Case{1.5, 1, 0.7}, Case{2, 2, 1}, Case{3, 2, 1.7}}) {
            EnsembleParams p{N, c.beta, c.a1, c.a2};
            SmallestExactLaw law(p);
            double n2 = static_cast<double>(N) * N;
            for (double xhard : {0.5, 1.5, 3.0}) {
                double xi = xhard / n2, h = 1e-6 * xi;
                double numeric = -(law.survival(xi + h) - law.survival(xi - h)) / (2.0 * h);
                double analytic = law.density(xi);
                worst = std::max(worst,
                                 std::fabs(numeric - analytic) / std::max(1e-12, std::fabs(analytic)));
            }
        }
    return bounded("survival_derivative_identity", worst, 1e-6,
                   "-d/dxi survival equals the closed-form density");
}

inline CheckResult jacobi_derivative() {
    double worst = 0.0;
    struct AB {
        double a, b;
    };
    for (const AB& ab : {AB{0.3, 0.7}, AB{1.5, 2.2}, AB{0.0, 0.0}})
        for (int m = 1; m <= 12; ++m)
            for (double x : {0.2, 0.7}) {
                double h = 1e-6;
                double numeric =
                    (monic_jacobi({m, ab.a, ab.b}, x + h) - monic_jacobi({m, ab.a, ab.b}, x - h)) /
                    (2.0 * h);
                double analytic = m * monic_jacobi({m - 1, ab.a + 1.0, ab.b + 1.0}, x);
                worst = std::max(worst,
                                 std::fabs(numeric - analytic) / std::max(1.0, std::fabs(analytic)));
            }
    return bounded("jacobi_derivative", worst, 1e-6,
                   "d/dx p_m^{a,b} = m p_{m-1}^{a+1,b+1} by central differences");
}

inline CheckResult limit_law_derivative_identity() {
    double worst = 0.0;
    for (double beta : {1.0, 2.0, 3.0})
        for (int a1 : {1, 2, 3}) {
            double h2 = 0.5 * beta;
            MhgEqualSeries f0(HypergeomSpec{{}, {2.0 * a1 / beta}, h2, a1, {}});
            MhgEqualSeries f2(HypergeomSpec{{}, {2.0 * a1 / beta + 2.0}, h2, a1, {}});
            double pref = std::exp(log_gamma(1.0 + h2) - log_gamma(1.0 + a1) -
                                   log_gamma(1.0 + a1 + h2)) *
                          std::pow(h2, 2.0 * a1 + 1.0);
            for (double x : {0.5, 2.0, 5.0, 10.0}) {
                double h = 1e-5;
                auto f = [&](double t) { return std::exp(-h2 * t) * f0.eval(t).value; };
                double numeric = (f(x + h) - f(x - h)) / (2.0 * h);
                double analytic = -pref * std::pow(x, a1) * std::exp(-h2 * x) * f2.eval(x).value;
                // scale by the function where the slope is tiny: central
                // differences bottom out at eps*f/(2h) in absolute terms
                double scale = std::max(std::fabs(analytic), std::fabs(f(x)));
                worst = std::max(worst, std::fabs(numeric - analytic) / scale);
            }
        }
    return bounded("limit_law_derivative_identity", worst, 1e-8,
                   "derivative of e^(-beta x/2) 0F1(;2a1/beta;x) in shifted-parameter form");
}

inline CheckResult jacobi_contiguous() {
    double worst = 0.0;
    CounterRng rng(5150, 0, 0);
    for (int rep = 0; rep < 6; ++rep) {
        double a = 0.1 + 2.9 * rng.uniform();
        double b = 0.1 + 2.9 * rng.uniform();
        for (int m = 1; m <= 12; ++m)
            for (double x : {0.25, 0.8}) {
                double lhs = monic_jacobi({m, a, b}, x) +
                             m * (m + b) / ((2.0 * m + a + b - 1.0) * (2.0 * m + a + b)) *
                                 monic_jacobi({m - 1, a, b}, x);
                double rhs = monic_jacobi({m, a - 1.0, b}, x);
                worst = std::max(worst, std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs)));
            }
    }
    return bounded("jacobi_contiguous", worst, 1e-10,
                   "parameter-lowering contiguous relation for monic Jacobi");
}

inline CheckResult bessel_bridge() {
    double worst = 0.0;
    for (double alpha : {-0.9, -0.3, 0.5, 1.0, 2.5, 6.0})
        for (double x : {0.5, 5.0, 25.0}) {
            double lhs = classical_hyp({}, {alpha + 1.0}, x);
            double rhs = std::exp(log_gamma(alpha + 1.0) - 0.5 * alpha * std::log(x)) *
                         bessel_i(alpha, 2.0 * std::sqrt(x));
            worst = std::max(worst, std::fabs(lhs - rhs) / std::fabs(rhs));
        }
    return bounded("bessel_bridge", worst, 1e-12, "0F1(;a+1;x) = Gamma(a+1) x^(-a/2) I_a(2 sqrt x)");
}

inline CheckResult bessel_recurrence() {
    double worst = 0.0;
    std::vector<double> orders = {0.5, 1.0};
    for (double beta : {1.0, 2.0, 3.0}) {
        orders.push_back(2.0 / beta + 1.0);
        orders.push_back(2.0 / beta - 1.0 == 0.0 ? 0.5 : 2.0 / beta - 1.0);
    }
    for (double nu : orders) {
        if (nu == 0.0) continue;  // relation divides by nu
        for (double z : {0.5, 2.0, 10.0, 20.0}) {
            double lhs = bessel_i(nu, z);
            double rhs = z / (2.0 * nu) * (bessel_i(nu - 1.0, z) - bessel_i(nu + 1.0, z));
            worst = std::max(worst, std::fabs(lhs - rhs) / std::fabs(lhs));
        }
    }
    return bounded("bessel_recurrence", worst, 1e-10,
                   "three-term recurrence in the order at fixed argument");
}

inline CheckResult bessel_combination() {
    double worst = 0.0;
    for (double beta : {1.0, 2.0, 3.0})
        for (double x : {0.3, 2.0, 9.0}) {
            double tb = 2.0 / beta, r = std::sqrt(x);
            double lhs = r * bessel_i(tb - 1.0, 2.0 * r);
            double rhs = tb * bessel_i(tb, 2.0 * r) + r * bessel_i(tb + 1.0, 2.0 * r);
            worst = std::max(worst, std::fabs(lhs - rhs) / std::fabs(lhs));
        }
    return bounded("bessel_combination", worst, 1e-10,
                   "sqrt(x) I_{2/b-1} = (2/b) I_{2/b} + sqrt(x) I_{2/b+1} at 2 sqrt(x)");
}

inline CheckResult kaneko_n1_quadrature() {
    double worst = 0.0;
    for (double a : {0.7, 1.5})
        for (double b : {1.2, 2.0})
            for (double sigma : {0.5, 1.0, 2.0})
                for (double t : {0.2, 0.8}) {
                    double quad = integrate(
                        [&](double x) {
                            return std::pow(x, a - 1.0) * std::pow(1.0 - x, b - 1.0) * (x - t);
                        },
                        0.0, 1.0, 1e-12);
                    HypergeomSpec spec{{-1.0, sigma * (a + b)}, {sigma * a}, 1.0 / sigma, 1, {}};
                    double closed = std::exp(log_beta(a + 1.0, b)) * mhg_equal_args(spec, t).value;
                    worst = std::max(worst, std::fabs(quad - closed) / std::max(1e-6, std::fabs(closed)));
                }
    return bounded("kaneko_n1_quadrature", worst, 1e-8,
                   "Selberg-type integral with one linear factor vs its terminating series");
}

inline CheckResult selberg_n2_quadrature() {
    // |y-x| has a ridge along the diagonal; integrate the ordered sector
    // twice so every quadrature cell sees a smooth integrand
    double q1 = 2.0 * integrate(
                          [&](double x) {
                              return integrate([&](double y) { return y - x; }, x, 1.0, 1e-12);
                          },
                          0.0, 1.0, 1e-11);
    double s1 = selberg_s(2, 1.0, 1.0, 0.5);
    double q2 = integrate_2d(
        [](double x, double y) { return x * y * (y - x) * (y - x); }, 0, 1, 0, 1, 1e-10);
    double s2 = selberg_s(2, 2.0, 1.0, 1.0);
    double worst = std::max(std::fabs(q1 - s1) / s1, std::fabs(q2 - s2) / s2);
    return bounded("selberg_n2_quadrature", worst, 1e-8,
                   "closed form vs 2-D adaptive quadrature at N = 2");
}

inline CheckResult zn_closed_form() {
    double worst = 0.0;
    struct AB {
        double a1, a2;
    };
    for (int N = 2; N <= 20; N += 3)
        for (double beta : {0.5, 1.0, 2.0, 3.0})
            for (const AB& ab : {AB{0.3, 1.2}, AB{2.0, 0.0}}) {
                EnsembleParams p{N, beta, ab.a1, ab.a2};
                double diff = std::fabs(std::expm1(z_n_log(p) - z_n_selberg_ratio_log(p)));
                worst = std::max(worst, diff);
            }
    return bounded("zn_closed_form", worst, 1e-10,
                   "telescoped constant vs the defining ratio of Selberg integrals");
}

inline CheckResult zn_asymptote() {
    // Direct evaluation puts the worst deviation over this grid at 0.610
    // (N=50) and 0.278 (N=100), attained at beta=1, alpha1=2, alpha2=1.7
    // where the 1/N coefficient is close to 30.  The deviations must
    // halve when N doubles (the O(1/N) approach) and stay under those
    // measured envelopes.
    double worst50 = 0.0, worst100 = 0.0;
    bool rate_ok = true;
    for (double beta : {1.0, 2.0, 3.0})
        for (int a1 : {0, 1, 2})
            for (double a2 : {0.0, 1.7}) {
                auto dev = [&](int N) {
                    EnsembleParams p{N, beta, static_cast<double>(a1), a2};
                    return std::exp(z_n_log(p)) / z_n_asymptotic(a1, a2, beta, N) - 1.0;
                };
                double d50 = dev(50), d100 = dev(100), d200 = dev(200);
                worst50 = std::max(worst50, std::fabs(d50));
                worst100 = std::max(worst100, std::fabs(d100));
                if (std::fabs(d50) > 1e-3) {
                    double h1 = std::fabs(d100 / d50), h2 = std::fabs(d200 / d100);
                    if (h1 < 0.42 || h1 > 0.58 || h2 < 0.42 || h2 > 0.58) rate_ok = false;
                }
            }
    CheckResult r = bounded("zn_asymptote", worst50, 0.62,
                            "deviation halves as N doubles; measured envelopes 0.62 (N=50) "
                            "and 0.28 (N=100)");
    r.pass = r.pass && worst100 <= 0.28 && rate_ok;
    r.observed = worst50;
    if (!rate_ok) r.detail += "; O(1/N) halving violated";
    return r;
}

inline std::vector<CheckResult> identity_suite() {
    return {jack_normalization(),
            pfaff_identity(),
            survival_derivative_identity(),
            jacobi_derivative(),
            limit_law_derivative_identity(),
            jacobi_contiguous(),
            bessel_bridge(),
            bessel_recurrence(),
            bessel_combination(),
            kaneko_n1_quadrature(),
            selberg_n2_quadrature(),
            zn_closed_form(),
            zn_asymptote()};
}

// ------------------------------------------------------------------
// figure replicas

inline double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct FigureStats {
    double median_ks_two_term = 0.0;
    double median_ks_limit = 0.0;
};

inline FigureStats figure_replica(const EnsembleParams& params, SamplerMethod method,
                                  std::uint64_t seed, int seeds, int count) {
    TwoTermLaw law(params);
    const double n2 = static_cast<double>(params.N) * params.N;
    std::vector<double> ks_tt(seeds), ks_lim(seeds);
    for (int s = 0; s < seeds; ++s) {
        SamplerConfig cfg{params, method, seed + static_cast<std::uint64_t>(s), 256,
                          SampleWant::smallest_only};
        SampleBatch batch = draw_samples(cfg, count);
        for (double& v : batch.smallest) v *= n2;
        EmpiricalCdf ecdf(std::move(batch.smallest));
        ks_tt[s] = ks_distance(ecdf, [&](double x) { return law.eval(x).total(); });
        ks_lim[s] = ks_distance(ecdf, [&](double x) { return law.limit(x); });
    }
    return {median(ks_tt), median(ks_lim)};
}

/// Jacobi orthogonal ensemble, N = 30: double-Wishart samples against
/// the alpha1 = 0 two-term law; the correction must visibly improve on
/// the limit law.
inline std::vector<CheckResult> figure1a(std::uint64_t seed) {
    EnsembleParams p{30, 1.0, 0.0, 3.0};
    FigureStats st = figure_replica(p, SamplerMethod::double_wishart, seed, 20, 1000);
    double crit = ks_critical_one_sample(1000);
    CheckResult gate = bounded("fig1a_ks_two_term", st.median_ks_two_term, crit,
                               "median KS over 20 seeds, 1000 double-Wishart samples, N=30");
    CheckResult improve{"fig1a_correction_improves", st.median_ks_two_term < st.median_ks_limit,
                        st.median_ks_two_term, st.median_ks_limit,
                        "median KS(two-term) below median KS(limit)"};
    return {gate, improve};
}

/// N = 1000: corrections are negligible and the limit law alone fits.
inline CheckResult figure1b(std::uint64_t seed) {
    EnsembleParams p{1000, 1.0, 0.0, 3.0};
    FigureStats st = figure_replica(p, SamplerMethod::killip_nenciu, seed, 5, 1000);
    return bounded("fig1b_ks_limit", st.median_ks_limit, ks_critical_one_sample(1000),
                   "median KS over 5 seeds, 1000 tridiagonal samples, N=1000");
}

/// beta = 3 ensemble at N = 20 against the general-beta two-term law.
inline CheckResult figure2a(std::uint64_t seed) {
    EnsembleParams p{20, 3.0, 2.0, 1.7};
    FigureStats st = figure_replica(p, SamplerMethod::killip_nenciu, seed, 20, 1000);
    return bounded("fig2a_ks_two_term", st.median_ks_two_term, ks_critical_one_sample(1000),
                   "median KS over 20 seeds, 1000 Killip-Nenciu samples, N=20, beta=3");
}

inline std::vector<CheckResult> figures_suite(std::uint64_t seed) {
    std::vector<CheckResult> out = figure1a(seed);
    out.push_back(figure1b(seed));
    out.push_back(figure2a(seed));
    return out;
}

// ------------------------------------------------------------------
// convergence rates

/// sup over the hard-edge grid of |exact - two-term|.
inline double two_term_gap(const EnsembleParams& p) {
    SmallestExactLaw exact(p);
    TwoTermLaw two_term(p);
    double sup = 0.0;
    for (int i = 1; i <= 100; ++i) {
        double x = 0.1 * i;
        sup = std::max(sup, std::fabs(exact.cdf_hard_edge(x) - two_term.eval(x).raw_total()));
    }
    return sup;
}

inline std::vector<CheckResult> convergence_suite() {
    std::vector<CheckResult> out;
    struct Case {
        double beta, a1, a2;
    };
    for (const Case& c : {Case{1, 1, 0}, Case{2, 2, 1}, Case{3, 1, 1.7}}) {
        double e16 = two_term_gap({16, c.beta, c.a1, c.a2});
        double e32 = two_term_gap({32, c.beta, c.a1, c.a2});
        double ratio = e16 / e32;
        char name[96];
        std::snprintf(name, sizeof(name), "doubling_beta%g_a1_%g_a2_%g", c.beta, c.a1, c.a2);
        CheckResult r{name, ratio >= 3.0 && ratio <= 5.0, ratio, 5.0,
                      "sup-gap ratio E(16)/E(32), expected in [3,5]"};
        out.push_back(r);
    }
    {
        // recentred law agrees with the two-term law to second order
        EnsembleParams base{16, 2.0, 1.0, 0.5};
        auto gap = [&](int N) {
            EnsembleParams p{N, base.beta, base.alpha1, base.alpha2};
            TwoTermLaw tt(p);
            double sup = 0.0;
            for (int i = 1; i <= 100; ++i) {
                double x = 0.1 * i;
                sup = std::max(sup, std::fabs(recentred_form(p, x) - tt.eval(x).raw_total()));
            }
            return sup;
        };
        double ratio = gap(16) / gap(32);
        out.push_back({"recentred_doubling", ratio >= 3.0 && ratio <= 5.0, ratio, 5.0,
                       "recentred vs two-term sup-gap ratio, expected in [3,5]"});
    }
    {
        // shifted-parameter expansion of the terminating 2F1 family
        double lo = 1e9, hi = 0.0;
        double a = 0.3, b = -0.7, c = 2.4;
        for (double sigma : {0.5, 1.0, 1.5})
            for (int n = 1; n <= 3; ++n) {
                MhgEqualSeries f0(HypergeomSpec{{}, {c}, sigma, n, {}});
                for (double x : {0.5, 2.0, 5.0}) {
                    double v0 = f0.eval(x).value;
                    double dv0 = f0.eval_derivative(x).value;
                    auto resid = [&](int N) {
                        HypergeomSpec f2{{a - N, b - N}, {c}, sigma, n, {}};
                        double lhs =
                            mhg_equal_args(f2, x / (static_cast<double>(N) * N)).value;
                        return lhs - (v0 + ((c - a - b) * x * dv0 - n * x * v0) / N);
                    };
                    for (int N : {20, 40}) {
                        double ratio = resid(N) / resid(2 * N);
                        lo = std::min(lo, ratio);
                        hi = std::max(hi, ratio);
                    }
                }
            }
        out.push_back({"two_term_expansion_rate", lo >= 3.0 && hi <= 5.0, hi, 5.0,
                       "residual ratios R(N)/R(2N) all in [3,5]; extreme value reported"});
    }
    return out;
}

}  // namespace checks

inline bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace jbe

#endif  // JBE_VALIDATE_HPP
