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

#ifndef JBE_SAMPLING_HPP
#define JBE_SAMPLING_HPP

#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "jbe/linalg.hpp"
#include "jbe/parallel.hpp"
#include "jbe/rng.hpp"
#include "jbe/selberg.hpp"

// Random-matrix samplers whose eigenvalue law is the Jacobi
// beta-ensemble on [0,1].
//
// killip_nenciu: the tridiagonal model, valid for every beta > 0.  The
// canonical moments p_1, ..., p_{2N-1} of the spectral measure are
// independent Beta variables,
//
//   p_{2k-1} ~ Beta((N-k) beta/2 + alpha1 + 1, (N-k) beta/2 + alpha2 + 1)
//   p_{2k}   ~ Beta((N-k) beta/2, (N-k-1) beta/2 + alpha1 + alpha2 + 2),
//
// chained into zeta_j = (1 - p_{j-1}) p_j, and the Jacobi matrix has
// diagonal zeta_{2k-2} + zeta_{2k-1} and off-diagonal
// sqrt(zeta_{2k-1} zeta_{2k}).  The shape table is not derivable from
// the eigenvalue density alone, so it is gated by distributional
// acceptance tests (N = 1 Beta law, Kolmogorov-Smirnov against the exact
// finite-N distribution) rather than trusted.
//
// double_wishart: eigenvalues of A (A+B)^{-1} for independent Wisharts,
// real entries for beta = 1 (alpha_i = (n_i - N - 1)/2) and complex for
// beta = 2 (alpha_i = n_i - N).

namespace jbe {

enum class SamplerMethod { killip_nenciu, double_wishart };
enum class SampleWant { smallest_only, all_eigenvalues };

inline constexpr int dense_sampler_max_N = 256;
inline constexpr int tridiag_sampler_max_N = 100000;

struct SamplerConfig {
    EnsembleParams params;
    SamplerMethod method = SamplerMethod::killip_nenciu;
    std::uint64_t seed = 0;
    int batch_size = 256;
    SampleWant want = SampleWant::smallest_only;

    /// Wishart shapes implied by (beta, alpha, N); only meaningful for
    /// the double_wishart method.  beta = 1: n_i = 2 alpha_i + N + 1;
    /// beta = 2: n_i = alpha_i + N.
    int wishart_n1() const { return wishart_rows(params.alpha1); }
    int wishart_n2() const { return wishart_rows(params.alpha2); }
    int wishart_rows(double alpha) const {
        if (std::fabs(params.beta - 1.0) < 1e-12)
            return static_cast<int>(std::llround(2.0 * alpha)) + params.N + 1;
        return static_cast<int>(std::llround(alpha)) + params.N;
    }

    /// invalid_argument marks bad parameters on their own;
    /// domain_error marks a method/parameter mismatch.
    void validate() const {
        params.validate();
        if (batch_size < 1) throw std::invalid_argument("SamplerConfig: batch_size must be positive");
        if (method == SamplerMethod::double_wishart) {
            bool beta1 = std::fabs(params.beta - 1.0) < 1e-12;
            bool beta2 = std::fabs(params.beta - 2.0) < 1e-12;
            if (!beta1 && !beta2)
                throw std::domain_error("double-wishart requires beta in {1, 2}");
            if (beta1) {
                for (double a : {params.alpha1, params.alpha2})
                    if (std::fabs(2.0 * a - std::llround(2.0 * a)) > 1e-9)
                        throw std::domain_error(
                            "double-wishart at beta=1 requires 2*alpha integral "
                            "(n_i = 2*alpha_i + N + 1 must be an integer)");
            } else {
                for (double a : {params.alpha1, params.alpha2})
                    if (std::fabs(a - std::llround(a)) > 1e-9)
                        throw std::domain_error(
                            "double-wishart at beta=2 requires integer alpha "
                            "(n_i = alpha_i + N)");
            }
            if (wishart_n1() < params.N || wishart_n2() < params.N)
                throw std::domain_error("double-wishart requires n_1, n_2 >= N");
            if (params.N > dense_sampler_max_N)
                throw std::domain_error("double-wishart path limited to N <= 256");
        } else {
            if (params.N > tridiag_sampler_max_N)
                throw std::domain_error("killip-nenciu path limited to N <= 100000");
        }
    }
};

struct SampleBatch {
    SamplerConfig config;
    std::vector<double> smallest;               // one entry per draw
    std::vector<std::vector<double>> spectra;   // filled when want = all_eigenvalues
    long long cholesky_retries = 0;
};

namespace detail {

struct TridiagDraw {
    std::vector<double> diag, off;
};

inline TridiagDraw killip_nenciu_matrix(const EnsembleParams& p, CounterRng& rng) {
    const int N = p.N;
    const double h = 0.5 * p.beta;
    std::vector<double> canon(2 * N);  // canon[j] = p_j, 1-based
    for (int k = 1; k <= N; ++k)
        canon[2 * k - 1] = rng.beta_variate((N - k) * h + p.alpha1 + 1.0,
                                            (N - k) * h + p.alpha2 + 1.0);
    for (int k = 1; k <= N - 1; ++k)
        canon[2 * k] = rng.beta_variate((N - k) * h, (N - k - 1) * h + p.alpha1 + p.alpha2 + 2.0);

    std::vector<double> zeta(2 * N, 0.0);  // zeta[j], zeta[0] = 0
    zeta[1] = canon[1];
    for (int j = 2; j <= 2 * N - 1; ++j) zeta[j] = (1.0 - canon[j - 1]) * canon[j];

    TridiagDraw t;
    t.diag.resize(N);
    t.off.resize(N - 1);
    for (int k = 1; k <= N; ++k)
        t.diag[k - 1] = (k >= 2 ? zeta[2 * k - 2] : 0.0) + zeta[2 * k - 1];
    for (int k = 1; k <= N - 1; ++k) t.off[k - 1] = std::sqrt(zeta[2 * k - 1] * zeta[2 * k]);
    return t;
}

// A = M^T M for a real Gaussian n1 x N matrix drawn column-major from rng.
inline Mat wishart_real(int rows, int N, CounterRng& rng) {
    std::vector<double> m(static_cast<std::size_t>(rows) * N);
    for (auto& v : m) v = rng.gaussian();
    Mat a(N);
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            double s = 0.0;
            for (int r = 0; r < rows; ++r)
                s += m[static_cast<std::size_t>(r) * N + i] * m[static_cast<std::size_t>(r) * N + j];
            a.at(i, j) = a.at(j, i) = s;
        }
    return a;
}

inline CMat wishart_complex(int rows, int N, CounterRng& rng) {
    std::vector<std::complex<double>> m(static_cast<std::size_t>(rows) * N);
    for (auto& v : m) v = {rng.gaussian(), rng.gaussian()};
    CMat a(N);
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            std::complex<double> s = 0.0;
            for (int r = 0; r < rows; ++r)
                s += std::conj(m[static_cast<std::size_t>(r) * N + i]) *
                     m[static_cast<std::size_t>(r) * N + j];
            a.at(i, j) = s;
            a.at(j, i) = std::conj(s);
        }
    return a;
}

// L Y = X column-wise forward substitution, L lower triangular.
inline void forward_solve_inplace(const Mat& L, Mat& X) {
    int n = L.n;
    for (int col = 0; col < n; ++col)
        for (int i = 0; i < n; ++i) {
            double s = X.at(i, col);
            for (int k = 0; k < i; ++k) s -= L.at(i, k) * X.at(k, col);
            X.at(i, col) = s / L.at(i, i);
        }
}

inline void forward_solve_inplace(const CMat& L, CMat& X) {
    int n = L.n;
    for (int col = 0; col < n; ++col)
        for (int i = 0; i < n; ++i) {
            std::complex<double> s = X.at(i, col);
            for (int k = 0; k < i; ++k) s -= L.at(i, k) * X.at(k, col);
            X.at(i, col) = s / L.at(i, i);
        }
}

// eigen-values of A (A+B)^{-1} via C = L^{-1} A L^{-T}, S = A+B = L L^T
inline bool double_wishart_real_draw(const SamplerConfig& cfg, CounterRng& rng,
                                     std::vector<double>& out, bool all) {
    const int N = cfg.params.N;
    Mat a = wishart_real(cfg.wishart_n1(), N, rng);
    Mat b = wishart_real(cfg.wishart_n2(), N, rng);
    Mat s(N);
    for (int i = 0; i < N * N; ++i) s.a[i] = a.a[i] + b.a[i];
    if (!cholesky_lower(s)) return false;
    forward_solve_inplace(s, a);  // a := L^{-1} A
    // transpose, solve again: C = L^{-1} A L^{-T}
    Mat at(N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) at.at(i, j) = a.at(j, i);
    forward_solve_inplace(s, at);
    for (int i = 0; i < N; ++i)
        for (int j = i; j < N; ++j) {
            double v = 0.5 * (at.at(i, j) + at.at(j, i));
            at.at(i, j) = at.at(j, i) = v;
        }
    if (all) {
        out = sym_eig_dense(std::move(at)).values;
    } else {
        std::vector<double> d, e;
        detail::tred2(at, d, e, false);
        std::vector<double> off(e.begin() + 1, e.end());
        out.assign(1, smallest_eig_tridiag(d, off));
    }
    return true;
}

inline bool double_wishart_complex_draw(const SamplerConfig& cfg, CounterRng& rng,
                                        std::vector<double>& out, bool all) {
    const int N = cfg.params.N;
    CMat a = wishart_complex(cfg.wishart_n1(), N, rng);
    CMat b = wishart_complex(cfg.wishart_n2(), N, rng);
    CMat s(N);
    for (std::size_t i = 0; i < s.a.size(); ++i) s.a[i] = a.a[i] + b.a[i];
    if (!cholesky_lower(s)) return false;
    forward_solve_inplace(s, a);  // a := L^{-1} A
    CMat ah(N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) ah.at(i, j) = std::conj(a.at(j, i));  // = A L^{-H}
    forward_solve_inplace(s, ah);  // ah := L^{-1} A L^{-H}, Hermitian
    for (int i = 0; i < N; ++i) {
        ah.at(i, i) = ah.at(i, i).real();
        for (int j = i + 1; j < N; ++j) {
            std::complex<double> v = 0.5 * (ah.at(i, j) + std::conj(ah.at(j, i)));
            ah.at(i, j) = v;
            ah.at(j, i) = std::conj(v);
        }
    }
    std::vector<double> vals = herm_eig_values(ah);
    if (all)
        out = vals;
    else
        out.assign(1, vals.front());
    return true;
}

}  // namespace detail

/// Smallest eigenvalue (or full spectrum) of one Killip-Nenciu draw.
inline std::vector<double> killip_nenciu_eigs(const EnsembleParams& p, CounterRng& rng,
                                              bool all) {
    detail::TridiagDraw t = detail::killip_nenciu_matrix(p, rng);
    if (all) return eig_tridiag_all(t.diag, t.off);
    return {smallest_eig_tridiag(t.diag, t.off)};
}

/// Draw `count` independent samples.  Work is split into batches of
/// config.batch_size; draw i uses the RNG stream (seed, batch, index),
/// so results are byte-identical regardless of thread count.
inline SampleBatch draw_samples(const SamplerConfig& config, int count) {
    config.validate();
    if (count < 1) throw std::invalid_argument("draw_samples: count must be positive");
    SampleBatch batch;
    batch.config = config;
    const bool all = config.want == SampleWant::all_eigenvalues;
    batch.smallest.resize(count);
    if (all) batch.spectra.resize(count);

    const int bs = config.batch_size;
    const int nbatches = (count + bs - 1) / bs;
    std::atomic<long long> retries{0};

    parallel_for(nbatches, [&](std::size_t b) {
        const int begin = static_cast<int>(b) * bs;
        const int end = std::min(count, begin + bs);
        for (int i = begin; i < end; ++i) {
            CounterRng rng(config.seed, b, static_cast<std::uint64_t>(i - begin));
            std::vector<double> eigs;
            if (config.method == SamplerMethod::killip_nenciu) {
                eigs = killip_nenciu_eigs(config.params, rng, all);
            } else {
                bool beta1 = std::fabs(config.params.beta - 1.0) < 1e-12;
                for (int attempt = 0;; ++attempt) {
                    bool ok = beta1 ? detail::double_wishart_real_draw(config, rng, eigs, all)
                                    : detail::double_wishart_complex_draw(config, rng, eigs, all);
                    if (ok) break;
                    ++retries;
                    if (attempt > 64)
                        throw std::runtime_error("double-wishart: persistent Cholesky failure");
                }
            }
            batch.smallest[i] = eigs.front();
            if (all) batch.spectra[i] = std::move(eigs);
        }
    });
    batch.cholesky_retries = retries.load();
    return batch;
}

}  // namespace jbe

#endif  // JBE_SAMPLING_HPP
