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

#ifndef JBE_SELBERG_HPP
#define JBE_SELBERG_HPP

#include <cmath>
#include <stdexcept>

#include "jbe/special.hpp"

namespace jbe {

/// Jacobi beta-ensemble parameters for the eigenvalue density
///   prop. to  prod_i x_i^{alpha1} (1-x_i)^{alpha2} |Delta(x)|^beta on [0,1]^N.
struct EnsembleParams {
    int N = 1;
    double beta = 2.0;
    double alpha1 = 0.0;
    double alpha2 = 0.0;

    void validate() const {
        if (N < 1) throw std::invalid_argument("EnsembleParams: N must be a positive integer");
        if (!(beta > 0.0)) throw std::invalid_argument("EnsembleParams: beta must be positive");
        if (!(alpha1 > -1.0)) throw std::invalid_argument("EnsembleParams: alpha1 must exceed -1");
        if (!(alpha2 > -1.0)) throw std::invalid_argument("EnsembleParams: alpha2 must exceed -1");
    }

    bool alpha1_integer() const {
        return std::fabs(alpha1 - std::round(alpha1)) < 1e-9 && alpha1 > -0.5;
    }
    bool alpha2_integer() const {
        return std::fabs(alpha2 - std::round(alpha2)) < 1e-9 && alpha2 > -0.5;
    }
    int alpha1_int() const { return static_cast<int>(std::round(alpha1)); }
    int alpha2_int() const { return static_cast<int>(std::round(alpha2)); }

    EnsembleParams swapped() const { return {N, beta, alpha2, alpha1}; }
};

/// log S_N(a, b, c) with
///   S_N(a,b,c) = prod_{i=0}^{N-1}
///     Gamma(1+(i+1)c) Gamma(a+ic) Gamma(b+ic) / (Gamma(1+c) Gamma(a+b+(N+i-1)c)).
inline double selberg_s_log(int N, double a, double b, double c) {
    if (N < 1) throw std::invalid_argument("selberg_s: N must be positive");
    double s = 0.0;
    for (int i = 0; i < N; ++i) {
        s += log_gamma(1.0 + (i + 1) * c) + log_gamma(a + i * c) + log_gamma(b + i * c);
        s -= log_gamma(1.0 + c) + log_gamma(a + b + (N + i - 1) * c);
    }
    return s;
}

inline double selberg_s(int N, double a, double b, double c) {
    return std::exp(selberg_s_log(N, a, b, c));
}

/// log Z_N by the telescoped closed form
///   Z_N = N Gamma(1+beta/2) Gamma(alpha1+1+N beta/2) Gamma(alpha1+alpha2+2+(N-1)beta/2)
///       / (Gamma(1+N beta/2) Gamma(alpha1+1) Gamma(alpha1+1+beta/2)
///          Gamma(alpha2+1+(N-1)beta/2)).
inline double z_n_log(const EnsembleParams& p) {
    p.validate();
    double h = 0.5 * p.beta;
    return std::log(static_cast<double>(p.N)) + log_gamma(1.0 + h) +
           log_gamma(p.alpha1 + 1.0 + p.N * h) +
           log_gamma(p.alpha1 + p.alpha2 + 2.0 + (p.N - 1) * h) -
           log_gamma(1.0 + p.N * h) - log_gamma(p.alpha1 + 1.0) -
           log_gamma(p.alpha1 + 1.0 + h) - log_gamma(p.alpha2 + 1.0 + (p.N - 1) * h);
}

inline double z_n(const EnsembleParams& p) { return std::exp(z_n_log(p)); }

/// The same constant from its defining ratio of Selberg integrals,
///   Z_N = N S_{N-1}(alpha1+1+beta, alpha2+1, beta/2) / S_N(alpha1+1, alpha2+1, beta/2);
/// kept as an independent route for consistency checks (N >= 2).
inline double z_n_selberg_ratio_log(const EnsembleParams& p) {
    p.validate();
    if (p.N < 2) throw std::invalid_argument("z_n_selberg_ratio: needs N >= 2");
    return std::log(static_cast<double>(p.N)) +
           selberg_s_log(p.N - 1, p.alpha1 + 1.0 + p.beta, p.alpha2 + 1.0, 0.5 * p.beta) -
           selberg_s_log(p.N, p.alpha1 + 1.0, p.alpha2 + 1.0, 0.5 * p.beta);
}

/// Large-N asymptote of Z_N:
///   Gamma(1+beta/2) (beta/2)^(2 alpha1 + 1)
///     / (Gamma(1+alpha1) Gamma(1+alpha1+beta/2)) * N^(2(alpha1+1)).
inline double z_n_asymptotic(double alpha1, double /*alpha2*/, double beta, int N) {
    double h = 0.5 * beta;
    return std::exp(log_gamma(1.0 + h) + (2.0 * alpha1 + 1.0) * std::log(h) -
                    log_gamma(1.0 + alpha1) - log_gamma(1.0 + alpha1 + h) +
                    2.0 * (alpha1 + 1.0) * std::log(static_cast<double>(N)));
}

}  // namespace jbe

#endif  // JBE_SELBERG_HPP
