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

#ifndef JBE_SPECIAL_HPP
#define JBE_SPECIAL_HPP

#include <cmath>
#include <stdexcept>

#include "jbe/partitions.hpp"
#include "jbe/signed_log.hpp"

namespace jbe {

/// log Gamma(x) for x > 0.
inline double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
#if defined(__GLIBC__) || defined(__APPLE__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

/// log |Gamma(x)| with sign, valid away from the poles at 0, -1, -2, ...
inline SignedLog gamma_log_signed(double x) {
    int sign = 1;
#if defined(__GLIBC__) || defined(__APPLE__)
    double lg = ::lgamma_r(x, &sign);
#else
    double lg = std::lgamma(x);
    if (x < 0.0 && std::fmod(std::floor(x), 2.0) == 0.0) sign = -1;
#endif
    return SignedLog::from_log(lg, sign);
}

inline double log_beta(double a, double b) {
    return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

inline double beta_function(double a, double b) { return std::exp(log_beta(a, b)); }

/// Gamma(a+z)/Gamma(b+z) evaluated through log_gamma.
inline double gamma_ratio(double a, double b, double z) {
    return std::exp(log_gamma(a + z) - log_gamma(b + z));
}

/// Leading asymptote z^(a-b) of gamma_ratio as z -> infinity.
inline double gamma_ratio_asymptotic(double a, double b, double z) {
    return std::pow(z, a - b);
}

namespace detail {

// Ascending series sum_k (z/2)^(nu+2k) / (k! Gamma(nu+k+1)).  All terms
// share one sign, so it is accurate for any z; cost grows like z/2.
inline double bessel_i_series(double nu, double z) {
    if (z == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        throw std::domain_error("bessel_i: negative non-integer order at z = 0");
    }
    SignedLog pref = SignedLog::from_log(nu * std::log(0.5 * z)) / gamma_log_signed(nu + 1.0);
    double q = 0.25 * z * z;
    double t = 1.0, sum = 1.0;
    for (int k = 0; k < 400; ++k) {
        t *= q / ((k + 1.0) * (nu + k + 1.0));
        sum += t;
        if (std::fabs(t) < 1e-17 * std::fabs(sum) && k > 2) break;
    }
    return (pref * SignedLog::from_value(sum)).value();
}

// Large-argument expansion e^z/sqrt(2 pi z) * sum_k (-1)^k a_k(nu)/z^k.
// Asymptotic: stop at the smallest term; report failure if it cannot
// reach the requested accuracy.
inline bool bessel_i_asymptotic(double nu, double z, double& out) {
    double mu = 4.0 * nu * nu;
    double term = 1.0, sum = 1.0;
    double prev = std::fabs(term);
    for (int k = 1; k <= 30; ++k) {
        double f = 2.0 * k - 1.0;
        term *= -(mu - f * f) / (8.0 * z * k);
        if (std::fabs(term) > prev) return false;  // divergence onset
        sum += term;
        prev = std::fabs(term);
        if (prev < 1e-15 * std::fabs(sum)) {
            out = std::exp(z) / std::sqrt(2.0 * M_PI * z) * sum;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// Modified Bessel function of the first kind, real order, z >= 0.
/// Negative integer orders reduce to I_|nu| (the value that makes the
/// multivariate Bessel-determinant identities match their series form).
inline double bessel_i(double nu, double z) {
    if (z < 0.0) throw std::domain_error("bessel_i: z must be nonnegative");
    if (nu < 0.0 && nu == std::floor(nu)) nu = -nu;
    if (z > 700.0) throw std::overflow_error("bessel_i: argument too large for double range");
    if (z > 40.0) {
        double v;
        if (detail::bessel_i_asymptotic(nu, z, v)) return v;
    }
    return detail::bessel_i_series(nu, z);
}

/// Degree, exponent at 0 and exponent at 1 of the weight x^a (1-x)^b on
/// [0,1] for the monic Jacobi polynomial p_m^{a,b}.
struct MonicJacobiParams {
    int m = 0;
    double a = 0.0;
    double b = 0.0;
};

namespace detail {

// Monic three-term recurrence coefficients on [0,1]:
//   p_{k+1}(x) = (x - A_k) p_k(x) - B_k p_{k-1}(x).
inline bool jacobi01_recurrence(double a, double b, int k, double& A, double& B) {
    double s = a + b;
    double d = 2.0 * k + s;
    if (k == 0) {
        if (std::fabs(s + 2.0) < 1e-12) return false;
        A = (a + 1.0) / (s + 2.0);
        B = 0.0;
        return true;
    }
    if (std::fabs(d) < 1e-9 || std::fabs(d + 2.0) < 1e-9 || std::fabs(d + 1.0) < 1e-9 ||
        std::fabs(d - 1.0) < 1e-9)
        return false;
    A = 0.5 * (1.0 + (a - b) * s / (d * (d + 2.0)));
    B = k * (k + a) * (k + b) * (k + s) / (d * d * (d + 1.0) * (d - 1.0));
    return true;
}

}  // namespace detail

/// p_m^{a,b}(x) through its terminating hypergeometric form
///   (-1)^m (a+1)_m / (m+a+b+1)_m * 2F1(-m, m+a+b+1; a+1; x).
/// Stable only for moderate m; the recurrence path below is the default.
inline double monic_jacobi_hypergeometric(const MonicJacobiParams& p, double x) {
    double norm = pochhammer(p.m + p.a + p.b + 1.0, p.m);
    if (norm == 0.0)
        throw std::domain_error("monic_jacobi: (m+a+b+1)_m vanishes");
    double pref = ((p.m % 2) ? -1.0 : 1.0) * pochhammer(p.a + 1.0, p.m) / norm;
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < p.m; ++k) {
        term *= (-p.m + k) * (p.m + p.a + p.b + 1.0 + k) / ((p.a + 1.0 + k) * (k + 1.0)) * x;
        sum += term;
    }
    return pref * sum;
}

/// Monic Jacobi polynomial on [0,1] with weight x^a (1-x)^b, leading
/// coefficient exactly 1.  Evaluated by the three-term recurrence, which
/// stays stable to degrees far beyond direct series summation; falls back
/// to the hypergeometric sum near recurrence-coefficient poles.
inline double monic_jacobi(const MonicJacobiParams& p, double x) {
    if (p.m == 0) return 1.0;
    double prev = 0.0, cur = 1.0;  // p_{-1} treated as 0 via B_0 = 0
    for (int k = 0; k < p.m; ++k) {
        double A, B;
        if (!detail::jacobi01_recurrence(p.a, p.b, k, A, B))
            return monic_jacobi_hypergeometric(p, x);
        double next = (x - A) * cur - B * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace jbe

#endif  // JBE_SPECIAL_HPP
