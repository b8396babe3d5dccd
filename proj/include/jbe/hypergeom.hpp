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

#ifndef JBE_HYPERGEOM_HPP
#define JBE_HYPERGEOM_HPP

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "jbe/jack.hpp"
#include "jbe/partitions.hpp"
#include "jbe/special.hpp"

// Hypergeometric functions of Jack-parameter type sigma:
//
//   pFq^(sigma)(a; b; x) = sum_lambda
//     prod_i [a_i]_lambda / (prod_j [b_j]_lambda |lambda|!) C_lambda^(sigma)(x),
//
// summed over partitions with at most n = dim(x) parts.  The series
// terminates (parts <= N) when an upper parameter is a nonpositive
// integer -N.  At equal arguments x = t*1^n the series collapses to a
// power series in t whose weight-layer coefficients are cached.

namespace jbe {

struct TruncationPolicy {
    double eps = 1e-14;   // relative layer threshold
    int consecutive = 3;  // layers below threshold before accepting
    int max_weight = 200;
};

struct HypergeomSpec {
    std::vector<double> upper;
    std::vector<double> lower;
    double sigma = 1.0;
    int n = 1;  // number of variables
    TruncationPolicy trunc;

    /// Termination bound from integer upper parameters, or -1.
    int terminating_bound() const {
        int best = -1;
        for (double a : upper) {
            if (a <= 0.0 && a == std::floor(a)) {
                int bound = static_cast<int>(-a);
                if (best < 0 || bound < best) best = bound;
            }
        }
        return best;
    }

    void validate() const {
        if (sigma <= 0.0) throw std::invalid_argument("HypergeomSpec: sigma must be positive");
        if (n < 0) throw std::invalid_argument("HypergeomSpec: negative variable count");
        for (double b : lower)
            for (int i = 1; i <= n; ++i) {
                double v = b - (i - 1) / sigma;
                if (v <= 1e-12 && std::fabs(v - std::round(v)) < 1e-12)
                    throw std::domain_error(
                        "HypergeomSpec: lower parameter chain hits a nonpositive integer");
            }
    }
};

struct MhgDiagnostics {
    int weights_used = 0;
    bool terminating = false;
    bool converged = true;
    double last_layer_fraction = 0.0;
};

struct MhgValue {
    double value = 0.0;
    SignedLog slog;
    MhgDiagnostics diag;
};

/// Equal-argument series F(t * 1^n) as a power series in t.  Layer
/// coefficients are built lazily and kept, so tabulating a curve costs
/// one pass of partition enumeration regardless of the grid size.
class MhgEqualSeries {
  public:
    explicit MhgEqualSeries(HypergeomSpec spec) : spec_(std::move(spec)) {
        spec_.validate();
        bound_ = spec_.terminating_bound();
        // all-nonnegative-term certificate: every upper chain stays
        // strictly negative up to the termination bound and every lower
        // chain stays positive, so positive t gives positive terms
        if (bound_ >= 0) {
            assert_nonneg_ = true;
            for (double a : spec_.upper)
                if (!(a + bound_ - 1 < 0.0) && bound_ > 0) assert_nonneg_ = false;
            for (double b : spec_.lower)
                for (int i = 1; i <= spec_.n; ++i)
                    if (!(b - (i - 1) / spec_.sigma > 0.0)) assert_nonneg_ = false;
        }
    }

    const HypergeomSpec& spec() const { return spec_; }

    /// Degree of the polynomial when terminating, -1 otherwise.
    int degree_bound() const { return bound_ < 0 ? -1 : bound_ * spec_.n; }

    MhgValue eval(double t) { return eval_impl(t, false); }
    /// d/dt of the series (termwise, exact in the coefficients).
    MhgValue eval_derivative(double t) { return eval_impl(t, true); }

  private:
    MhgValue eval_impl(double t, bool derivative) {
        std::lock_guard<std::mutex> lock(mutex_);
        MhgValue out;
        out.diag.terminating = bound_ >= 0;
        if (t == 0.0) {  // only the lowest layer survives
            ensure_layer(derivative ? 1 : 0);
            out.slog = derivative ? coeff_[1] : coeff_[0];
            out.value = out.slog.value();
            out.diag.weights_used = derivative ? 2 : 1;
            return out;
        }
        const double log_abs_t = std::log(std::fabs(t));
        SignedLog sum = SignedLog::zero();
        int below = 0;
        const int hard_cap = (bound_ >= 0) ? degree_bound() : spec_.trunc.max_weight;
        for (int k = 0; k <= hard_cap; ++k) {
            ensure_layer(k);
            SignedLog term;
            if (derivative) {
                if (k == 0) continue;
                term = coeff_[k] * SignedLog::from_value(static_cast<double>(k)) *
                       SignedLog::from_log((k - 1) * log_abs_t);
                if (t < 0.0 && (k - 1) % 2) term = -term;
            } else {
                term = coeff_[k] * SignedLog::from_log(k * log_abs_t);
                if (t < 0.0 && k % 2) term = -term;
            }
            sum += term;
            if (bound_ < 0) {
                double frac = term.is_zero()
                                  ? 0.0
                                  : std::exp(term.log - std::max(sum.log, term.log - 700.0));
                out.diag.last_layer_fraction = frac;
                if (frac < spec_.trunc.eps) {
                    if (++below >= spec_.trunc.consecutive) {
                        out.diag.weights_used = k + 1;
                        out.slog = sum;
                        out.value = sum.value();
                        return out;
                    }
                } else {
                    below = 0;
                }
            }
        }
        if (bound_ < 0) {
            out.diag.converged = false;
            throw std::runtime_error(
                "MhgEqualSeries: series did not reach tolerance before max weight");
        }
        out.diag.weights_used = hard_cap + 1;
        out.slog = sum;
        out.value = sum.value();
        return out;
    }

    void ensure_layer(int k) {
        while (static_cast<int>(coeff_.size()) <= k) {
            int w = static_cast<int>(coeff_.size());
            int max_part = (bound_ >= 0) ? bound_ : w;
            SignedLog layer = SignedLog::zero();
            for (const Partition& lam : enumerate_partitions(w, spec_.n, max_part)) {
                SignedLog term = SignedLog::from_log(
                    jack_ones_log(lam, spec_.n, spec_.sigma) - log_gamma(w + 1.0));
                for (double a : spec_.upper) term *= gen_pochhammer_log(a, lam, spec_.sigma);
                for (double b : spec_.lower) term = term / gen_pochhammer_log(b, lam, spec_.sigma);
                if (assert_nonneg_ && term.sign < 0)
                    throw std::logic_error(
                        "MhgEqualSeries: negative term in a certified-positive series");
                layer += term;
            }
            coeff_.push_back(layer);
        }
    }

    HypergeomSpec spec_;
    int bound_ = -1;
    bool assert_nonneg_ = false;
    std::mutex mutex_;
    std::vector<SignedLog> coeff_;  // F(t 1^n) = sum_k coeff_[k] t^k
};

/// One-shot equal-argument evaluation.
inline MhgValue mhg_equal_args(const HypergeomSpec& spec, double t) {
    MhgEqualSeries series(spec);
    return series.eval(t);
}

/// General-argument evaluation through the monomial expansion tables
/// (oracle path, n <= 4 and modest weights).
inline double mhg_general_args(const HypergeomSpec& spec, const std::vector<double>& x) {
    spec.validate();
    if (static_cast<int>(x.size()) != spec.n)
        throw std::invalid_argument("mhg_general_args: dimension mismatch");
    if (spec.n > 4)
        throw std::invalid_argument("mhg_general_args: limited to n <= 4");
    const int bound = spec.terminating_bound();
    const int cap = (bound >= 0) ? bound * spec.n
                                 : std::min(spec.trunc.max_weight, jack_expansion_max_weight);
    double sum = 0.0;
    int below = 0;
    for (int k = 0; k <= cap; ++k) {
        double layer = 0.0;
        int max_part = (bound >= 0) ? bound : k;
        for (const Partition& lam : enumerate_partitions(k, spec.n, max_part)) {
            double coef = 1.0 / std::exp(log_gamma(k + 1.0));
            SignedLog sl = SignedLog::from_value(coef);
            for (double a : spec.upper) sl *= gen_pochhammer_log(a, lam, spec.sigma);
            for (double b : spec.lower) sl = sl / gen_pochhammer_log(b, lam, spec.sigma);
            layer += sl.value() * jack_at(lam, spec.sigma, x);
        }
        sum += layer;
        if (bound < 0) {
            if (std::fabs(layer) < spec.trunc.eps * std::max(std::fabs(sum), 1e-300)) {
                if (++below >= spec.trunc.consecutive) return sum;
            } else {
                below = 0;
            }
        }
    }
    if (bound < 0)
        throw std::runtime_error("mhg_general_args: no convergence within the expansion cap");
    return sum;
}

/// Right-hand side of the Pfaff-type transformation:
///   (1-x)^{-a n} 2F1^(sigma)(a, c-b; c; (-x/(1-x)) 1^n),
/// equal to 2F1^(sigma)(a, b; c; x 1^n) wherever both sides converge.
inline double pfaff_transform(double a, double b, double c, double sigma, int n, double x) {
    if (x == 1.0) throw std::domain_error("pfaff_transform: x = 1 is singular");
    HypergeomSpec spec{{a, c - b}, {c}, sigma, n, {}};
    MhgEqualSeries series(spec);
    double v = series.eval(-x / (1.0 - x)).value;
    return std::pow(1.0 - x, -a * n) * v;
}

/// Classical one-variable pFq power series.
inline double classical_hyp(const std::vector<double>& upper, const std::vector<double>& lower,
                            double z, const TruncationPolicy& pol = {}) {
    int bound = -1;
    for (double a : upper)
        if (a <= 0.0 && a == std::floor(a)) {
            int nb = static_cast<int>(-a);
            if (bound < 0 || nb < bound) bound = nb;
        }
    if (upper.size() > lower.size() + 1 && bound < 0)
        throw std::domain_error("classical_hyp: divergent series (p > q+1)");
    if (upper.size() == lower.size() + 1 && bound < 0 && std::fabs(z) >= 1.0)
        throw std::domain_error("classical_hyp: |z| >= 1 outside the disc of convergence");
    double term = 1.0, sum = 1.0;
    int below = 0;
    const int cap = (bound >= 0) ? bound : pol.max_weight;
    for (int k = 0; k < cap; ++k) {
        double f = z / (k + 1.0);
        for (double a : upper) f *= (a + k);
        for (double b : lower) {
            if (b + k == 0.0) throw std::domain_error("classical_hyp: lower parameter pole");
            f /= (b + k);
        }
        term *= f;
        sum += term;
        if (bound < 0) {
            if (std::fabs(term) < pol.eps * std::fabs(sum)) {
                if (++below >= pol.consecutive) return sum;
            } else {
                below = 0;
            }
        }
    }
    if (bound < 0) throw std::runtime_error("classical_hyp: no convergence before max weight");
    return sum;
}

/// 0F1^(1)(; c; x 1^n) as an n x n determinant of Bessel functions:
///   x^{n(n-c)/2} prod_i Gamma(c+1-i) / prod_j j! * det(I_{c-n+j-i}(2 sqrt x)).
/// Continuous at x = 0 with value 1.
inline double bessel_determinant_equal(double c, int n, double x) {
    if (x < 0.0) throw std::domain_error("bessel_determinant_equal: x must be nonnegative");
    for (int i = 0; i < n; ++i)
        if (c - i <= 0.0 && std::fabs(c - i - std::round(c - i)) < 1e-12)
            throw std::domain_error("bessel_determinant_equal: c - i hits a nonpositive integer");
    if (n == 0 || x == 0.0) return 1.0;
    Mat m(n);
    double root = 2.0 * std::sqrt(x);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.at(i - 1, j - 1) = bessel_i(c - n + j - i, root);
    SignedLog pref = SignedLog::from_log(0.5 * n * (n - c) * std::log(x));
    for (int i = 1; i <= n; ++i) pref *= gamma_log_signed(c + 1.0 - i);
    for (int j = 1; j < n; ++j) pref = pref / SignedLog::from_log(log_gamma(j + 1.0));
    return (pref * det_signed_log(m)).value();
}

/// General-argument sigma = 1 evaluation of 0F1 by the Bessel determinant:
///   (-1)^{floor(n/2)} prod_i Gamma(c+1-i) x_i^{n-c/2} / Delta(x)
///     * det(x_j^{-i/2} I_{c+i-2n}(2 sqrt x_j)).
inline double bessel_determinant_general(double c, const std::vector<double>& x) {
    const int n = static_cast<int>(x.size());
    for (int i = 0; i < n; ++i)
        if (c - i <= 0.0 && std::fabs(c - i - std::round(c - i)) < 1e-12)
            throw std::domain_error("bessel_determinant_general: c - i hits a nonpositive integer");
    if (n == 0) return 1.0;
    double scale = 1e-300;
    for (double v : x) {
        if (v < 0.0) throw std::domain_error("bessel_determinant_general: negative argument");
        scale = std::max(scale, v);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::fabs(x[i] - x[j]) < 1e-8 * scale)
                throw std::invalid_argument("bessel_determinant_general: near-coincident entries");
    Mat m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m.at(i - 1, j - 1) = std::pow(x[j - 1], -0.5 * i) * bessel_i(c + i - 2 * n, 2.0 * std::sqrt(x[j - 1]));
    SignedLog pref = SignedLog::from_value((n / 2) % 2 ? -1.0 : 1.0);
    for (int i = 1; i <= n; ++i)
        pref *= gamma_log_signed(c + 1.0 - i) * SignedLog::from_log((n - 0.5 * c) * std::log(x[i - 1]));
    double delta = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) delta *= (x[j] - x[i]);
    return (pref * det_signed_log(m) / SignedLog::from_value(delta)).value();
}

}  // namespace jbe

#endif  // JBE_HYPERGEOM_HPP
