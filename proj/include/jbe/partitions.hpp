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

#ifndef JBE_PARTITIONS_HPP
#define JBE_PARTITIONS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "jbe/signed_log.hpp"

namespace jbe {

/// Integer partition: weakly decreasing positive parts.  Trailing zeros
/// are stripped on construction, so (2,1) and (2,1,0,0) compare equal.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }

    /// Part at 1-based row index; zero beyond the length.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
    }

    Partition conjugate() const {
        if (parts_.empty()) return {};
        std::vector<int> c(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++c[j];
        return Partition(std::move(c));
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    // lexicographic on parts; within a fixed weight this is a linear
    // extension of the dominance order
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  private:
    void normalize() {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1]))
                throw std::invalid_argument("Partition: parts must be weakly decreasing and nonnegative");
        }
    }
    std::vector<int> parts_;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const {
        std::uint64_t h = 14695981039346656037ull;
        for (int v : p.parts()) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// mu <= lambda in dominance order (equal weights assumed).
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
    int n = std::max(mu.length(), lambda.length());
    long long sm = 0, sl = 0;
    for (int i = 1; i <= n; ++i) {
        sm += mu.part(i);
        sl += lambda.part(i);
        if (sm > sl) return false;
    }
    return sm == sl;
}

namespace detail {
inline void enumerate_rec(int remaining, int max_parts, int max_part,
                          std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (max_parts == 0) return;
    int hi = std::min(remaining, max_part);
    // ceil(remaining/max_parts) is the least feasible first part
    int lo = (remaining + max_parts - 1) / max_parts;
    for (int p = hi; p >= lo; --p) {
        acc.push_back(p);
        enumerate_rec(remaining - p, max_parts - 1, p, acc, out);
        acc.pop_back();
    }
}
}  // namespace detail

/// All partitions of `weight` with at most `max_parts` parts, each part
/// <= `max_part`, in reverse-lexicographic (descending) order.  Weight 0
/// yields the single empty partition.
inline std::vector<Partition> enumerate_partitions(
    int weight, int max_parts, int max_part = std::numeric_limits<int>::max()) {
    if (weight < 0 || max_parts < 0 || max_part < 0)
        throw std::invalid_argument("enumerate_partitions: negative argument");
    std::vector<Partition> out;
    std::vector<int> acc;
    detail::enumerate_rec(weight, max_parts, max_part, acc, out);
    return out;
}

/// Hook length h_lambda: product over rows of (lambda_i + l - i)! divided
/// by prod_{i<j} (lambda_i - lambda_j - i + j).  Always a positive
/// integer; computed row by row so intermediates stay exact.
inline unsigned long long hook_length_exact(const Partition& lambda) {
    const int l = lambda.length();
    unsigned __int128 total = 1;
    for (int i = 1; i <= l; ++i) {
        unsigned __int128 row = 1;
        for (int v = 2; v <= lambda.part(i) + l - i; ++v) row *= static_cast<unsigned>(v);
        for (int j = i + 1; j <= l; ++j) {
            int d = lambda.part(i) - lambda.part(j) - i + j;
            row /= static_cast<unsigned>(d);  // exact: the row quotient is a hook product
        }
        total *= row;
        if (total > static_cast<unsigned __int128>(~0ull))
            throw std::overflow_error("hook_length_exact: exceeds 64-bit range");
    }
    return static_cast<unsigned long long>(total);
}

/// log h_lambda, usable for partitions far beyond the exact-integer range.
inline double hook_length_log(const Partition& lambda) {
    const int l = lambda.length();
    double s = 0.0;
    for (int i = 1; i <= l; ++i) {
        s += std::lgamma(static_cast<double>(lambda.part(i) + l - i + 1));
        for (int j = i + 1; j <= l; ++j)
            s -= std::log(static_cast<double>(lambda.part(i) - lambda.part(j) - i + j));
    }
    return s;
}

/// Classical Pochhammer symbol (a)_n = a(a+1)...(a+n-1); empty product for n=0.
inline double pochhammer(double a, int n) {
    double p = 1.0;
    for (int j = 0; j < n; ++j) p *= (a + j);
    return p;
}

inline SignedLog pochhammer_log(double a, int n) {
    SignedLog p = SignedLog::one();
    for (int j = 0; j < n; ++j) {
        double f = a + j;
        if (f == 0.0) return SignedLog::zero();
        p *= SignedLog::from_value(f);
    }
    return p;
}

/// Generalised Pochhammer symbol: prod_i (a - (i-1)/sigma)_{lambda_i}.
/// Exactly zero whenever some factor chain crosses zero, e.g. a = -N
/// with lambda_1 > N.
inline SignedLog gen_pochhammer_log(double a, const Partition& lambda, double sigma) {
    if (sigma <= 0.0) throw std::invalid_argument("gen_pochhammer: sigma must be positive");
    SignedLog p = SignedLog::one();
    for (int i = 1; i <= lambda.length(); ++i) {
        p *= pochhammer_log(a - (i - 1) / sigma, lambda.part(i));
        if (p.is_zero()) return p;
    }
    return p;
}

inline double gen_pochhammer(double a, const Partition& lambda, double sigma) {
    return gen_pochhammer_log(a, lambda, sigma).value();
}

/// Eigenvalue data rho_lambda = sum_i lambda_i (lambda_i - 1 - (2/sigma)(i-1)).
/// Templated so the exact-rational test oracle can reuse it.
template <typename Scalar>
Scalar rho_lambda_t(const Partition& lambda, const Scalar& sigma) {
    Scalar r(0);
    for (int i = 1; i <= lambda.length(); ++i) {
        int li = lambda.part(i);
        r += Scalar(li) * (Scalar(li - 1) - Scalar(2) / sigma * Scalar(i - 1));
    }
    return r;
}

inline double rho_lambda(const Partition& lambda, double sigma, int n) {
    if (lambda.length() > n)
        throw std::invalid_argument("rho_lambda: partition has more parts than variables");
    return rho_lambda_t<double>(lambda, sigma);
}

}  // namespace jbe

#endif  // JBE_PARTITIONS_HPP
