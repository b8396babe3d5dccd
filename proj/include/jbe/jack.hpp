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

#ifndef JBE_JACK_HPP
#define JBE_JACK_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jbe/linalg.hpp"
#include "jbe/partitions.hpp"
#include "jbe/special.hpp"

// Jack polynomials C_lambda^(sigma), normalised so that the weight-k
// family sums to (x_1 + ... + x_n)^k.
//
// The monomial-basis expansion is built one weight at a time.  Each
// C_lambda is the eigenvector, monic in m_lambda, of the operator
//
//   D2 = sum_i x_i^2 d^2/dx_i^2 + (2/sigma) sum_{i!=j} x_i^2/(x_i-x_j) d/dx_i
//
// restricted to the dominance-lower cone of lambda (the expansion is
// triangular), and the family is then rescaled jointly against the
// multinomial expansion of the power sum p_1^k.  The eigenvalue gaps
// rho_lambda - rho_mu are strictly positive along dominance for
// sigma > 0, so the back-substitution never degenerates.

namespace jbe {

namespace detail {

inline double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace detail

/// m_mu(1^n): the number of distinct permutations of mu padded with
/// zeros to n slots, n! / (prod_v mult_v(mu)! * (n - l(mu))!).
inline double monomial_ones(const Partition& mu, int n) {
    if (mu.length() > n) return 0.0;
    double v = detail::factorial(n) / detail::factorial(n - mu.length());
    int run = 1;
    for (int i = 2; i <= mu.length(); ++i) {
        run = (mu.part(i) == mu.part(i - 1)) ? run + 1 : 1;
        v /= run;
    }
    return v;
}

/// Monomial symmetric polynomial m_mu(x).
inline double monomial_at(const Partition& mu, const std::vector<double>& x) {
    const int n = static_cast<int>(x.size());
    if (mu.length() > n) return 0.0;
    std::vector<int> expo(n, 0);
    for (int i = 1; i <= mu.length(); ++i) expo[i - 1] = mu.part(i);
    std::sort(expo.begin(), expo.end());  // ascending start for next_permutation
    double sum = 0.0;
    do {
        double t = 1.0;
        for (int i = 0; i < n; ++i)
            if (expo[i] != 0) t *= std::pow(x[i], expo[i]);
        sum += t;
    } while (std::next_permutation(expo.begin(), expo.end()));
    return sum;
}

/// The moves feeding the triangular build: all partitions mu obtained
/// from nu (padded to n slots) by replacing the values at a slot pair
/// with a strictly less balanced split of the same total.  Each entry
/// carries the integer coefficient with which m_nu appears in D2 m_mu
/// (up to the overall 2/sigma).  Multiple slot pairs contributing the
/// same mu accumulate.
inline std::vector<std::pair<Partition, long long>> dominance_raising_moves(
    const Partition& nu, int n) {
    std::vector<int> slots(n, 0);
    for (int i = 1; i <= nu.length(); ++i) slots[i - 1] = nu.part(i);
    std::map<std::vector<int>, long long> acc;
    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            int vs = slots[s], vt = slots[t];  // vs >= vt (slots sorted desc)
            int total = vs + vt;
            for (int a = vs + 1; a <= total; ++a) {
                int b = total - a;
                std::vector<int> cand = slots;
                cand[s] = a;
                cand[t] = b;
                std::sort(cand.begin(), cand.end(), std::greater<int>());
                acc[cand] += (a - b);
            }
        }
    }
    std::vector<std::pair<Partition, long long>> out;
    out.reserve(acc.size());
    for (auto& kv : acc) out.emplace_back(Partition(kv.first), kv.second);
    return out;
}

/// Diagonal of D2 on m_nu in n variables, as (integer, integer) pieces:
/// sum_i nu_i(nu_i-1)  and  sum_i (n-i) nu_i (the latter scaled by 2/sigma).
inline std::pair<long long, long long> d2_diagonal_parts(const Partition& nu, int n) {
    long long quad = 0, lin = 0;
    for (int i = 1; i <= nu.length(); ++i) {
        long long p = nu.part(i);
        quad += p * (p - 1);
        lin += (n - i) * p;
    }
    return {quad, lin};
}

/// Monomial expansion of every C_lambda of one weight.
template <typename Scalar>
struct JackWeightTable {
    int weight = 0;
    int nvars = 0;
    std::vector<Partition> partitions;          // reverse-lex descending
    std::vector<std::vector<Scalar>> coeff;     // coeff[l][m]: m_mu coefficient of C_lambda
    std::unordered_map<Partition, int, PartitionHash> index;

    int find(const Partition& p) const {
        auto it = index.find(p);
        return it == index.end() ? -1 : it->second;
    }
};

/// Build the weight-k table in the given scalar type (double for
/// production, an exact rational for the certification oracle).
template <typename Scalar>
JackWeightTable<Scalar> build_jack_table(int weight, int n, const Scalar& sigma) {
    JackWeightTable<Scalar> table;
    table.weight = weight;
    table.nvars = n;
    table.partitions = enumerate_partitions(weight, n);
    const int P = static_cast<int>(table.partitions.size());
    for (int i = 0; i < P; ++i) table.index.emplace(table.partitions[i], i);

    std::vector<Scalar> rho(P);
    for (int i = 0; i < P; ++i) rho[i] = rho_lambda_t<Scalar>(table.partitions[i], sigma);

    // raising moves out of each partition, resolved to table indices
    std::vector<std::vector<std::pair<int, long long>>> moves(P);
    for (int m = 0; m < P; ++m) {
        for (auto& [mu, w] : dominance_raising_moves(table.partitions[m], n)) {
            int j = table.find(mu);
            if (j >= 0) moves[m].emplace_back(j, w);
        }
    }

    const Scalar two_over_sigma = Scalar(2) / sigma;

    // monic-in-m_lambda eigenvectors by back-substitution
    table.coeff.assign(P, std::vector<Scalar>(P, Scalar(0)));
    for (int l = 0; l < P; ++l) {
        auto& c = table.coeff[l];
        c[l] = Scalar(1);
        for (int m = l + 1; m < P; ++m) {
            if (!dominance_leq(table.partitions[m], table.partitions[l])) continue;
            Scalar s(0);
            for (auto& [j, w] : moves[m]) {
                if (j < l || c[j] == Scalar(0)) continue;
                s += Scalar(static_cast<int>(w)) * c[j];
            }
            Scalar gap = rho[l] - rho[m];
            if (gap == Scalar(0))
                throw std::runtime_error("build_jack_table: degenerate eigenvalue gap");
            c[m] = two_over_sigma * s / gap;
        }
    }

    // joint rescale so the weight sums to the multinomial expansion of p_1^k
    std::vector<Scalar> scale(P);
    for (int m = 0; m < P; ++m) {
        Scalar target(1);
        for (int i = 2; i <= weight; ++i) target *= Scalar(i);
        for (int i = 1; i <= table.partitions[m].length(); ++i)
            for (int f = 2; f <= table.partitions[m].part(i); ++f) target /= Scalar(f);
        Scalar s = target;
        for (int j = 0; j < m; ++j) s -= scale[j] * table.coeff[j][m];
        scale[m] = s;
    }
    for (int l = 0; l < P; ++l)
        for (int m = 0; m < P; ++m) table.coeff[l][m] = scale[l] * table.coeff[l][m];
    return table;
}

namespace detail {

struct JackTableKey {
    int weight;
    int nvars;
    std::uint64_t sigma_bits;
    bool operator==(const JackTableKey&) const = default;
};
struct JackTableKeyHash {
    std::size_t operator()(const JackTableKey& k) const {
        std::uint64_t h = 14695981039346656037ull;
        for (std::uint64_t v : {static_cast<std::uint64_t>(k.weight),
                                static_cast<std::uint64_t>(k.nvars), k.sigma_bits}) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

inline std::uint64_t double_bits(double x) {
    std::uint64_t u;
    static_assert(sizeof(u) == sizeof(x));
    __builtin_memcpy(&u, &x, sizeof(u));
    return u;
}

struct JackCaches {
    std::shared_mutex tables_mutex;
    std::unordered_map<JackTableKey, std::shared_ptr<const JackWeightTable<double>>,
                       JackTableKeyHash>
        tables;

    std::shared_mutex ones_mutex;
    // (nvars, sigma) -> partition -> log C_lambda(1^n)
    std::map<std::pair<int, std::uint64_t>,
             std::unordered_map<Partition, double, PartitionHash>>
        ones;

    static JackCaches& instance() {
        static JackCaches c;
        return c;
    }
};

}  // namespace detail

inline constexpr int jack_expansion_max_vars = 8;
inline constexpr int jack_expansion_max_weight = 40;

/// Shared per-weight expansion table (thread-safe, idempotent insert).
inline std::shared_ptr<const JackWeightTable<double>> jack_table(int weight, int n,
                                                                 double sigma) {
    if (sigma <= 0.0) throw std::invalid_argument("jack_table: sigma must be positive");
    if (n > jack_expansion_max_vars || weight > jack_expansion_max_weight)
        throw std::invalid_argument(
            "jack_table: monomial expansion limited to n <= 8, |lambda| <= 40");
    auto& caches = detail::JackCaches::instance();
    detail::JackTableKey key{weight, n, detail::double_bits(sigma)};
    {
        std::shared_lock lock(caches.tables_mutex);
        auto it = caches.tables.find(key);
        if (it != caches.tables.end()) return it->second;
    }
    auto built = std::make_shared<const JackWeightTable<double>>(
        build_jack_table<double>(weight, n, sigma));
    std::unique_lock lock(caches.tables_mutex);
    return caches.tables.emplace(key, built).first->second;
}

/// Monomial expansion of C_lambda^(sigma) in n variables: pairs
/// (mu, b_mulambda) with b nonzero only for mu <= lambda in dominance.
inline std::vector<std::pair<Partition, double>> jack_monomial_expansion(
    const Partition& lambda, int n, double sigma) {
    if (lambda.length() > n)
        throw std::invalid_argument("jack_monomial_expansion: more parts than variables");
    auto table = jack_table(lambda.weight(), n, sigma);
    int l = table->find(lambda);
    std::vector<std::pair<Partition, double>> out;
    for (int m = 0; m < static_cast<int>(table->partitions.size()); ++m)
        if (table->coeff[l][m] != 0.0) out.emplace_back(table->partitions[m], table->coeff[l][m]);
    return out;
}

/// C_lambda^(sigma)(x) at a general argument vector.
inline double jack_at(const Partition& lambda, double sigma, const std::vector<double>& x) {
    double sum = 0.0;
    for (auto& [mu, b] : jack_monomial_expansion(lambda, static_cast<int>(x.size()), sigma))
        sum += b * monomial_at(mu, x);
    return sum;
}

/// log C_lambda^(sigma)(1^n) by the principal-specialisation product:
///
///   C_lambda(1^n) = sigma^|lambda| |lambda|!
///       prod_{(i,j) in lambda} (n + sigma(j-1) - (i-1))
///     / prod_{(i,j) in lambda} (sigma(arm+1) + leg)(sigma arm + leg + 1).
///
/// Every factor is positive for l(lambda) <= n.  The expansion tables
/// certify this formula in the test suite; it is what lets equal-argument
/// hypergeometric series run to row lengths far beyond the expansion cap.
inline double jack_ones_log_uncached(const Partition& lambda, int n, double sigma) {
    if (lambda.length() > n)
        return -std::numeric_limits<double>::infinity();  // C vanishes
    const Partition conj = lambda.conjugate();
    double s = lambda.weight() * std::log(sigma) + log_gamma(lambda.weight() + 1.0);
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) {
            double arm = lambda.part(i) - j;
            double leg = conj.part(j) - i;
            s += std::log(n + sigma * (j - 1) - (i - 1));
            s -= std::log(sigma * (arm + 1.0) + leg) + std::log(sigma * arm + leg + 1.0);
        }
    }
    return s;
}

inline double jack_ones_log(const Partition& lambda, int n, double sigma) {
    auto& caches = detail::JackCaches::instance();
    auto key = std::make_pair(n, detail::double_bits(sigma));
    {
        std::shared_lock lock(caches.ones_mutex);
        auto it = caches.ones.find(key);
        if (it != caches.ones.end()) {
            auto jt = it->second.find(lambda);
            if (jt != it->second.end()) return jt->second;
        }
    }
    double v = jack_ones_log_uncached(lambda, n, sigma);
    std::unique_lock lock(caches.ones_mutex);
    caches.ones[key].emplace(lambda, v);
    return v;
}

/// C_lambda^(sigma)(x * 1^n) = x^|lambda| C_lambda^(sigma)(1^n).
inline double jack_equal_args(const Partition& lambda, int n, double sigma, double x) {
    if (lambda.empty()) return 1.0;
    if (x == 0.0) return 0.0;
    double mag = std::exp(jack_ones_log(lambda, n, sigma) +
                          lambda.weight() * std::log(std::fabs(x)));
    return (x < 0.0 && lambda.weight() % 2) ? -mag : mag;
}

/// Schur polynomial via the bialternant ratio; sigma = 1 oracle only.
/// Entries of x must be pairwise distinct.
inline double schur_at(const Partition& lambda, const std::vector<double>& x) {
    const int n = static_cast<int>(x.size());
    if (lambda.length() > n) throw std::invalid_argument("schur_at: more parts than variables");
    double scale = 1e-300;
    for (double v : x) scale = std::max(scale, std::fabs(v));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::fabs(x[i] - x[j]) < 1e-8 * scale)
                throw std::invalid_argument("schur_at: near-coincident arguments");
    Mat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = std::pow(x[j], lambda.part(i + 1) + n - i - 1);
    // rows carry decreasing exponents, so the matching Vandermonde is
    // prod_{i<j} (x_i - x_j)
    double vandermonde = 1.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) vandermonde *= (x[i] - x[j]);
    return (det_signed_log(m) / SignedLog::from_value(vandermonde)).value();
}

}  // namespace jbe

#endif  // JBE_JACK_HPP
