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

#include <thread>

#include "jbe/jack.hpp"
#include "jbe/rng.hpp"
#include "jbe/validate.hpp"
#include "support/rational.hpp"

using namespace jbe;
using jbe_test::Rational;

TEST_CASE("monomial helpers") {
    CHECK(monomial_ones(Partition{}, 3) == 1.0);
    CHECK(monomial_ones(Partition{1}, 3) == 3.0);
    CHECK(monomial_ones(Partition{1, 1}, 3) == 3.0);
    CHECK(monomial_ones(Partition{2, 1}, 3) == 6.0);
    CHECK(monomial_at(Partition{2}, {1.0, 2.0}) == Catch::Approx(5.0));
    CHECK(monomial_at(Partition{1, 1}, {1.0, 2.0}) == Catch::Approx(2.0));
}

TEST_CASE("monomial expansion base cases") {
    auto exp1 = jack_monomial_expansion(Partition{1}, 2, 1.0);
    REQUIRE(exp1.size() == 1);
    CHECK(exp1[0].first == Partition{1});
    CHECK(exp1[0].second == Catch::Approx(1.0));

    CHECK(jack_equal_args(Partition{2}, 2, 1.0, 1.0) == Catch::Approx(3.0));
    CHECK(jack_equal_args(Partition{1, 1}, 2, 1.0, 1.0) == Catch::Approx(1.0));
    CHECK(jack_equal_args(Partition{1}, 3, 0.7, 2.5) == Catch::Approx(7.5));
    CHECK(jack_equal_args(Partition{3, 1}, 3, 1.3, 0.0) == 0.0);
}

TEST_CASE("normalization: weight families sum to powers of p1") {
    CHECK(checks::jack_normalization().pass);
}

TEST_CASE("eigenrelation of the expansion tables") {
    for (double sigma : {0.5, 1.5})
        for (int n : {2, 3})
            for (int k = 1; k <= 6; ++k) {
                auto table = jack_table(k, n, sigma);
                const int P = static_cast<int>(table->partitions.size());
                for (int l = 0; l < P; ++l) {
                    const Partition& lam = table->partitions[l];
                    double eig = rho_lambda(lam, sigma, n) + 2.0 / sigma * k * (n - 1);
                    // apply the operator row by row in the monomial basis
                    for (int m = 0; m < P; ++m) {
                        const Partition& nu = table->partitions[m];
                        auto [quad, lin] = d2_diagonal_parts(nu, n);
                        double acc = (quad + 2.0 / sigma * lin) * table->coeff[l][m];
                        for (auto& [mu, w] : dominance_raising_moves(nu, n)) {
                            int j = table->find(mu);
                            if (j >= 0) acc += 2.0 / sigma * w * table->coeff[l][j];
                        }
                        CHECK(acc == Catch::Approx(eig * table->coeff[l][m]).margin(1e-9));
                    }
                }
            }
}

TEST_CASE("sigma=1 reduction to Schur polynomials") {
    CounterRng rng(99, 0, 0);
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= 6; ++k)
            for (const auto& lam : enumerate_partitions(k, n)) {
                std::vector<double> x(n);
                for (double& v : x) v = 0.3 + rng.uniform();
                double viaJack = jack_at(lam, 1.0, x);
                double viaSchur = detail::factorial(k) / hook_length_exact(lam) * schur_at(lam, x);
                CHECK(viaJack == Catch::Approx(viaSchur).epsilon(1e-12));
            }
}

TEST_CASE("schur examples") {
    CHECK(schur_at(Partition{}, {0.4, 1.8}) == Catch::Approx(1.0));
    CHECK(schur_at(Partition{1}, {0.4, 1.8}) == Catch::Approx(2.2));
    CHECK(schur_at(Partition{2}, {1.0, 2.0}) == Catch::Approx(7.0));
    CHECK_THROWS_AS(schur_at(Partition{1}, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("dominance triangularity of expansions") {
    for (int k = 1; k <= 6; ++k) {
        auto table = jack_table(k, 3, 0.8);
        const int P = static_cast<int>(table->partitions.size());
        for (int l = 0; l < P; ++l)
            for (int m = 0; m < P; ++m)
                if (!dominance_leq(table->partitions[m], table->partitions[l]))
                    CHECK(table->coeff[l][m] == 0.0);
    }
}

TEST_CASE("principal specialisation product matches the tables") {
    for (double sigma : {0.5, 1.0, 2.5})
        for (int n = 1; n <= 4; ++n)
            for (int k = 1; k <= 8; ++k)
                for (const auto& lam : enumerate_partitions(k, n)) {
                    double viaTable = 0.0;
                    for (auto& [mu, b] : jack_monomial_expansion(lam, n, sigma))
                        viaTable += b * monomial_ones(mu, n);
                    double viaProduct = std::exp(jack_ones_log(lam, n, sigma));
                    CHECK(viaProduct == Catch::Approx(viaTable).epsilon(1e-12));
                }
}

TEST_CASE("exact-rational tables certify the double tables") {
    struct S {
        int p, q;  // sigma = p/q
    };
    for (S s : {S{1, 2}, S{1, 1}, S{3, 2}, S{2, 1}}) {
        double sigma = static_cast<double>(s.p) / s.q;
        for (int n : {2, 3})
            for (int k = 1; k <= 8; ++k) {
                auto exact = build_jack_table<Rational>(k, n, Rational(s.p, s.q));
                auto approx = jack_table(k, n, sigma);
                REQUIRE(exact.partitions.size() == approx->partitions.size());
                for (std::size_t l = 0; l < exact.partitions.size(); ++l)
                    for (std::size_t m = 0; m < exact.partitions.size(); ++m) {
                        double want = exact.coeff[l][m].to_double();
                        CHECK(approx->coeff[l][m] ==
                              Catch::Approx(want).epsilon(1e-12).margin(1e-12));
                    }
            }
    }
}

TEST_CASE("equal-argument scaling and homogeneity") {
    Partition lam{3, 1};
    double base = jack_equal_args(lam, 3, 1.7, 1.0);
    for (double x : {0.5, 2.0, -1.2})
        CHECK(jack_equal_args(lam, 3, 1.7, x) ==
              Catch::Approx(std::pow(x, lam.weight()) * base).epsilon(1e-13));
}

TEST_CASE("cache is safe under concurrent evaluation") {
    std::vector<std::thread> threads;
    std::vector<double> results(8, 0.0);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([t, &results] {
            double acc = 0.0;
            for (int k = 1; k <= 12; ++k)
                for (const auto& lam : enumerate_partitions(k, 3))
                    acc += jack_equal_args(lam, 3, 0.9, 0.8);
            results[t] = acc;
        });
    for (auto& th : threads) th.join();
    for (int t = 1; t < 8; ++t) CHECK(results[t] == results[0]);
}
