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

#include "jbe/quadrature.hpp"
#include "jbe/selberg.hpp"
#include "jbe/validate.hpp"

using namespace jbe;

TEST_CASE("parameter admissibility") {
    CHECK_NOTHROW(EnsembleParams{5, 2.0, 0.0, 0.0}.validate());
    CHECK_THROWS_AS(EnsembleParams({0, 2.0, 0.0, 0.0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(EnsembleParams({5, 0.0, 0.0, 0.0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(EnsembleParams({5, 2.0, -1.0, 0.0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(EnsembleParams({5, 2.0, 0.0, -1.5}).validate(), std::invalid_argument);
    CHECK(EnsembleParams{5, 2.0, 2.0, 0.3}.alpha1_integer());
    CHECK_FALSE(EnsembleParams{5, 2.0, 0.5, 0.3}.alpha1_integer());
}

TEST_CASE("single-factor value is the beta function, independent of c") {
    for (double a : {0.7, 1.5, 3.2})
        for (double b : {0.9, 2.4})
            for (double c : {0.5, 1.0, 2.0})
                CHECK(selberg_s(1, a, b, c) ==
                      Catch::Approx(std::exp(log_beta(a, b))).epsilon(1e-13));
}

TEST_CASE("two-dimensional values against quadrature") {
    CHECK(checks::selberg_n2_quadrature().pass);
    CHECK(selberg_s(2, 1.0, 1.0, 0.5) == Catch::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("argument symmetry") {
    for (int N : {2, 5, 9})
        CHECK(selberg_s_log(N, 1.7, 0.6, 0.9) ==
              Catch::Approx(selberg_s_log(N, 0.6, 1.7, 0.9)).epsilon(1e-14));
}

TEST_CASE("normalisation constant: closed form vs defining ratio") {
    CHECK(checks::zn_closed_form().pass);
}

TEST_CASE("N=1 reduces to the Beta normalisation") {
    for (double a1 : {0.0, 1.3})
        for (double a2 : {0.4, 2.0}) {
            EnsembleParams p{1, 2.7, a1, a2};
            CHECK(z_n(p) ==
                  Catch::Approx(1.0 / std::exp(log_beta(a1 + 1.0, a2 + 1.0))).epsilon(1e-12));
        }
}

TEST_CASE("large-N asymptote") {
    CHECK(checks::zn_asymptote().pass);
    // alpha1 = 0, beta = 2: the asymptote is exactly N^2
    CHECK(z_n_asymptotic(0.0, 0.0, 2.0, 7) == Catch::Approx(49.0).epsilon(1e-12));
    // the ratio marches toward one as N doubles
    EnsembleParams base{25, 1.5, 1.0, 0.7};
    double prev = 1e9;
    for (int N : {25, 50, 100, 200}) {
        EnsembleParams p{N, base.beta, base.alpha1, base.alpha2};
        double r = std::fabs(std::exp(z_n_log(p)) / z_n_asymptotic(1.0, 0.7, 1.5, N) - 1.0);
        CHECK(r < prev);
        prev = r;
    }
}

TEST_CASE("gamma pole surfaces as an error") {
    CHECK_THROWS_AS(selberg_s_log(2, 0.0, 1.0, 0.5), std::domain_error);
}
