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
#include "jbe/special.hpp"
#include "jbe/validate.hpp"

using namespace jbe;

TEST_CASE("log_gamma basics") {
    CHECK(log_gamma(1.0) == 0.0);
    CHECK(log_gamma(0.5) == Catch::Approx(0.5723649429247001).epsilon(1e-13));
    CHECK(log_gamma(2.0) == Catch::Approx(0.0).margin(1e-15));
    CHECK_THROWS_AS(log_gamma(-1.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
}

TEST_CASE("gamma ratio and its asymptote") {
    double z = 7.3;
    CHECK(gamma_ratio(2.0, 1.0, z) == Catch::Approx(z + 1.0).epsilon(1e-13));
    CHECK(gamma_ratio_asymptotic(2.0, 1.0, z) == Catch::Approx(z));
    // ratio approaches the asymptote from within 1/z
    double r = gamma_ratio(1.4, 0.9, 200.0) / gamma_ratio_asymptotic(1.4, 0.9, 200.0);
    CHECK(std::fabs(r - 1.0) < 1e-2);
}

TEST_CASE("bessel_i examples") {
    CHECK(bessel_i(0.0, 0.0) == 1.0);
    CHECK(bessel_i(2.5, 0.0) == 0.0);
    CHECK(bessel_i(1.0, 2.0) == Catch::Approx(1.590636854637329).epsilon(1e-13));
    CHECK_THROWS_AS(bessel_i(0.0, -1.0), std::domain_error);
}

TEST_CASE("negative integer order reduces to the positive one") {
    for (int m : {1, 2, 5})
        for (double z : {0.5, 3.0, 12.0})
            CHECK(bessel_i(-m, z) == bessel_i(m, z));
}

TEST_CASE("bessel recurrence and edge combination") {
    CHECK(checks::bessel_recurrence().pass);
    CHECK(checks::bessel_combination().pass);
    CHECK(checks::bessel_bridge().pass);
}

TEST_CASE("series and asymptotic expansion agree at the switch point") {
    for (double nu : {0.0, 0.5, 1.0, 2.0, 3.5, 5.0}) {
        double series = detail::bessel_i_series(nu, 40.0);
        double asym;
        REQUIRE(detail::bessel_i_asymptotic(nu, 40.0, asym));
        CHECK(asym == Catch::Approx(series).epsilon(1e-10));
        // the dispatch boundary introduces no jump beyond the local slope
        CHECK(bessel_i(nu, 40.0 - 1e-9) == Catch::Approx(bessel_i(nu, 40.0 + 1e-9)).epsilon(1e-8));
    }
    // far beyond the boundary the expansion holds its own
    CHECK(bessel_i(1.0, 100.0) ==
          Catch::Approx(detail::bessel_i_series(1.0, 100.0)).epsilon(1e-12));
}

TEST_CASE("monic jacobi closed forms") {
    CHECK(monic_jacobi({0, 1.3, -0.2}, 0.77) == 1.0);
    for (double a : {0.0, 0.8, 2.1})
        for (double b : {0.0, 1.4})
            for (double x : {0.1, 0.6}) {
                CHECK(monic_jacobi({1, a, b}, x) ==
                      Catch::Approx(x - (a + 1.0) / (a + b + 2.0)).epsilon(1e-14));
            }
    double x = 0.3;
    CHECK(monic_jacobi({2, 0.0, 0.0}, x) == Catch::Approx(x * x - x + 1.0 / 6.0).epsilon(1e-13));
}

TEST_CASE("monic jacobi derivative and contiguous identities") {
    CHECK(checks::jacobi_derivative().pass);
    CHECK(checks::jacobi_contiguous().pass);
}

TEST_CASE("orthogonality under the weight x^a (1-x)^b") {
    double a = 0.5, b = 1.3;
    for (int m = 0; m <= 6; ++m)
        for (int k = 0; k < m; ++k) {
            double I = integrate(
                [&](double x) {
                    return monic_jacobi({m, a, b}, x) * monic_jacobi({k, a, b}, x) *
                           std::pow(x, a) * std::pow(1.0 - x, b);
                },
                0.0, 1.0, 1e-12);
            CHECK(std::fabs(I) < 1e-9);
        }
}

TEST_CASE("recurrence agrees with the hypergeometric form") {
    // orthogonality-range parameters and the analytically continued ones
    struct AB {
        double a, b;
    };
    for (const AB& ab : {AB{0.4, 2.3}, AB{2.0, 0.0}, AB{1.2, -25.7}, AB{0.0, -33.5}})
        for (int m : {1, 2, 5, 10, 15, 20})
            for (double x : {0.05, 0.3, -0.2}) {
                double rec = monic_jacobi({m, ab.a, ab.b}, x);
                double hyp = monic_jacobi_hypergeometric({m, ab.a, ab.b}, x);
                CHECK(rec == Catch::Approx(hyp).epsilon(1e-8).margin(1e-10));
            }
}

TEST_CASE("degenerate normalisation is rejected") {
    // (m+a+b+1)_m = 0 when a+b = -m-1
    CHECK_THROWS_AS(monic_jacobi_hypergeometric({2, 0.0, -3.0}, 0.4), std::domain_error);
}
