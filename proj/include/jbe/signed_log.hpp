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

#ifndef JBE_SIGNED_LOG_HPP
#define JBE_SIGNED_LOG_HPP

#include <cmath>
#include <limits>

namespace jbe {

/// A real number stored as (sign, log|value|).  Products of gamma
/// functions and Pochhammer symbols overflow doubles long before the
/// final ratios do, so every normalisation constant in this library is
/// carried in this form and exponentiated as late as possible.
struct SignedLog {
    int sign = 0;  // -1, 0, +1
    double log = -std::numeric_limits<double>::infinity();

    static SignedLog zero() { return {0, -std::numeric_limits<double>::infinity()}; }
    static SignedLog one() { return {1, 0.0}; }

    static SignedLog from_value(double v) {
        if (v == 0.0) return zero();
        return {v > 0.0 ? 1 : -1, std::log(std::fabs(v))};
    }
    static SignedLog from_log(double lg, int sg = 1) { return {sg, lg}; }

    double value() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log);
    }

    bool is_zero() const { return sign == 0; }

    SignedLog operator*(const SignedLog& o) const {
        if (sign == 0 || o.sign == 0) return zero();
        return {sign * o.sign, log + o.log};
    }
    SignedLog operator/(const SignedLog& o) const {
        return {sign * o.sign, log - o.log};
    }
    SignedLog& operator*=(const SignedLog& o) { return *this = *this * o; }

    SignedLog operator-() const { return {-sign, log}; }

    // log-sum-exp with sign tracking; exp(min-max) underflows harmlessly
    SignedLog operator+(const SignedLog& o) const {
        if (sign == 0) return o;
        if (o.sign == 0) return *this;
        const SignedLog& big = (log >= o.log) ? *this : o;
        const SignedLog& sml = (log >= o.log) ? o : *this;
        double d = std::exp(sml.log - big.log);
        if (big.sign == sml.sign) return {big.sign, big.log + std::log1p(d)};
        if (d >= 1.0) return zero();  // exact cancellation
        return {big.sign, big.log + std::log1p(-d)};
    }
    SignedLog& operator+=(const SignedLog& o) { return *this = *this + o; }

    SignedLog pow(double e) const {
        if (sign == 0) return zero();
        return {sign, log * e};  // caller guarantees sign stays meaningful
    }
};

}  // namespace jbe

#endif  // JBE_SIGNED_LOG_HPP
