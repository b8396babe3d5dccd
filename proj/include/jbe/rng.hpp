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

#ifndef JBE_RNG_HPP
#define JBE_RNG_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace jbe {

/// Counter-based stream keyed by (seed, stream, substream).  Outputs are
/// the splitmix64 sequence started at a 64-bit hash of the key, so a
/// stream is reproducible independent of thread scheduling and of how
/// many variates other streams consumed.  Fixed algorithm identifiers:
/// rng "splitmix-ctr/v1", normals "box-muller", gamma "marsaglia-tsang".
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream) {
        state_ = mix(mix(mix(seed) ^ stream) ^ substream);
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        return finalize(state_);
    }

    /// Uniform on the open interval (0,1).
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller, consuming uniforms in pairs.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Gamma(shape, 1) by Marsaglia-Tsang squeeze; shape < 1 boosted
    /// through Gamma(shape+1) U^(1/shape).
    double gamma_variate(double shape) {
        if (!(shape > 0.0)) throw std::invalid_argument("gamma_variate: shape must be positive");
        if (shape < 1.0) {
            double g = gamma_variate(shape + 1.0);
            return g * std::pow(uniform(), 1.0 / shape);
        }
        double d = shape - 1.0 / 3.0;
        double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x = gaussian();
            double t = 1.0 + c * x;
            if (t <= 0.0) continue;
            double v = t * t * t;
            double u = uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    double beta_variate(double a, double b) {
        double x = gamma_variate(a);
        double y = gamma_variate(b);
        return x / (x + y);
    }

  private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        return finalize(z);
    }
    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace jbe

#endif  // JBE_RNG_HPP
