// Copyright 2026 the kexcore authors
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

#ifndef KEX_GENERATOR_HPP
#define KEX_GENERATOR_HPP

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kex/economy.hpp"

namespace kex {

// Deterministic RNG wrapper. All draws are derived from raw mt19937_64
// output with fixed arithmetic, so streams are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() {
        // 53 uniform mantissa bits in [0,1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }
    int uniform_int(int n) {  // 0..n-1
        return static_cast<int>(eng_() % static_cast<std::uint64_t>(n));
    }
    int categorical(const std::vector<double>& probs) {
        double u = uniform01(), acc = 0.0;
        for (size_t i = 0; i < probs.size(); ++i) {
            acc += probs[i];
            if (u < acc) return static_cast<int>(i);
        }
        return static_cast<int>(probs.size()) - 1;
    }
    double normal01() {
        // Box-Muller, fresh pair each call (deterministic, no cached state)
        double u1 = uniform01(), u2 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }
    double gamma(double alpha);  // Marsaglia-Tsang
    std::vector<double> dirichlet(int k, double alpha);
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(uniform_int(i + 1))]);
    }

private:
    std::mt19937_64 eng_;
};

struct GeneratorConfig {
    int n_pairs = 0;
    int n_altruists = 0;
    int n_orgs = 1;
    int delta = 3;
    std::uint64_t seed = 0;
    // O, A, B, AB donor/patient frequencies (US-like defaults)
    std::array<double, 4> blood_freq{0.4814, 0.3373, 0.1428, 0.0385};
    // named discrete cpra distribution: "high" (default) or "saidman"
    std::string cpra_dist = "high";
    double dirichlet_alpha = 1.0;
    // "pool": altruists drawn with blood types and realistic arcs
    // "synthetic": universally compatible platform donors (org 0)
    std::string altruist_mode = "pool";

    void validate() const;
};

// Saidman-style instance generation: ABO-compatible arcs thinned by a
// per-patient cpra rejection draw; mutually self-compatible pairs are
// redrawn; orgs assigned by a Dirichlet-weighted categorical draw.
// Pure function of the config (identical JSON for identical configs).
PartitionEconomy generate_random(const GeneratorConfig& config);

}  // namespace kex

#endif  // KEX_GENERATOR_HPP
