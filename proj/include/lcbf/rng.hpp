// SPDX-License-Identifier: Apache-2.0
//
// lcbf: hybrid beamforming simulation with liquid-crystal pattern codebooks
// and closed-form liquid neural precoders
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef LCBF_RNG_HPP
#define LCBF_RNG_HPP

#include "lcbf/types.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace lcbf
{

// Mixes a master seed with a stream name. Distinct names give statistically
// independent streams; the mapping is stable across runs and platforms.
std::uint64_t derive_seed(std::uint64_t master_seed, std::string_view name);

// A named, seedable random stream. Every randomized operation in the library
// takes one of these by reference and is a pure function of its state.
class RngStream
{
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}
    RngStream(std::uint64_t master_seed, std::string_view name) : engine_(derive_seed(master_seed, name)) {}

    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

    // Circularly-symmetric CN(0, variance).
    cdouble complex_normal(double variance)
    {
        const double s = std::sqrt(0.5 * variance);
        const double re = normal();
        const double im = normal();
        return {s * re, s * im};
    }

    std::mt19937_64 &engine() { return engine_; }

    // Serialized engine position, used by checkpoints.
    std::string state() const;
    void restore(const std::string &state);

private:
    std::mt19937_64 engine_;
};

} // namespace lcbf

#endif
