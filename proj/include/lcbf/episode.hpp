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

#ifndef LCBF_EPISODE_HPP
#define LCBF_EPISODE_HPP

#include "lcbf/channel_model.hpp"
#include "lcbf/codebook.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lcbf
{

// One channel snapshot seen through every pattern of a codebook: stacked true
// channels and their noisy estimates, indexed by pattern.
struct Snapshot
{
    std::vector<CMatrix> truth;
    std::vector<CMatrix> estimate;
};

using Episode = std::vector<Snapshot>;

// Builds `length` snapshots starting from `users`. Snapshot 0 uses the given
// paths; each later snapshot applies one drift step. The drift stream is
// "<tag>/drift"; the error of snapshot t under pattern p is drawn from
// "<tag>/error/<t>/<p>", so errors at different CEE levels share the same
// underlying draws.
Episode build_episode(const std::vector<PathSet> &users, const ScenarioConfig &scenario, const SystemConfig &system,
                      const Codebook &codebook, int length, double cee_db, std::uint64_t master_seed,
                      const std::string &tag);

// Synthesizes the path sets of every user from "<tag>/user/<k>".
std::vector<PathSet> draw_users(const ScenarioConfig &scenario, const SystemConfig &system,
                                std::uint64_t master_seed, const std::string &tag);

} // namespace lcbf

#endif
