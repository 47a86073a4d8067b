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

#include "lcbf/episode.hpp"

namespace lcbf
{

Episode build_episode(const std::vector<PathSet> &users, const ScenarioConfig &scenario, const SystemConfig &system,
                      const Codebook &codebook, int length, double cee_db, std::uint64_t master_seed,
                      const std::string &tag)
{
    if (length < 1)
        throw std::invalid_argument("build_episode: episode length must be >= 1");
    if (static_cast<int>(users.size()) != system.users)
        throw std::invalid_argument("build_episode: one path set per user required");

    RngStream drift(master_seed, tag + "/drift");
    std::vector<PathSet> current = users;
    Episode episode;
    episode.reserve(static_cast<std::size_t>(length));
    for (int t = 0; t < length; ++t)
    {
        if (t > 0)
            for (PathSet &u : current)
                u = evolve_paths(u, scenario, drift);

        Snapshot snap;
        for (int p = 0; p < codebook.size(); ++p)
        {
            RngStream err(master_seed, tag + "/error/" + std::to_string(t) + "/" + std::to_string(p));
            ChannelEstimate est = inject_estimation_error(stack_channels(current, codebook[p], system), cee_db, err);
            snap.truth.push_back(std::move(est.truth));
            snap.estimate.push_back(std::move(est.estimate));
        }
        episode.push_back(std::move(snap));
    }
    return episode;
}

std::vector<PathSet> draw_users(const ScenarioConfig &scenario, const SystemConfig &system,
                                std::uint64_t master_seed, const std::string &tag)
{
    std::vector<PathSet> users;
    for (int k = 0; k < system.users; ++k)
    {
        RngStream rng(master_seed, tag + "/user/" + std::to_string(k));
        users.push_back(synthesize_paths(scenario, system, k, rng));
    }
    return users;
}

} // namespace lcbf
