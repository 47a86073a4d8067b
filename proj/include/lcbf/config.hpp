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

#ifndef LCBF_CONFIG_HPP
#define LCBF_CONFIG_HPP

#include "lcbf/baselines.hpp"
#include "lcbf/channel_model.hpp"
#include "lcbf/codebook.hpp"
#include "lcbf/training.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lcbf
{

// Methods: lnn, gru, gd, mrt.  Antennas: lc, gpp, isotropic.
struct ExperimentConfig
{
    SystemConfig system;
    ScenarioConfig scenario;
    LcCodebookParams codebook;
    SelectionCriterion selection = SelectionCriterion::spectral_efficiency;

    std::vector<std::string> methods{"lnn", "gru", "gd", "mrt"};
    std::vector<std::string> antennas{"lc", "gpp", "isotropic"};
    std::vector<double> power_grid_dbm{10.0, 15.0, 20.0, 25.0, 30.0};
    std::vector<double> cee_grid_db{-20.0, -15.0, -10.0, -5.0, 0.0}; // -inf allowed
    std::vector<std::uint64_t> seeds{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::uint64_t master_seed = 20240611;

    double power_sweep_cee_db = -10.0;
    double cee_sweep_power_dbm = 30.0;
    double noise_dbm = -90.0;

    int hidden = 64;
    int layers = 3;
    double snapshot_interval = 1.0;
    double loss_floor = 1e-6;
    TrainSettings train{80, AdamConfig{}, true};
    int train_episodes = 8; // episodes generated by the train command

    GDConfig gd;
    int episode_length = 5;

    std::string output_dir = "out";
    int jobs = 0; // 0: OpenMP default
    bool timing = false;
    std::string paths_dir;       // optional: paths_seed<s>.csv replaces synthesis
    std::string init_checkpoint_dir; // optional warm start for lnn/gru

    void validate() const;
};

// Unknown keys are rejected. Missing keys keep their defaults. Angles in the
// file are in degrees, powers in dBm.
ExperimentConfig load_config(const std::string &path);
ExperimentConfig config_from_json_text(const std::string &text);
std::string config_to_json_text(const ExperimentConfig &cfg);

// "a,b,c" -> {a, b, c}
std::vector<std::string> split_list(const std::string &s);

bool is_learned_method(const std::string &method);
Codebook codebook_for(const ExperimentConfig &cfg, const std::string &antenna);

} // namespace lcbf

#endif
