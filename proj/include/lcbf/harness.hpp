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

#ifndef LCBF_HARNESS_HPP
#define LCBF_HARNESS_HPP

#include "lcbf/config.hpp"
#include "lcbf/episode.hpp"
#include "lcbf/results_io.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace lcbf
{

// One sweep cell; every listed method is run on the same channels.
struct CellKey
{
    std::string antenna;
    double p_dbm = 0.0;
    double cee_db = 0.0;
    std::uint64_t seed = 0;
};

// Name of the random stream owned by (method, cell).
std::string cell_stream_name(const std::string &method, const CellKey &cell);

// Users of one seed: synthesized from "seed<s>/user/<k>", or read from
// <paths_dir>/paths_seed<s>.csv when paths_dir is set.
std::vector<PathSet> users_for_seed(const ExperimentConfig &cfg, std::uint64_t seed);

// The episode every method of a cell sees. Channels depend on the seed only;
// the estimation error streams are shared across CEE levels and powers.
Episode cell_episode(const ExperimentConfig &cfg, const CellKey &cell, const Codebook &codebook);

// Runs every method of cfg.methods on one cell; rows sorted by method name.
std::vector<ResultRow> run_cell(const ExperimentConfig &cfg, const CellKey &cell);

// Cells in canonical order (antenna, P, CEE, seed).
std::vector<CellKey> power_sweep_cells(const ExperimentConfig &cfg);
std::vector<CellKey> cee_sweep_cells(const ExperimentConfig &cfg);

// Runs cells in parallel (cfg.jobs threads). Rows are written to `sink` in
// canonical order as soon as every earlier cell has finished; the returned
// vector holds the same rows.
std::vector<ResultRow> run_cells(const ExperimentConfig &cfg, const std::vector<CellKey> &cells,
                                 std::ostream *sink = nullptr, bool parallel = true);

struct CommandOutput
{
    std::vector<std::string> files;
    std::vector<ResultRow> rows;
};

// Writes results_power.csv and metrics_power.json to cfg.output_dir.
CommandOutput run_power_sweep(const ExperimentConfig &cfg);
// Writes results_cee.csv and metrics_cee.json (with degradation ratios).
CommandOutput run_cee_sweep(const ExperimentConfig &cfg);

// Trains each learned method per antenna on cfg.train_episodes fresh episodes
// (P = cee_sweep_power_dbm, CEE = power_sweep_cee_db). Writes
// ckpt_<method>_<antenna>.lcbf and metrics_train.json.
CommandOutput train_command(const ExperimentConfig &cfg);

// Writes paths_seed<s>.csv for every seed.
CommandOutput gen_scenario_command(const ExperimentConfig &cfg);

// Writes codebook_<antenna>.csv for every antenna.
CommandOutput codebook_dump_command(const ExperimentConfig &cfg);

// Aggregates results CSVs into report_aggregate.csv and report_summary.json.
CommandOutput report_command(const ExperimentConfig &cfg, const std::vector<std::string> &csv_paths);

} // namespace lcbf

#endif
