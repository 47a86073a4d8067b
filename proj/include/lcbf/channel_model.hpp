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

#ifndef LCBF_CHANNEL_MODEL_HPP
#define LCBF_CHANNEL_MODEL_HPP

#include "lcbf/codebook.hpp"
#include "lcbf/rng.hpp"
#include "lcbf/types.hpp"

#include <iosfwd>
#include <limits>
#include <vector>

namespace lcbf
{

// Downlink link dimensions and budgets. Powers are in watts.
struct SystemConfig
{
    int tx_elements = 48; // M
    int users = 4;        // K
    int rx_per_user = 4;  // N_k, equal for all users
    double carrier_hz = 108e9;
    double tx_spacing = 0.5; // d_t / lambda
    double rx_spacing = 0.5; // d_r / lambda
    double power_w = 1.0;    // 30 dBm
    double noise_w = 1e-12;  // -90 dBm

    int total_rx() const { return users * rx_per_user; }
    void validate() const;
};

struct Direction
{
    double theta = 0.5 * kPi; // polar angle, [0, pi]
    double phi = 0.0;         // azimuth, (-pi, pi]
};

struct Path
{
    double amplitude = 0.0; // |a_l|, linear
    double delay_s = 0.0;
    Direction aod;
    Direction aoa;
};

struct PathSet
{
    int user = 0;
    std::vector<Path> paths;
};

// Parametric stand-in for site-specific propagation.
struct ScenarioConfig
{
    int max_paths = 6;
    double los_probability = 0.8;
    double sector_half_width = deg_to_rad(60.0);
    double min_distance_m = 30.0;
    double max_distance_m = 300.0;
    double nlos_excess_mean_db = 15.0;
    double nlos_excess_std_db = 5.0;
    double max_excess_delay_s = 200e-9;
    double elevation = 0.5 * kPi; // theta used for every departure and arrival

    // Per-snapshot drift used to build episodes.
    double drift_aod_std = deg_to_rad(0.5);
    double drift_delay_std_s = 1e-12;

    void validate() const;
};

// [1, e^{j 2 pi d sin(theta) cos(phi)}, ..., e^{j 2 pi d (n-1) sin(theta) cos(phi)}]
CVector array_response(double theta, double phi, int n_elements, double spacing_over_lambda);

// 20 log10(4 pi d f / c).
double free_space_path_loss_db(double distance_m, double carrier_hz);

// Draws the path set of one user. Deterministic in (scenario, user, rng state).
// The first path is LOS when the LOS draw succeeds.
PathSet synthesize_paths(const ScenarioConfig &scenario, const SystemConfig &system, int user, RngStream &rng);

// One snapshot step of angular and delay drift.
PathSet evolve_paths(const PathSet &paths, const ScenarioConfig &scenario, RngStream &rng);

// H_k = sum_l alpha_l sqrt(G(aod_l)) a_r(aoa_l) a_t(aod_l)^H,
// alpha_l = |a_l| exp(-j 2 pi f_c tau_l). Result is N_k x M.
CMatrix assemble_channel(const PathSet &paths, const RadiationPattern &pattern, const SystemConfig &system);

// Stacks the per-user channels of `users` (ordered by position) into N x M.
CMatrix stack_channels(const std::vector<PathSet> &users, const RadiationPattern &pattern,
                       const SystemConfig &system);

struct ChannelEstimate
{
    CMatrix truth;
    CMatrix error;
    CMatrix estimate;
    double cee_target_db = -std::numeric_limits<double>::infinity();
    double cee_realized_db = -std::numeric_limits<double>::infinity();
};

// E ~ CN(0, 10^(cee/10) ||H||_F^2 / (N M)) entrywise; H_hat = H + E.
// cee_db = -inf gives E = 0.
ChannelEstimate inject_estimation_error(const CMatrix &truth, double cee_db, RngStream &rng);

// H_hat / sigma.
CMatrix normalize_channel(const CMatrix &channel, double sigma);

// CSV columns: user,path_idx,amp,delay_s,aod_theta,aod_phi,aoa_theta,aoa_phi
void write_pathsets_csv(std::ostream &os, const std::vector<PathSet> &sets);
std::vector<PathSet> read_pathsets_csv(std::istream &is);

} // namespace lcbf

#endif
