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

#include "lcbf/channel_model.hpp"
#include "lcbf/csv.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>

namespace lcbf
{

void SystemConfig::validate() const
{
    if (tx_elements < 1 || users < 1 || rx_per_user < 1)
        throw std::invalid_argument("SystemConfig: element and user counts must be positive");
    if (tx_elements < total_rx())
        throw std::invalid_argument("SystemConfig: need M >= N = K * N_k");
    if (!(carrier_hz > 0.0))
        throw std::invalid_argument("SystemConfig: carrier frequency must be positive");
    if (!(power_w > 0.0) || !(noise_w > 0.0))
        throw std::invalid_argument("SystemConfig: power budget and noise power must be positive");
}

void ScenarioConfig::validate() const
{
    if (max_paths < 1)
        throw std::invalid_argument("ScenarioConfig: max_paths must be >= 1");
    if (!(los_probability >= 0.0 && los_probability <= 1.0))
        throw std::invalid_argument("ScenarioConfig: los_probability must lie in [0, 1]");
    if (!(min_distance_m > 0.0) || !(max_distance_m >= min_distance_m))
        throw std::invalid_argument("ScenarioConfig: empty or non-positive distance range");
    if (!(sector_half_width >= 0.0) || sector_half_width > kPi)
        throw std::invalid_argument("ScenarioConfig: sector half width must lie in [0, pi]");
    if (nlos_excess_std_db < 0.0 || max_excess_delay_s < 0.0 || drift_aod_std < 0.0 || drift_delay_std_s < 0.0)
        throw std::invalid_argument("ScenarioConfig: spreads must be non-negative");
    if (!(elevation >= 0.0 && elevation <= kPi))
        throw std::invalid_argument("ScenarioConfig: elevation must lie in [0, pi]");
}

CVector array_response(double theta, double phi, int n_elements, double spacing_over_lambda)
{
    if (n_elements < 1)
        throw std::invalid_argument("array_response: need at least one element");
    const double step = 2.0 * kPi * spacing_over_lambda * std::sin(theta) * std::cos(phi);
    CVector a(n_elements);
    for (int w = 0; w < n_elements; ++w)
        a(w) = std::polar(1.0, step * w);
    return a;
}

double free_space_path_loss_db(double distance_m, double carrier_hz)
{
    return 20.0 * std::log10(4.0 * kPi * distance_m * carrier_hz / kSpeedOfLight);
}

PathSet synthesize_paths(const ScenarioConfig &scenario, const SystemConfig &system, int user, RngStream &rng)
{
    scenario.validate();
    PathSet set;
    set.user = user;

    const double distance = scenario.max_distance_m > scenario.min_distance_m
                                ? rng.uniform(scenario.min_distance_m, scenario.max_distance_m)
                                : scenario.min_distance_m;
    const bool los = rng.uniform() < scenario.los_probability;
    const int count = rng.uniform_int(1, scenario.max_paths);
    const double fspl = free_space_path_loss_db(distance, system.carrier_hz);
    const double base_delay = distance / kSpeedOfLight;

    auto sector_draw = [&] {
        return scenario.sector_half_width > 0.0 ? rng.uniform(-scenario.sector_half_width, scenario.sector_half_width)
                                                : 0.0;
    };

    set.paths.reserve(static_cast<std::size_t>(count));
    for (int l = 0; l < count; ++l)
    {
        Path p;
        p.aod.theta = scenario.elevation;
        p.aoa.theta = scenario.elevation;
        p.aod.phi = sector_draw();
        p.aoa.phi = wrap_angle(rng.uniform(-kPi, kPi));
        if (l == 0 && los)
        {
            p.amplitude = std::pow(10.0, -fspl / 20.0);
            p.delay_s = base_delay;
        }
        else
        {
            const double excess = std::max(0.0, scenario.nlos_excess_mean_db + scenario.nlos_excess_std_db * rng.normal());
            p.amplitude = std::pow(10.0, -(fspl + excess) / 20.0);
            p.delay_s = base_delay + rng.uniform(0.0, scenario.max_excess_delay_s);
        }
        set.paths.push_back(p);
    }
    return set;
}

PathSet evolve_paths(const PathSet &paths, const ScenarioConfig &scenario, RngStream &rng)
{
    PathSet next = paths;
    for (Path &p : next.paths)
    {
        const double d_phi = scenario.drift_aod_std * rng.normal();
        const double d_tau = scenario.drift_delay_std_s * rng.normal();
        p.aod.phi = wrap_angle(p.aod.phi + d_phi);
        p.delay_s = std::abs(p.delay_s + d_tau);
    }
    return next;
}

CMatrix assemble_channel(const PathSet &paths, const RadiationPattern &pattern, const SystemConfig &system)
{
    CMatrix h = CMatrix::Zero(system.rx_per_user, system.tx_elements);
    for (const Path &p : paths.paths)
    {
        const cdouble alpha = std::polar(p.amplitude, -2.0 * kPi * system.carrier_hz * p.delay_s);
        const double amp_gain = std::sqrt(pattern_gain(pattern, p.aod.theta, p.aod.phi));
        const CVector a_r = array_response(p.aoa.theta, p.aoa.phi, system.rx_per_user, system.rx_spacing);
        const CVector a_t = array_response(p.aod.theta, p.aod.phi, system.tx_elements, system.tx_spacing);
        h.noalias() += (alpha * amp_gain) * (a_r * a_t.adjoint());
    }
    return h;
}

CMatrix stack_channels(const std::vector<PathSet> &users, const RadiationPattern &pattern,
                       const SystemConfig &system)
{
    CMatrix h(system.rx_per_user * static_cast<int>(users.size()), system.tx_elements);
    for (std::size_t k = 0; k < users.size(); ++k)
        h.middleRows(static_cast<Eigen::Index>(k) * system.rx_per_user, system.rx_per_user) =
            assemble_channel(users[k], pattern, system);
    return h;
}

ChannelEstimate inject_estimation_error(const CMatrix &truth, double cee_db, RngStream &rng)
{
    if (std::isnan(cee_db) || cee_db == std::numeric_limits<double>::infinity())
        throw std::invalid_argument("inject_estimation_error: CEE must be finite or -inf");
    ChannelEstimate est;
    est.truth = truth;
    est.cee_target_db = cee_db;
    est.error = CMatrix::Zero(truth.rows(), truth.cols());
    const double power = truth.squaredNorm();
    if (std::isfinite(cee_db) && power > 0.0)
    {
        const double variance = std::pow(10.0, cee_db / 10.0) * power / static_cast<double>(truth.size());
        for (Eigen::Index r = 0; r < truth.rows(); ++r)
            for (Eigen::Index c = 0; c < truth.cols(); ++c)
                est.error(r, c) = rng.complex_normal(variance);
        est.cee_realized_db = 10.0 * std::log10(est.error.squaredNorm() / power);
    }
    est.estimate = truth + est.error;
    return est;
}

CMatrix normalize_channel(const CMatrix &channel, double sigma)
{
    if (!(sigma > 0.0))
        throw std::invalid_argument("normalize_channel: sigma must be positive");
    return channel / sigma;
}

void write_pathsets_csv(std::ostream &os, const std::vector<PathSet> &sets)
{
    csv::write_record(os, {"user", "path_idx", "amp", "delay_s", "aod_theta", "aod_phi", "aoa_theta", "aoa_phi"});
    for (const PathSet &s : sets)
        for (std::size_t l = 0; l < s.paths.size(); ++l)
        {
            const Path &p = s.paths[l];
            csv::write_record(os, {std::to_string(s.user), std::to_string(l), csv::format_double(p.amplitude),
                                   csv::format_double(p.delay_s), csv::format_double(p.aod.theta),
                                   csv::format_double(p.aod.phi), csv::format_double(p.aoa.theta),
                                   csv::format_double(p.aoa.phi)});
        }
}

std::vector<PathSet> read_pathsets_csv(std::istream &is)
{
    const auto header = csv::read_record(is);
    const std::vector<std::string> expected = {"user",    "path_idx", "amp",       "delay_s",
                                               "aod_theta", "aod_phi", "aoa_theta", "aoa_phi"};
    if (!header || *header != expected)
        throw std::runtime_error("path set CSV: unexpected header");

    std::map<int, std::map<int, Path>> by_user;
    while (auto rec = csv::read_record(is))
    {
        if (rec->size() == 1 && (*rec)[0].empty())
            continue;
        if (rec->size() != expected.size())
            throw std::runtime_error("path set CSV: wrong column count");
        const int user = std::stoi((*rec)[0]);
        const int idx = std::stoi((*rec)[1]);
        Path p;
        p.amplitude = csv::parse_double((*rec)[2]);
        p.delay_s = csv::parse_double((*rec)[3]);
        p.aod = {csv::parse_double((*rec)[4]), csv::parse_double((*rec)[5])};
        p.aoa = {csv::parse_double((*rec)[6]), csv::parse_double((*rec)[7])};
        if (p.amplitude < 0.0 || p.delay_s < 0.0)
            throw std::runtime_error("path set CSV: negative amplitude or delay");
        if (!by_user[user].emplace(idx, p).second)
            throw std::runtime_error("path set CSV: duplicate (user, path_idx)");
    }

    std::vector<PathSet> sets;
    for (auto &[user, paths] : by_user)
    {
        PathSet s;
        s.user = user;
        for (auto &[idx, p] : paths)
            s.paths.push_back(p);
        sets.push_back(std::move(s));
    }
    return sets;
}

} // namespace lcbf
