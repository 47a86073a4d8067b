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

#include "lcbf/config.hpp"
#include "lcbf/units.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lcbf
{

using nlohmann::json;

namespace
{

// Reads known keys of one object and rejects the rest.
class Reader
{
public:
    Reader(const json &j, std::string where) : j_(j), where_(std::move(where))
    {
        if (!j_.is_object())
            throw std::invalid_argument("config: '" + where_ + "' must be an object");
    }

    template <typename T> void get(const char *key, T &out)
    {
        seen_.insert(key);
        auto it = j_.find(key);
        if (it == j_.end())
            return;
        try
        {
            out = it->template get<T>();
        }
        catch (const json::exception &e)
        {
            throw std::invalid_argument("config: bad value for '" + where_ + "." + key + "': " + e.what());
        }
    }

    void deg(const char *key, double &rad)
    {
        double d = rad_to_deg(rad);
        get(key, d);
        rad = deg_to_rad(d);
    }

    const json *child(const char *key)
    {
        seen_.insert(key);
        auto it = j_.find(key);
        return it == j_.end() ? nullptr : &*it;
    }

    void finish() const
    {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!seen_.count(it.key()))
                throw std::invalid_argument("config: unknown key '" + where_ + "." + it.key() + "'");
    }

private:
    const json &j_;
    std::string where_;
    std::set<std::string> seen_;
};

double db_value(const json &v)
{
    if (v.is_number())
        return v.get<double>();
    if (v.is_string())
    {
        const std::string s = v.get<std::string>();
        if (s == "-inf")
            return -std::numeric_limits<double>::infinity();
    }
    throw std::invalid_argument("config: CEE values must be numbers or \"-inf\"");
}

json db_json(double v)
{
    if (std::isinf(v) && v < 0)
        return "-inf";
    return v;
}

const std::set<std::string> kMethods{"lnn", "gru", "gd", "mrt"};
const std::set<std::string> kAntennas{"lc", "gpp", "isotropic"};

} // namespace

void ExperimentConfig::validate() const
{
    system.validate();
    scenario.validate();
    if (methods.empty() || antennas.empty())
        throw std::invalid_argument("config: method and antenna lists must be non-empty");
    for (const auto &m : methods)
        if (!kMethods.count(m))
            throw std::invalid_argument("config: unknown method '" + m + "'");
    for (const auto &a : antennas)
        if (!kAntennas.count(a))
            throw std::invalid_argument("config: unknown antenna '" + a + "'");
    if (power_grid_dbm.empty() || cee_grid_db.empty() || seeds.empty())
        throw std::invalid_argument("config: grids and seed list must be non-empty");
    for (double p : power_grid_dbm)
        if (!std::isfinite(p))
            throw std::invalid_argument("config: power grid entries must be finite");
    for (double c : cee_grid_db)
        if (std::isnan(c) || c == std::numeric_limits<double>::infinity())
            throw std::invalid_argument("config: CEE grid entries must be finite or -inf");
    std::vector<std::uint64_t> s = seeds;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("config: seeds must be distinct");
    if (hidden < 1 || layers < 1)
        throw std::invalid_argument("config: network width and depth must be positive");
    if (!(snapshot_interval >= 0.0) || !(loss_floor > 0.0))
        throw std::invalid_argument("config: snapshot interval must be >= 0 and loss floor > 0");
    if (train.epochs < 0 || train_episodes < 1 || episode_length < 1)
        throw std::invalid_argument("config: epochs >= 0, train_episodes >= 1 and episode_length >= 1 required");
    if (!(train.adam.learning_rate > 0.0))
        throw std::invalid_argument("config: learning rate must be positive");
    gd.validate();
    if (jobs < 0)
        throw std::invalid_argument("config: jobs must be >= 0");
}

ExperimentConfig config_from_json_text(const std::string &text)
{
    json root;
    try
    {
        root = json::parse(text);
    }
    catch (const json::parse_error &e)
    {
        throw std::invalid_argument(std::string("config: malformed JSON: ") + e.what());
    }

    ExperimentConfig c;
    Reader r(root, "root");

    if (const json *j = r.child("system"))
    {
        Reader s(*j, "system");
        s.get("tx_elements", c.system.tx_elements);
        s.get("users", c.system.users);
        s.get("rx_per_user", c.system.rx_per_user);
        s.get("carrier_hz", c.system.carrier_hz);
        s.get("tx_spacing", c.system.tx_spacing);
        s.get("rx_spacing", c.system.rx_spacing);
        s.get("noise_dbm", c.noise_dbm);
        s.finish();
    }
    if (const json *j = r.child("scenario"))
    {
        Reader s(*j, "scenario");
        s.get("max_paths", c.scenario.max_paths);
        s.get("los_probability", c.scenario.los_probability);
        s.deg("sector_half_width_deg", c.scenario.sector_half_width);
        s.get("min_distance_m", c.scenario.min_distance_m);
        s.get("max_distance_m", c.scenario.max_distance_m);
        s.get("nlos_excess_mean_db", c.scenario.nlos_excess_mean_db);
        s.get("nlos_excess_std_db", c.scenario.nlos_excess_std_db);
        s.get("max_excess_delay_s", c.scenario.max_excess_delay_s);
        s.deg("elevation_deg", c.scenario.elevation);
        s.deg("drift_aod_std_deg", c.scenario.drift_aod_std);
        s.get("drift_delay_std_s", c.scenario.drift_delay_std_s);
        s.finish();
    }
    if (const json *j = r.child("codebook"))
    {
        Reader s(*j, "codebook");
        s.get("count", c.codebook.count);
        s.deg("steer_min_deg", c.codebook.steer_min);
        s.deg("steer_max_deg", c.codebook.steer_max);
        s.get("peak_gain_db", c.codebook.peak_gain_db);
        s.deg("hpbw_deg", c.codebook.hpbw);
        s.get("floor_db", c.codebook.floor_db);
        std::string sel = c.selection == SelectionCriterion::frobenius_gain ? "frobenius_gain" : "spectral_efficiency";
        s.get("selection", sel);
        if (sel == "spectral_efficiency")
            c.selection = SelectionCriterion::spectral_efficiency;
        else if (sel == "frobenius_gain")
            c.selection = SelectionCriterion::frobenius_gain;
        else
            throw std::invalid_argument("config: unknown selection criterion '" + sel + "'");
        s.finish();
    }
    r.get("methods", c.methods);
    r.get("antennas", c.antennas);
    r.get("power_grid_dbm", c.power_grid_dbm);
    if (const json *j = r.child("cee_grid_db"))
    {
        if (!j->is_array())
            throw std::invalid_argument("config: cee_grid_db must be an array");
        c.cee_grid_db.clear();
        for (const auto &v : *j)
            c.cee_grid_db.push_back(db_value(v));
    }
    r.get("seeds", c.seeds);
    r.get("master_seed", c.master_seed);
    if (const json *j = r.child("power_sweep_cee_db"))
        c.power_sweep_cee_db = db_value(*j);
    r.get("cee_sweep_power_dbm", c.cee_sweep_power_dbm);

    if (const json *j = r.child("network"))
    {
        Reader s(*j, "network");
        s.get("hidden", c.hidden);
        s.get("layers", c.layers);
        s.get("snapshot_interval", c.snapshot_interval);
        s.get("loss_floor", c.loss_floor);
        s.finish();
    }
    if (const json *j = r.child("train"))
    {
        Reader s(*j, "train");
        s.get("epochs", c.train.epochs);
        s.get("learning_rate", c.train.adam.learning_rate);
        s.get("beta1", c.train.adam.beta1);
        s.get("beta2", c.train.adam.beta2);
        s.get("epsilon", c.train.adam.epsilon);
        s.get("stateful", c.train.stateful);
        s.get("episodes", c.train_episodes);
        s.finish();
    }
    if (const json *j = r.child("gd"))
    {
        Reader s(*j, "gd");
        s.get("n_iters", c.gd.n_iters);
        s.get("step_size", c.gd.step_size);
        std::string init = to_string(c.gd.init);
        s.get("init", init);
        c.gd.init = gd_init_from_string(init);
        s.get("max_redraws", c.gd.max_redraws);
        s.finish();
    }
    r.get("episode_length", c.episode_length);
    r.get("output_dir", c.output_dir);
    r.get("jobs", c.jobs);
    r.get("timing", c.timing);
    r.get("paths_dir", c.paths_dir);
    r.get("init_checkpoint_dir", c.init_checkpoint_dir);
    r.finish();

    c.system.noise_w = dbm_to_watt(c.noise_dbm);
    c.validate();
    return c;
}

ExperimentConfig load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return config_from_json_text(ss.str());
}

std::string config_to_json_text(const ExperimentConfig &c)
{
    json j;
    j["system"] = {{"tx_elements", c.system.tx_elements}, {"users", c.system.users},
                   {"rx_per_user", c.system.rx_per_user}, {"carrier_hz", c.system.carrier_hz},
                   {"tx_spacing", c.system.tx_spacing},   {"rx_spacing", c.system.rx_spacing},
                   {"noise_dbm", c.noise_dbm}};
    j["scenario"] = {{"max_paths", c.scenario.max_paths},
                     {"los_probability", c.scenario.los_probability},
                     {"sector_half_width_deg", rad_to_deg(c.scenario.sector_half_width)},
                     {"min_distance_m", c.scenario.min_distance_m},
                     {"max_distance_m", c.scenario.max_distance_m},
                     {"nlos_excess_mean_db", c.scenario.nlos_excess_mean_db},
                     {"nlos_excess_std_db", c.scenario.nlos_excess_std_db},
                     {"max_excess_delay_s", c.scenario.max_excess_delay_s},
                     {"elevation_deg", rad_to_deg(c.scenario.elevation)},
                     {"drift_aod_std_deg", rad_to_deg(c.scenario.drift_aod_std)},
                     {"drift_delay_std_s", c.scenario.drift_delay_std_s}};
    j["codebook"] = {{"count", c.codebook.count},
                     {"steer_min_deg", rad_to_deg(c.codebook.steer_min)},
                     {"steer_max_deg", rad_to_deg(c.codebook.steer_max)},
                     {"peak_gain_db", c.codebook.peak_gain_db},
                     {"hpbw_deg", rad_to_deg(c.codebook.hpbw)},
                     {"floor_db", c.codebook.floor_db},
                     {"selection", c.selection == SelectionCriterion::frobenius_gain ? "frobenius_gain"
                                                                                      : "spectral_efficiency"}};
    j["methods"] = c.methods;
    j["antennas"] = c.antennas;
    j["power_grid_dbm"] = c.power_grid_dbm;
    j["cee_grid_db"] = json::array();
    for (double v : c.cee_grid_db)
        j["cee_grid_db"].push_back(db_json(v));
    j["seeds"] = c.seeds;
    j["master_seed"] = c.master_seed;
    j["power_sweep_cee_db"] = db_json(c.power_sweep_cee_db);
    j["cee_sweep_power_dbm"] = c.cee_sweep_power_dbm;
    j["network"] = {{"hidden", c.hidden},
                    {"layers", c.layers},
                    {"snapshot_interval", c.snapshot_interval},
                    {"loss_floor", c.loss_floor}};
    j["train"] = {{"epochs", c.train.epochs},       {"learning_rate", c.train.adam.learning_rate},
                  {"beta1", c.train.adam.beta1},    {"beta2", c.train.adam.beta2},
                  {"epsilon", c.train.adam.epsilon}, {"stateful", c.train.stateful},
                  {"episodes", c.train_episodes}};
    j["gd"] = {{"n_iters", c.gd.n_iters},
               {"step_size", c.gd.step_size},
               {"init", to_string(c.gd.init)},
               {"max_redraws", c.gd.max_redraws}};
    j["episode_length"] = c.episode_length;
    j["output_dir"] = c.output_dir;
    j["jobs"] = c.jobs;
    j["timing"] = c.timing;
    j["paths_dir"] = c.paths_dir;
    j["init_checkpoint_dir"] = c.init_checkpoint_dir;
    return j.dump(2) + "\n";
}

std::vector<std::string> split_list(const std::string &s)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ','))
    {
        const auto b = cur.find_first_not_of(" \t");
        const auto e = cur.find_last_not_of(" \t");
        if (b != std::string::npos)
            out.push_back(cur.substr(b, e - b + 1));
    }
    return out;
}

bool is_learned_method(const std::string &method) { return method == "lnn" || method == "gru"; }

Codebook codebook_for(const ExperimentConfig &cfg, const std::string &antenna)
{
    if (antenna == "lc")
        return build_lc_codebook(cfg.codebook);
    if (antenna == "gpp")
        return single_pattern_codebook(build_3gpp_element());
    if (antenna == "isotropic")
        return single_pattern_codebook(isotropic_pattern());
    throw std::invalid_argument("unknown antenna '" + antenna + "'");
}

} // namespace lcbf
