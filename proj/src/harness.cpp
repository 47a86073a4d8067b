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

#include "lcbf/harness.hpp"
#include "lcbf/checkpoint.hpp"
#include "lcbf/csv.hpp"
#include "lcbf/units.hpp"

#include <json.hpp>
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>

namespace lcbf
{

using nlohmann::json;
namespace fs = std::filesystem;

namespace
{

std::string out_path(const ExperimentConfig &cfg, const std::string &name)
{
    fs::create_directories(cfg.output_dir);
    return (fs::path(cfg.output_dir) / name).string();
}

std::ofstream open_out(const std::string &path)
{
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os)
        throw std::runtime_error("cannot write '" + path + "'");
    return os;
}

ObjectiveConfig objective_for(const ExperimentConfig &cfg, double power_w)
{
    ObjectiveConfig o;
    o.power_w = power_w;
    o.noise_w = cfg.system.noise_w;
    o.loss_floor = cfg.loss_floor;
    o.snapshot_interval = cfg.snapshot_interval;
    return o;
}

NetworkShape shape_for(const ExperimentConfig &cfg, const std::string &method)
{
    return precoder_shape(method == "gru" ? CellKind::gru : CellKind::cfc, cfg.system.total_rx(),
                          cfg.system.tx_elements, cfg.system.users, cfg.hidden, cfg.layers);
}

std::string checkpoint_name(const std::string &method, const std::string &antenna)
{
    return "ckpt_" + method + "_" + antenna + ".lcbf";
}

// Fresh network for a cell, or a warm start when a checkpoint directory is
// configured.
PrecoderNet initial_network(const ExperimentConfig &cfg, const std::string &method, const std::string &antenna,
                            RngStream &rng)
{
    const NetworkShape shape = shape_for(cfg, method);
    if (cfg.init_checkpoint_dir.empty())
        return PrecoderNet::initialized(shape, rng);
    Checkpoint c = load_checkpoint((fs::path(cfg.init_checkpoint_dir) / checkpoint_name(method, antenna)).string());
    if (!(c.net.shape() == shape))
        throw std::invalid_argument("checkpoint shape does not match the configured network");
    return std::move(c.net);
}

struct MethodOutcome
{
    int index = 0;
    CMatrix precoder;
};

MethodOutcome run_classical(const ExperimentConfig &cfg, const std::string &method, const CellKey &cell,
                            const Snapshot &snap, double power_w)
{
    const int users = cfg.system.users;
    const int patterns = static_cast<int>(snap.estimate.size());
    const double noise = cfg.system.noise_w;
    const std::string stream = cell_stream_name(method, cell);

    auto precoder_for = [&](const CMatrix &h, int p) -> CMatrix {
        if (method == "mrt")
            return mrt_precoder(h, users, power_w).precoder;
        RngStream rng(derive_seed(0, stream), "pattern/" + std::to_string(p));
        return gd_precoder(h, users, cfg.gd, noise, power_w, &rng).mats.precoder;
    };
    auto channel = [&](int p) -> const CMatrix & { return snap.estimate[static_cast<std::size_t>(p)]; };

    MethodOutcome out;
    if (cfg.selection == SelectionCriterion::frobenius_gain)
    {
        out.index = select_pattern_by_gain(patterns, channel).index;
        out.precoder = precoder_for(channel(out.index), out.index);
    }
    else
    {
        // Keep the winning precoder instead of recomputing it.
        std::vector<CMatrix> found(static_cast<std::size_t>(patterns));
        auto keep = [&](const CMatrix &h, int p) {
            CMatrix w = precoder_for(h, p);
            found[static_cast<std::size_t>(p)] = w;
            return w;
        };
        out.index = select_pattern(patterns, channel, keep, noise).index;
        out.precoder = std::move(found[static_cast<std::size_t>(out.index)]);
    }
    return out;
}

template <typename F> auto timed(bool enabled, std::optional<double> &ms, F &&f)
{
    const auto t0 = std::chrono::steady_clock::now();
    auto r = f();
    if (enabled)
        ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

void write_text(const std::string &path, const std::string &text)
{
    std::ofstream os = open_out(path);
    os << text;
}

} // namespace

std::string cell_stream_name(const std::string &method, const CellKey &cell)
{
    return method + "/" + cell.antenna + "/p" + csv::format_double(cell.p_dbm) + "/cee" +
           csv::format_double(cell.cee_db) + "/seed" + std::to_string(cell.seed);
}

std::vector<PathSet> users_for_seed(const ExperimentConfig &cfg, std::uint64_t seed)
{
    if (cfg.paths_dir.empty())
        return draw_users(cfg.scenario, cfg.system, cfg.master_seed, "seed" + std::to_string(seed));
    const std::string path = (fs::path(cfg.paths_dir) / ("paths_seed" + std::to_string(seed) + ".csv")).string();
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open path file '" + path + "'");
    std::vector<PathSet> sets = read_pathsets_csv(in);
    if (static_cast<int>(sets.size()) != cfg.system.users)
        throw std::invalid_argument("path file '" + path + "' does not hold one path set per user");
    return sets;
}

Episode cell_episode(const ExperimentConfig &cfg, const CellKey &cell, const Codebook &codebook)
{
    SystemConfig sys = cfg.system;
    sys.power_w = dbm_to_watt(cell.p_dbm);
    const std::string tag = "seed" + std::to_string(cell.seed);
    return build_episode(users_for_seed(cfg, cell.seed), cfg.scenario, sys, codebook, cfg.episode_length,
                         cell.cee_db, cfg.master_seed, tag);
}

std::vector<ResultRow> run_cell(const ExperimentConfig &cfg, const CellKey &cell)
{
    const Codebook codebook = codebook_for(cfg, cell.antenna);
    const Episode episode = cell_episode(cfg, cell, codebook);
    const Snapshot &last = episode.back();
    const double power_w = dbm_to_watt(cell.p_dbm);
    const ObjectiveConfig objective = objective_for(cfg, power_w);

    std::vector<std::string> methods = cfg.methods;
    std::sort(methods.begin(), methods.end());

    std::vector<ResultRow> rows;
    for (const std::string &method : methods)
    {
        ResultRow row;
        row.method = method;
        row.antenna = cell.antenna;
        row.p_dbm = cell.p_dbm;
        row.cee_db = cell.cee_db;
        row.seed = cell.seed;

        MethodOutcome o = timed(cfg.timing, row.wall_time_ms, [&] {
            if (!is_learned_method(method))
                return run_classical(cfg, method, cell, last, power_w);
            RngStream rng(cfg.master_seed, cell_stream_name(method, cell) + "/init");
            PrecoderNet net = initial_network(cfg, method, cell.antenna, rng);
            AdamState adam;
            TrainSettings settings = cfg.train;
            train(net, adam, {episode}, objective, settings);
            EpisodeOutcome e = infer_episode(net, episode, objective, cfg.train.stateful);
            return MethodOutcome{e.last.choice.index, std::move(e.last.precoder)};
        });

        const auto p = static_cast<std::size_t>(o.index);
        row.p_star = o.index + 1;
        row.se_est = spectral_efficiency(last.estimate[p], o.precoder, cfg.system.noise_w);
        const RVector rates = per_user_rates(last.truth[p], o.precoder, cfg.system.noise_w);
        row.rates_true.assign(rates.data(), rates.data() + rates.size());
        row.se_true = rates.sum();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<CellKey> power_sweep_cells(const ExperimentConfig &cfg)
{
    std::vector<CellKey> cells;
    for (const auto &a : cfg.antennas)
        for (double p : cfg.power_grid_dbm)
            for (auto s : cfg.seeds)
                cells.push_back({a, p, cfg.power_sweep_cee_db, s});
    std::sort(cells.begin(), cells.end(), [](const CellKey &x, const CellKey &y) {
        return std::tie(x.antenna, x.p_dbm, x.cee_db, x.seed) < std::tie(y.antenna, y.p_dbm, y.cee_db, y.seed);
    });
    return cells;
}

std::vector<CellKey> cee_sweep_cells(const ExperimentConfig &cfg)
{
    std::vector<CellKey> cells;
    for (const auto &a : cfg.antennas)
        for (double c : cfg.cee_grid_db)
            for (auto s : cfg.seeds)
                cells.push_back({a, cfg.cee_sweep_power_dbm, c, s});
    std::sort(cells.begin(), cells.end(), [](const CellKey &x, const CellKey &y) {
        return std::tie(x.antenna, x.p_dbm, x.cee_db, x.seed) < std::tie(y.antenna, y.p_dbm, y.cee_db, y.seed);
    });
    return cells;
}

std::vector<ResultRow> run_cells(const ExperimentConfig &cfg, const std::vector<CellKey> &cells, std::ostream *sink,
                                 bool parallel)
{
    const int n = static_cast<int>(cells.size());
    std::vector<std::vector<ResultRow>> done(cells.size());
    std::vector<char> finished(cells.size(), 0);
    int next_flush = 0;
    std::exception_ptr failure;

    auto flush_ready = [&] {
        while (next_flush < n && finished[static_cast<std::size_t>(next_flush)])
        {
            if (sink)
            {
                for (const auto &r : done[static_cast<std::size_t>(next_flush)])
                    write_result_row(*sink, r);
                sink->flush();
            }
            ++next_flush;
        }
    };

    const int threads = parallel ? (cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads()) : 1;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int i = 0; i < n; ++i)
    {
        bool skip = false;
#pragma omp critical(lcbf_sweep_state)
        skip = static_cast<bool>(failure);
        if (skip)
            continue;
        try
        {
            std::vector<ResultRow> rows = run_cell(cfg, cells[static_cast<std::size_t>(i)]);
#pragma omp critical(lcbf_sweep_state)
            {
                done[static_cast<std::size_t>(i)] = std::move(rows);
                finished[static_cast<std::size_t>(i)] = 1;
                flush_ready();
            }
        }
        catch (...)
        {
#pragma omp critical(lcbf_sweep_state)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<ResultRow> all;
    for (auto &rows : done)
        for (auto &r : rows)
            all.push_back(std::move(r));
    return all;
}

namespace
{

CommandOutput run_sweep(const ExperimentConfig &cfg, const std::vector<CellKey> &cells, const std::string &label)
{
    cfg.validate();
    CommandOutput out;
    const std::string csv_path = out_path(cfg, "results_" + label + ".csv");
    {
        std::ofstream os = open_out(csv_path);
        write_results_header(os);
        out.rows = run_cells(cfg, cells, &os);
        if (!os)
            throw std::runtime_error("failed writing '" + csv_path + "'");
    }
    json metrics = json::parse(summary_json(out.rows));
    metrics["command"] = "sweep-" + label;
    metrics["config"] = json::parse(config_to_json_text(cfg));
    const std::string json_path = out_path(cfg, "metrics_" + label + ".json");
    write_text(json_path, metrics.dump(2) + "\n");
    out.files = {csv_path, json_path};
    return out;
}

} // namespace

CommandOutput run_power_sweep(const ExperimentConfig &cfg) { return run_sweep(cfg, power_sweep_cells(cfg), "power"); }

CommandOutput run_cee_sweep(const ExperimentConfig &cfg) { return run_sweep(cfg, cee_sweep_cells(cfg), "cee"); }

CommandOutput train_command(const ExperimentConfig &cfg)
{
    cfg.validate();
    struct Job
    {
        std::string method;
        std::string antenna;
    };
    std::vector<Job> jobs;
    for (const auto &a : cfg.antennas)
        for (const auto &m : cfg.methods)
            if (is_learned_method(m))
                jobs.push_back({m, a});

    const double power_w = dbm_to_watt(cfg.cee_sweep_power_dbm);
    SystemConfig sys = cfg.system;
    sys.power_w = power_w;
    const ObjectiveConfig objective = objective_for(cfg, power_w);

    std::vector<json> entries(jobs.size());
    std::vector<std::string> files(jobs.size());
    std::exception_ptr failure;
    const int n = static_cast<int>(jobs.size());
    const int threads = cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int i = 0; i < n; ++i)
    {
        try
        {
            const Job &job = jobs[static_cast<std::size_t>(i)];
            const Codebook codebook = codebook_for(cfg, job.antenna);
            std::vector<Episode> data;
            for (int e = 0; e < cfg.train_episodes; ++e)
            {
                const std::string tag = "train/" + std::to_string(e);
                data.push_back(build_episode(draw_users(cfg.scenario, sys, cfg.master_seed, tag), cfg.scenario, sys,
                                             codebook, cfg.episode_length, cfg.power_sweep_cee_db, cfg.master_seed,
                                             tag));
            }
            const std::string base = job.method + "/" + job.antenna + "/train";
            RngStream init(cfg.master_seed, base + "/init");
            RngStream shuffle(cfg.master_seed, base + "/shuffle");
            Checkpoint ckpt;
            ckpt.method = job.method;
            ckpt.net = PrecoderNet::initialized(shape_for(cfg, job.method), init);
            ckpt.adam_config = cfg.train.adam;
            const TrainMetrics m = train(ckpt.net, ckpt.adam, data, objective, cfg.train, &shuffle);
            ckpt.rng_state = shuffle.state();
            const std::string path = out_path(cfg, checkpoint_name(job.method, job.antenna));
            save_checkpoint(path, ckpt);

            json e;
            e["method"] = job.method;
            e["antenna"] = job.antenna;
            e["cell"] = to_string(ckpt.net.shape().cell);
            e["parameter_count"] = ckpt.net.parameter_count();
            e["steps"] = m.steps;
            e["epoch_loss"] = m.epoch_loss;
            e["epoch_se"] = m.epoch_se;
            e["pattern_histogram"] = m.pattern_histogram;
            e["checkpoint"] = checkpoint_name(job.method, job.antenna);
            entries[static_cast<std::size_t>(i)] = e;
            files[static_cast<std::size_t>(i)] = path;
        }
        catch (...)
        {
#pragma omp critical(lcbf_train_state)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);

    json metrics;
    metrics["command"] = "train";
    metrics["runs"] = entries;
    metrics["config"] = json::parse(config_to_json_text(cfg));
    const std::string json_path = out_path(cfg, "metrics_train.json");
    write_text(json_path, metrics.dump(2) + "\n");

    CommandOutput out;
    out.files = files;
    out.files.push_back(json_path);
    return out;
}

CommandOutput gen_scenario_command(const ExperimentConfig &cfg)
{
    cfg.validate();
    CommandOutput out;
    ExperimentConfig synth = cfg;
    synth.paths_dir.clear();
    for (auto s : cfg.seeds)
    {
        const std::string path = out_path(cfg, "paths_seed" + std::to_string(s) + ".csv");
        std::ofstream os = open_out(path);
        write_pathsets_csv(os, users_for_seed(synth, s));
        out.files.push_back(path);
    }
    return out;
}

CommandOutput codebook_dump_command(const ExperimentConfig &cfg)
{
    cfg.validate();
    CommandOutput out;
    for (const auto &a : cfg.antennas)
    {
        const std::string path = out_path(cfg, "codebook_" + a + ".csv");
        std::ofstream os = open_out(path);
        write_codebook_csv(os, codebook_for(cfg, a));
        out.files.push_back(path);
    }
    return out;
}

CommandOutput report_command(const ExperimentConfig &cfg, const std::vector<std::string> &csv_paths)
{
    if (csv_paths.empty())
        throw std::invalid_argument("report: no results files given");
    CommandOutput out;
    for (const auto &p : csv_paths)
    {
        auto rows = read_results_file(p);
        out.rows.insert(out.rows.end(), rows.begin(), rows.end());
    }
    std::stable_sort(out.rows.begin(), out.rows.end(), canonical_less);

    const std::string agg_path = out_path(cfg, "report_aggregate.csv");
    {
        std::ofstream os = open_out(agg_path);
        write_aggregate(os, aggregate(out.rows));
    }
    json summary = json::parse(summary_json(out.rows));
    summary["command"] = "report";
    summary["inputs"] = csv_paths;
    const std::string json_path = out_path(cfg, "report_summary.json");
    write_text(json_path, summary.dump(2) + "\n");
    out.files = {agg_path, json_path};
    return out;
}

} // namespace lcbf
