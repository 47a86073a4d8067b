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

#include <CLI11.hpp>

#include <iostream>

namespace
{

struct Overrides
{
    std::string config;
    std::uint64_t seed = 0;
    std::string out;
    std::string methods;
    std::string antennas;
    int jobs = -1;
    bool timing = false;
};

lcbf::ExperimentConfig resolve(const Overrides &o, const CLI::App &app)
{
    lcbf::ExperimentConfig cfg = o.config.empty() ? lcbf::ExperimentConfig{} : lcbf::load_config(o.config);
    if (app.count("--seed"))
        cfg.master_seed = o.seed;
    if (!o.out.empty())
        cfg.output_dir = o.out;
    if (!o.methods.empty())
        cfg.methods = lcbf::split_list(o.methods);
    if (!o.antennas.empty())
        cfg.antennas = lcbf::split_list(o.antennas);
    if (o.jobs >= 0)
        cfg.jobs = o.jobs;
    if (o.timing)
        cfg.timing = true;
    cfg.validate();
    return cfg;
}

void print_files(const lcbf::CommandOutput &out)
{
    for (const auto &f : out.files)
        std::cout << f << "\n";
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"lcbf: hybrid beamforming with liquid-crystal pattern codebooks and liquid neural precoders"};
    app.require_subcommand(1);
    app.fallthrough();

    Overrides o;
    app.add_option("--config", o.config, "JSON experiment configuration")->check(CLI::ExistingFile);
    app.add_option("--seed", o.seed, "master seed (u64)");
    app.add_option("--out", o.out, "output directory");
    app.add_option("--methods", o.methods, "comma list from lnn,gru,gd,mrt");
    app.add_option("--antennas", o.antennas, "comma list from lc,gpp,isotropic");
    app.add_option("--jobs", o.jobs, "worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);
    app.add_flag("--timing", o.timing, "fill the wall_time_ms column (makes output run-dependent)");

    auto *gen = app.add_subcommand("gen-scenario", "write synthetic path sets, one CSV per seed");
    auto *train = app.add_subcommand("train", "train learned precoders and write checkpoints");
    auto *power = app.add_subcommand("sweep-power", "spectral efficiency versus transmit power");
    auto *cee = app.add_subcommand("sweep-cee", "spectral efficiency versus channel estimation error");
    auto *codebook = app.add_subcommand("codebook", "codebook utilities");
    auto *dump = codebook->add_subcommand("dump", "write pattern gains on a 0.5 degree azimuth grid");
    codebook->require_subcommand(1);
    auto *report = app.add_subcommand("report", "aggregate results CSVs");
    std::vector<std::string> inputs;
    report->add_option("csv", inputs, "results CSV files")->required()->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try
    {
        const lcbf::ExperimentConfig cfg = resolve(o, app);
        if (*gen)
            print_files(lcbf::gen_scenario_command(cfg));
        else if (*train)
            print_files(lcbf::train_command(cfg));
        else if (*power)
            print_files(lcbf::run_power_sweep(cfg));
        else if (*cee)
            print_files(lcbf::run_cee_sweep(cfg));
        else if (*dump)
            print_files(lcbf::codebook_dump_command(cfg));
        else if (*report)
            print_files(lcbf::report_command(cfg, inputs));
    }
    catch (const std::exception &e)
    {
        std::cerr << "lcbf: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
