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

// Serial versus OpenMP timings for the two parallel kernels: exhaustive
// pattern selection and sweep-cell execution.

#include "lcbf/baselines.hpp"
#include "lcbf/harness.hpp"
#include "lcbf/units.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

using namespace lcbf;

namespace
{

template <typename F> double best_ms(int reps, F &&f)
{
    double best = 1e300;
    for (int r = 0; r < reps; ++r)
    {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

} // namespace

int main(int argc, char **argv)
{
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("threads available: %d\n", omp_get_max_threads());

    ExperimentConfig cfg;
    cfg.seeds = {0, 1, 2, 3};
    cfg.methods = {"gd", "mrt"};
    cfg.antennas = {"lc"};
    const CellKey cell{"lc", 30.0, -10.0, 0};
    const Codebook cb = codebook_for(cfg, "lc");
    const Episode ep = cell_episode(cfg, cell, cb);
    const Snapshot &snap = ep.back();
    const double power = dbm_to_watt(30.0);

    auto channel = [&](int p) -> const CMatrix & { return snap.estimate[static_cast<std::size_t>(p)]; };
    auto gd = [&](const CMatrix &h, int) {
        return gd_precoder(h, cfg.system.users, cfg.gd, cfg.system.noise_w, power).mats.precoder;
    };

    PatternChoice a, b;
    const double sel_serial = best_ms(reps, [&] { a = select_pattern_serial(cb.size(), channel, gd, cfg.system.noise_w); });
    const double sel_par = best_ms(reps, [&] { b = select_pattern(cb.size(), channel, gd, cfg.system.noise_w); });
    std::printf("select_pattern (19 patterns, gd): serial %.2f ms, openmp %.2f ms, speedup %.2fx, same=%d\n",
                sel_serial, sel_par, sel_serial / sel_par, a.index == b.index && a.scores == b.scores);

    const auto cells = power_sweep_cells(cfg);
    std::vector<ResultRow> rs, rp;
    const double cells_serial = best_ms(reps, [&] { rs = run_cells(cfg, cells, nullptr, false); });
    const double cells_par = best_ms(reps, [&] { rp = run_cells(cfg, cells, nullptr, true); });
    std::printf("run_cells (%zu cells, gd+mrt): serial %.2f ms, openmp %.2f ms, speedup %.2fx, same=%d\n",
                cells.size(), cells_serial, cells_par, cells_serial / cells_par, rs == rp);
    return 0;
}
