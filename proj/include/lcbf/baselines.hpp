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

#ifndef LCBF_BASELINES_HPP
#define LCBF_BASELINES_HPP

#include "lcbf/bf_core.hpp"
#include "lcbf/rng.hpp"

#include <string>
#include <vector>

namespace lcbf
{

enum class GDInit
{
    matched_filter,
    random
};

const char *to_string(GDInit init);
GDInit gd_init_from_string(const std::string &s);

struct GDConfig
{
    int n_iters = 100;
    double step_size = 0.05;
    GDInit init = GDInit::matched_filter;
    int max_redraws = 8; // random init only

    void validate() const;
};

struct GDResult
{
    PrecoderMats mats;
    double se = 0.0;
    std::vector<double> trace; // SE of every iterate, initialization first
};

// Gradient ascent on R(H, W(X)) over the base matrix X. X is kept at unit
// Frobenius norm (W does not depend on its scale) and each step moves it by
// step_size along the normalized gradient; every iterate is passed
// through the power constraint and the best one is returned. `rng` is only
// used for random initialization.
GDResult gd_precoder(const CMatrix &channel, int users, const GDConfig &config, double noise_power, double power,
                     RngStream *rng = nullptr);

// X with ones on the rows of user k in column k: W = H^H X sums each user's
// conjugated channel rows (matched filter), then power-normalized.
CMatrix mrt_base(int total_rx, int users);
PrecoderMats mrt_precoder(const CMatrix &channel, int users, double power);

} // namespace lcbf

#endif
