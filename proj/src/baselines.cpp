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

#include "lcbf/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace lcbf
{

const char *to_string(GDInit init) { return init == GDInit::random ? "random" : "matched_filter"; }

GDInit gd_init_from_string(const std::string &s)
{
    if (s == "matched_filter")
        return GDInit::matched_filter;
    if (s == "random")
        return GDInit::random;
    throw std::invalid_argument("unknown gd init: " + s);
}

void GDConfig::validate() const
{
    if (n_iters < 1)
        throw std::invalid_argument("gd: n_iters must be >= 1");
    if (!(step_size >= 0.0) || !std::isfinite(step_size))
        throw std::invalid_argument("gd: step size must be finite and non-negative");
    if (max_redraws < 1)
        throw std::invalid_argument("gd: max_redraws must be >= 1");
}

CMatrix mrt_base(int total_rx, int users)
{
    if (users < 1 || total_rx % users != 0)
        throw std::invalid_argument("mrt: receive antennas must split evenly across users");
    const int nk = total_rx / users;
    CMatrix x = CMatrix::Zero(total_rx, users);
    for (int k = 0; k < users; ++k)
        x.block(k * nk, k, nk, 1).setOnes();
    return x;
}

PrecoderMats mrt_precoder(const CMatrix &channel, int users, double power)
{
    return apply_power_constraint(channel, mrt_base(static_cast<int>(channel.rows()), users), power);
}

namespace
{

CMatrix unit(const CMatrix &x) { return x / x.norm(); }

CMatrix random_base(Eigen::Index rows, Eigen::Index cols, RngStream &rng)
{
    CMatrix x(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j)
            x(i, j) = rng.complex_normal(1.0);
    return x;
}

} // namespace

GDResult gd_precoder(const CMatrix &channel, int users, const GDConfig &config, double noise_power, double power,
                     RngStream *rng)
{
    config.validate();
    const int total_rx = static_cast<int>(channel.rows());

    CMatrix x;
    BaseForward fwd;
    if (config.init == GDInit::matched_filter)
    {
        x = unit(mrt_base(total_rx, users));
        fwd = evaluate_base(channel, x, power, noise_power);
    }
    else
    {
        if (!rng)
            throw std::invalid_argument("gd: random init needs an rng stream");
        for (int attempt = 0;; ++attempt)
        {
            try
            {
                x = unit(random_base(total_rx, users, *rng));
                fwd = evaluate_base(channel, x, power, noise_power);
                break;
            }
            catch (const DegeneratePrecoder &)
            {
                if (attempt + 1 >= config.max_redraws)
                    throw;
            }
        }
    }

    const RVector ones = RVector::Ones(users);
    GDResult best;
    best.mats = fwd.mats;
    best.se = fwd.rates.sum();
    best.trace.push_back(best.se);

    for (int it = 1; it < config.n_iters; ++it)
    {
        const CMatrix grad = base_backward(channel, fwd, noise_power, ones);
        const double gn = grad.norm();
        if (!(gn > 0.0) || !std::isfinite(gn))
            break;
        const CMatrix stepped = x + (config.step_size / gn) * grad;
        const double n = stepped.norm();
        if (!(n > 0.0) || !std::isfinite(n))
            break;
        x = stepped / n;
        try
        {
            fwd = evaluate_base(channel, x, power, noise_power);
        }
        catch (const DegeneratePrecoder &)
        {
            break;
        }
        const double se = fwd.rates.sum();
        best.trace.push_back(se);
        if (se > best.se)
        {
            best.se = se;
            best.mats = fwd.mats;
        }
    }
    return best;
}

} // namespace lcbf
