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

#include "lcbf/codebook.hpp"
#include "lcbf/bf_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>

namespace lcbf
{

double pattern_gain_db(const RadiationPattern &pattern, double theta, double phi)
{
    switch (pattern.kind)
    {
    case PatternKind::isotropic:
        return 0.0;
    case PatternKind::lc_steered:
    {
        const double off = wrap_angle(phi - pattern.steer_azimuth) / pattern.hpbw;
        return pattern.peak_gain_db - std::min(12.0 * off * off, -pattern.floor_db);
    }
    case PatternKind::gpp_element:
    {
        // TR 38.901 Table 7.3-1, boresight at theta = 90 deg, phi = 0.
        const double limit = -pattern.floor_db;
        const double v = (theta - 0.5 * kPi) / pattern.hpbw;
        const double h = wrap_angle(phi) / pattern.hpbw;
        const double a_v = -std::min(12.0 * v * v, limit);
        const double a_h = -std::min(12.0 * h * h, limit);
        return pattern.peak_gain_db - std::min(-(a_v + a_h), limit);
    }
    }
    return 0.0;
}

double pattern_gain(const RadiationPattern &pattern, double theta, double phi)
{
    return std::pow(10.0, pattern_gain_db(pattern, theta, phi) / 10.0);
}

RadiationPattern isotropic_pattern() { return RadiationPattern{}; }

RadiationPattern build_3gpp_element()
{
    RadiationPattern p;
    p.kind = PatternKind::gpp_element;
    p.steer_azimuth = 0.0;
    p.peak_gain_db = 8.0;
    p.hpbw = deg_to_rad(65.0);
    p.floor_db = -30.0;
    return p;
}

Codebook build_lc_codebook(const LcCodebookParams &params)
{
    if (params.count < 2)
        throw std::invalid_argument("build_lc_codebook: need at least two patterns");
    if (!(params.steer_max > params.steer_min))
        throw std::invalid_argument("build_lc_codebook: steer_max must exceed steer_min");
    if (!(params.hpbw > 0.0))
        throw std::invalid_argument("build_lc_codebook: beamwidth must be positive");
    if (!(params.floor_db < 0.0))
        throw std::invalid_argument("build_lc_codebook: sidelobe floor must be negative");

    Codebook cb;
    cb.patterns.reserve(static_cast<std::size_t>(params.count));
    const double step = (params.steer_max - params.steer_min) / (params.count - 1);
    for (int p = 0; p < params.count; ++p)
    {
        RadiationPattern pat;
        pat.kind = PatternKind::lc_steered;
        pat.steer_azimuth = p + 1 == params.count ? params.steer_max : params.steer_min + p * step;
        pat.peak_gain_db = params.peak_gain_db;
        pat.hpbw = params.hpbw;
        pat.floor_db = params.floor_db;
        cb.patterns.push_back(pat);
    }
    return cb;
}

Codebook single_pattern_codebook(const RadiationPattern &pattern)
{
    Codebook cb;
    cb.patterns.push_back(pattern);
    return cb;
}

int argmax_lowest(const std::vector<double> &scores)
{
    if (scores.empty())
        throw std::invalid_argument("argmax over an empty score list");
    int best = 0;
    for (int i = 1; i < static_cast<int>(scores.size()); ++i)
        if (scores[static_cast<std::size_t>(i)] > scores[static_cast<std::size_t>(best)])
            best = i;
    return best;
}

namespace
{

PatternChoice finish(std::vector<double> scores)
{
    PatternChoice c;
    c.index = argmax_lowest(scores);
    c.score = scores[static_cast<std::size_t>(c.index)];
    c.scores = std::move(scores);
    return c;
}

} // namespace

PatternChoice select_pattern_serial(int pattern_count, const ChannelProvider &channel,
                                    const PrecoderProvider &precoder, double noise_power)
{
    std::vector<double> scores(static_cast<std::size_t>(pattern_count));
    for (int p = 0; p < pattern_count; ++p)
    {
        const CMatrix &h = channel(p);
        scores[static_cast<std::size_t>(p)] = spectral_efficiency(h, precoder(h, p), noise_power);
    }
    return finish(std::move(scores));
}

PatternChoice select_pattern(int pattern_count, const ChannelProvider &channel, const PrecoderProvider &precoder,
                             double noise_power)
{
    std::vector<double> scores(static_cast<std::size_t>(pattern_count));
    std::exception_ptr failure;
#pragma omp parallel for schedule(static) if (pattern_count > 1)
    for (int p = 0; p < pattern_count; ++p)
    {
        try
        {
            const CMatrix &h = channel(p);
            scores[static_cast<std::size_t>(p)] = spectral_efficiency(h, precoder(h, p), noise_power);
        }
        catch (...)
        {
#pragma omp critical(lcbf_select_pattern)
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return finish(std::move(scores));
}

PatternChoice select_pattern_by_gain(int pattern_count, const ChannelProvider &channel)
{
    std::vector<double> scores(static_cast<std::size_t>(pattern_count));
    for (int p = 0; p < pattern_count; ++p)
        scores[static_cast<std::size_t>(p)] = channel(p).squaredNorm();
    return finish(std::move(scores));
}

void write_codebook_csv(std::ostream &os, const Codebook &codebook, double resolution_deg)
{
    const int samples = static_cast<int>(std::lround(360.0 / resolution_deg)) + 1;
    char buf[64];
    os << "pattern_idx,steer_deg";
    for (int s = 0; s < samples; ++s)
    {
        std::snprintf(buf, sizeof buf, ",g_%.1f", -180.0 + s * resolution_deg);
        os << buf;
    }
    os << "\r\n";
    for (int p = 0; p < codebook.size(); ++p)
    {
        std::snprintf(buf, sizeof buf, "%d,%.4f", p + 1, rad_to_deg(codebook[p].steer_azimuth));
        os << buf;
        for (int s = 0; s < samples; ++s)
        {
            const double az = deg_to_rad(-180.0 + s * resolution_deg);
            std::snprintf(buf, sizeof buf, ",%.6f", pattern_gain_db(codebook[p], 0.5 * kPi, az));
            os << buf;
        }
        os << "\r\n";
    }
}

} // namespace lcbf
