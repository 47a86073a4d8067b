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

#ifndef LCBF_CODEBOOK_HPP
#define LCBF_CODEBOOK_HPP

#include "lcbf/types.hpp"

#include <functional>
#include <ostream>
#include <vector>

namespace lcbf
{

enum class PatternKind
{
    lc_steered,
    gpp_element,
    isotropic
};

// Directional power-gain model of one element pattern.
//
// lc_steered: parabolic-in-dB main lobe around `steer_azimuth` with a hard
//             floor `floor_db` below the peak.
// gpp_element: fixed boresight element with combined vertical/horizontal cuts.
// isotropic:  0 dBi everywhere.
struct RadiationPattern
{
    PatternKind kind = PatternKind::isotropic;
    double steer_azimuth = 0.0; // rad
    double peak_gain_db = 0.0;  // dBi
    double hpbw = 2.0 * kPi;    // rad, half-power beamwidth
    double floor_db = -30.0;    // dB relative to peak
};

// Gain in dBi toward (theta, phi). theta is the polar angle (pi/2 is the
// horizontal plane), phi the azimuth.
double pattern_gain_db(const RadiationPattern &pattern, double theta, double phi);

// Linear power gain, 10^(G_dB/10).
double pattern_gain(const RadiationPattern &pattern, double theta, double phi);

RadiationPattern isotropic_pattern();

// Single-element pattern of the 3GPP TR 38.901 antenna model: 65 deg HPBW in
// both cuts, 8 dBi peak, 30 dB front-to-back and side-lobe limits.
RadiationPattern build_3gpp_element();

struct Codebook
{
    std::vector<RadiationPattern> patterns;

    int size() const { return static_cast<int>(patterns.size()); }
    const RadiationPattern &operator[](int p) const { return patterns.at(static_cast<std::size_t>(p)); }
};

struct LcCodebookParams
{
    int count = 19;
    double steer_min = deg_to_rad(-45.0);
    double steer_max = deg_to_rad(45.0);
    double peak_gain_db = 6.87;
    double hpbw = deg_to_rad(5.0);
    double floor_db = -20.0;
};

// Uniformly spaced steering angles, both endpoints included.
Codebook build_lc_codebook(const LcCodebookParams &params = {});

// Codebook with a single fixed pattern (3GPP element or isotropic).
Codebook single_pattern_codebook(const RadiationPattern &pattern);

enum class SelectionCriterion
{
    spectral_efficiency,
    frobenius_gain
};

struct PatternChoice
{
    int index = 0; // 0-based; reported as p* = index + 1
    double score = 0.0;
    std::vector<double> scores; // one per pattern
};

// Maps pattern index -> stacked estimated channel for that pattern.
using ChannelProvider = std::function<const CMatrix &(int)>;
// Maps (stacked estimated channel, pattern index) -> precoder W (M x K).
using PrecoderProvider = std::function<CMatrix(const CMatrix &, int)>;

// Exhaustive analog selection: scores every pattern with the spectral
// efficiency of the full pipeline R(H^(p), W(H^(p))) and returns the
// maximizer. Ties go to the lowest index. Per-pattern evaluations run in
// parallel; the providers must be safe to call concurrently.
PatternChoice select_pattern(int pattern_count, const ChannelProvider &channel, const PrecoderProvider &precoder,
                             double noise_power);

// Serial reference for select_pattern; produces identical output.
PatternChoice select_pattern_serial(int pattern_count, const ChannelProvider &channel,
                                    const PrecoderProvider &precoder, double noise_power);

// Alternative criterion: maximize the Frobenius gain ||H^(p)||_F^2.
PatternChoice select_pattern_by_gain(int pattern_count, const ChannelProvider &channel);

// Lowest-index argmax over a score list.
int argmax_lowest(const std::vector<double> &scores);

// CSV: pattern_idx, steer_deg, then gains in dBi on an azimuth grid from -180
// to 180 degrees at `resolution_deg` spacing, theta = pi/2.
void write_codebook_csv(std::ostream &os, const Codebook &codebook, double resolution_deg = 0.5);

} // namespace lcbf

#endif
