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

#include "oracles.hpp"

#include "lcbf/channel_model.hpp"
#include "lcbf/units.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace lcbf;

TEST(ArrayResponse, BroadsideIsAllOnes)
{
    const CVector a = array_response(0.0, 1.234, 8, 0.5);
    for (int i = 0; i < 8; ++i)
        EXPECT_NEAR(std::abs(a(i) - cdouble(1.0, 0.0)), 0.0, 1e-15);
}

TEST(ArrayResponse, SingleElement)
{
    const CVector a = array_response(0.7, -0.3, 1, 0.5);
    ASSERT_EQ(a.size(), 1);
    EXPECT_EQ(a(0), cdouble(1.0, 0.0));
}

TEST(ArrayResponse, EndfireAlternates)
{
    const CVector a = array_response(0.5 * kPi, 0.0, 4, 0.5);
    const double expect[] = {1.0, -1.0, 1.0, -1.0};
    for (int i = 0; i < 4; ++i)
    {
        EXPECT_NEAR(a(i).real(), expect[i], 1e-12);
        EXPECT_NEAR(a(i).imag(), 0.0, 1e-12);
    }
}

TEST(ArrayResponse, UnitModulusProperty)
{
    RngStream rng(7);
    for (int trial = 0; trial < 200; ++trial)
    {
        const double th = rng.uniform(0.0, kPi);
        const double ph = rng.uniform(-kPi, kPi);
        const CVector a = array_response(th, ph, 16, rng.uniform(0.1, 2.0));
        EXPECT_EQ(a(0), cdouble(1.0, 0.0));
        for (int i = 0; i < a.size(); ++i)
            EXPECT_NEAR(std::abs(a(i)), 1.0, 1e-14);
    }
}

TEST(SynthesizePaths, DeterministicPerStream)
{
    ScenarioConfig sc;
    SystemConfig sys;
    RngStream a(99, "seed1/user/0"), b(99, "seed1/user/0");
    const PathSet x = synthesize_paths(sc, sys, 0, a);
    const PathSet y = synthesize_paths(sc, sys, 0, b);
    ASSERT_EQ(x.paths.size(), y.paths.size());
    for (std::size_t i = 0; i < x.paths.size(); ++i)
    {
        EXPECT_EQ(x.paths[i].amplitude, y.paths[i].amplitude);
        EXPECT_EQ(x.paths[i].delay_s, y.paths[i].delay_s);
        EXPECT_EQ(x.paths[i].aod.phi, y.paths[i].aod.phi);
        EXPECT_EQ(x.paths[i].aoa.phi, y.paths[i].aoa.phi);
    }
}

TEST(SynthesizePaths, LosAmplitudeFollowsFreeSpaceLoss)
{
    ScenarioConfig sc;
    sc.min_distance_m = sc.max_distance_m = 100.0;
    sc.los_probability = 1.0;
    SystemConfig sys;
    const double fspl = oracle::fspl_db(100.0, 108e9);
    EXPECT_NEAR(fspl, 113.1, 0.05);
    for (int s = 0; s < 20; ++s)
    {
        RngStream rng(static_cast<std::uint64_t>(s));
        const PathSet ps = synthesize_paths(sc, sys, 0, rng);
        EXPECT_NEAR(ps.paths[0].amplitude / std::pow(10.0, -fspl / 20.0), 1.0, 1e-12);
        EXPECT_NEAR(ps.paths[0].delay_s, 100.0 / 299792458.0, 1e-18);
    }
}

TEST(SynthesizePaths, BoundsAndSector)
{
    ScenarioConfig sc;
    SystemConfig sys;
    for (int s = 0; s < 300; ++s)
    {
        RngStream rng(static_cast<std::uint64_t>(s) * 31 + 1);
        const PathSet ps = synthesize_paths(sc, sys, 2, rng);
        EXPECT_EQ(ps.user, 2);
        ASSERT_GE(ps.paths.size(), 1u);
        ASSERT_LE(ps.paths.size(), static_cast<std::size_t>(sc.max_paths));
        for (const auto &p : ps.paths)
        {
            EXPECT_GE(p.amplitude, 0.0);
            EXPECT_GE(p.delay_s, 0.0);
            EXPECT_LE(std::abs(p.aod.phi), sc.sector_half_width + 1e-12);
            EXPECT_GT(p.aoa.phi, -kPi - 1e-12);
            EXPECT_LE(p.aoa.phi, kPi + 1e-12);
        }
    }
}

TEST(SynthesizePaths, SinglePathBound)
{
    ScenarioConfig sc;
    sc.max_paths = 1;
    SystemConfig sys;
    for (int s = 0; s < 50; ++s)
    {
        RngStream rng(static_cast<std::uint64_t>(s));
        EXPECT_EQ(synthesize_paths(sc, sys, 0, rng).paths.size(), 1u);
    }
}

TEST(SynthesizePaths, RejectsEmptyRanges)
{
    ScenarioConfig sc;
    sc.min_distance_m = 50.0;
    sc.max_distance_m = 10.0;
    SystemConfig sys;
    RngStream rng(1);
    EXPECT_THROW(synthesize_paths(sc, sys, 0, rng), std::invalid_argument);
    sc = ScenarioConfig{};
    sc.max_paths = 0;
    EXPECT_THROW(synthesize_paths(sc, sys, 0, rng), std::invalid_argument);
}

namespace
{

SystemConfig tiny_system(int m, int nk)
{
    SystemConfig s;
    s.tx_elements = m;
    s.users = 1;
    s.rx_per_user = nk;
    return s;
}

PathSet one_path(double amp, double delay, double aod, double aoa)
{
    PathSet ps;
    Path p;
    p.amplitude = amp;
    p.delay_s = delay;
    p.aod.phi = aod;
    p.aoa.phi = aoa;
    ps.paths.push_back(p);
    return ps;
}

} // namespace

TEST(AssembleChannel, UnityFactors)
{
    const SystemConfig sys = tiny_system(1, 1);
    const CMatrix h = assemble_channel(one_path(1.0, 0.0, 0.3, -0.2), isotropic_pattern(), sys);
    ASSERT_EQ(h.rows(), 1);
    ASSERT_EQ(h.cols(), 1);
    EXPECT_NEAR(std::abs(h(0, 0) - cdouble(1.0, 0.0)), 0.0, 1e-15);
}

TEST(AssembleChannel, TwoIdenticalPathsDouble)
{
    const SystemConfig sys = tiny_system(6, 3);
    PathSet one = one_path(0.4, 3e-9, 0.2, 1.0);
    PathSet two = one;
    two.paths.push_back(one.paths[0]);
    const RadiationPattern pat = build_lc_codebook()[7];
    const CMatrix h1 = assemble_channel(one, pat, sys);
    const CMatrix h2 = assemble_channel(two, pat, sys);
    EXPECT_LE((h2 - 2.0 * h1).norm(), 1e-15 * h1.norm());
}

TEST(AssembleChannel, MatchesEntrywiseOracle)
{
    SystemConfig sys = tiny_system(4, 2);
    ScenarioConfig sc;
    const Codebook cb = build_lc_codebook();
    for (int s = 0; s < 50; ++s)
    {
        RngStream rng(static_cast<std::uint64_t>(1000 + s));
        const PathSet ps = synthesize_paths(sc, sys, 0, rng);
        for (const RadiationPattern &pat : {cb[s % cb.size()], isotropic_pattern(), build_3gpp_element()})
        {
            const CMatrix h = assemble_channel(ps, pat, sys);
            const CMatrix o = oracle::channel_oracle(ps, pat, sys);
            EXPECT_LE((h - o).norm(), 1e-12 * o.norm());
        }
    }
}

TEST(AssembleChannel, LinearInPathList)
{
    SystemConfig sys = tiny_system(8, 2);
    ScenarioConfig sc;
    RngStream r1(5), r2(6);
    PathSet a = synthesize_paths(sc, sys, 0, r1);
    PathSet b = synthesize_paths(sc, sys, 0, r2);
    PathSet ab = a;
    ab.paths.insert(ab.paths.end(), b.paths.begin(), b.paths.end());
    const RadiationPattern pat = build_3gpp_element();
    const CMatrix sum = assemble_channel(a, pat, sys) + assemble_channel(b, pat, sys);
    EXPECT_LE((assemble_channel(ab, pat, sys) - sum).norm(), 1e-12 * sum.norm());
}

TEST(AssembleChannel, PhaseFollowsDelay)
{
    const SystemConfig sys = tiny_system(1, 1);
    for (double tau : {0.0, 1.3e-12, 7.77e-10, 2.5e-7})
    {
        const CMatrix h = assemble_channel(one_path(0.5, tau, 0.1, 0.2), isotropic_pattern(), sys);
        const double expect = std::remainder(-2.0 * kPi * sys.carrier_hz * tau, 2.0 * kPi);
        EXPECT_NEAR(std::remainder(std::arg(h(0, 0)) - expect, 2.0 * kPi), 0.0, 1e-6);
        EXPECT_NEAR(std::abs(h(0, 0)), 0.5, 1e-15);
    }
}

TEST(EstimationError, MinusInfinityIsExact)
{
    RngStream rng(3);
    const CMatrix h = oracle::random_complex(4, 6, rng);
    const ChannelEstimate e = inject_estimation_error(h, -std::numeric_limits<double>::infinity(), rng);
    EXPECT_EQ(e.estimate, h);
    EXPECT_EQ(e.error.norm(), 0.0);
}

TEST(EstimationError, EstimateMinusTruthIsError)
{
    RngStream rng(4);
    const CMatrix h = oracle::random_complex(4, 6, rng);
    const ChannelEstimate e = inject_estimation_error(h, -7.0, rng);
    EXPECT_LE((e.estimate - e.truth - e.error).norm(), 1e-15 * e.estimate.norm());
    EXPECT_EQ(e.cee_target_db, -7.0);
    EXPECT_NEAR(e.cee_realized_db, linear_to_db(e.error.squaredNorm() / h.squaredNorm()), 1e-12);
}

TEST(EstimationError, CalibrationSchedule)
{
    RngStream gen(11);
    const CMatrix h = oracle::random_complex(16, 48, gen);
    for (double target : {-10.0, 0.0})
    {
        for (auto [draws, tol] : {std::pair{1000, 0.5}, std::pair{10000, 0.2}})
        {
            RngStream rng(derive_seed(12, "cal" + std::to_string(draws)));
            double acc = 0.0;
            for (int i = 0; i < draws; ++i)
                acc += inject_estimation_error(h, target, rng).error.squaredNorm() / h.squaredNorm();
            EXPECT_NEAR(linear_to_db(acc / draws), target, tol) << "draws " << draws;
        }
    }
}

TEST(EstimationError, RejectsNan)
{
    RngStream rng(1);
    const CMatrix h = CMatrix::Ones(2, 2);
    EXPECT_THROW(inject_estimation_error(h, std::nan(""), rng), std::invalid_argument);
    EXPECT_THROW(inject_estimation_error(h, std::numeric_limits<double>::infinity(), rng), std::invalid_argument);
}

TEST(NormalizeChannel, Examples)
{
    RngStream rng(8);
    const CMatrix h = oracle::random_complex(3, 5, rng);
    EXPECT_EQ(normalize_channel(h, 1.0), h);
    CMatrix four(1, 1);
    four(0, 0) = 4.0;
    EXPECT_EQ(normalize_channel(four, 2.0)(0, 0), cdouble(2.0, 0.0));
    EXPECT_LE((normalize_channel(h, 3.7e-6) * 3.7e-6 - h).norm(), 1e-15 * h.norm());
    EXPECT_THROW(normalize_channel(h, 0.0), std::invalid_argument);
}

TEST(PathSetCsv, RoundTrip)
{
    ScenarioConfig sc;
    SystemConfig sys;
    std::vector<PathSet> sets;
    for (int k = 0; k < 4; ++k)
    {
        RngStream rng(77, "u" + std::to_string(k));
        sets.push_back(synthesize_paths(sc, sys, k, rng));
    }
    std::stringstream ss;
    write_pathsets_csv(ss, sets);
    const std::string first = ss.str();
    const auto back = read_pathsets_csv(ss);
    ASSERT_EQ(back.size(), sets.size());
    for (std::size_t k = 0; k < sets.size(); ++k)
    {
        ASSERT_EQ(back[k].paths.size(), sets[k].paths.size());
        for (std::size_t l = 0; l < sets[k].paths.size(); ++l)
        {
            EXPECT_EQ(back[k].paths[l].amplitude, sets[k].paths[l].amplitude);
            EXPECT_EQ(back[k].paths[l].aod.phi, sets[k].paths[l].aod.phi);
            EXPECT_EQ(back[k].paths[l].aoa.theta, sets[k].paths[l].aoa.theta);
        }
    }
    std::stringstream again;
    write_pathsets_csv(again, back);
    EXPECT_EQ(again.str(), first);
    EXPECT_EQ(first.substr(0, first.find('\r')), "user,path_idx,amp,delay_s,aod_theta,aod_phi,aoa_theta,aoa_phi");
}

TEST(PathSetCsv, RejectsBadHeader)
{
    std::stringstream ss("user,amp\r\n0,1\r\n");
    EXPECT_THROW(read_pathsets_csv(ss), std::runtime_error);
}
