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

#include "lcbf/episode.hpp"
#include "lcbf/ltc.hpp"
#include "lcbf/network.hpp"
#include "lcbf/training.hpp"
#include "lcbf/units.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace lcbf;

// ---- liquid time-constant reference ------------------------------------

namespace
{

LtcParams random_ltc(int d, RngStream &rng)
{
    LtcParams p;
    p.leak = RVector(d);
    p.bias = RVector(d);
    p.gain = RVector(d);
    for (int i = 0; i < d; ++i)
    {
        p.leak(i) = rng.uniform(0.1, 2.0);
        p.bias(i) = rng.uniform(-1.0, 1.0);
        p.gain(i) = rng.uniform(-1.0, 1.0);
    }
    return p;
}

} // namespace

TEST(Ltc, PureDecay)
{
    LtcParams p;
    p.leak = RVector::Ones(1);
    p.bias = RVector::Zero(1);
    p.gain = RVector::Zero(1);
    const RVector x = ltc_ode_integrate(
        RVector::Ones(1), [](double) { return RVector::Zero(1); }, p, [](const RVector &) { return RVector::Zero(1); },
        1.0, 1e-3);
    EXPECT_NEAR(x(0), std::exp(-1.0), 1e-8);
    EXPECT_NEAR(x(0), 0.367879, 1e-6);
}

TEST(Ltc, FixedPointAtZero)
{
    LtcParams p;
    p.leak = RVector::Constant(3, 0.5);
    p.bias = RVector::Zero(3);
    p.gain = RVector::Zero(3);
    const RVector x = ltc_ode_integrate(
        RVector::Zero(3), [](double) { return RVector::Ones(2); }, p,
        [](const RVector &) { return RVector::Constant(3, 0.7); }, 2.0, 1e-2);
    EXPECT_EQ(x.norm(), 0.0);
}

TEST(Ltc, ClosedFormLimits)
{
    RngStream rng(1);
    const LtcParams p = random_ltc(5, rng);
    const RVector x0 = RVector::Random(5);
    const RVector f = RVector::Constant(5, 0.3);
    EXPECT_TRUE(ltc_closed_form(x0, p.bias, p.leak, f, 0.0) == x0);
    EXPECT_LE((ltc_closed_form(x0, p.bias, p.leak, f, 500.0) - p.bias).norm(), 1e-12);
}

TEST(Ltc, ClosedFormMatchesRk4)
{
    RngStream rng(2);
    for (int trial = 0; trial < 100; ++trial)
    {
        const LtcParams p = random_ltc(4, rng);
        RVector x0(4), f(4);
        for (int i = 0; i < 4; ++i)
        {
            x0(i) = rng.uniform(-2.0, 2.0);
            f(i) = rng.uniform(0.0, 3.0);
        }
        const double t = rng.uniform(0.1, 3.0);
        const RVector ode = ltc_ode_integrate(
            x0, [](double) { return RVector::Zero(2); }, p, [&](const RVector &) { return f; }, t, 1e-3);
        const RVector cf = ltc_closed_form(x0, p.bias, p.leak, f, t);
        for (int i = 0; i < 4; ++i)
            EXPECT_LE(std::abs(ode(i) - cf(i)), 1e-6 * std::max(1.0, std::abs(cf(i))));
    }
}

TEST(Ltc, IntegralFormWithVaryingInput)
{
    // f(i(t)) = c t integrates to c t^2 / 2.
    LtcParams p;
    p.leak = RVector::Constant(2, 0.4);
    p.bias = RVector::Constant(2, 0.25);
    p.gain = RVector::Zero(2);
    const RVector c = (RVector(2) << 0.5, 1.5).finished();
    const RVector x0 = (RVector(2) << 1.0, -1.0).finished();
    const double t = 1.7;
    const RVector ode = ltc_ode_integrate(
        x0, [](double s) { return RVector::Constant(1, s); }, p,
        [&](const RVector &in) { return RVector(c * in(0)); }, t, 1e-3);
    const RVector cf = ltc_closed_form_integral(x0, p.bias, p.leak, RVector(c * (0.5 * t * t)), t);
    EXPECT_LE((ode - cf).norm(), 1e-8);
}

// ---- cells and network --------------------------------------------------

namespace
{

// One-layer network with every head weight zero, so heads equal their
// biases and the hidden output can be read off directly.
struct BiasOnly
{
    PrecoderNet net;
    HiddenState next;
    ForwardTape tape;

    BiasOnly(CellKind cell, double fb, double gb, double hb) : net(NetworkShape{cell, 4, 3, 1, 2})
    {
        const auto &lay = net.layout();
        auto set = [&](const TensorSpec &t, double v) { net.params().segment(t.offset, t.size()).setConstant(v); };
        set(lay.bias(0, 0), fb);
        set(lay.bias(0, 1), gb);
        set(lay.bias(0, 2), hb);
    }

    RVector run(double t)
    {
        net.forward(RVector::Ones(4), net.zero_state(), t, next, &tape);
        return next[0];
    }
};

} // namespace

TEST(CfcCell, ZeroDecayAverages)
{
    BiasOnly b(CellKind::cfc, -1e3, 0.4, -0.2);
    const RVector x = b.run(1.0);
    for (int i = 0; i < 3; ++i)
        EXPECT_NEAR(x(i), 0.5 * (std::tanh(0.4) + std::tanh(-0.2)), 1e-15);
}

TEST(CfcCell, SaturatedDecaySelectsH)
{
    BiasOnly b(CellKind::cfc, 1e3, 0.4, -0.2);
    const RVector x = b.run(1.0);
    for (int i = 0; i < 3; ++i)
        EXPECT_NEAR(x(i), std::tanh(-0.2), 1e-15);
}

TEST(CfcCell, ZeroTimeAverages)
{
    BiasOnly b(CellKind::cfc, 3.0, 0.9, 0.1);
    const RVector x = b.run(0.0);
    for (int i = 0; i < 3; ++i)
        EXPECT_NEAR(x(i), 0.5 * (std::tanh(0.9) + std::tanh(0.1)), 1e-15);
}

TEST(CfcCell, GateBoundedness)
{
    RngStream rng(3);
    const NetworkShape shape = precoder_shape(CellKind::cfc, 4, 8, 2, 16);
    for (int trial = 0; trial < 20; ++trial)
    {
        const PrecoderNet net = PrecoderNet::initialized(shape, rng);
        HiddenState state = net.zero_state();
        for (auto &s : state)
            s = RVector::Random(16);
        RVector in(shape.input);
        for (int i = 0; i < in.size(); ++i)
            in(i) = 3.0 * rng.normal();
        HiddenState next;
        ForwardTape tape;
        net.forward(in, state, rng.uniform(0.0, 4.0), next, &tape);
        for (int l = 0; l < 3; ++l)
            for (int i = 0; i < 16; ++i)
            {
                const double g = tape.layers[l].head[1](i), h = tape.layers[l].head[2](i);
                EXPECT_GE(next[l](i), std::min(g, h) - 1e-15);
                EXPECT_LE(next[l](i), std::max(g, h) + 1e-15);
            }
    }
}

TEST(GruCell, ZeroEverythingGivesZero)
{
    const PrecoderNet net(NetworkShape{CellKind::gru, 6, 5, 2, 4});
    HiddenState next;
    net.forward(RVector::Zero(6), net.zero_state(), 1.0, next);
    for (const auto &h : next)
        EXPECT_EQ(h.norm(), 0.0);
}

TEST(Network, ZeroParametersGiveDegeneratePrecoder)
{
    const NetworkShape shape = precoder_shape(CellKind::cfc, 4, 8, 2, 8);
    const PrecoderNet net(shape);
    RngStream rng(4);
    const CMatrix h = oracle::random_complex(4, 8, rng);
    HiddenState next;
    const RVector out = net.forward(featurize(h), net.zero_state(), 1.0, next);
    EXPECT_EQ(out.norm(), 0.0);
    ObjectiveConfig obj;
    obj.noise_w = 1.0;
    EXPECT_THROW(evaluate_loss(net, h, net.zero_state(), obj), DegeneratePrecoder);
}

TEST(Network, Deterministic)
{
    RngStream rng(5);
    const PrecoderNet net = PrecoderNet::initialized(precoder_shape(CellKind::cfc, 4, 8, 2, 8), rng);
    const CMatrix h = oracle::random_complex(4, 8, rng);
    HiddenState a, b;
    EXPECT_TRUE(net.forward(featurize(h), net.zero_state(), 1.0, a) ==
                net.forward(featurize(h), net.zero_state(), 1.0, b));
}

TEST(Network, BatchMatchesSingle)
{
    RngStream rng(6);
    for (CellKind cell : {CellKind::cfc, CellKind::gru})
    {
        const PrecoderNet net = PrecoderNet::initialized(precoder_shape(cell, 4, 8, 2, 8), rng);
        HiddenState state = net.zero_state();
        for (auto &s : state)
            s = RVector::Random(8);
        RMatrix feats(64, 5);
        feats.setRandom();
        std::vector<HiddenState> nexts;
        const RMatrix out = net.forward_batch(feats, state, 1.3, &nexts);
        for (int c = 0; c < 5; ++c)
        {
            HiddenState next;
            const RVector one = net.forward(feats.col(c), state, 1.3, next);
            EXPECT_LE((one - out.col(c)).norm(), 1e-12 * (1.0 + one.norm()));
            for (int l = 0; l < 3; ++l)
                EXPECT_LE((next[l] - nexts[c][l]).norm(), 1e-12);
        }
    }
}

TEST(Network, FeaturizationLayout)
{
    CMatrix h(2, 2);
    h << cdouble(1, 5), cdouble(2, 6), cdouble(3, 7), cdouble(4, 8);
    const RVector f = featurize(h);
    for (int i = 0; i < 8; ++i)
        EXPECT_EQ(f(i), i + 1.0);
    const CMatrix x = output_to_base(f, 2, 2);
    EXPECT_EQ(x, h);
    EXPECT_EQ(base_grad_to_output(h), f);
}

TEST(Network, StateCarriesInformation)
{
    SystemConfig sys;
    sys.tx_elements = 8;
    sys.users = 2;
    sys.rx_per_user = 2;
    ScenarioConfig sc;
    const Codebook cb = single_pattern_codebook(isotropic_pattern());
    const Episode ep = build_episode(draw_users(sc, sys, 3, "s"), sc, sys, cb, 5, -10.0, 3, "s");
    RngStream rng(7);
    const PrecoderNet net = PrecoderNet::initialized(precoder_shape(CellKind::cfc, 4, 8, 2, 8), rng);
    ObjectiveConfig obj;
    obj.noise_w = sys.noise_w;
    const EpisodeOutcome stateful = infer_episode(net, ep, obj, true);
    const EpisodeOutcome reset = infer_episode(net, ep, obj, false);
    EXPECT_GT((stateful.last.base - reset.last.base).norm(), 1e-6 * reset.last.base.norm());
}

TEST(Network, ParameterCountsMatchAcrossCells)
{
    const auto a = ParamLayout(precoder_shape(CellKind::cfc, 16, 48, 4, 64)).size();
    const auto b = ParamLayout(precoder_shape(CellKind::gru, 16, 48, 4, 64)).size();
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, static_cast<std::size_t>(3 * 64 * (1536 + 64) + 3 * 64 + 2 * (3 * 64 * 128 + 3 * 64) + 128 * 64 + 128));
}

TEST(Network, RejectsDimensionMismatch)
{
    RngStream rng(8);
    const PrecoderNet net = PrecoderNet::initialized(precoder_shape(CellKind::cfc, 4, 8, 2, 8), rng);
    HiddenState next;
    EXPECT_THROW(net.forward(RVector::Zero(10), net.zero_state(), 1.0, next), std::invalid_argument);
    EXPECT_THROW(net.forward(RVector::Zero(64), HiddenState(2, RVector::Zero(8)), 1.0, next), std::invalid_argument);
}

// ---- loss -----------------------------------------------------------------

TEST(LogLoss, Examples)
{
    EXPECT_EQ(log_loss(RVector::Ones(4), 1e-6), 0.0);
    EXPECT_NEAR(log_loss(RVector::Constant(2, std::exp(1.0)), 1e-6), -2.0, 1e-15);
    RVector r(2);
    r << 0.0, 1.0;
    EXPECT_NEAR(log_loss(r, 1e-6), 13.815510557964274, 1e-12);
    EXPECT_EQ(log_loss_grad(r, 1e-6)(0), 0.0);
    EXPECT_THROW(log_loss(r, 0.0), std::invalid_argument);
}

TEST(LogLoss, BoundedByFloor)
{
    RngStream rng(9);
    for (int t = 0; t < 100; ++t)
    {
        RVector r(4);
        for (int i = 0; i < 4; ++i)
            r(i) = rng.uniform() < 0.3 ? 0.0 : rng.uniform(0.0, 10.0);
        const double l = log_loss(r, 1e-6);
        EXPECT_TRUE(std::isfinite(l));
        EXPECT_LE(l, -4.0 * std::log(1e-6) + 1e-12);
    }
}

// ---- reverse mode ---------------------------------------------------------

namespace
{

struct GradCheck
{
    double max_rel = 0.0;
    std::size_t checked = 0;
};

// Central differences over every parameter, step 1e-5. The relative error
// uses max(|analytic|, |numeric|, 1e-3 max|analytic|) as denominator.
GradCheck finite_difference_check(CellKind cell, std::uint64_t seed)
{
    RngStream rng(seed);
    PrecoderNet net = PrecoderNet::initialized(precoder_shape(cell, 4, 8, 2, 8), rng);
    const CMatrix h = oracle::random_complex(4, 8, rng);
    HiddenState state = net.zero_state();
    for (auto &s : state)
        for (int i = 0; i < s.size(); ++i)
            s(i) = rng.uniform(-0.5, 0.5);
    ObjectiveConfig obj;
    obj.power_w = 10.0;
    obj.noise_w = 1.0;
    obj.snapshot_interval = 0.8;

    const RVector g = loss_and_gradient(net, h, state, obj).grad;
    GradCheck out;
    const double step = 1e-5;
    // Components far below the gradient's scale are compared on that scale:
    // their central differences are dominated by round-off in the loss.
    const double floor = 1e-3 * g.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < net.params().size(); ++i)
    {
        const double keep = net.params()(i);
        net.params()(i) = keep + step;
        const double up = evaluate_loss(net, h, state, obj).loss;
        net.params()(i) = keep - step;
        const double dn = evaluate_loss(net, h, state, obj).loss;
        net.params()(i) = keep;
        const double fd = (up - dn) / (2.0 * step);
        const double rel = std::abs(fd - g(i)) / std::max({std::abs(fd), std::abs(g(i)), floor});
        out.max_rel = std::max(out.max_rel, rel);
        ++out.checked;
    }
    return out;
}

} // namespace

TEST(Backward, CfcMatchesFiniteDifferences)
{
    const GradCheck c = finite_difference_check(CellKind::cfc, 21);
    EXPECT_GT(c.checked, 1000u);
    EXPECT_LT(c.max_rel, 1e-4);
}

TEST(Backward, GruMatchesFiniteDifferences)
{
    const GradCheck c = finite_difference_check(CellKind::gru, 22);
    EXPECT_GT(c.checked, 1000u);
    EXPECT_LT(c.max_rel, 1e-4);
}

TEST(Backward, UnusedParameterHasZeroGradient)
{
    // With t = 0 the decay head never reaches the output.
    RngStream rng(23);
    const PrecoderNet net = PrecoderNet::initialized(precoder_shape(CellKind::cfc, 4, 8, 2, 8), rng);
    const CMatrix h = oracle::random_complex(4, 8, rng);
    ObjectiveConfig obj;
    obj.noise_w = 1.0;
    obj.snapshot_interval = 0.0;
    const RVector g = loss_and_gradient(net, h, net.zero_state(), obj).grad;
    for (int l = 0; l < 3; ++l)
    {
        const TensorSpec &w = net.layout().weight(l, 0);
        EXPECT_EQ(g.segment(w.offset, w.size()).norm(), 0.0);
    }
}

TEST(Backward, LinearInLossScale)
{
    RngStream rng(24);
    const PrecoderNet net = PrecoderNet::initialized(precoder_shape(CellKind::cfc, 4, 8, 2, 8), rng);
    HiddenState next;
    ForwardTape tape;
    net.forward(RVector::Random(64), net.zero_state(), 1.0, next, &tape);
    const RVector og = RVector::Random(16);
    const RVector g1 = net.backward(tape, og);
    const RVector g2 = net.backward(tape, 2.0 * og);
    EXPECT_TRUE(g2 == 2.0 * g1);
}

TEST(Backward, NonFiniteGradientIsAFault)
{
    RngStream rng(25);
    const PrecoderNet net = PrecoderNet::initialized(precoder_shape(CellKind::cfc, 4, 8, 2, 8), rng);
    HiddenState next;
    ForwardTape tape;
    net.forward(RVector::Random(64), net.zero_state(), 1.0, next, &tape);
    RVector og = RVector::Zero(16);
    og(3) = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(net.backward(tape, og), TrainingFault);
}

// ---- Adam -----------------------------------------------------------------

TEST(Adam, ZeroGradientLeavesParameters)
{
    RVector p = RVector::Random(5);
    const RVector keep = p;
    AdamState s = AdamState::zeros(5);
    adam_step(p, RVector::Zero(5), s, AdamConfig{});
    EXPECT_TRUE(p == keep);
    EXPECT_EQ(s.step, 1);
}

TEST(Adam, FirstStepIsSignStep)
{
    RVector p = RVector::Constant(1, 2.0);
    AdamState s = AdamState::zeros(1);
    adam_step(p, RVector::Constant(1, 0.5), s, AdamConfig{});
    EXPECT_NEAR(p(0), 2.0 - 0.01, 1e-9);
}

TEST(Adam, QuadraticTraceMatchesReference)
{
    // Independent scalar Adam on f(w) = w^2.
    double w_ref = 1.0, m = 0.0, v = 0.0;
    RVector w = RVector::Ones(1);
    AdamState s = AdamState::zeros(1);
    double prev = 1.0;
    int decreases = 0;
    for (int t = 1; t <= 100; ++t)
    {
        const double g = 2.0 * w_ref;
        m = 0.9 * m + 0.1 * g;
        v = 0.999 * v + 0.001 * g * g;
        w_ref -= 0.01 * (m / (1.0 - std::pow(0.9, t))) / (std::sqrt(v / (1.0 - std::pow(0.999, t))) + 1e-8);

        adam_step(w, RVector::Constant(1, 2.0 * w(0)), s, AdamConfig{});
        EXPECT_NEAR(w(0), w_ref, 1e-12);
        decreases += std::abs(w(0)) < prev;
        prev = std::abs(w(0));
    }
    EXPECT_GE(decreases, 90);
    EXPECT_LT(std::abs(w(0)), 0.5);
}

TEST(Adam, RejectsMismatchedState)
{
    RVector p = RVector::Zero(3);
    AdamState s = AdamState::zeros(2);
    EXPECT_THROW(adam_step(p, RVector::Zero(3), s, AdamConfig{}), std::invalid_argument);
}

// ---- training ---------------------------------------------------------------

namespace
{

struct TinySetup
{
    SystemConfig sys;
    ScenarioConfig sc;
    ObjectiveConfig obj;

    TinySetup()
    {
        sys.tx_elements = 8;
        sys.users = 2;
        sys.rx_per_user = 2;
        sys.power_w = dbm_to_watt(30.0);
        obj.power_w = sys.power_w;
        obj.noise_w = sys.noise_w;
    }

    Episode episode(const Codebook &cb, double cee, std::uint64_t seed, int length = 1) const
    {
        const std::string tag = "tiny" + std::to_string(seed);
        return build_episode(draw_users(sc, sys, seed, tag), sc, sys, cb, length, cee, seed, tag);
    }
};

} // namespace

TEST(Training, SinglePatternCodebookNeedsNoSelection)
{
    TinySetup t;
    const Codebook cb = single_pattern_codebook(isotropic_pattern());
    RngStream rng(30);
    PrecoderNet net = PrecoderNet::initialized(precoder_shape(CellKind::cfc, 4, 8, 2, 8), rng);
    AdamState adam;
    TrainSettings s;
    s.epochs = 3;
    const TrainMetrics m = train(net, adam, {t.episode(cb, -10.0, 1, 2)}, t.obj, s);
    ASSERT_EQ(m.pattern_histogram.size(), 1u);
    EXPECT_EQ(m.pattern_histogram[0], 6);
    EXPECT_EQ(m.steps, 6);
    EXPECT_EQ(adam.step, 6);
}

TEST(Training, ImprovesOverInitialization)
{
    TinySetup t;
    const Codebook cb = single_pattern_codebook(isotropic_pattern());
    std::vector<double> ratios;
    for (std::uint64_t seed = 0; seed < 5; ++seed)
    {
        const Episode ep = t.episode(cb, -std::numeric_limits<double>::infinity(), 100 + seed);
        RngStream rng(seed);
        PrecoderNet net = PrecoderNet::initialized(precoder_shape(CellKind::cfc, 4, 8, 2, 16), rng);
        const double before = infer_episode(net, ep, t.obj, true).se_true;
        AdamState adam;
        TrainSettings s;
        s.epochs = 200;
        train(net, adam, {ep}, t.obj, s);
        ratios.push_back(infer_episode(net, ep, t.obj, true).se_true / before);
    }
    std::sort(ratios.begin(), ratios.end());
    EXPECT_GE(ratios[2], 1.5);
}

TEST(Training, PerfectEstimatesBeatNoisyOnes)
{
    TinySetup t;
    const Codebook cb = single_pattern_codebook(isotropic_pattern());
    std::vector<double> diff;
    for (std::uint64_t seed = 0; seed < 5; ++seed)
    {
        double se[2];
        int i = 0;
        for (double cee : {-std::numeric_limits<double>::infinity(), 0.0})
        {
            const Episode ep = t.episode(cb, cee, 200 + seed);
            RngStream rng(seed);
            PrecoderNet net = PrecoderNet::initialized(precoder_shape(CellKind::cfc, 4, 8, 2, 8), rng);
            AdamState adam;
            TrainSettings s;
            s.epochs = 100;
            train(net, adam, {ep}, t.obj, s);
            se[i++] = infer_episode(net, ep, t.obj, true).se_true;
        }
        diff.push_back(se[0] - se[1]);
    }
    std::sort(diff.begin(), diff.end());
    EXPECT_GE(diff[2], 0.0);
}

TEST(Training, DeterministicTrajectory)
{
    TinySetup t;
    const Codebook cb = build_lc_codebook();
    std::vector<Episode> data = {t.episode(cb, -10.0, 5, 2), t.episode(cb, -10.0, 6, 2)};
    RVector finals[2];
    for (auto &f : finals)
    {
        RngStream rng(40), shuffle(41);
        PrecoderNet net = PrecoderNet::initialized(precoder_shape(CellKind::gru, 4, 8, 2, 8), rng);
        AdamState adam;
        TrainSettings s;
        s.epochs = 4;
        train(net, adam, data, t.obj, s, &shuffle);
        f = net.params();
    }
    EXPECT_TRUE(finals[0] == finals[1]);
}

TEST(Training, EmptyDatasetRejected)
{
    TinySetup t;
    RngStream rng(1);
    PrecoderNet net = PrecoderNet::initialized(precoder_shape(CellKind::cfc, 4, 8, 2, 8), rng);
    AdamState adam;
    EXPECT_THROW(train(net, adam, {}, t.obj, TrainSettings{}), std::invalid_argument);
}

TEST(Training, CeeMinusInfinityMakesEstimateExact)
{
    TinySetup t;
    const Codebook cb = build_lc_codebook();
    const Episode ep = t.episode(cb, -std::numeric_limits<double>::infinity(), 9, 3);
    RngStream rng(2);
    const PrecoderNet net = PrecoderNet::initialized(precoder_shape(CellKind::cfc, 4, 8, 2, 8), rng);
    const EpisodeOutcome o = infer_episode(net, ep, t.obj, true);
    EXPECT_EQ(o.se_true, o.se_est);
}
