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

#include "lcbf/training.hpp"
#include "lcbf/channel_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace lcbf
{

double log_loss(const RVector &rates, double eps)
{
    if (!(eps > 0.0))
        throw std::invalid_argument("log_loss: eps must be positive");
    double loss = 0.0;
    for (Eigen::Index k = 0; k < rates.size(); ++k)
        loss -= std::log(std::max(eps, rates(k)));
    return loss;
}

RVector log_loss_grad(const RVector &rates, double eps)
{
    RVector g(rates.size());
    for (Eigen::Index k = 0; k < rates.size(); ++k)
        g(k) = rates(k) > eps ? -1.0 / rates(k) : 0.0;
    return g;
}

namespace
{

int users_of(const PrecoderNet &net, const CMatrix &estimate)
{
    const Eigen::Index n = estimate.rows();
    if (n == 0 || net.shape().output % (2 * n) != 0 || net.shape().input != 2 * n * estimate.cols())
        throw std::invalid_argument("network shape does not match the channel dimensions");
    return static_cast<int>(net.shape().output / (2 * n));
}

struct TapedPass
{
    LossEvaluation eval;
    BaseForward chain;
    ForwardTape tape;
};

TapedPass taped_pass(const PrecoderNet &net, const CMatrix &estimate, const HiddenState &state,
                     const ObjectiveConfig &objective, bool record)
{
    TapedPass p;
    const int users = users_of(net, estimate);
    const RVector features = featurize(normalize_channel(estimate, std::sqrt(objective.noise_w)));
    const RVector out = net.forward(features, state, objective.snapshot_interval, p.eval.next, record ? &p.tape : nullptr);
    p.eval.base = output_to_base(out, static_cast<int>(estimate.rows()), users);
    p.chain = evaluate_base(estimate, p.eval.base, objective.power_w, objective.noise_w);
    p.eval.precoder = p.chain.mats.precoder;
    p.eval.rates = p.chain.rates;
    p.eval.loss = log_loss(p.eval.rates, objective.loss_floor);
    return p;
}

} // namespace

LossEvaluation evaluate_loss(const PrecoderNet &net, const CMatrix &estimate, const HiddenState &state,
                             const ObjectiveConfig &objective)
{
    return taped_pass(net, estimate, state, objective, false).eval;
}

LossGradient loss_and_gradient(const PrecoderNet &net, const CMatrix &estimate, const HiddenState &state,
                               const ObjectiveConfig &objective)
{
    TapedPass p = taped_pass(net, estimate, state, objective, true);
    const RVector d_rates = log_loss_grad(p.eval.rates, objective.loss_floor);
    const CMatrix d_base = base_backward(estimate, p.chain, objective.noise_w, d_rates);
    LossGradient g;
    g.grad = net.backward(p.tape, base_grad_to_output(d_base));
    g.eval = std::move(p.eval);
    return g;
}

AdamState AdamState::zeros(std::size_t n)
{
    AdamState s;
    s.first = RVector::Zero(static_cast<Eigen::Index>(n));
    s.second = RVector::Zero(static_cast<Eigen::Index>(n));
    return s;
}

void adam_step(RVector &params, const RVector &grad, AdamState &state, const AdamConfig &config)
{
    if (state.first.size() != params.size() || state.second.size() != params.size() || grad.size() != params.size())
        throw std::invalid_argument("adam_step: optimizer state does not match the parameters");
    state.step += 1;
    state.first = config.beta1 * state.first + (1.0 - config.beta1) * grad;
    state.second = config.beta2 * state.second + (1.0 - config.beta2) * grad.cwiseAbs2();
    const double c1 = 1.0 - std::pow(config.beta1, static_cast<double>(state.step));
    const double c2 = 1.0 - std::pow(config.beta2, static_cast<double>(state.step));
    params.array() -= config.learning_rate * (state.first.array() / c1) /
                      ((state.second.array() / c2).sqrt() + config.epsilon);
}

SnapshotDecision decide_snapshot(const PrecoderNet &net, const Snapshot &snapshot, const HiddenState &state,
                                 const ObjectiveConfig &objective)
{
    const int patterns = static_cast<int>(snapshot.estimate.size());
    if (patterns == 0)
        throw std::invalid_argument("decide_snapshot: snapshot has no patterns");
    const CMatrix &first = snapshot.estimate.front();
    const int users = users_of(net, first);
    const double sigma = std::sqrt(objective.noise_w);

    RMatrix features(net.shape().input, patterns);
    for (int p = 0; p < patterns; ++p)
        features.col(p) = featurize(normalize_channel(snapshot.estimate[static_cast<std::size_t>(p)], sigma));
    std::vector<HiddenState> next;
    const RMatrix out = net.forward_batch(features, state, objective.snapshot_interval, &next);

    std::vector<CMatrix> bases(static_cast<std::size_t>(patterns));
    for (int p = 0; p < patterns; ++p)
        bases[static_cast<std::size_t>(p)] = output_to_base(out.col(p), static_cast<int>(first.rows()), users);

    SnapshotDecision d;
    d.choice = select_pattern(
        patterns, [&](int p) -> const CMatrix & { return snapshot.estimate[static_cast<std::size_t>(p)]; },
        [&](const CMatrix &h, int p) {
            return apply_power_constraint(h, bases[static_cast<std::size_t>(p)], objective.power_w).precoder;
        },
        objective.noise_w);
    const auto best = static_cast<std::size_t>(d.choice.index);
    d.base = bases[best];
    d.precoder = apply_power_constraint(snapshot.estimate[best], d.base, objective.power_w).precoder;
    d.next = std::move(next[best]);
    return d;
}

TrainMetrics train(PrecoderNet &net, AdamState &adam, const std::vector<Episode> &data,
                   const ObjectiveConfig &objective, const TrainSettings &settings, RngStream *shuffle)
{
    if (data.empty())
        throw std::invalid_argument("train: empty dataset");
    if (adam.first.size() != static_cast<Eigen::Index>(net.parameter_count()))
        adam = AdamState::zeros(net.parameter_count());

    TrainMetrics metrics;
    const int patterns = static_cast<int>(data.front().front().estimate.size());
    metrics.pattern_histogram.assign(static_cast<std::size_t>(patterns), 0);

    std::vector<std::size_t> order(data.size());
    std::iota(order.begin(), order.end(), std::size_t{0});

    for (int epoch = 0; epoch < settings.epochs; ++epoch)
    {
        if (shuffle)
            std::shuffle(order.begin(), order.end(), shuffle->engine());
        double loss_sum = 0.0;
        double se_sum = 0.0;
        int count = 0;
        for (std::size_t e : order)
        {
            HiddenState state = net.zero_state();
            for (const Snapshot &snap : data[e])
            {
                const SnapshotDecision d = decide_snapshot(net, snap, state, objective);
                const auto best = static_cast<std::size_t>(d.choice.index);
                LossGradient lg = loss_and_gradient(net, snap.estimate[best], state, objective);
                if (!std::isfinite(lg.eval.loss))
                {
                    std::ostringstream msg;
                    msg << "training diverged: epoch " << epoch << ", step " << metrics.steps << ", loss "
                        << lg.eval.loss;
                    throw TrainingFault(msg.str());
                }
                adam_step(net.params(), lg.grad, adam, settings.adam);
                if (!net.params().allFinite())
                    throw TrainingFault("training diverged: non-finite parameters after step " +
                                        std::to_string(metrics.steps));

                metrics.pattern_histogram[best] += 1;
                metrics.steps += 1;
                loss_sum += lg.eval.loss;
                se_sum += d.choice.score;
                ++count;
                state = settings.stateful ? d.next : net.zero_state();
            }
        }
        metrics.epoch_loss.push_back(loss_sum / count);
        metrics.epoch_se.push_back(se_sum / count);
    }
    return metrics;
}

EpisodeOutcome infer_episode(const PrecoderNet &net, const Episode &episode, const ObjectiveConfig &objective,
                             bool stateful)
{
    if (episode.empty())
        throw std::invalid_argument("infer_episode: empty episode");
    EpisodeOutcome out;
    HiddenState state = net.zero_state();
    for (const Snapshot &snap : episode)
    {
        out.last = decide_snapshot(net, snap, state, objective);
        state = stateful ? out.last.next : net.zero_state();
    }
    const auto best = static_cast<std::size_t>(out.last.choice.index);
    out.se_est = out.last.choice.score;
    out.rates_true = per_user_rates(episode.back().truth[best], out.last.precoder, objective.noise_w);
    out.se_true = out.rates_true.sum();
    return out;
}

} // namespace lcbf
