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

#ifndef LCBF_TRAINING_HPP
#define LCBF_TRAINING_HPP

#include "lcbf/bf_core.hpp"
#include "lcbf/codebook.hpp"
#include "lcbf/episode.hpp"
#include "lcbf/network.hpp"

#include <cstdint>
#include <vector>

namespace lcbf
{

struct ObjectiveConfig
{
    double power_w = 1.0;
    double noise_w = 1e-12;
    double loss_floor = 1e-6;       // eps in the log loss
    double snapshot_interval = 1.0; // t fed to every cell
};

// L = -sum_k ln(max(eps, R_k)).
double log_loss(const RVector &rates, double eps);

// dL/dR_k; zero where the floor is active.
RVector log_loss_grad(const RVector &rates, double eps);

// Runs the full pipeline on one estimated channel:
//   features -> network -> X -> W = c H^H X -> rates -> log loss
struct LossEvaluation
{
    double loss = 0.0;
    RVector rates;
    CMatrix base;
    CMatrix precoder;
    HiddenState next;
};

LossEvaluation evaluate_loss(const PrecoderNet &net, const CMatrix &estimate, const HiddenState &state,
                             const ObjectiveConfig &objective);

// Same pass with a tape, followed by the reverse sweep. `grad` has the
// network's parameter layout.
struct LossGradient
{
    LossEvaluation eval;
    RVector grad;
};

LossGradient loss_and_gradient(const PrecoderNet &net, const CMatrix &estimate, const HiddenState &state,
                               const ObjectiveConfig &objective);

struct AdamConfig
{
    double learning_rate = 0.01;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

struct AdamState
{
    RVector first;
    RVector second;
    std::int64_t step = 0;

    static AdamState zeros(std::size_t n);
};

// One bias-corrected Adam descent step on `params`.
void adam_step(RVector &params, const RVector &grad, AdamState &state, const AdamConfig &config);

struct TrainSettings
{
    int epochs = 40;
    AdamConfig adam;
    bool stateful = true; // carry hidden state across snapshots of an episode
};

struct TrainMetrics
{
    std::vector<double> epoch_loss; // mean over the epoch's steps
    std::vector<double> epoch_se;   // mean best-pattern SE on the estimate
    std::vector<int> pattern_histogram;
    std::int64_t steps = 0;
};

// Per step: evaluate the network under every pattern of the snapshot, keep
// the pattern with the best SE, back-propagate that pattern's log loss and
// apply Adam. One epoch visits every snapshot of every episode once; episode
// order is shuffled with `shuffle` when given. Throws TrainingFault on a
// non-finite loss or gradient.
TrainMetrics train(PrecoderNet &net, AdamState &adam, const std::vector<Episode> &data,
                   const ObjectiveConfig &objective, const TrainSettings &settings, RngStream *shuffle = nullptr);

// Evaluates every pattern of one snapshot with a batched forward pass.
struct SnapshotDecision
{
    PatternChoice choice;
    CMatrix base;
    CMatrix precoder;
    HiddenState next;
};

SnapshotDecision decide_snapshot(const PrecoderNet &net, const Snapshot &snapshot, const HiddenState &state,
                                 const ObjectiveConfig &objective);

struct EpisodeOutcome
{
    SnapshotDecision last;
    double se_est = 0.0;
    double se_true = 0.0;
    RVector rates_true;
};

// Runs the network across an episode and reports the final snapshot, scored on
// both the estimate it saw and the true channel.
EpisodeOutcome infer_episode(const PrecoderNet &net, const Episode &episode, const ObjectiveConfig &objective,
                             bool stateful);

} // namespace lcbf

#endif
