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

#ifndef LCBF_NETWORK_HPP
#define LCBF_NETWORK_HPP

#include "lcbf/rng.hpp"
#include "lcbf/types.hpp"

#include <string>
#include <vector>

namespace lcbf
{

// Recurrent cell used by every hidden layer of a PrecoderNet.
//
// cfc: closed-form continuous-time cell
//   x' = s .* g + (1 - s) .* h,  s = sigmoid(-f t)
//   f = softplus(W_f z + b_f), g = tanh(W_g z + b_g), h = tanh(W_h z + b_h)
// gru: gated recurrent unit
//   u = sigmoid(W_u z + b_u), r = sigmoid(W_r z + b_r)
//   n = tanh(W_n [in; r .* x] + b_n), x' = (1 - u) .* n + u .* x
// In both, z = [in; x] where `in` is the layer input and x the layer's own
// carried hidden state.
enum class CellKind
{
    cfc,
    gru
};

const char *to_string(CellKind kind);
CellKind cell_kind_from_string(const std::string &s);

struct NetworkShape
{
    CellKind cell = CellKind::cfc;
    int input = 0;   // 2 N M
    int hidden = 64; // D, identical for every layer
    int layers = 3;
    int output = 0;  // 2 N K

    bool operator==(const NetworkShape &) const = default;
};

// Shape of the network consuming an N x M channel and producing an N x K base
// matrix.
NetworkShape precoder_shape(CellKind cell, int total_rx, int tx_elements, int users, int hidden, int layers = 3);

struct TensorSpec
{
    std::string name;
    int rows = 0;
    int cols = 0;
    std::size_t offset = 0;

    std::size_t size() const { return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols); }
};

// Flat parameter layout: per layer three head weight matrices followed by
// their biases, then the output projection.
class ParamLayout
{
public:
    ParamLayout() = default;
    explicit ParamLayout(const NetworkShape &shape);

    const std::vector<TensorSpec> &tensors() const { return tensors_; }
    std::size_t size() const { return size_; }

    // Head `head` (0..2) of layer `layer`.
    const TensorSpec &weight(int layer, int head) const { return tensors_[index(layer, head)]; }
    const TensorSpec &bias(int layer, int head) const { return tensors_[index(layer, head) + 3]; }
    const TensorSpec &output_weight() const { return tensors_[tensors_.size() - 2]; }
    const TensorSpec &output_bias() const { return tensors_[tensors_.size() - 1]; }

private:
    static std::size_t index(int layer, int head) { return static_cast<std::size_t>(layer) * 6 + head; }

    std::vector<TensorSpec> tensors_;
    std::size_t size_ = 0;
};

using HiddenState = std::vector<RVector>;

// Activations recorded during a taped forward pass, one entry per layer.
struct LayerCache
{
    RVector concat;  // z = [in; x]
    RVector head[3]; // cfc: f pre-activation, g, h;  gru: u, r, n
    RVector gate;    // cfc: s;  gru: [in; r .* x]
    RVector prev;    // carried state x
};

struct ForwardTape
{
    double t = 1.0;
    std::vector<LayerCache> layers;
    RVector top; // last hidden layer output
};

class PrecoderNet
{
public:
    PrecoderNet() = default;
    // All parameters zero.
    explicit PrecoderNet(const NetworkShape &shape);

    // Weights and biases ~ U(-1/sqrt(fan_in), 1/sqrt(fan_in)).
    static PrecoderNet initialized(const NetworkShape &shape, RngStream &rng);

    const NetworkShape &shape() const { return shape_; }
    const ParamLayout &layout() const { return layout_; }
    RVector &params() { return params_; }
    const RVector &params() const { return params_; }
    std::size_t parameter_count() const { return layout_.size(); }

    HiddenState zero_state() const;

    // Reference single-input pass. Writes each layer's new hidden vector to
    // `next` and, when given, records activations on `tape`.
    RVector forward(const RVector &features, const HiddenState &state, double t, HiddenState &next,
                    ForwardTape *tape = nullptr) const;

    // Evaluates one column of `features` per input, all sharing `state`.
    // Matches forward() column by column.
    RMatrix forward_batch(const RMatrix &features, const HiddenState &state, double t,
                          std::vector<HiddenState> *next = nullptr) const;

    // Gradient of L with respect to every parameter, given dL/d(output) of
    // the taped pass. The carried state is treated as a constant input.
    RVector backward(const ForwardTape &tape, const RVector &output_grad) const;

private:
    Eigen::Map<const RMatrix> view(const TensorSpec &t) const;

    NetworkShape shape_;
    ParamLayout layout_;
    RVector params_;
};

// Real parts of H (row-major) followed by imaginary parts.
RVector featurize(const CMatrix &normalized_channel);

// Inverse layout for the network output: N x K complex base matrix.
CMatrix output_to_base(const RVector &output, int rows, int cols);

// dL/d(output) from a complex gradient dL/dRe(X) + i dL/dIm(X).
RVector base_grad_to_output(const CMatrix &base_grad);

} // namespace lcbf

#endif
