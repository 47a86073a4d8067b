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

#include "lcbf/network.hpp"

#include <cmath>

namespace lcbf
{

namespace
{

double sigmoid(double x)
{
    if (x >= 0.0)
        return 1.0 / (1.0 + std::exp(-x));
    const double e = std::exp(x);
    return e / (1.0 + e);
}

double softplus(double x) { return std::max(x, 0.0) + std::log1p(std::exp(-std::abs(x))); }

RMatrix sigmoid_of(const RMatrix &m) { return m.unaryExpr([](double v) { return sigmoid(v); }); }
RMatrix tanh_of(const RMatrix &m) { return m.array().tanh().matrix(); }
RMatrix softplus_of(const RMatrix &m) { return m.unaryExpr([](double v) { return softplus(v); }); }

const char *head_name(CellKind kind, int head)
{
    static const char *cfc[] = {"f", "g", "h"};
    static const char *gru[] = {"u", "r", "n"};
    return kind == CellKind::cfc ? cfc[head] : gru[head];
}

// Activations of one layer for B inputs (columns).
struct LayerPass
{
    RMatrix out;
    RMatrix concat;
    RMatrix head[3];
    RMatrix gate;
};

} // namespace

const char *to_string(CellKind kind) { return kind == CellKind::cfc ? "cfc" : "gru"; }

CellKind cell_kind_from_string(const std::string &s)
{
    if (s == "cfc")
        return CellKind::cfc;
    if (s == "gru")
        return CellKind::gru;
    throw std::invalid_argument("unknown cell kind '" + s + "'");
}

NetworkShape precoder_shape(CellKind cell, int total_rx, int tx_elements, int users, int hidden, int layers)
{
    NetworkShape s;
    s.cell = cell;
    s.input = 2 * total_rx * tx_elements;
    s.hidden = hidden;
    s.layers = layers;
    s.output = 2 * total_rx * users;
    return s;
}

ParamLayout::ParamLayout(const NetworkShape &shape)
{
    if (shape.input < 1 || shape.hidden < 1 || shape.layers < 1 || shape.output < 1)
        throw std::invalid_argument("NetworkShape: all dimensions must be positive");
    auto add = [&](std::string name, int rows, int cols) {
        tensors_.push_back({std::move(name), rows, cols, size_});
        size_ += static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    };
    for (int l = 0; l < shape.layers; ++l)
    {
        const int in = (l == 0 ? shape.input : shape.hidden) + shape.hidden;
        const std::string prefix = "layer" + std::to_string(l) + ".";
        for (int h = 0; h < 3; ++h)
            add(prefix + head_name(shape.cell, h) + ".weight", shape.hidden, in);
        for (int h = 0; h < 3; ++h)
            add(prefix + head_name(shape.cell, h) + ".bias", shape.hidden, 1);
    }
    add("output.weight", shape.output, shape.hidden);
    add("output.bias", shape.output, 1);
}

PrecoderNet::PrecoderNet(const NetworkShape &shape) : shape_(shape), layout_(shape), params_(RVector::Zero(static_cast<Eigen::Index>(layout_.size())))
{
}

PrecoderNet PrecoderNet::initialized(const NetworkShape &shape, RngStream &rng)
{
    PrecoderNet net(shape);
    const auto &tensors = net.layout_.tensors();
    // Biases share the bound of the weight they accompany.
    std::vector<double> bounds(tensors.size());
    for (int l = 0; l < shape.layers; ++l)
        for (int h = 0; h < 3; ++h)
        {
            const double b = 1.0 / std::sqrt(static_cast<double>(net.layout_.weight(l, h).cols));
            bounds[static_cast<std::size_t>(l) * 6 + h] = b;
            bounds[static_cast<std::size_t>(l) * 6 + h + 3] = b;
        }
    bounds[tensors.size() - 2] = bounds[tensors.size() - 1] = 1.0 / std::sqrt(static_cast<double>(shape.hidden));

    for (std::size_t i = 0; i < tensors.size(); ++i)
        for (std::size_t j = 0; j < tensors[i].size(); ++j)
            net.params_(static_cast<Eigen::Index>(tensors[i].offset + j)) = rng.uniform(-bounds[i], bounds[i]);
    return net;
}

Eigen::Map<const RMatrix> PrecoderNet::view(const TensorSpec &t) const
{
    return Eigen::Map<const RMatrix>(params_.data() + t.offset, t.rows, t.cols);
}

HiddenState PrecoderNet::zero_state() const
{
    return HiddenState(static_cast<std::size_t>(shape_.layers), RVector::Zero(shape_.hidden));
}

namespace
{

LayerPass run_layer(CellKind kind, const Eigen::Map<const RMatrix> (&w)[3], const Eigen::Map<const RMatrix> (&b)[3],
                    const RMatrix &in, const RMatrix &prev, double t)
{
    LayerPass p;
    const Eigen::Index n_in = in.rows();
    const Eigen::Index d = prev.rows();
    p.concat.resize(n_in + d, in.cols());
    p.concat.topRows(n_in) = in;
    p.concat.bottomRows(d) = prev;

    auto affine = [&](int h, const RMatrix &z) -> RMatrix {
        RMatrix a = w[h] * z;
        a.colwise() += b[h].col(0);
        return a;
    };

    if (kind == CellKind::cfc)
    {
        p.head[0] = affine(0, p.concat); // f pre-activation
        p.head[1] = tanh_of(affine(1, p.concat));
        p.head[2] = tanh_of(affine(2, p.concat));
        p.gate = sigmoid_of(-t * softplus_of(p.head[0]));
        p.out = (p.gate.array() * p.head[1].array() + (1.0 - p.gate.array()) * p.head[2].array()).matrix();
    }
    else
    {
        p.head[0] = sigmoid_of(affine(0, p.concat));
        p.head[1] = sigmoid_of(affine(1, p.concat));
        p.gate.resize(n_in + d, in.cols());
        p.gate.topRows(n_in) = in;
        p.gate.bottomRows(d) = (p.head[1].array() * prev.array()).matrix();
        p.head[2] = tanh_of(affine(2, p.gate));
        p.out = ((1.0 - p.head[0].array()) * p.head[2].array() + p.head[0].array() * prev.array()).matrix();
    }
    return p;
}

} // namespace

RVector PrecoderNet::forward(const RVector &features, const HiddenState &state, double t, HiddenState &next,
                             ForwardTape *tape) const
{
    if (features.size() != shape_.input)
        throw std::invalid_argument("PrecoderNet::forward: feature length does not match the network input");
    if (static_cast<int>(state.size()) != shape_.layers)
        throw std::invalid_argument("PrecoderNet::forward: hidden state has the wrong layer count");

    next.resize(static_cast<std::size_t>(shape_.layers));
    if (tape)
    {
        tape->t = t;
        tape->layers.assign(static_cast<std::size_t>(shape_.layers), LayerCache{});
    }

    RMatrix x = features;
    for (int l = 0; l < shape_.layers; ++l)
    {
        const Eigen::Map<const RMatrix> w[3] = {view(layout_.weight(l, 0)), view(layout_.weight(l, 1)),
                                                view(layout_.weight(l, 2))};
        const Eigen::Map<const RMatrix> b[3] = {view(layout_.bias(l, 0)), view(layout_.bias(l, 1)),
                                                view(layout_.bias(l, 2))};
        const RVector &prev = state[static_cast<std::size_t>(l)];
        if (prev.size() != shape_.hidden)
            throw std::invalid_argument("PrecoderNet::forward: hidden state has the wrong width");
        LayerPass pass = run_layer(shape_.cell, w, b, x, prev, t);
        if (tape)
        {
            LayerCache &c = tape->layers[static_cast<std::size_t>(l)];
            c.concat = pass.concat.col(0);
            for (int h = 0; h < 3; ++h)
                c.head[h] = pass.head[h].col(0);
            c.gate = pass.gate.col(0);
            c.prev = prev;
        }
        next[static_cast<std::size_t>(l)] = pass.out.col(0);
        x = std::move(pass.out);
    }
    if (tape)
        tape->top = x.col(0);
    RVector y = view(layout_.output_weight()) * x.col(0) + view(layout_.output_bias()).col(0);
    return y;
}

RMatrix PrecoderNet::forward_batch(const RMatrix &features, const HiddenState &state, double t,
                                   std::vector<HiddenState> *next) const
{
    if (features.rows() != shape_.input)
        throw std::invalid_argument("PrecoderNet::forward_batch: feature length does not match the network input");
    const Eigen::Index batch = features.cols();
    if (next)
        next->assign(static_cast<std::size_t>(batch), HiddenState(static_cast<std::size_t>(shape_.layers)));

    RMatrix x = features;
    for (int l = 0; l < shape_.layers; ++l)
    {
        const Eigen::Map<const RMatrix> w[3] = {view(layout_.weight(l, 0)), view(layout_.weight(l, 1)),
                                                view(layout_.weight(l, 2))};
        const Eigen::Map<const RMatrix> b[3] = {view(layout_.bias(l, 0)), view(layout_.bias(l, 1)),
                                                view(layout_.bias(l, 2))};
        const RMatrix prev = state[static_cast<std::size_t>(l)].replicate(1, batch);
        LayerPass pass = run_layer(shape_.cell, w, b, x, prev, t);
        if (next)
            for (Eigen::Index c = 0; c < batch; ++c)
                (*next)[static_cast<std::size_t>(c)][static_cast<std::size_t>(l)] = pass.out.col(c);
        x = std::move(pass.out);
    }
    RMatrix y = view(layout_.output_weight()) * x;
    y.colwise() += view(layout_.output_bias()).col(0);
    return y;
}

RVector PrecoderNet::backward(const ForwardTape &tape, const RVector &output_grad) const
{
    if (output_grad.size() != shape_.output)
        throw std::invalid_argument("PrecoderNet::backward: gradient length does not match the network output");
    if (static_cast<int>(tape.layers.size()) != shape_.layers)
        throw std::invalid_argument("PrecoderNet::backward: tape does not belong to this network");

    RVector grad = RVector::Zero(params_.size());
    auto slot = [&](const TensorSpec &t) {
        return Eigen::Map<RMatrix>(grad.data() + t.offset, t.rows, t.cols);
    };

    slot(layout_.output_weight()).noalias() += output_grad * tape.top.transpose();
    slot(layout_.output_bias()).col(0) += output_grad;
    RVector d_out = view(layout_.output_weight()).transpose() * output_grad;

    const double t = tape.t;
    for (int l = shape_.layers - 1; l >= 0; --l)
    {
        const LayerCache &c = tape.layers[static_cast<std::size_t>(l)];
        const Eigen::Index n_in = c.concat.size() - shape_.hidden;
        RVector d_concat;

        if (shape_.cell == CellKind::cfc)
        {
            const Eigen::ArrayXd s = c.gate.array();
            const Eigen::ArrayXd g = c.head[1].array();
            const Eigen::ArrayXd h = c.head[2].array();
            const Eigen::ArrayXd sp_slope = c.head[0].unaryExpr([](double v) { return sigmoid(v); }).array();
            const Eigen::ArrayXd d = d_out.array();

            const RVector d_pg = (d * s * (1.0 - g * g)).matrix();
            const RVector d_ph = (d * (1.0 - s) * (1.0 - h * h)).matrix();
            // s = sigmoid(-f t): ds/df = -t s (1 - s); f = softplus(p): df/dp = sigmoid(p)
            const RVector d_pf = (d * (g - h) * s * (1.0 - s) * (-t) * sp_slope).matrix();

            const RVector *dp[3] = {&d_pf, &d_pg, &d_ph};
            d_concat = RVector::Zero(c.concat.size());
            for (int k = 0; k < 3; ++k)
            {
                slot(layout_.weight(l, k)).noalias() += *dp[k] * c.concat.transpose();
                slot(layout_.bias(l, k)).col(0) += *dp[k];
                d_concat.noalias() += view(layout_.weight(l, k)).transpose() * *dp[k];
            }
        }
        else
        {
            const Eigen::ArrayXd u = c.head[0].array();
            const Eigen::ArrayXd r = c.head[1].array();
            const Eigen::ArrayXd n = c.head[2].array();
            const Eigen::ArrayXd x = c.prev.array();
            const Eigen::ArrayXd d = d_out.array();

            const RVector d_pn = (d * (1.0 - u) * (1.0 - n * n)).matrix();
            const RVector d_pu = (d * (x - n) * u * (1.0 - u)).matrix();
            slot(layout_.weight(l, 2)).noalias() += d_pn * c.gate.transpose();
            slot(layout_.bias(l, 2)).col(0) += d_pn;
            const RVector d_gate = view(layout_.weight(l, 2)).transpose() * d_pn;
            const RVector d_pr = (d_gate.tail(shape_.hidden).array() * x * r * (1.0 - r)).matrix();

            slot(layout_.weight(l, 0)).noalias() += d_pu * c.concat.transpose();
            slot(layout_.bias(l, 0)).col(0) += d_pu;
            slot(layout_.weight(l, 1)).noalias() += d_pr * c.concat.transpose();
            slot(layout_.bias(l, 1)).col(0) += d_pr;

            d_concat = view(layout_.weight(l, 0)).transpose() * d_pu + view(layout_.weight(l, 1)).transpose() * d_pr;
            d_concat.head(n_in) += d_gate.head(n_in);
        }
        // The carried-state part of d_concat is dropped: truncation at the
        // snapshot boundary.
        d_out = d_concat.head(n_in);
    }

    if (!grad.allFinite())
        throw TrainingFault("non-finite parameter gradient");
    return grad;
}

RVector featurize(const CMatrix &normalized_channel)
{
    const Eigen::Index rows = normalized_channel.rows();
    const Eigen::Index cols = normalized_channel.cols();
    RVector f(2 * rows * cols);
    Eigen::Index i = 0;
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
            f(i++) = normalized_channel(r, c).real();
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
            f(i++) = normalized_channel(r, c).imag();
    return f;
}

CMatrix output_to_base(const RVector &output, int rows, int cols)
{
    const Eigen::Index n = static_cast<Eigen::Index>(rows) * cols;
    if (output.size() != 2 * n)
        throw std::invalid_argument("output_to_base: output length must be 2 * rows * cols");
    CMatrix x(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
        {
            const Eigen::Index i = static_cast<Eigen::Index>(r) * cols + c;
            x(r, c) = {output(i), output(n + i)};
        }
    return x;
}

RVector base_grad_to_output(const CMatrix &base_grad)
{
    const Eigen::Index rows = base_grad.rows();
    const Eigen::Index cols = base_grad.cols();
    const Eigen::Index n = rows * cols;
    RVector g(2 * n);
    for (Eigen::Index r = 0; r < rows; ++r)
        for (Eigen::Index c = 0; c < cols; ++c)
        {
            g(r * cols + c) = base_grad(r, c).real();
            g(n + r * cols + c) = base_grad(r, c).imag();
        }
    return g;
}

} // namespace lcbf
