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

#include "lcbf/checkpoint.hpp"

#include <json.hpp>

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lcbf
{

using nlohmann::json;

namespace
{

constexpr char kMagic[8] = {'L', 'C', 'B', 'F', 'C', 'K', 'P', 'T'};

template <typename T> void put_le(std::string &out, T v)
{
    static_assert(std::is_integral_v<T>);
    for (std::size_t i = 0; i < sizeof(T); ++i)
        out.push_back(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xFF));
}

template <typename T> T get_le(const std::string &in, std::size_t &pos)
{
    if (pos + sizeof(T) > in.size())
        throw std::runtime_error("checkpoint: truncated file");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i)
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
    pos += sizeof(T);
    return static_cast<T>(v);
}

void put_doubles(std::string &out, const RVector &v)
{
    for (Eigen::Index i = 0; i < v.size(); ++i)
        put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(v(i)));
}

RVector get_doubles(const std::string &in, std::size_t &pos, std::size_t n)
{
    RVector v(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        v(static_cast<Eigen::Index>(i)) = std::bit_cast<double>(get_le<std::uint64_t>(in, pos));
    return v;
}

} // namespace

std::string encode_checkpoint(const Checkpoint &ckpt)
{
    const NetworkShape &s = ckpt.net.shape();
    const std::size_t n = ckpt.net.parameter_count();
    RVector first = ckpt.adam.first.size() ? ckpt.adam.first : RVector::Zero(static_cast<Eigen::Index>(n));
    RVector second = ckpt.adam.second.size() ? ckpt.adam.second : RVector::Zero(static_cast<Eigen::Index>(n));
    if (static_cast<std::size_t>(first.size()) != n || static_cast<std::size_t>(second.size()) != n)
        throw std::invalid_argument("checkpoint: optimizer state does not match the network");

    json h;
    h["method"] = ckpt.method;
    h["cell"] = to_string(s.cell);
    h["shape"] = {{"input", s.input}, {"hidden", s.hidden}, {"layers", s.layers}, {"output", s.output}};
    json tensors = json::array();
    for (const TensorSpec &t : ckpt.net.layout().tensors())
        tensors.push_back({{"name", t.name}, {"rows", t.rows}, {"cols", t.cols}, {"offset", t.offset}});
    h["tensors"] = tensors;
    h["parameter_count"] = n;
    h["adam"] = {{"learning_rate", ckpt.adam_config.learning_rate},
                 {"beta1", ckpt.adam_config.beta1},
                 {"beta2", ckpt.adam_config.beta2},
                 {"epsilon", ckpt.adam_config.epsilon},
                 {"step", ckpt.adam.step}};
    h["rng_state"] = ckpt.rng_state;
    h["payload"] = "f64le: params, adam.first, adam.second";
    const std::string header = h.dump();

    std::string out(kMagic, sizeof(kMagic));
    put_le<std::uint32_t>(out, kCheckpointVersion);
    put_le<std::uint64_t>(out, header.size());
    out += header;
    put_doubles(out, ckpt.net.params());
    put_doubles(out, first);
    put_doubles(out, second);
    return out;
}

Checkpoint decode_checkpoint(const std::string &bytes)
{
    if (bytes.size() < sizeof(kMagic) || std::memcmp(bytes.data(), kMagic, sizeof(kMagic)) != 0)
        throw std::runtime_error("checkpoint: bad magic");
    std::size_t pos = sizeof(kMagic);
    const auto version = get_le<std::uint32_t>(bytes, pos);
    if (version != kCheckpointVersion)
        throw std::runtime_error("checkpoint: unsupported version " + std::to_string(version));
    const auto hlen = get_le<std::uint64_t>(bytes, pos);
    if (pos + hlen > bytes.size())
        throw std::runtime_error("checkpoint: truncated header");
    json h;
    try
    {
        h = json::parse(bytes.substr(pos, hlen));
    }
    catch (const json::exception &e)
    {
        throw std::runtime_error(std::string("checkpoint: malformed header: ") + e.what());
    }
    pos += hlen;

    Checkpoint c;
    try
    {
        c.method = h.at("method").get<std::string>();
        NetworkShape s;
        s.cell = cell_kind_from_string(h.at("cell").get<std::string>());
        s.input = h.at("shape").at("input").get<int>();
        s.hidden = h.at("shape").at("hidden").get<int>();
        s.layers = h.at("shape").at("layers").get<int>();
        s.output = h.at("shape").at("output").get<int>();
        c.net = PrecoderNet(s);
        const std::size_t n = h.at("parameter_count").get<std::size_t>();
        if (n != c.net.parameter_count())
            throw std::runtime_error("checkpoint: parameter count does not match the declared shape");
        const auto &tensors = h.at("tensors");
        const auto &layout = c.net.layout().tensors();
        if (tensors.size() != layout.size())
            throw std::runtime_error("checkpoint: tensor table does not match the declared shape");
        for (std::size_t i = 0; i < layout.size(); ++i)
            if (tensors[i].at("name").get<std::string>() != layout[i].name ||
                tensors[i].at("rows").get<int>() != layout[i].rows ||
                tensors[i].at("cols").get<int>() != layout[i].cols ||
                tensors[i].at("offset").get<std::size_t>() != layout[i].offset)
                throw std::runtime_error("checkpoint: tensor '" + layout[i].name + "' does not match the layout");
        const auto &a = h.at("adam");
        c.adam_config.learning_rate = a.at("learning_rate").get<double>();
        c.adam_config.beta1 = a.at("beta1").get<double>();
        c.adam_config.beta2 = a.at("beta2").get<double>();
        c.adam_config.epsilon = a.at("epsilon").get<double>();
        c.adam.step = a.at("step").get<std::int64_t>();
        c.rng_state = h.at("rng_state").get<std::string>();

        if (bytes.size() - pos != 3 * n * sizeof(double))
            throw std::runtime_error("checkpoint: payload size does not match the parameter count");
        c.net.params() = get_doubles(bytes, pos, n);
        c.adam.first = get_doubles(bytes, pos, n);
        c.adam.second = get_doubles(bytes, pos, n);
    }
    catch (const json::exception &e)
    {
        throw std::runtime_error(std::string("checkpoint: incomplete header: ") + e.what());
    }
    return c;
}

void save_checkpoint(const std::string &path, const Checkpoint &ckpt)
{
    const std::string bytes = encode_checkpoint(ckpt);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write checkpoint '" + path + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw std::runtime_error("failed writing checkpoint '" + path + "'");
}

Checkpoint load_checkpoint(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open checkpoint '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return decode_checkpoint(ss.str());
}

} // namespace lcbf
