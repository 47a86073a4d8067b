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

#ifndef LCBF_CHECKPOINT_HPP
#define LCBF_CHECKPOINT_HPP

#include "lcbf/network.hpp"
#include "lcbf/training.hpp"

#include <cstdint>
#include <string>

namespace lcbf
{

// Binary container:
//   "LCBFCKPT"            8 bytes
//   version               u32 little-endian
//   header length         u64 little-endian
//   header                UTF-8 JSON (method, cell, shape, tensor table,
//                         Adam settings and step, rng state)
//   payload               f64 little-endian: parameters, then Adam first and
//                         second moments, each in ParamLayout order
struct Checkpoint
{
    std::string method;
    PrecoderNet net;
    AdamState adam;
    AdamConfig adam_config;
    std::string rng_state;
};

inline constexpr std::uint32_t kCheckpointVersion = 1;

void save_checkpoint(const std::string &path, const Checkpoint &ckpt);
Checkpoint load_checkpoint(const std::string &path);

// In-memory forms, used by the file functions.
std::string encode_checkpoint(const Checkpoint &ckpt);
Checkpoint decode_checkpoint(const std::string &bytes);

} // namespace lcbf

#endif
