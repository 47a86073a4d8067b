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

#ifndef LCBF_LTC_HPP
#define LCBF_LTC_HPP

#include "lcbf/types.hpp"

#include <functional>

namespace lcbf
{

// Liquid time-constant neuron parameters. `gain` is carried for completeness;
// the trainable network absorbs it into its gating heads.
struct LtcParams
{
    RVector leak; // o_tau, > 0
    RVector bias; // a
    RVector gain; // b
};

using InputSignal = std::function<RVector(double)>;
using SynapseHead = std::function<RVector(const RVector &)>;

// Reference RK4 integration of
//   dx/dt = -(o_tau + f(i(t))) .* (x - a)
// from 0 to t_end with step at most dt. This is the ODE whose integrating-
// factor solution is the vectorized closed form below.
RVector ltc_ode_integrate(const RVector &x0, const InputSignal &input, const LtcParams &params,
                          const SynapseHead &head, double t_end, double dt);

// x(t) = (x0 - a) .* exp(-(o_tau + f) t) + a for a constant head output f.
RVector ltc_closed_form(const RVector &x0, const RVector &bias, const RVector &leak, const RVector &head_value,
                        double t);

// General form with a precomputed integral F = int_0^t f(i(s)) ds:
// x(t) = (x0 - a) .* exp(-o_tau t - F) + a.
RVector ltc_closed_form_integral(const RVector &x0, const RVector &bias, const RVector &leak,
                                 const RVector &head_integral, double t);

} // namespace lcbf

#endif
