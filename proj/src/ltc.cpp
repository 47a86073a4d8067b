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

#include "lcbf/ltc.hpp"

#include <cmath>

namespace lcbf
{

RVector ltc_ode_integrate(const RVector &x0, const InputSignal &input, const LtcParams &params,
                          const SynapseHead &head, double t_end, double dt)
{
    if (!(dt > 0.0) || !(t_end >= 0.0))
        throw std::invalid_argument("ltc_ode_integrate: need dt > 0 and t_end >= 0");
    if ((params.leak.array() <= 0.0).any())
        throw std::invalid_argument("ltc_ode_integrate: time constants must be positive");

    auto rhs = [&](double t, const RVector &x) -> RVector {
        const RVector f = head(input(t));
        return -((params.leak + f).array() * (x - params.bias).array()).matrix();
    };

    const long steps = std::max(1L, static_cast<long>(std::ceil(t_end / dt - 1e-12)));
    const double h = t_end / static_cast<double>(steps);
    RVector x = x0;
    double t = 0.0;
    for (long s = 0; s < steps; ++s)
    {
        const RVector k1 = rhs(t, x);
        const RVector k2 = rhs(t + 0.5 * h, x + 0.5 * h * k1);
        const RVector k3 = rhs(t + 0.5 * h, x + 0.5 * h * k2);
        const RVector k4 = rhs(t + h, x + h * k3);
        x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = static_cast<double>(s + 1) * h;
    }
    return x;
}

RVector ltc_closed_form(const RVector &x0, const RVector &bias, const RVector &leak, const RVector &head_value,
                        double t)
{
    if (t == 0.0)
        return x0;
    return ltc_closed_form_integral(x0, bias, leak, head_value * t, t);
}

RVector ltc_closed_form_integral(const RVector &x0, const RVector &bias, const RVector &leak,
                                 const RVector &head_integral, double t)
{
    if (t < 0.0)
        throw std::invalid_argument("ltc_closed_form: t must be non-negative");
    const Eigen::ArrayXd decay = (-(leak.array() * t) - head_integral.array()).exp();
    return ((x0 - bias).array() * decay + bias.array()).matrix();
}

} // namespace lcbf
