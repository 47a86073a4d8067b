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

#include "lcbf/bf_core.hpp"

#include <cmath>

namespace lcbf
{

namespace
{

constexpr double kLn2 = std::numbers::ln2;

int rx_per_user(const CMatrix &stacked, int users)
{
    if (users <= 0 || stacked.rows() % users != 0)
        throw std::invalid_argument("stacked channel rows must be a multiple of the user count");
    return static_cast<int>(stacked.rows()) / users;
}

// log det of a Hermitian positive definite matrix.
double hpd_log_det(const CMatrix &a)
{
    Eigen::LLT<CMatrix> llt(a);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("interference-plus-noise matrix is not positive definite");
    const auto &l = llt.matrixLLT();
    double acc = 0.0;
    for (Eigen::Index i = 0; i < l.rows(); ++i)
        acc += std::log(l(i, i).real());
    return 2.0 * acc;
}

struct UserTerms
{
    CMatrix received; // T_k = H_k W, Nk x K
    CMatrix total;    // S_k = T_k T_k^H + sigma2 I
    CMatrix interference; // B_k = S_k - t_k t_k^H
};

UserTerms user_terms(const CMatrix &hk, const CMatrix &w, int k, double noise_power)
{
    UserTerms u;
    u.received = hk * w;
    const Eigen::Index nk = hk.rows();
    u.interference = noise_power * CMatrix::Identity(nk, nk);
    for (Eigen::Index j = 0; j < w.cols(); ++j)
    {
        if (j == k)
            continue;
        u.interference.noalias() += u.received.col(j) * u.received.col(j).adjoint();
    }
    u.total = u.interference + u.received.col(k) * u.received.col(k).adjoint();
    return u;
}

} // namespace

CMatrix user_block(const CMatrix &stacked, int user, int users)
{
    const int nk = rx_per_user(stacked, users);
    return stacked.middleRows(static_cast<Eigen::Index>(user) * nk, nk);
}

CMatrix sinr_matrix(const CMatrix &user_channel, const CMatrix &precoder, int user, double noise_power)
{
    if (!(noise_power > 0.0))
        throw std::invalid_argument("sinr_matrix: noise power must be positive");
    const UserTerms u = user_terms(user_channel, precoder, user, noise_power);
    const CVector t = u.received.col(user);
    return (t * t.adjoint()) * u.interference.inverse();
}

RVector per_user_rates(const CMatrix &stacked, const CMatrix &precoder, double noise_power)
{
    const int users = static_cast<int>(precoder.cols());
    rx_per_user(stacked, users);
    RVector rates(users);
    for (int k = 0; k < users; ++k)
    {
        const UserTerms u = user_terms(user_block(stacked, k, users), precoder, k, noise_power);
        const double r = (hpd_log_det(u.total) - hpd_log_det(u.interference)) / kLn2;
        rates(k) = std::max(0.0, r);
    }
    return rates;
}

double spectral_efficiency(const CMatrix &stacked, const CMatrix &precoder, double noise_power)
{
    return per_user_rates(stacked, precoder, noise_power).sum();
}

CMatrix manifold_project(const CMatrix &channel, const CMatrix &base) { return channel.adjoint() * base; }

CMatrix scale_to_power(const CMatrix &precoder, double power)
{
    const double energy = precoder.squaredNorm();
    if (!(energy > 0.0) || !std::isfinite(energy))
        throw DegeneratePrecoder("precoder has zero or non-finite energy");
    return precoder * std::sqrt(power / energy);
}

PrecoderMats apply_power_constraint(const CMatrix &channel, const CMatrix &base, double power)
{
    PrecoderMats out;
    out.base = base;
    out.power = power;
    out.precoder = scale_to_power(manifold_project(channel, base), power);
    return out;
}

CMatrix rates_backward(const CMatrix &stacked, const CMatrix &precoder, double noise_power,
                       const RVector &rate_grad)
{
    const int users = static_cast<int>(precoder.cols());
    CMatrix grad = CMatrix::Zero(precoder.rows(), precoder.cols());
    for (int k = 0; k < users; ++k)
    {
        if (rate_grad(k) == 0.0)
            continue;
        const CMatrix hk = user_block(stacked, k, users);
        const UserTerms u = user_terms(hk, precoder, k, noise_power);
        // d log det(S) / dw_j = 2 H^H S^{-1} H w_j, likewise for B over j != k.
        CMatrix through_total = u.total.llt().solve(u.received);
        CMatrix interferers = u.received;
        interferers.col(k).setZero();
        CMatrix through_interf = u.interference.llt().solve(interferers);
        grad.noalias() += (2.0 * rate_grad(k) / kLn2) * (hk.adjoint() * (through_total - through_interf));
    }
    return grad;
}

CMatrix power_constraint_backward(const CMatrix &raw, double power, const CMatrix &precoder_grad)
{
    const double energy = raw.squaredNorm();
    const double c = std::sqrt(power / energy);
    // Re <G_W, V>
    const double proj = (precoder_grad.conjugate().cwiseProduct(raw)).sum().real();
    return c * precoder_grad - (c * proj / energy) * raw;
}

CMatrix manifold_project_backward(const CMatrix &channel, const CMatrix &raw_grad) { return channel * raw_grad; }

BaseForward evaluate_base(const CMatrix &channel, const CMatrix &base, double power, double noise_power)
{
    BaseForward f;
    f.raw = manifold_project(channel, base);
    f.mats.base = base;
    f.mats.power = power;
    f.mats.precoder = scale_to_power(f.raw, power);
    f.rates = per_user_rates(channel, f.mats.precoder, noise_power);
    return f;
}

CMatrix base_backward(const CMatrix &channel, const BaseForward &forward, double noise_power,
                      const RVector &rate_grad)
{
    const CMatrix g_w = rates_backward(channel, forward.mats.precoder, noise_power, rate_grad);
    const CMatrix g_v = power_constraint_backward(forward.raw, forward.mats.power, g_w);
    return manifold_project_backward(channel, g_v);
}

} // namespace lcbf
