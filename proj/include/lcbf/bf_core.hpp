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

#ifndef LCBF_BF_CORE_HPP
#define LCBF_BF_CORE_HPP

#include "lcbf/types.hpp"

namespace lcbf
{

// Base matrix X (N x K), projected and power-scaled precoder W (M x K), and
// the budget it was scaled to.
struct PrecoderMats
{
    CMatrix base;
    CMatrix precoder;
    double power = 0.0;
};

// Rows [k*Nk, (k+1)*Nk) of the stacked channel, with Nk = N / K.
CMatrix user_block(const CMatrix &stacked, int user, int users);

// SINR matrix of user k:
//   (H_k w_k)(H_k w_k)^H (sum_{j!=k} (H_k w_j)(H_k w_j)^H + sigma2 I)^{-1}
// evaluated with an explicit inverse.
CMatrix sinr_matrix(const CMatrix &user_channel, const CMatrix &precoder, int user, double noise_power);

// Per-user rates log2 det(I + gamma_k), evaluated as
// log2 det(S_k) - log2 det(B_k) with S_k = A_k + B_k and Cholesky
// determinants. K is precoder.cols(); N must be divisible by K.
RVector per_user_rates(const CMatrix &stacked, const CMatrix &precoder, double noise_power);

// Sum of per_user_rates, bits/s/Hz.
double spectral_efficiency(const CMatrix &stacked, const CMatrix &precoder, double noise_power);

// W_raw = H^H X.
CMatrix manifold_project(const CMatrix &channel, const CMatrix &base);

// W = sqrt(P / Tr(V V^H)) V with V = H^H X. Throws DegeneratePrecoder when V
// is zero (or not finite).
PrecoderMats apply_power_constraint(const CMatrix &channel, const CMatrix &base, double power);

// Scales an arbitrary precoder to Tr(W W^H) = power.
CMatrix scale_to_power(const CMatrix &precoder, double power);

// ---- reverse-mode pieces -------------------------------------------------
//
// Gradients of a real scalar L with respect to a complex matrix Z are carried
// as G = dL/dRe(Z) + i dL/dIm(Z), so that dL = Re(sum conj(G) .* dZ).

// Given dL/dR_k, the gradient of L with respect to W.
CMatrix rates_backward(const CMatrix &stacked, const CMatrix &precoder, double noise_power,
                       const RVector &rate_grad);

// Gradient through W = c(V) V, c = sqrt(P / ||V||_F^2).
CMatrix power_constraint_backward(const CMatrix &raw, double power, const CMatrix &precoder_grad);

// Gradient through V = H^H X.
CMatrix manifold_project_backward(const CMatrix &channel, const CMatrix &raw_grad);

// The chain X -> V = H^H X -> W -> rates, with the intermediates needed to
// pull dL/dR back to dL/dX.
struct BaseForward
{
    CMatrix raw; // V
    PrecoderMats mats;
    RVector rates;
};

BaseForward evaluate_base(const CMatrix &channel, const CMatrix &base, double power, double noise_power);

CMatrix base_backward(const CMatrix &channel, const BaseForward &forward, double noise_power,
                      const RVector &rate_grad);

} // namespace lcbf

#endif
