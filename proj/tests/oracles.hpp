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

// Independent reference implementations used only by the tests. None of
// these call into the library's linear algebra paths.

#ifndef LCBF_TESTS_ORACLES_HPP
#define LCBF_TESTS_ORACLES_HPP

#include "lcbf/channel_model.hpp"
#include "lcbf/rng.hpp"
#include "lcbf/types.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace oracle
{

using lcbf::cdouble;
using lcbf::CMatrix;
using lcbf::CVector;

inline CMatrix random_complex(int rows, int cols, lcbf::RngStream &rng, double var = 1.0)
{
    CMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = rng.complex_normal(var);
    return m;
}

// Gauss-Jordan inverse with partial pivoting, written out by hand.
inline CMatrix gauss_jordan_inverse(const CMatrix &a)
{
    const int n = static_cast<int>(a.rows());
    std::vector<std::vector<cdouble>> m(n, std::vector<cdouble>(2 * n));
    for (int i = 0; i < n; ++i)
    {
        for (int j = 0; j < n; ++j)
            m[i][j] = a(i, j);
        m[i][n + i] = 1.0;
    }
    for (int c = 0; c < n; ++c)
    {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[piv][c]))
                piv = r;
        if (std::abs(m[piv][c]) == 0.0)
            throw std::runtime_error("singular");
        std::swap(m[c], m[piv]);
        const cdouble d = m[c][c];
        for (auto &v : m[c])
            v /= d;
        for (int r = 0; r < n; ++r)
        {
            if (r == c)
                continue;
            const cdouble f = m[r][c];
            for (int j = 0; j < 2 * n; ++j)
                m[r][j] -= f * m[c][j];
        }
    }
    CMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv(i, j) = m[i][n + j];
    return inv;
}

// gamma_k with explicit loops and the Gauss-Jordan inverse.
inline CMatrix sinr_oracle(const CMatrix &hk, const CMatrix &w, int k, double s2)
{
    const int nk = static_cast<int>(hk.rows());
    const int users = static_cast<int>(w.cols());
    std::vector<CVector> t(users);
    for (int j = 0; j < users; ++j)
    {
        t[j] = CVector::Zero(nk);
        for (int r = 0; r < nk; ++r)
            for (int m = 0; m < hk.cols(); ++m)
                t[j](r) += hk(r, m) * w(m, j);
    }
    CMatrix b = CMatrix::Zero(nk, nk);
    for (int r = 0; r < nk; ++r)
        b(r, r) = s2;
    for (int j = 0; j < users; ++j)
        if (j != k)
            for (int r = 0; r < nk; ++r)
                for (int c = 0; c < nk; ++c)
                    b(r, c) += t[j](r) * std::conj(t[j](c));
    CMatrix a(nk, nk);
    for (int r = 0; r < nk; ++r)
        for (int c = 0; c < nk; ++c)
            a(r, c) = t[k](r) * std::conj(t[k](c));
    return a * gauss_jordan_inverse(b);
}

// sum_k sum_i log2(1 + lambda_i(gamma_k)) from a general eigen-decomposition.
inline double se_eigen_oracle(const CMatrix &stacked, const CMatrix &w, double s2)
{
    const int users = static_cast<int>(w.cols());
    const int nk = static_cast<int>(stacked.rows()) / users;
    double total = 0.0;
    for (int k = 0; k < users; ++k)
    {
        const CMatrix g = sinr_oracle(stacked.middleRows(k * nk, nk), w, k, s2);
        Eigen::ComplexEigenSolver<CMatrix> es(g);
        for (int i = 0; i < nk; ++i)
            total += std::log2(1.0 + std::max(0.0, es.eigenvalues()(i).real()));
    }
    return total;
}

// Per-user channel built by an explicit loop over paths and entries.
inline CMatrix channel_oracle(const lcbf::PathSet &set, const lcbf::RadiationPattern &pat,
                              const lcbf::SystemConfig &sys)
{
    CMatrix h = CMatrix::Zero(sys.rx_per_user, sys.tx_elements);
    for (const auto &p : set.paths)
    {
        const double phase = -2.0 * lcbf::kPi * sys.carrier_hz * p.delay_s;
        const cdouble alpha = p.amplitude * cdouble(std::cos(phase), std::sin(phase));
        const double g = std::sqrt(lcbf::pattern_gain(pat, p.aod.theta, p.aod.phi));
        const double ur = std::sin(p.aoa.theta) * std::cos(p.aoa.phi);
        const double ut = std::sin(p.aod.theta) * std::cos(p.aod.phi);
        for (int r = 0; r < sys.rx_per_user; ++r)
            for (int m = 0; m < sys.tx_elements; ++m)
            {
                const double ar = 2.0 * lcbf::kPi * sys.rx_spacing * r * ur;
                const double at = 2.0 * lcbf::kPi * sys.tx_spacing * m * ut;
                h(r, m) += alpha * g * cdouble(std::cos(ar), std::sin(ar)) * cdouble(std::cos(at), -std::sin(at));
            }
    }
    return h;
}

// Orthonormal basis of null(H) by Gram-Schmidt over the standard basis after
// removing the row space.
inline CMatrix null_space_basis(const CMatrix &h)
{
    const int m = static_cast<int>(h.cols());
    std::vector<CVector> basis;
    // Row-space basis first.
    for (int r = 0; r < h.rows(); ++r)
    {
        CVector v = h.row(r).adjoint();
        for (const auto &b : basis)
            v -= b * (b.adjoint() * v)(0);
        const double n = v.norm();
        if (n > 1e-10)
            basis.push_back(v / n);
    }
    const std::size_t rank = basis.size();
    for (int e = 0; e < m; ++e)
    {
        CVector v = CVector::Zero(m);
        v(e) = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (const auto &b : basis)
                v -= b * (b.adjoint() * v)(0);
        const double n = v.norm();
        if (n > 1e-8)
            basis.push_back(v / n);
    }
    CMatrix out(m, static_cast<int>(basis.size() - rank));
    for (std::size_t i = rank; i < basis.size(); ++i)
        out.col(static_cast<int>(i - rank)) = basis[i];
    return out;
}

// 20 log10(4 pi d f / c), written independently of the library.
inline double fspl_db(double d, double f) { return 20.0 * std::log10(4.0 * 3.141592653589793 * d * f / 299792458.0); }

} // namespace oracle

#endif
