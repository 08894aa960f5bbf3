// SPDX-License-Identifier: Apache-2.0
//
// pass-secure: secure beamforming for pinching-antenna systems
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

#include "pass/baselines.hpp"

#include <cmath>
#include <stdexcept>

namespace pass {

void FixedArrayScene::validate() const {
    if (num_antennas < 1)
        throw std::invalid_argument("fixed array: at least one antenna required");
    if (!(height > 0.0) || !(carrier_wavelength > 0.0) || !(power_budget > 0.0))
        throw std::invalid_argument("fixed array: nonpositive physical parameter");
    if (bob_noise.size() != bobs.size() || eve_noise.size() != eves.size() ||
        weights.size() != bobs.size())
        throw std::invalid_argument("fixed array: per-user vector size mismatch");
    for (double s2 : bob_noise)
        if (!(s2 > 0.0))
            throw std::invalid_argument("fixed array: noise power must be positive");
    for (double s2 : eve_noise)
        if (!(s2 > 0.0))
            throw std::invalid_argument("fixed array: noise power must be positive");
    for (double a : weights)
        if (!(a > 0.0))
            throw std::invalid_argument("fixed array: weights must be positive");
}

namespace {

Eigen::MatrixXcd fa_user_matrix(const FixedArrayScene &fa, const std::vector<Vec3> &users) {
    Eigen::MatrixXcd h(fa.num_antennas, static_cast<int>(users.size()));
    for (int u = 0; u < static_cast<int>(users.size()); ++u)
        for (int i = 0; i < fa.num_antennas; ++i)
            h(i, u) = freespace_channel(users[u], fa.antenna_position(i),
                                        fa.carrier_wavelength);
    return h;
}

} // namespace

EffectiveChannels raw_fixed_array_channels(const FixedArrayScene &fa) {
    EffectiveChannels ch;
    ch.bob = fa_user_matrix(fa, fa.bobs);
    ch.eve = fa_user_matrix(fa, fa.eves);
    ch.normalized = false;
    return ch;
}

EffectiveChannels fixed_array_channels(const FixedArrayScene &fa) {
    EffectiveChannels ch = raw_fixed_array_channels(fa);
    for (int k = 0; k < ch.bob.cols(); ++k)
        ch.bob.col(k) /= std::sqrt(fa.bob_noise[k]);
    for (int j = 0; j < ch.eve.cols(); ++j)
        ch.eve.col(j) /= std::sqrt(fa.eve_noise[j]);
    ch.normalized = true;
    return ch;
}

SuChannelPair su_channel_pair(const FixedArrayScene &fa) {
    if (fa.bobs.size() != 1 || fa.eves.size() != 1)
        throw std::invalid_argument("fixed array: single-user path needs one Bob and one Eve");
    const EffectiveChannels raw = raw_fixed_array_channels(fa);
    SuChannelPair ch;
    ch.bob = raw.bob.col(0);
    ch.eve = raw.eve.col(0);
    ch.snr_bob = fa.power_budget / fa.bob_noise[0];
    ch.snr_eve = fa.power_budget / fa.eve_noise[0];
    return ch;
}

namespace {

Eigen::MatrixXcd mrt_bank(const EffectiveChannels &ch, double per_user_power) {
    const int n_users = static_cast<int>(ch.bob.cols());
    Eigen::MatrixXcd w(ch.bob.rows(), n_users);
    for (int k = 0; k < n_users; ++k) {
        const double nb = ch.bob.col(k).norm();
        if (nb == 0.0)
            throw std::runtime_error("mrt: all-zero user channel");
        w.col(k) = std::sqrt(per_user_power) / nb * ch.bob.col(k).conjugate();
    }
    return w;
}

} // namespace

Eigen::MatrixXcd mrt_beamformers(const EffectiveChannels &ch, double power_budget) {
    const int n_users = static_cast<int>(ch.bob.cols());
    if (n_users < 1)
        throw std::invalid_argument("mrt: at least one user required");
    return mrt_bank(ch, power_budget / n_users);
}

Eigen::MatrixXcd mrt_init_beamformers(const EffectiveChannels &ch, double power_budget) {
    if (ch.bob.cols() < 1)
        throw std::invalid_argument("mrt: at least one user required");
    return mrt_bank(ch, power_budget);
}

Eigen::MatrixXcd zf_beamformers(const EffectiveChannels &ch, double power_budget) {
    const int n_ant = static_cast<int>(ch.bob.rows());
    const int n_users = static_cast<int>(ch.bob.cols());
    if (n_users < 1)
        throw std::invalid_argument("zf: at least one user required");
    if (n_ant < n_users)
        throw std::invalid_argument("zf: needs at least as many antennas as users");

    // Directions from H^* (H^T H^*)^{-1}: exact nulls h_i^T w_k = 0, i != k.
    const Eigen::MatrixXcd gram = ch.bob.transpose() * ch.bob.conjugate();
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(gram);
    if (!lu.isInvertible())
        throw std::runtime_error("zf: rank-deficient user channel matrix");
    Eigen::MatrixXcd w = ch.bob.conjugate() * lu.inverse();

    const double per_user = power_budget / n_users;
    for (int k = 0; k < n_users; ++k) {
        const double norm = w.col(k).norm();
        if (norm == 0.0 || !w.col(k).allFinite())
            throw std::runtime_error("zf: degenerate direction");
        w.col(k) *= std::sqrt(per_user) / norm;
    }
    return w;
}

} // namespace pass
