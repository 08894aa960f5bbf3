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

#include "pass/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace pass {

double waveguide_phase(const Vec3 &feed, const Vec3 &pa, double guide_wavelength) {
    if (!(guide_wavelength > 0.0))
        throw std::invalid_argument("waveguide_phase: guide wavelength must be positive");
    return 2.0 * M_PI * (feed - pa).norm() / guide_wavelength;
}

std::complex<double> freespace_channel(const Vec3 &user, const Vec3 &pa,
                                       double carrier_wavelength) {
    if (!(carrier_wavelength > 0.0))
        throw std::invalid_argument("freespace_channel: carrier wavelength must be positive");
    const double r = (user - pa).norm();
    if (r == 0.0)
        throw std::domain_error("freespace_channel: user coincides with the antenna");
    // sqrt(eta) = lambda_c / (4 pi); phase convention is the negative exponent.
    const double amplitude = carrier_wavelength / (4.0 * M_PI) / r;
    return std::polar(amplitude, -2.0 * M_PI * r / carrier_wavelength);
}

std::complex<double> pa_user_term(const Scene &scene, int wg, double x, const Vec3 &user) {
    const Vec3 pa(x, scene.waveguide_y[wg], scene.height);
    const double r = (user - pa).norm();
    if (r == 0.0)
        throw std::domain_error("pa_user_term: user coincides with a PA");
    const double guide_len = (scene.feed_points[wg] - pa).norm();
    const double amplitude = scene.carrier_wavelength / (4.0 * M_PI) /
                             (r * std::sqrt(static_cast<double>(scene.pas_per_waveguide[wg])));
    const double phase = 2.0 * M_PI * (r / scene.carrier_wavelength +
                                       guide_len / scene.guide_wavelength);
    return std::polar(amplitude, -phase);
}

namespace {

Eigen::MatrixXcd user_matrix(const Scene &scene, const std::vector<Vec3> &users) {
    const int n_wg = scene.num_waveguides();
    Eigen::MatrixXcd h(n_wg, static_cast<int>(users.size()));
    for (int u = 0; u < static_cast<int>(users.size()); ++u) {
        for (int n = 0; n < n_wg; ++n) {
            std::complex<double> sum = 0.0;
            const int off = scene.pa_offset(n);
            for (int m = 0; m < scene.pas_per_waveguide[n]; ++m)
                sum += pa_user_term(scene, n, scene.pa_x[off + m], users[u]);
            h(n, u) = sum;
        }
    }
    return h;
}

} // namespace

EffectiveChannels raw_effective_channels(const Scene &scene) {
    EffectiveChannels ch;
    ch.bob = user_matrix(scene, scene.bobs);
    ch.eve = user_matrix(scene, scene.eves);
    ch.normalized = false;
    return ch;
}

EffectiveChannels effective_channels(const Scene &scene) {
    EffectiveChannels ch = raw_effective_channels(scene);
    for (int k = 0; k < ch.bob.cols(); ++k)
        ch.bob.col(k) /= std::sqrt(scene.bob_noise[k]);
    for (int j = 0; j < ch.eve.cols(); ++j)
        ch.eve.col(j) /= std::sqrt(scene.eve_noise[j]);
    ch.normalized = true;
    return ch;
}

} // namespace pass
