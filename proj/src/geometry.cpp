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

#include "pass/geometry.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pass {

int Scene::num_pas() const {
    return std::accumulate(pas_per_waveguide.begin(), pas_per_waveguide.end(), 0);
}

int Scene::pa_offset(int waveguide) const {
    int off = 0;
    for (int n = 0; n < waveguide; ++n)
        off += pas_per_waveguide[n];
    return off;
}

Vec3 Scene::pa_position(int waveguide, int pa) const {
    return Vec3(pa_x[pa_offset(waveguide) + pa], waveguide_y[waveguide], height);
}

double Scene::path_gain() const {
    return carrier_wavelength * carrier_wavelength / (16.0 * M_PI * M_PI);
}

void Scene::validate() const {
    const int n_wg = num_waveguides();
    if (n_wg < 1)
        throw std::invalid_argument("scene: at least one waveguide required");
    for (int m : pas_per_waveguide)
        if (m < 1)
            throw std::invalid_argument("scene: every waveguide needs at least one PA");
    if (!(height > 0.0))
        throw std::invalid_argument("scene: waveguide height must be positive");
    if (!(region_side > 0.0))
        throw std::invalid_argument("scene: region side must be positive");
    if (!(carrier_wavelength > 0.0))
        throw std::invalid_argument("scene: carrier wavelength must be positive");
    if (!(guide_wavelength > 0.0) || guide_wavelength > carrier_wavelength)
        throw std::invalid_argument("scene: guide wavelength must satisfy 0 < lambda_p <= lambda_c");
    if (min_spacing < 0.0)
        throw std::invalid_argument("scene: min spacing must be nonnegative");
    if (!(power_budget > 0.0))
        throw std::invalid_argument("scene: power budget must be positive");

    if (static_cast<int>(waveguide_y.size()) != n_wg)
        throw std::invalid_argument("scene: waveguide_y size mismatch");
    if (static_cast<int>(feed_points.size()) != n_wg)
        throw std::invalid_argument("scene: feed_points size mismatch");
    if (static_cast<int>(pa_x.size()) != num_pas())
        throw std::invalid_argument("scene: pa_x size mismatch");
    if (bob_noise.size() != bobs.size() || eve_noise.size() != eves.size())
        throw std::invalid_argument("scene: noise vector size mismatch");
    if (weights.size() != bobs.size())
        throw std::invalid_argument("scene: weights size mismatch");

    for (double s2 : bob_noise)
        if (!(s2 > 0.0))
            throw std::invalid_argument("scene: Bob noise power must be positive");
    for (double s2 : eve_noise)
        if (!(s2 > 0.0))
            throw std::invalid_argument("scene: Eve noise power must be positive");
    for (double a : weights)
        if (!(a > 0.0))
            throw std::invalid_argument("scene: user weights must be positive");

    for (const Vec3 &b : bobs)
        if (b.z() != 0.0)
            throw std::invalid_argument("scene: Bobs must lie in the z = 0 plane");
    for (const Vec3 &e : eves)
        if (e.z() != 0.0)
            throw std::invalid_argument("scene: Eves must lie in the z = 0 plane");

    const double half = region_side / 2.0;
    for (int n = 0; n < n_wg; ++n) {
        const Vec3 &f = feed_points[n];
        if (f.y() != waveguide_y[n] || f.z() != height)
            throw std::invalid_argument("scene: feed point must lie on its waveguide");
        const int off = pa_offset(n);
        const int m_n = pas_per_waveguide[n];
        for (int m = 0; m < m_n; ++m) {
            const double x = pa_x[off + m];
            if (!(x >= -half && x <= half))
                throw std::invalid_argument("scene: PA position outside the waveguide");
            for (int m2 = m + 1; m2 < m_n; ++m2) {
                if (!(std::abs(x - pa_x[off + m2]) > min_spacing))
                    throw std::invalid_argument("scene: PA spacing below the coupling limit");
            }
        }
    }
}

std::vector<double> default_waveguide_y(int num_waveguides, double region_side) {
    std::vector<double> y(num_waveguides);
    for (int n = 0; n < num_waveguides; ++n)
        y[n] = -region_side / 2.0 + (n + 1) * region_side / num_waveguides;
    return y;
}

std::vector<Vec3> default_feed_points(const std::vector<double> &waveguide_y,
                                      double region_side, double height) {
    std::vector<Vec3> feeds;
    feeds.reserve(waveguide_y.size());
    for (double y : waveguide_y)
        feeds.emplace_back(-region_side / 2.0, y, height);
    return feeds;
}

void random_feasible_positions(Scene &scene, Rng &rng) {
    const double half = scene.region_side / 2.0;
    for (int n = 0; n < scene.num_waveguides(); ++n) {
        const int off = scene.pa_offset(n);
        const int m_n = scene.pas_per_waveguide[n];
        for (int m = 0; m < m_n; ++m) {
            bool placed = false;
            for (int attempt = 0; attempt < 100000; ++attempt) {
                const double x = uniform_range(rng, -half, half);
                bool ok = true;
                for (int m2 = 0; m2 < m; ++m2) {
                    if (!(std::abs(x - scene.pa_x[off + m2]) > scene.min_spacing)) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    scene.pa_x[off + m] = x;
                    placed = true;
                    break;
                }
            }
            if (!placed)
                throw std::invalid_argument(
                    "random_feasible_positions: cannot satisfy PA spacing on waveguide " +
                    std::to_string(n));
        }
    }
}

} // namespace pass
