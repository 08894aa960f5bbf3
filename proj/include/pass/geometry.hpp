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

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "pass/rng.hpp"

namespace pass {

using Vec3 = Eigen::Vector3d;

/**
 * Full geometry of a pinching-antenna deployment: N waveguides parallel to
 * the x axis at height d, each carrying one feed point and M_n radiating
 * pinches, plus the users (Bobs) and eavesdroppers (Eves) on the ground
 * plane. Positions are meters, powers are watts.
 *
 * Waveguides span x in [-D/2, D/2]; PAs on the same waveguide must be
 * strictly more than min_spacing apart (mutual-coupling guard). validate()
 * rejects violations instead of clamping; optimizers are responsible for
 * staying feasible.
 */
struct Scene {
    std::vector<int> pas_per_waveguide;  // M_n, one entry per waveguide
    double height = 3.0;                 // d
    double region_side = 30.0;           // D, also the waveguide length
    std::vector<double> waveguide_y;     // y coordinate of each waveguide
    std::vector<Vec3> feed_points;       // signal launch point per waveguide
    std::vector<double> pa_x;            // PA x coords, grouped by waveguide
    std::vector<Vec3> bobs;              // legitimate users, z = 0
    std::vector<Vec3> eves;              // eavesdroppers, z = 0
    double carrier_wavelength = 0.0;     // lambda_c
    double guide_wavelength = 0.0;       // lambda_p = lambda_c / n_eff
    double min_spacing = 0.0;            // Delta_min
    double power_budget = 0.0;           // P_T
    std::vector<double> bob_noise;       // sigma_b^2 per Bob [W]
    std::vector<double> eve_noise;       // sigma_e^2 per Eve [W]
    std::vector<double> weights;         // alpha_k > 0 per Bob

    int num_waveguides() const { return static_cast<int>(pas_per_waveguide.size()); }
    int num_bobs() const { return static_cast<int>(bobs.size()); }
    int num_eves() const { return static_cast<int>(eves.size()); }
    int num_pas() const;
    /// Index into pa_x of the first PA on waveguide n.
    int pa_offset(int waveguide) const;
    Vec3 pa_position(int waveguide, int pa) const;
    /// Free-space gain constant eta = lambda_c^2 / (16 pi^2).
    double path_gain() const;

    /// Throws std::invalid_argument on any violated invariant.
    void validate() const;
};

/// y_n = -D/2 + n D / N for n = 1..N.
std::vector<double> default_waveguide_y(int num_waveguides, double region_side);

/// Feed at the -x end of each waveguide: (-D/2, y_n, d).
std::vector<Vec3> default_feed_points(const std::vector<double> &waveguide_y,
                                      double region_side, double height);

/// Draws pairwise-feasible PA positions on every waveguide (rejection
/// sampling against min_spacing). Throws if the waveguide cannot fit them.
void random_feasible_positions(Scene &scene, Rng &rng);

} // namespace pass
