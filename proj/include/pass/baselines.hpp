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

#include "pass/channel.hpp"
#include "pass/geometry.hpp"
#include "pass/su_secure.hpp"

namespace pass {

/// Conventional base station used for comparison: N immobile antennas on the
/// x axis at half-wavelength spacing, centered at (0, 0, d).
struct FixedArrayScene {
    int num_antennas = 0;
    double height = 3.0;
    double carrier_wavelength = 0.0;
    std::vector<Vec3> bobs;
    std::vector<Vec3> eves;
    double power_budget = 0.0;
    std::vector<double> bob_noise;
    std::vector<double> eve_noise;
    std::vector<double> weights;

    Vec3 antenna_position(int i) const {
        const double x = (i - (num_antennas - 1) / 2.0) * carrier_wavelength / 2.0;
        return Vec3(x, 0.0, height);
    }
    void validate() const;
};

/// Per-antenna free-space channels (no waveguide phase, no power split),
/// noise-normalized.
EffectiveChannels fixed_array_channels(const FixedArrayScene &fa);

/// Same at physical scale, for the single-user closed-form path.
EffectiveChannels raw_fixed_array_channels(const FixedArrayScene &fa);

/// Single-user channel pair of a fixed array (requires K = J = 1).
SuChannelPair su_channel_pair(const FixedArrayScene &fa);

/// Channel-matched beamformers with the budget split equally across users:
/// w_k = sqrt(P_T/K) h_k^* / |h_k|.
Eigen::MatrixXcd mrt_beamformers(const EffectiveChannels &ch, double power_budget);

/// MRT at full per-user power, w_k = sqrt(P_T) h_k^* / |h_k|; only used to
/// initialize the FP-BCD loop.
Eigen::MatrixXcd mrt_init_beamformers(const EffectiveChannels &ch, double power_budget);

/// Zero-forcing directions from the pseudo-inverse of the stacked Bob rows
/// (h_i^T w_k = 0 for i != k), equal power split. Requires N >= K and a
/// full-column-rank Bob matrix.
Eigen::MatrixXcd zf_beamformers(const EffectiveChannels &ch, double power_budget);

} // namespace pass
