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
#include <complex>

#include "pass/geometry.hpp"

namespace pass {

/**
 * Effective per-waveguide channels seen at the RF-chain inputs: the
 * pinching beamformer (per-PA free-space channels, in-guide phase lag and
 * 1/sqrt(M_n) power split) collapsed into one complex coefficient per
 * waveguide per user.
 *
 * bob is N x K (column k = Bob k), eve is N x J. When normalized is set,
 * each column has been divided by the amplitude of its user's noise, so
 * downstream SINRs use unit noise power.
 */
struct EffectiveChannels {
    Eigen::MatrixXcd bob;
    Eigen::MatrixXcd eve;
    bool normalized = false;
};

/// Phase accumulated inside the dielectric waveguide between the feed and a
/// PA: 2 pi |feed - pa| / lambda_p. Throws on non-positive lambda_p.
double waveguide_phase(const Vec3 &feed, const Vec3 &pa, double guide_wavelength);

/// Free-space LoS channel sqrt(eta) e^{-j 2 pi r / lambda_c} / r with
/// eta = lambda_c^2/(16 pi^2). Throws std::domain_error when r = 0.
std::complex<double> freespace_channel(const Vec3 &user, const Vec3 &pa,
                                       double carrier_wavelength);

/// One PA's contribution to the effective channel of `user` on waveguide
/// `wg`, for a PA at x-coordinate `x`: free-space channel times the
/// in-guide phase factor, scaled by 1/sqrt(M_n). Physical (un-normalized).
std::complex<double> pa_user_term(const Scene &scene, int wg, double x, const Vec3 &user);

/// Effective channel matrices for all Bobs and Eves, noise-normalized.
EffectiveChannels effective_channels(const Scene &scene);

/// Same, at physical scale (no noise normalization).
EffectiveChannels raw_effective_channels(const Scene &scene);

} // namespace pass
