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
#include <utility>
#include <vector>

#include "pass/geometry.hpp"

namespace pass {

/**
 * Single-Bob / single-Eve channel snapshot at physical scale. The SNR
 * budgets fold the power budget and noise together: snr_i = P_T / sigma_i^2,
 * so the pair fully determines the achievable secrecy rate.
 */
struct SuChannelPair {
    Eigen::VectorXcd bob; // h^b, one entry per waveguide
    Eigen::VectorXcd eve; // h^e
    double snr_bob = 0.0; // P_T / sigma_b^2
    double snr_eve = 0.0; // P_T / sigma_e^2
};

/// Quadratic coefficients of the secrecy-rate characteristic polynomial.
/// Always a >= 1 and c >= 0 (Cauchy-Schwarz).
struct AbcCoefficients {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
};

struct SuTracePoint {
    double objective = 0.0;  // f(x^p), monotone transform of the rate
    double grad_norm = 0.0;  // (1/N) sum_n |df/dx_n|
};

struct SuSolution {
    Eigen::VectorXcd direction;  // v*, unit norm
    Eigen::VectorXcd beamformer; // w* = sqrt(P_T) v*
    double secrecy_rate = 0.0;   // bits/s/Hz, >= 0
    std::vector<double> pa_x;    // final PA positions
    std::vector<SuTracePoint> trace; // entry 0 = initial point, then one per sweep
    int sweeps = 0;
};

struct Algorithm1Options {
    double beta_ini = 10.0;
    double beta_min = 1e-13;
    int max_sweeps = 500;
    // Stop when a full sweep improves f by less than rel_improve_tol
    // (relative) or the average gradient norm falls below grad_norm_tol,
    // whichever happens first. Zero disables the corresponding test.
    double rel_improve_tol = 1e-8;
    double grad_norm_tol = 1e-6;
};

/// Extracts the single-user channel pair from a scene with K = 1, J = 1 and
/// one PA per waveguide. Throws std::invalid_argument otherwise.
SuChannelPair su_channel_pair(const Scene &scene);

AbcCoefficients abc_coefficients(const SuChannelPair &ch);

/// Maximum secrecy rate in bits/s/Hz under the optimal baseband beamformer,
/// log2(1 + (b + sqrt(b^2 + 4ac)) / (2a)), plus the coefficients used.
std::pair<double, AbcCoefficients> closed_form_secrecy(const SuChannelPair &ch);

/// Optimal unit-norm baseband direction v*: the whitened principal
/// eigenvector of the generalized Rayleigh quotient.
Eigen::VectorXcd optimal_beamformer(const SuChannelPair &ch);

/// (|v|^2 + snr_b |h_b^T v|^2) / (|v|^2 + snr_e |h_e^T v|^2), the quantity
/// v* maximizes.
double rayleigh_quotient(const SuChannelPair &ch, const Eigen::VectorXcd &v);

/// Whitened legitimate-channel matrix
/// (I + snr_e h_e* h_e^T)^{-1/2} (I + snr_b h_b* h_b^T) (I + snr_e h_e* h_e^T)^{-1/2},
/// built with the exact rank-1 inverse square root.
Eigen::MatrixXcd whitened_bob_covariance(const SuChannelPair &ch);

/// Independent route to the secrecy rate: log2 of the principal eigenvalue
/// of the whitened covariance, via a Hermitian eigensolver.
double secrecy_rate_eigen(const SuChannelPair &ch);

/// Position objective f(x^p) = (b + sqrt(b^2 + 4ac)) / a; the secrecy rate
/// is log2(1 + f/2).
double su_objective(const std::vector<double> &pa_x, const Scene &scene);

/// Analytic derivative of f with respect to the x-coordinate of the PA on
/// waveguide `n`, all other positions fixed.
double su_gradient(int n, const std::vector<double> &pa_x, const Scene &scene);

/// Elementwise gradient ascent with halving-step backtracking over the PA
/// positions, starting from scene.pa_x, followed by the closed-form
/// beamformer at the final positions.
SuSolution algorithm1_optimize(const Scene &scene, const Algorithm1Options &opts = {});

} // namespace pass
