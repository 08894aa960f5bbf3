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

#include "pass/channel.hpp"
#include "pass/geometry.hpp"

namespace pass {

/**
 * Fractional-programming auxiliary variables for the weighted secrecy
 * sum-rate surrogate. tau_k is binary in {0, alpha_k} (rate clamp), mu_k
 * and nu_k are the Lagrangian dual multipliers for the legitimate SINR and
 * the bounded leakage ratio, xi_k is the quadratic-transform scalar, and
 * lambda is the power-constraint multiplier of the last beamformer update.
 */
struct FpState {
    Eigen::VectorXd tau;
    Eigen::VectorXd mu;
    Eigen::VectorXd nu;
    Eigen::VectorXcd xi;
    double lambda = 0.0;
};

/// Per-user receive quality under a beamformer bank: bob_sinr = gamma_k,
/// eve_snr = Gamma_k (aggregated over cooperating Eves). Channels must be
/// noise-normalized.
struct SinrReport {
    Eigen::VectorXd bob_sinr;
    Eigen::VectorXd eve_snr;
};

struct WssrResult {
    Eigen::MatrixXcd beamformers;   // W, N x K
    std::vector<double> pa_x;       // final PA positions (empty for fixed arrays)
    double wssr = 0.0;              // bits/s/Hz
    Eigen::VectorXd per_user_rates; // bits/s/Hz, clamped at zero
    std::vector<double> trace;      // WSSR after each outer iteration
    int iterations = 0;             // iterations until the stop rule fired
    int non_monotone_steps = 0;     // diagnostic; should stay zero
};

struct FpBcdOptions {
    int grid_points = 2000;   // N_s candidates of the one-dimensional search
    int max_iters = 50;
    double rel_tol = 1e-4;    // stop when the relative WSSR increment drops below
    double bisect_tol = 1e-6; // relative power accuracy of the lambda search
    bool optimize_positions = true;
};

SinrReport sinr_report(const EffectiveChannels &ch, const Eigen::MatrixXcd &w);

/// Weighted secrecy sum-rate in bits/s/Hz plus the per-user clamped rates.
std::pair<double, Eigen::VectorXd> wssr(const EffectiveChannels &ch,
                                        const Eigen::MatrixXcd &w,
                                        const Eigen::VectorXd &alpha);

/// Cauchy-Schwarz upper bound on every Eve's aggregated SNR:
/// G = P_T sum_j |h_j^e|^2.
double g_gamma(const EffectiveChannels &ch, double power_budget);

Eigen::VectorXd update_tau(const Eigen::VectorXd &bob_sinr,
                           const Eigen::VectorXd &eve_snr,
                           const Eigen::VectorXd &alpha);
Eigen::VectorXd update_mu(const EffectiveChannels &ch, const Eigen::MatrixXcd &w);
Eigen::VectorXd update_nu(const Eigen::VectorXd &eve_snr, double g_bound);
Eigen::VectorXcd update_xi(const EffectiveChannels &ch, const Eigen::MatrixXcd &w);

/// Closed-form Lagrangian beamformer bank for a fixed multiplier. The
/// lambda = 0 system may be rank-deficient; the minimum-norm stationary
/// point is returned. Throws std::runtime_error when no consistent solution
/// exists (caller retries with lambda > 0).
Eigen::MatrixXcd update_w(const EffectiveChannels &ch, const FpState &fp,
                          double g_bound, double lambda);

/// Finds lambda >= 0 meeting the power budget: lambda = 0 when the
/// unconstrained bank is feasible, otherwise a doubling bracket plus
/// bisection to |power - P_T| <= tol * P_T.
std::pair<double, Eigen::MatrixXcd> bisect_lambda(const EffectiveChannels &ch,
                                                  const FpState &fp, double g_bound,
                                                  double power_budget, double tol);

// Surrogate objective chain in natural log. Each stage equals the previous
// one when its auxiliaries are set optimally; wssr() in bits is the clamped
// tau-stage divided by ln 2.
double surrogate_tau(const Eigen::VectorXd &bob_sinr, const Eigen::VectorXd &eve_snr,
                     const Eigen::VectorXd &tau);
double surrogate_bound(const Eigen::VectorXd &bob_sinr, const Eigen::VectorXd &eve_snr,
                       const Eigen::VectorXd &tau, double g_bound);
double surrogate_dual(const EffectiveChannels &ch, const Eigen::MatrixXcd &w,
                      const FpState &fp, double g_bound);
double surrogate_quadratic(const EffectiveChannels &ch, const Eigen::MatrixXcd &w,
                           const FpState &fp, double g_bound);

/**
 * Everything the one-dimensional position search needs that does not depend
 * on the candidate coordinate: Gram matrices of the current beamformer bank
 * folded with the FP diagonals, the linear phasor couplings of the moving
 * PA against all frozen ones, and the split constants of the leakage
 * fraction. Rebuilt per (waveguide, pa) element; const_offset carries the
 * candidate-independent remainder so the objective value equals the full
 * position surrogate, not just its variable part.
 */
struct PositionObjectiveContext {
    int waveguide = 0;
    int pa = 0;
    double e_nn = 0.0;              // [W W^H]_{nn}
    Eigen::VectorXd b_diag;         // tau_k (1+mu_k) |xi_k|^2
    Eigen::VectorXcd a_bar;         // linear Bob coupling
    Eigen::VectorXcd b_bar;         // linear Eve coupling
    double c1_bar = 0.0;            // constant part of the leakage denominator
    double c2_bar = 0.0;            // constant part of the leakage numerator
    double j_nn_excess = 0.0;       // [W C W^H]_{nn} - P_T tr(C)
    double tau_total = 0.0;         // tr(Upsilon)
    double power_budget = 0.0;
    Eigen::VectorXcd pi_const_bob;  // frozen same-waveguide PA phasors
    Eigen::VectorXcd pi_const_eve;
    double const_offset = 0.0;
};

PositionObjectiveContext build_position_context(const Scene &scene,
                                                const EffectiveChannels &ch,
                                                const Eigen::MatrixXcd &w,
                                                const FpState &fp, int pa,
                                                int waveguide);

/// Position surrogate (to be minimized) for PA (ctx.pa, ctx.waveguide) at
/// candidate coordinate x, all other PAs fixed.
double position_objective(double x, const PositionObjectiveContext &ctx,
                          const Scene &scene);

struct GridSearchResult {
    double x = 0.0;
    double objective = 0.0;
    int index = -1;
};

/// Constrained grid argmin over num_candidates equispaced positions,
/// excluding the neighborhoods of already-placed PAs (smaller pa index) on
/// the same waveguide. Ties break toward the smallest index. Throws when no
/// candidate is feasible.
GridSearchResult one_dim_search(const PositionObjectiveContext &ctx,
                                const Scene &scene, int num_candidates);

/// FP-BCD weighted secrecy sum-rate maximization over the baseband
/// beamformers and the PA positions of `scene`.
WssrResult fp_bcd(const Scene &scene, const FpBcdOptions &opts = {});

/// Same FP loop with the channels held fixed (no position block); used for
/// fixed-antenna baselines.
WssrResult fp_fixed_channels(const EffectiveChannels &ch, double power_budget,
                             const Eigen::VectorXd &alpha,
                             const FpBcdOptions &opts = {});

} // namespace pass
