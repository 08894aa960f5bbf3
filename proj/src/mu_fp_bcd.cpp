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

#include "pass/mu_fp_bcd.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace pass {

namespace {

using Cplx = std::complex<double>;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

constexpr double kLn2 = 0.6931471805599453;

void require_normalized(const EffectiveChannels &ch) {
    if (!ch.normalized)
        throw std::invalid_argument("expected noise-normalized channels");
}

void check_bank(const EffectiveChannels &ch, const MatrixXcd &w) {
    if (w.rows() != ch.bob.rows() || w.cols() != ch.bob.cols())
        throw std::invalid_argument("beamformer bank dimensions do not match the channels");
}

} // namespace

SinrReport sinr_report(const EffectiveChannels &ch, const MatrixXcd &w) {
    require_normalized(ch);
    check_bank(ch, w);
    const int n_users = static_cast<int>(w.cols());
    const MatrixXcd bob_rx = ch.bob.transpose() * w; // (k,i) = h_k^T w_i
    const MatrixXcd eve_rx = ch.eve.transpose() * w; // (j,k) = h_j^T w_k
    SinrReport rep;
    rep.bob_sinr.resize(n_users);
    rep.eve_snr.resize(n_users);
    for (int k = 0; k < n_users; ++k) {
        const double signal = std::norm(bob_rx(k, k));
        const double interference = bob_rx.row(k).squaredNorm() - signal;
        rep.bob_sinr[k] = signal / (1.0 + interference);
        rep.eve_snr[k] = eve_rx.col(k).squaredNorm();
    }
    return rep;
}

std::pair<double, VectorXd> wssr(const EffectiveChannels &ch, const MatrixXcd &w,
                                 const VectorXd &alpha) {
    const SinrReport rep = sinr_report(ch, w);
    if (alpha.size() != rep.bob_sinr.size())
        throw std::invalid_argument("wssr: weight vector size mismatch");
    VectorXd rates(alpha.size());
    double total = 0.0;
    for (int k = 0; k < alpha.size(); ++k) {
        const double r =
            (std::log1p(rep.bob_sinr[k]) - std::log1p(rep.eve_snr[k])) / kLn2;
        rates[k] = std::max(r, 0.0);
        total += alpha[k] * rates[k];
    }
    return {total, rates};
}

double g_gamma(const EffectiveChannels &ch, double power_budget) {
    require_normalized(ch);
    return power_budget * ch.eve.squaredNorm();
}

VectorXd update_tau(const VectorXd &bob_sinr, const VectorXd &eve_snr,
                    const VectorXd &alpha) {
    if (bob_sinr.size() != eve_snr.size() || bob_sinr.size() != alpha.size())
        throw std::invalid_argument("update_tau: size mismatch");
    VectorXd tau(alpha.size());
    for (int k = 0; k < alpha.size(); ++k)
        tau[k] = bob_sinr[k] >= eve_snr[k] ? alpha[k] : 0.0;
    return tau;
}

VectorXd update_mu(const EffectiveChannels &ch, const MatrixXcd &w) {
    return sinr_report(ch, w).bob_sinr;
}

VectorXd update_nu(const VectorXd &eve_snr, double g_bound) {
    VectorXd nu(eve_snr.size());
    for (int k = 0; k < eve_snr.size(); ++k)
        nu[k] = std::max((g_bound - eve_snr[k]) / (1.0 + eve_snr[k]), 0.0);
    return nu;
}

VectorXcd update_xi(const EffectiveChannels &ch, const MatrixXcd &w) {
    require_normalized(ch);
    check_bank(ch, w);
    const int n_users = static_cast<int>(w.cols());
    const MatrixXcd bob_rx = ch.bob.transpose() * w;
    VectorXcd xi(n_users);
    for (int k = 0; k < n_users; ++k)
        xi[k] = bob_rx(k, k) / (1.0 + bob_rx.row(k).squaredNorm());
    return xi;
}

MatrixXcd update_w(const EffectiveChannels &ch, const FpState &fp, double g_bound,
                   double lambda) {
    require_normalized(ch);
    if (lambda < 0.0)
        throw std::invalid_argument("update_w: lambda must be nonnegative");
    const int n_wg = static_cast<int>(ch.bob.rows());
    const int n_users = static_cast<int>(ch.bob.cols());
    if (fp.tau.size() != n_users || fp.mu.size() != n_users ||
        fp.nu.size() != n_users || fp.xi.size() != n_users)
        throw std::invalid_argument("update_w: FP state size mismatch");

    MatrixXcd bob_gram = MatrixXcd::Zero(n_wg, n_wg);
    for (int i = 0; i < n_users; ++i) {
        const double coef = fp.tau[i] * (1.0 + fp.mu[i]) * std::norm(fp.xi[i]);
        if (coef != 0.0)
            bob_gram += coef * (ch.bob.col(i).conjugate() * ch.bob.col(i).transpose());
    }
    const MatrixXcd eve_gram = ch.eve.conjugate() * ch.eve.transpose();

    MatrixXcd w(n_wg, n_users);
    for (int k = 0; k < n_users; ++k) {
        if (fp.tau[k] == 0.0) {
            w.col(k).setZero();
            continue;
        }
        MatrixXcd lhs = bob_gram + ((1.0 + fp.nu[k]) / (1.0 + g_bound)) * eve_gram;
        lhs.diagonal().array() += lambda;
        const VectorXcd rhs =
            fp.tau[k] * (1.0 + fp.mu[k]) * fp.xi[k] * ch.bob.col(k).conjugate();
        VectorXcd wk;
        if (lambda == 0.0) {
            // The unregularized system can be rank-deficient (rank at most
            // K + J). Any null-space component is wasted power, so take the
            // minimum-norm solution, which is also the lambda -> 0 limit.
            wk = lhs.completeOrthogonalDecomposition().solve(rhs);
        } else {
            wk = lhs.ldlt().solve(rhs);
        }
        const double residual = (lhs * wk - rhs).norm();
        if (!wk.allFinite() ||
            residual > 1e-8 * (rhs.norm() + lhs.norm() * wk.norm()))
            throw std::runtime_error(
                "update_w: singular normal equations (retry with lambda > 0)");
        w.col(k) = wk;
    }
    return w;
}

std::pair<double, MatrixXcd> bisect_lambda(const EffectiveChannels &ch,
                                           const FpState &fp, double g_bound,
                                           double power_budget, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("bisect_lambda: tolerance must be positive");
    if (!(power_budget > 0.0))
        throw std::invalid_argument("bisect_lambda: power budget must be positive");

    // Interior solution: complementary slackness allows lambda = 0.
    try {
        MatrixXcd w0 = update_w(ch, fp, g_bound, 0.0);
        if (w0.squaredNorm() <= power_budget)
            return {0.0, std::move(w0)};
    } catch (const std::runtime_error &) {
        // singular at lambda = 0; fall through to the bracketed search
    }

    double lo = 0.0;
    double hi = 1.0;
    MatrixXcd w_hi = update_w(ch, fp, g_bound, hi);
    int doublings = 0;
    while (w_hi.squaredNorm() > power_budget) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > 200)
            throw std::runtime_error("bisect_lambda: failed to bracket the multiplier");
        w_hi = update_w(ch, fp, g_bound, hi);
    }

    // Invariant: power(lo) > P_T >= power(hi).
    double lambda = hi;
    MatrixXcd w = std::move(w_hi);
    for (int iter = 0; iter < 500; ++iter) {
        if (std::abs(w.squaredNorm() - power_budget) <= tol * power_budget)
            return {lambda, std::move(w)};
        const double mid = 0.5 * (lo + hi);
        MatrixXcd w_mid = update_w(ch, fp, g_bound, mid);
        if (w_mid.squaredNorm() > power_budget) {
            lo = mid;
        } else {
            hi = mid;
            lambda = mid;
            w = std::move(w_mid);
        }
    }
    if (std::abs(w.squaredNorm() - power_budget) <= tol * power_budget)
        return {lambda, std::move(w)};
    throw std::runtime_error("bisect_lambda: power tolerance not reached");
}

double surrogate_tau(const VectorXd &bob_sinr, const VectorXd &eve_snr,
                     const VectorXd &tau) {
    double total = 0.0;
    for (int k = 0; k < tau.size(); ++k)
        total += tau[k] * (std::log1p(bob_sinr[k]) - std::log1p(eve_snr[k]));
    return total;
}

double surrogate_bound(const VectorXd &bob_sinr, const VectorXd &eve_snr,
                       const VectorXd &tau, double g_bound) {
    double total = 0.0;
    for (int k = 0; k < tau.size(); ++k) {
        total += tau[k] * (std::log1p(bob_sinr[k]) +
                           std::log1p((g_bound - eve_snr[k]) / (1.0 + eve_snr[k])) -
                           std::log1p(g_bound));
    }
    return total;
}

double surrogate_dual(const EffectiveChannels &ch, const MatrixXcd &w,
                      const FpState &fp, double g_bound) {
    require_normalized(ch);
    check_bank(ch, w);
    const MatrixXcd bob_rx = ch.bob.transpose() * w;
    const MatrixXcd eve_rx = ch.eve.transpose() * w;
    double total = 0.0;
    for (int k = 0; k < w.cols(); ++k) {
        if (fp.tau[k] == 0.0)
            continue;
        const double signal = std::norm(bob_rx(k, k));
        const double rx_total = bob_rx.row(k).squaredNorm();
        const double leak = eve_rx.col(k).squaredNorm();
        const double term = std::log1p(fp.mu[k]) - fp.mu[k] +
                            (1.0 + fp.mu[k]) * signal / (1.0 + rx_total) +
                            std::log1p(fp.nu[k]) - fp.nu[k] +
                            (1.0 + fp.nu[k]) * (g_bound - leak) / (1.0 + g_bound) -
                            std::log1p(g_bound);
        total += fp.tau[k] * term;
    }
    return total;
}

double surrogate_quadratic(const EffectiveChannels &ch, const MatrixXcd &w,
                           const FpState &fp, double g_bound) {
    require_normalized(ch);
    check_bank(ch, w);
    const MatrixXcd bob_rx = ch.bob.transpose() * w;
    const MatrixXcd eve_rx = ch.eve.transpose() * w;
    double total = 0.0;
    for (int k = 0; k < w.cols(); ++k) {
        if (fp.tau[k] == 0.0)
            continue;
        const double rx_total = bob_rx.row(k).squaredNorm();
        const double leak = eve_rx.col(k).squaredNorm();
        const double quad = 2.0 * std::real(std::conj(fp.xi[k]) * bob_rx(k, k)) -
                            std::norm(fp.xi[k]) * (1.0 + rx_total);
        const double term = std::log1p(fp.mu[k]) - fp.mu[k] +
                            (1.0 + fp.mu[k]) * quad + std::log1p(fp.nu[k]) -
                            fp.nu[k] +
                            (1.0 + fp.nu[k]) * (g_bound - leak) / (1.0 + g_bound) -
                            std::log1p(g_bound);
        total += fp.tau[k] * term;
    }
    return total;
}

PositionObjectiveContext build_position_context(const Scene &scene,
                                                const EffectiveChannels &ch,
                                                const MatrixXcd &w, const FpState &fp,
                                                int pa, int waveguide) {
    require_normalized(ch);
    check_bank(ch, w);
    const int n_wg = static_cast<int>(ch.bob.rows());
    const int n_users = static_cast<int>(ch.bob.cols());
    const int n_eves = static_cast<int>(ch.eve.cols());
    const int n = waveguide;

    PositionObjectiveContext ctx;
    ctx.waveguide = waveguide;
    ctx.pa = pa;
    ctx.power_budget = scene.power_budget;

    ctx.b_diag.resize(n_users);
    VectorXcd a_diag(n_users); // tau_k (1+mu_k) xi_k
    VectorXd c_diag(n_users);  // tau_k (1+nu_k)
    for (int k = 0; k < n_users; ++k) {
        const double tm = fp.tau[k] * (1.0 + fp.mu[k]);
        ctx.b_diag[k] = tm * std::norm(fp.xi[k]);
        a_diag[k] = tm * fp.xi[k];
        c_diag[k] = fp.tau[k] * (1.0 + fp.nu[k]);
    }
    ctx.tau_total = fp.tau.sum();

    const MatrixXcd gram_w = w * w.adjoint(); // E
    const MatrixXcd lin_w = w * a_diag.conjugate().asDiagonal(); // F = W A^H
    const MatrixXcd leak_gram =
        w * c_diag.asDiagonal() * w.adjoint(); // J = W C W^H
    const double tr_c = c_diag.sum();

    ctx.e_nn = gram_w(n, n).real();
    ctx.j_nn_excess = leak_gram(n, n).real() - ctx.power_budget * tr_c;

    // Linear couplings of waveguide n against all frozen waveguides.
    VectorXcd a_lin = VectorXcd::Zero(n_users);
    for (int p = 0; p < n_wg; ++p) {
        if (p == n)
            continue;
        for (int k = 0; k < n_users; ++k)
            a_lin[k] += gram_w(n, p) * ctx.b_diag[k] * std::conj(ch.bob(p, k));
    }
    for (int k = 0; k < n_users; ++k)
        a_lin[k] -= lin_w(n, k);

    VectorXcd b_lin = VectorXcd::Zero(n_eves);
    for (int p = 0; p < n_wg; ++p) {
        if (p == n)
            continue;
        for (int j = 0; j < n_eves; ++j)
            b_lin[j] += leak_gram(n, p) * std::conj(ch.eve(p, j));
    }

    const double frob_rest = ch.eve.squaredNorm() - ch.eve.row(n).squaredNorm();
    const double c1 = 1.0 + ctx.power_budget * frob_rest;

    // tr(Jbar Gram_rest), both with waveguide n removed.
    Cplx leak_rest = 0.0;
    for (int p = 0; p < n_wg; ++p) {
        if (p == n)
            continue;
        for (int q = 0; q < n_wg; ++q) {
            if (q == n)
                continue;
            Cplx gram_qp = 0.0; // h~_q^{eH} h~_p^e
            for (int j = 0; j < n_eves; ++j)
                gram_qp += std::conj(ch.eve(q, j)) * ch.eve(p, j);
            leak_rest += leak_gram(p, q) * gram_qp;
        }
    }
    const double c2 = leak_rest.real() - ctx.power_budget * tr_c * frob_rest;

    // Frozen same-waveguide phasors: channel column minus the moving PA.
    const double x_cur = scene.pa_x[scene.pa_offset(n) + pa];
    ctx.pi_const_bob.resize(n_users);
    for (int k = 0; k < n_users; ++k)
        ctx.pi_const_bob[k] = ch.bob(n, k) - pa_user_term(scene, n, x_cur, scene.bobs[k]) /
                                                 std::sqrt(scene.bob_noise[k]);
    ctx.pi_const_eve.resize(n_eves);
    for (int j = 0; j < n_eves; ++j)
        ctx.pi_const_eve[j] = ch.eve(n, j) - pa_user_term(scene, n, x_cur, scene.eves[j]) /
                                                 std::sqrt(scene.eve_noise[j]);

    ctx.a_bar.resize(n_users);
    for (int k = 0; k < n_users; ++k)
        ctx.a_bar[k] = a_lin[k] + ctx.e_nn * ctx.b_diag[k] * std::conj(ctx.pi_const_bob[k]);
    ctx.b_bar.resize(n_eves);
    for (int j = 0; j < n_eves; ++j)
        ctx.b_bar[j] = b_lin[j] + ctx.j_nn_excess * std::conj(ctx.pi_const_eve[j]);

    ctx.c1_bar = c1 + ctx.power_budget * ctx.pi_const_eve.squaredNorm();
    Cplx b_dot_const = 0.0;
    for (int j = 0; j < n_eves; ++j)
        b_dot_const += b_lin[j] * ctx.pi_const_eve[j];
    ctx.c2_bar = c2 + ctx.j_nn_excess * ctx.pi_const_eve.squaredNorm() +
                 2.0 * b_dot_const.real();

    // Candidate-independent remainder of the Bob blocks, so the returned
    // value equals the full position surrogate.
    Cplx bob_rest = 0.0;
    for (int p = 0; p < n_wg; ++p) {
        if (p == n)
            continue;
        for (int q = 0; q < n_wg; ++q) {
            if (q == n)
                continue;
            Cplx quad_qp = 0.0; // h~_q^{bH} B h~_p^b
            for (int k = 0; k < n_users; ++k)
                quad_qp += std::conj(ch.bob(q, k)) * ctx.b_diag[k] * ch.bob(p, k);
            bob_rest += gram_w(p, q) * quad_qp;
        }
    }
    Cplx lin_rest = 0.0;
    for (int p = 0; p < n_wg; ++p) {
        if (p == n)
            continue;
        for (int k = 0; k < n_users; ++k)
            lin_rest += lin_w(p, k) * ch.bob(p, k);
    }
    double quad_const = 0.0;
    Cplx a_dot_const = 0.0;
    for (int k = 0; k < n_users; ++k) {
        quad_const += ctx.b_diag[k] * std::norm(ctx.pi_const_bob[k]);
        a_dot_const += a_lin[k] * ctx.pi_const_bob[k];
    }
    ctx.const_offset = bob_rest.real() - 2.0 * lin_rest.real() +
                       ctx.e_nn * quad_const + 2.0 * a_dot_const.real();
    return ctx;
}

double position_objective(double x, const PositionObjectiveContext &ctx,
                          const Scene &scene) {
    const int n = ctx.waveguide;
    const int n_users = static_cast<int>(ctx.b_diag.size());
    const int n_eves = static_cast<int>(ctx.pi_const_eve.size());

    double quad = 0.0;
    Cplx lin_b = 0.0;
    for (int k = 0; k < n_users; ++k) {
        const Cplx pi = pa_user_term(scene, n, x, scene.bobs[k]) /
                        std::sqrt(scene.bob_noise[k]);
        quad += ctx.b_diag[k] * std::norm(pi);
        lin_b += ctx.a_bar[k] * pi;
    }

    double eve_norm = 0.0;
    double eve_cross = 0.0;
    Cplx lin_e = 0.0;
    for (int j = 0; j < n_eves; ++j) {
        const Cplx pi = pa_user_term(scene, n, x, scene.eves[j]) /
                        std::sqrt(scene.eve_noise[j]);
        eve_norm += std::norm(pi);
        eve_cross += std::real(std::conj(ctx.pi_const_eve[j]) * pi);
        lin_e += ctx.b_bar[j] * pi;
    }

    const double log_arg =
        ctx.power_budget * (eve_norm + 2.0 * eve_cross) + ctx.c1_bar;
    const double fraction =
        (ctx.j_nn_excess * eve_norm + 2.0 * lin_e.real() + ctx.c2_bar) / log_arg;

    return ctx.e_nn * quad + 2.0 * lin_b.real() + ctx.tau_total * std::log(log_arg) +
           fraction + ctx.const_offset;
}

GridSearchResult one_dim_search(const PositionObjectiveContext &ctx,
                                const Scene &scene, int num_candidates) {
    if (num_candidates < 2)
        throw std::invalid_argument("one_dim_search: need at least two candidates");
    const double side = scene.region_side;
    const double step = side / (num_candidates - 1);
    const int n = ctx.waveguide;
    const int off = scene.pa_offset(n);

    // Exclusion zones around PAs already placed in this sweep (smaller index
    // on the same waveguide).
    std::vector<char> excluded(num_candidates, 0);
    for (int m2 = 0; m2 < ctx.pa; ++m2) {
        const double x_prev = scene.pa_x[off + m2];
        const double lo_f =
            std::floor((2.0 * x_prev + side - 2.0 * scene.min_spacing) / (2.0 * step));
        const double hi_f =
            std::ceil((2.0 * x_prev + side + 2.0 * scene.min_spacing) / (2.0 * step));
        const int lo = std::max(0, static_cast<int>(lo_f));
        const int hi = std::min(num_candidates - 1, static_cast<int>(hi_f));
        for (int i = lo; i <= hi; ++i)
            excluded[i] = 1;
    }

    GridSearchResult best;
    best.objective = std::numeric_limits<double>::infinity();
    for (int i = 0; i < num_candidates; ++i) {
        if (excluded[i])
            continue;
        const double x = -side / 2.0 + i * step;
        const double value = position_objective(x, ctx, scene);
        if (value < best.objective) {
            best.objective = value;
            best.x = x;
            best.index = i;
        }
    }
    if (best.index < 0)
        throw std::runtime_error("one_dim_search: no feasible candidate position");
    return best;
}

namespace {

void refresh_waveguide_row(const Scene &scene, int n, EffectiveChannels &ch) {
    const int off = scene.pa_offset(n);
    for (int k = 0; k < ch.bob.cols(); ++k) {
        Cplx sum = 0.0;
        for (int m = 0; m < scene.pas_per_waveguide[n]; ++m)
            sum += pa_user_term(scene, n, scene.pa_x[off + m], scene.bobs[k]);
        ch.bob(n, k) = sum / std::sqrt(scene.bob_noise[k]);
    }
    for (int j = 0; j < ch.eve.cols(); ++j) {
        Cplx sum = 0.0;
        for (int m = 0; m < scene.pas_per_waveguide[n]; ++m)
            sum += pa_user_term(scene, n, scene.pa_x[off + m], scene.eves[j]);
        ch.eve(n, j) = sum / std::sqrt(scene.eve_noise[j]);
    }
}

WssrResult fp_core(Scene *scene, EffectiveChannels ch, double power_budget,
                   const VectorXd &alpha, const FpBcdOptions &opts) {
    require_normalized(ch);
    const int n_users = static_cast<int>(ch.bob.cols());
    if (n_users < 1)
        throw std::invalid_argument("fp: at least one user required");
    if (alpha.size() != n_users)
        throw std::invalid_argument("fp: weight vector size mismatch");
    if (opts.max_iters < 1)
        throw std::invalid_argument("fp: max_iters must be positive");

    // MRT initialization, full power per user; infeasible as a bank, but the
    // first beamformer update restores the budget.
    MatrixXcd w(ch.bob.rows(), n_users);
    for (int k = 0; k < n_users; ++k) {
        const double nb = ch.bob.col(k).norm();
        if (nb == 0.0)
            throw std::runtime_error("fp: user with an all-zero channel");
        w.col(k) = std::sqrt(power_budget) / nb * ch.bob.col(k).conjugate();
    }

    FpState fp;
    {
        const SinrReport rep = sinr_report(ch, w);
        fp.tau = update_tau(rep.bob_sinr, rep.eve_snr, alpha);
    }

    WssrResult res;
    double prev_bits = 0.0;
    for (int it = 1; it <= opts.max_iters; ++it) {
        const double g_bound = g_gamma(ch, power_budget);
        const SinrReport rep = sinr_report(ch, w);
        fp.mu = update_mu(ch, w);
        fp.nu = update_nu(rep.eve_snr, g_bound);
        fp.xi = update_xi(ch, w);

        // Beamformer block. The incumbent wins only when it is feasible and
        // scores at least as well (the bisection meets the KKT system to
        // finite tolerance; the MRT initialization overshoots the budget).
        const double before = surrogate_quadratic(ch, w, fp, g_bound);
        const bool incumbent_feasible =
            w.squaredNorm() <= power_budget * (1.0 + 1e-9);
        auto [lambda, w_new] =
            bisect_lambda(ch, fp, g_bound, power_budget, opts.bisect_tol);
        if (!incumbent_feasible ||
            surrogate_quadratic(ch, w_new, fp, g_bound) >= before) {
            w = std::move(w_new);
            fp.lambda = lambda;
        }

        if (scene != nullptr && opts.optimize_positions) {
            for (int n = 0; n < scene->num_waveguides(); ++n) {
                const int off = scene->pa_offset(n);
                for (int m = 0; m < scene->pas_per_waveguide[n]; ++m) {
                    const PositionObjectiveContext ctx =
                        build_position_context(*scene, ch, w, fp, m, n);
                    const GridSearchResult found =
                        one_dim_search(ctx, *scene, opts.grid_points);
                    // Moving is only accepted when it beats the incumbent;
                    // the incumbent may sit off-grid (e.g. the all-zero
                    // initialization with an even candidate count).
                    const double x_cur = scene->pa_x[off + m];
                    bool incumbent_ok = true;
                    for (int m2 = 0; m2 < m; ++m2) {
                        if (!(std::abs(x_cur - scene->pa_x[off + m2]) >
                              scene->min_spacing)) {
                            incumbent_ok = false;
                            break;
                        }
                    }
                    const double f_cur =
                        incumbent_ok ? position_objective(x_cur, ctx, *scene)
                                     : std::numeric_limits<double>::infinity();
                    if (found.objective < f_cur) {
                        scene->pa_x[off + m] = found.x;
                        refresh_waveguide_row(*scene, n, ch);
                    }
                }
            }
        }

        const SinrReport rep_end = sinr_report(ch, w);
        fp.tau = update_tau(rep_end.bob_sinr, rep_end.eve_snr, alpha);
        auto [bits, rates] = wssr(ch, w, alpha);
        if (!res.trace.empty() && bits < res.trace.back() - 1e-6)
            ++res.non_monotone_steps;
        res.trace.push_back(bits);
        res.per_user_rates = rates;
        res.wssr = bits;
        if (opts.rel_tol > 0.0 && it >= 2 &&
            bits - prev_bits < opts.rel_tol * std::max(prev_bits, 1e-12))
            break;
        prev_bits = bits;
    }

    res.iterations = static_cast<int>(res.trace.size());
    res.beamformers = std::move(w);
    if (scene != nullptr)
        res.pa_x = scene->pa_x;
    return res;
}

} // namespace

WssrResult fp_bcd(const Scene &scene, const FpBcdOptions &opts) {
    scene.validate();
    if (scene.num_bobs() < 1)
        throw std::invalid_argument("fp_bcd: at least one Bob required");
    Scene working = scene;
    EffectiveChannels ch = effective_channels(working);
    const VectorXd alpha = Eigen::Map<const VectorXd>(
        working.weights.data(), static_cast<int>(working.weights.size()));
    return fp_core(&working, std::move(ch), working.power_budget, alpha, opts);
}

WssrResult fp_fixed_channels(const EffectiveChannels &ch, double power_budget,
                             const VectorXd &alpha, const FpBcdOptions &opts) {
    return fp_core(nullptr, ch, power_budget, alpha, opts);
}

} // namespace pass
