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

#include "pass/su_secure.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "pass/channel.hpp"

namespace pass {

namespace {

using Cplx = std::complex<double>;

constexpr double kLn2 = 0.6931471805599453;

/// Positive root offset (b + sqrt(b^2 + 4ac)) / (2a), evaluated without
/// cancellation when b < 0.
double principal_root_offset(const AbcCoefficients &co) {
    const double s = std::sqrt(co.b * co.b + 4.0 * co.a * co.c);
    if (co.b >= 0.0)
        return (co.b + s) / (2.0 * co.a);
    const double denom = s - co.b; // > 0
    if (denom == 0.0)
        return 0.0;
    return 2.0 * co.c / denom;
}

void require_single_user(const Scene &scene) {
    if (scene.num_bobs() != 1 || scene.num_eves() != 1)
        throw std::invalid_argument("single-user path requires exactly one Bob and one Eve");
    for (int m : scene.pas_per_waveguide)
        if (m != 1)
            throw std::invalid_argument("single-user path requires one PA per waveguide");
}

AbcCoefficients abc_from_scalars(double norm_b, double norm_e, double cross,
                                 double snr_b, double snr_e) {
    AbcCoefficients co;
    co.a = 1.0 + snr_e * norm_e;
    // Cauchy-Schwarz gives norm_b*norm_e >= cross; clamp rounding residue.
    const double gap = std::max(norm_b * norm_e - cross, 0.0);
    co.c = snr_b * snr_e * gap;
    co.b = snr_b * norm_b - snr_e * norm_e + co.c;
    return co;
}

/// Evaluates f(x^p) and, on demand, the per-element analytic gradient, for
/// a K=1/J=1 scene with one PA per waveguide. Channels are cached so that
/// single-coordinate probes cost O(N).
class SuEvaluator {
  public:
    SuEvaluator(const Scene &scene, std::vector<double> pa_x)
        : scene_(scene), x_(std::move(pa_x)), hb_(scene.num_waveguides()),
          he_(scene.num_waveguides()) {
        snr_b_ = scene.power_budget / scene.bob_noise[0];
        snr_e_ = scene.power_budget / scene.eve_noise[0];
        const int n_wg = scene.num_waveguides();
        for (int n = 0; n < n_wg; ++n) {
            hb_[n] = pa_user_term(scene_, n, x_[n], scene_.bobs[0]);
            he_[n] = pa_user_term(scene_, n, x_[n], scene_.eves[0]);
        }
    }

    double objective() const { return objective_probe(-1, 0.0); }

    /// f with element n evaluated at x instead of the stored coordinate.
    double objective_probe(int n, double x) const {
        double norm_b = 0.0, norm_e = 0.0;
        Cplx inner = 0.0;
        for (int i = 0; i < static_cast<int>(hb_.size()); ++i) {
            Cplx b = hb_[i], e = he_[i];
            if (i == n) {
                b = pa_user_term(scene_, n, x, scene_.bobs[0]);
                e = pa_user_term(scene_, n, x, scene_.eves[0]);
            }
            norm_b += std::norm(b);
            norm_e += std::norm(e);
            inner += b * std::conj(e);
        }
        const AbcCoefficients co =
            abc_from_scalars(norm_b, norm_e, std::norm(inner), snr_b_, snr_e_);
        return 2.0 * principal_root_offset(co);
    }

    void accept(int n, double x) {
        x_[n] = x;
        hb_[n] = pa_user_term(scene_, n, x, scene_.bobs[0]);
        he_[n] = pa_user_term(scene_, n, x, scene_.eves[0]);
    }

    double gradient(int n) const {
        double norm_b = 0.0, norm_e = 0.0;
        Cplx inner = 0.0;
        for (int i = 0; i < static_cast<int>(hb_.size()); ++i) {
            norm_b += std::norm(hb_[i]);
            norm_e += std::norm(he_[i]);
            inner += hb_[i] * std::conj(he_[i]);
        }
        const AbcCoefficients co =
            abc_from_scalars(norm_b, norm_e, std::norm(inner), snr_b_, snr_e_);

        const double x = x_[n];
        const Vec3 pa(x, scene_.waveguide_y[n], scene_.height);
        const double dist_b = (scene_.bobs[0] - pa).norm();
        const double dist_e = (scene_.eves[0] - pa).norm();
        const double eta = scene_.path_gain();

        // A_i = -d|h_n^i|^2/dx = 2 eta (x - x_user) / D_i^4
        const double a_term_b =
            2.0 * eta * (x - scene_.bobs[0].x()) / std::pow(dist_b, 4);
        const double a_term_e =
            2.0 * eta * (x - scene_.eves[0].x()) / std::pow(dist_e, 4);

        const Cplx dh_b = channel_derivative(n, scene_.bobs[0], hb_[n], dist_b);
        const Cplx dh_e = channel_derivative(n, scene_.eves[0], he_[n], dist_e);

        // rho = |h_b^T h_e*|^2 = |S|^2 with S = h_n^b h_n^{e*} + (rest);
        // d rho/dx = 2 Re[ S* dS/dx ].
        const Cplx ds = dh_b * std::conj(he_[n]) + hb_[n] * std::conj(dh_e);
        const double d_rho = 2.0 * std::real(std::conj(inner) * ds);

        const double da = -snr_e_ * a_term_e;
        const double db = snr_e_ * a_term_e - snr_b_ * a_term_b -
                          snr_b_ * snr_e_ * d_rho -
                          snr_b_ * snr_e_ * (a_term_b * norm_e + a_term_e * norm_b);
        const double dc = -snr_b_ * snr_e_ * (a_term_b * norm_e + a_term_e * norm_b) -
                          snr_b_ * snr_e_ * d_rho;

        const double s = std::sqrt(co.b * co.b + 4.0 * co.a * co.c);
        if (s == 0.0) // f has a kink here; return the smooth part only
            return (co.a * db - co.b * da) / (co.a * co.a);
        return (co.a * db +
                co.a * (co.b * db + 2.0 * co.a * dc + 2.0 * co.c * da) / s -
                (co.b + s) * da) /
               (co.a * co.a);
    }

    const std::vector<double> &positions() const { return x_; }

    SuChannelPair channel_pair() const {
        SuChannelPair ch;
        const int n_wg = static_cast<int>(hb_.size());
        ch.bob.resize(n_wg);
        ch.eve.resize(n_wg);
        for (int i = 0; i < n_wg; ++i) {
            ch.bob[i] = hb_[i];
            ch.eve[i] = he_[i];
        }
        ch.snr_bob = snr_b_;
        ch.snr_eve = snr_e_;
        return ch;
    }

  private:
    Cplx channel_derivative(int n, const Vec3 &user, Cplx h, double dist) const {
        const double x = x_[n];
        // d|x - x_feed|/dx; feeds sit on the waveguide axis.
        const double guide_sign = (x >= scene_.feed_points[n].x()) ? 1.0 : -1.0;
        const double lc = scene_.carrier_wavelength;
        const double lp = scene_.guide_wavelength;
        const Cplx j(0.0, 1.0);
        // h * dist = sqrt(eta) e^{-j phi}
        return h * dist *
               (j * 2.0 * M_PI *
                    ((user.x() - x) / (lc * dist * dist) - guide_sign / (lp * dist)) -
                (x - user.x()) / (dist * dist * dist));
    }

    const Scene &scene_;
    std::vector<double> x_;
    std::vector<Cplx> hb_, he_;
    double snr_b_ = 0.0, snr_e_ = 0.0;
};

} // namespace

SuChannelPair su_channel_pair(const Scene &scene) {
    require_single_user(scene);
    return SuEvaluator(scene, scene.pa_x).channel_pair();
}

AbcCoefficients abc_coefficients(const SuChannelPair &ch) {
    const Cplx inner = ch.eve.dot(ch.bob); // sum h_b conj(h_e) = h_b^T h_e*
    return abc_from_scalars(ch.bob.squaredNorm(), ch.eve.squaredNorm(),
                            std::norm(inner), ch.snr_bob, ch.snr_eve);
}

std::pair<double, AbcCoefficients> closed_form_secrecy(const SuChannelPair &ch) {
    const AbcCoefficients co = abc_coefficients(ch);
    const double rate = std::log1p(principal_root_offset(co)) / kLn2;
    return {rate, co};
}

namespace {

/// Exact inverse square root of the rank-1-loaded Eve covariance:
/// (I + beta u u^H)^{-1/2} = I + ((1+beta)^{-1/2} - 1) u u^H, u = h_e*/|h_e|.
Eigen::MatrixXcd eve_whitening(const SuChannelPair &ch) {
    const int n = static_cast<int>(ch.bob.size());
    Eigen::MatrixXcd whiten = Eigen::MatrixXcd::Identity(n, n);
    const double norm_e = ch.eve.squaredNorm();
    if (norm_e > 0.0) {
        const Eigen::VectorXcd u = ch.eve.conjugate() / std::sqrt(norm_e);
        const double beta = ch.snr_eve * norm_e;
        whiten += (1.0 / std::sqrt(1.0 + beta) - 1.0) * (u * u.adjoint());
    }
    return whiten;
}

} // namespace

Eigen::MatrixXcd whitened_bob_covariance(const SuChannelPair &ch) {
    const int n = static_cast<int>(ch.bob.size());
    const Eigen::MatrixXcd whiten = eve_whitening(ch);
    Eigen::MatrixXcd bob_load = Eigen::MatrixXcd::Identity(n, n);
    bob_load += ch.snr_bob * (ch.bob.conjugate() * ch.bob.transpose());
    return whiten * bob_load * whiten;
}

Eigen::VectorXcd optimal_beamformer(const SuChannelPair &ch) {
    const int n = static_cast<int>(ch.bob.size());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(whitened_bob_covariance(ch));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("optimal_beamformer: eigen decomposition failed");
    Eigen::VectorXcd v = eve_whitening(ch) * solver.eigenvectors().col(n - 1);
    v.normalize();
    return v;
}

double rayleigh_quotient(const SuChannelPair &ch, const Eigen::VectorXcd &v) {
    const double vv = v.squaredNorm();
    const double num = vv + ch.snr_bob * std::norm(Cplx(ch.bob.transpose() * v));
    const double den = vv + ch.snr_eve * std::norm(Cplx(ch.eve.transpose() * v));
    return num / den;
}

double secrecy_rate_eigen(const SuChannelPair &ch) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        whitened_bob_covariance(ch), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("secrecy_rate_eigen: eigen decomposition failed");
    return std::log2(solver.eigenvalues().maxCoeff());
}

double su_objective(const std::vector<double> &pa_x, const Scene &scene) {
    require_single_user(scene);
    if (static_cast<int>(pa_x.size()) != scene.num_waveguides())
        throw std::invalid_argument("su_objective: position vector size mismatch");
    return SuEvaluator(scene, pa_x).objective();
}

double su_gradient(int n, const std::vector<double> &pa_x, const Scene &scene) {
    require_single_user(scene);
    if (n < 0 || n >= scene.num_waveguides())
        throw std::invalid_argument("su_gradient: waveguide index out of range");
    return SuEvaluator(scene, pa_x).gradient(n);
}

SuSolution algorithm1_optimize(const Scene &scene, const Algorithm1Options &opts) {
    require_single_user(scene);
    if (!(opts.beta_ini > 0.0) || !(opts.beta_min > 0.0))
        throw std::invalid_argument("algorithm1_optimize: step sizes must be positive");

    const double half = scene.region_side / 2.0;
    for (double x : scene.pa_x)
        if (!(x >= -half && x <= half))
            throw std::invalid_argument("algorithm1_optimize: initial position outside range");

    const int n_wg = scene.num_waveguides();
    SuEvaluator eval(scene, scene.pa_x);
    double f_cur = eval.objective();

    SuSolution sol;
    {
        double g0 = 0.0;
        for (int n = 0; n < n_wg; ++n)
            g0 += std::abs(eval.gradient(n));
        sol.trace.push_back({f_cur, g0 / n_wg});
    }

    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        const double f_before = f_cur;
        double grad_sum = 0.0;
        for (int n = 0; n < n_wg; ++n) {
            const double g = eval.gradient(n);
            grad_sum += std::abs(g);
            double beta = opts.beta_ini;
            while (beta >= opts.beta_min) {
                const double x_hat = eval.positions()[n] + beta * g;
                if (x_hat >= -half && x_hat <= half) {
                    const double f_hat = eval.objective_probe(n, x_hat);
                    if (f_hat > f_cur) { // strict improvement only
                        eval.accept(n, x_hat);
                        f_cur = f_hat;
                        break;
                    }
                }
                beta /= 2.0;
            }
        }
        sol.trace.push_back({f_cur, grad_sum / n_wg});
        ++sol.sweeps;

        if (opts.rel_improve_tol > 0.0 &&
            f_cur - f_before < opts.rel_improve_tol * std::max(f_before, 1e-12))
            break;
        if (opts.grad_norm_tol > 0.0 && grad_sum / n_wg < opts.grad_norm_tol)
            break;
    }

    const SuChannelPair ch = eval.channel_pair();
    sol.direction = optimal_beamformer(ch);
    sol.beamformer = std::sqrt(scene.power_budget) * sol.direction;
    sol.secrecy_rate = closed_form_secrecy(ch).first;
    sol.pa_x = eval.positions();
    return sol;
}

} // namespace pass
