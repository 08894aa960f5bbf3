// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "pass/baselines.hpp"
#include "pass/mu_fp_bcd.hpp"

using namespace pass;
using oracles::Cplx;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

namespace {

FpState random_fp_state(Rng &rng, int n_users) {
    FpState fp;
    fp.tau.resize(n_users);
    fp.mu.resize(n_users);
    fp.nu.resize(n_users);
    fp.xi.resize(n_users);
    for (int k = 0; k < n_users; ++k) {
        fp.tau[k] = uniform_unit(rng) < 0.75 ? 1.0 : 0.0;
        fp.mu[k] = uniform_range(rng, 0.0, 3.0);
        fp.nu[k] = uniform_range(rng, 0.0, 3.0);
        fp.xi[k] = 0.5 * standard_complex_gaussian(rng);
    }
    fp.tau[0] = 1.0; // keep at least one active user
    return fp;
}

/// Stationarity residual of the Lagrangian beamformer system, assembled
/// independently of update_w.
double kkt_residual(const EffectiveChannels &ch, const FpState &fp, double g_bound,
                    double lambda, const MatrixXcd &w) {
    const int n_wg = static_cast<int>(ch.bob.rows());
    const int n_users = static_cast<int>(ch.bob.cols());
    MatrixXcd base = MatrixXcd::Zero(n_wg, n_wg);
    for (int i = 0; i < n_users; ++i)
        base += fp.tau[i] * (1.0 + fp.mu[i]) * std::norm(fp.xi[i]) *
                (ch.bob.col(i).conjugate() * ch.bob.col(i).transpose());
    MatrixXcd eve = MatrixXcd::Zero(n_wg, n_wg);
    for (int j = 0; j < ch.eve.cols(); ++j)
        eve += ch.eve.col(j).conjugate() * ch.eve.col(j).transpose();
    double worst = 0.0;
    for (int k = 0; k < n_users; ++k) {
        const VectorXcd residual =
            base * w.col(k) + ((1.0 + fp.nu[k]) / (1.0 + g_bound)) * (eve * w.col(k)) +
            lambda * w.col(k) -
            fp.tau[k] * (1.0 + fp.mu[k]) * fp.xi[k] * ch.bob.col(k).conjugate();
        worst = std::max(worst, residual.norm());
    }
    return worst;
}

} // namespace

TEST_CASE("wssr: exact values and clamping") {
    EffectiveChannels ch;
    ch.bob = MatrixXcd::Zero(2, 1);
    ch.eve = MatrixXcd::Zero(2, 1);
    ch.bob(0, 0) = std::sqrt(3.0);
    ch.eve(0, 0) = 1.0;
    ch.normalized = true;
    MatrixXcd w = MatrixXcd::Zero(2, 1);
    w(0, 0) = 1.0;
    VectorXd alpha = VectorXd::Ones(1);
    // gamma = 3, Gamma = 1 -> log2(4/2) = 1 bit.
    CHECK(wssr(ch, w, alpha).first == doctest::Approx(1.0).epsilon(1e-14));

    // gamma < Gamma clamps to zero.
    ch.bob(0, 0) = 0.5;
    const auto [total, rates] = wssr(ch, w, alpha);
    CHECK(total == 0.0);
    CHECK(rates[0] == 0.0);
}

TEST_CASE("wssr matches the scalar-loop oracle") {
    Rng rng(404);
    for (int rep = 0; rep < 20; ++rep) {
        const EffectiveChannels ch = oracles::random_channels(rng, 5, 3, 2);
        const MatrixXcd w = oracles::random_bank(rng, 5, 3, 2.0);
        std::vector<double> alpha = {0.5, 1.0, 1.5};
        const auto [total, rates] =
            wssr(ch, w, Eigen::Map<const VectorXd>(alpha.data(), 3));
        const auto [oracle_total, oracle_rates] = oracles::wssr_naive(ch, w, alpha);
        CHECK(total == doctest::Approx(oracle_total).epsilon(1e-12));
        for (int k = 0; k < 3; ++k)
            CHECK(rates[k] == doctest::Approx(oracle_rates[k]).epsilon(1e-12));
    }
}

TEST_CASE("g_gamma: formula, upper bound, and the no-eavesdropper limit") {
    EffectiveChannels ch;
    ch.bob = MatrixXcd::Ones(2, 1);
    ch.eve = MatrixXcd::Zero(2, 1);
    ch.eve(0, 0) = 1.0;
    ch.eve(1, 0) = 1.0; // |h_e|^2 = 2
    ch.normalized = true;
    CHECK(g_gamma(ch, 1.0) == doctest::Approx(2.0));

    Rng rng(505);
    const EffectiveChannels rch = oracles::random_channels(rng, 4, 3, 2);
    const double power = 1.7;
    const double bound = g_gamma(rch, power);
    for (int rep = 0; rep < 1000; ++rep) {
        const MatrixXcd w = oracles::random_bank(rng, 4, 3, power);
        const SinrReport rep_s = sinr_report(rch, w);
        CHECK(rep_s.eve_snr.maxCoeff() <= bound * (1.0 + 1e-12));
    }

    EffectiveChannels none = rch;
    none.eve.setZero();
    CHECK(g_gamma(none, power) == 0.0);
    const VectorXd nu = update_nu(VectorXd::Zero(3), g_gamma(none, power));
    CHECK(nu.maxCoeff() == 0.0);
}

TEST_CASE("tau update is the clamped weight rule") {
    VectorXd alpha(1);
    alpha << 0.7;
    VectorXd gamma(1), leak(1);
    gamma << 2.0;
    leak << 1.0;
    CHECK(update_tau(gamma, leak, alpha)[0] == doctest::Approx(0.7));
    gamma << 1.0;
    CHECK(update_tau(gamma, leak, alpha)[0] == doctest::Approx(0.7)); // boundary is >=
    gamma << 0.5;
    CHECK(update_tau(gamma, leak, alpha)[0] == 0.0);
}

TEST_CASE("mu update equals the legitimate SINR") {
    EffectiveChannels ch;
    ch.bob = MatrixXcd::Zero(2, 1);
    ch.bob(0, 0) = std::sqrt(3.0);
    ch.eve = MatrixXcd::Zero(2, 1);
    ch.normalized = true;
    MatrixXcd w = MatrixXcd::Zero(2, 1);
    w(0, 0) = 1.0;
    CHECK(update_mu(ch, w)[0] == doctest::Approx(3.0).epsilon(1e-14));
    w.setZero();
    CHECK(update_mu(ch, w)[0] == 0.0);

    Rng rng(606);
    const EffectiveChannels rch = oracles::random_channels(rng, 4, 3, 2);
    const MatrixXcd rw = oracles::random_bank(rng, 4, 3, 1.0);
    const VectorXd mu = update_mu(rch, rw);
    const SinrReport rep = sinr_report(rch, rw);
    CHECK((mu - rep.bob_sinr).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("nu update cases") {
    VectorXd leak(1);
    leak << 2.0;
    CHECK(update_nu(leak, 2.0)[0] == 0.0);
    leak << 0.0;
    CHECK(update_nu(leak, 2.0)[0] == doctest::Approx(2.0));

    Rng rng(707);
    const EffectiveChannels ch = oracles::random_channels(rng, 4, 2, 3);
    const double power = 2.5;
    const double bound = g_gamma(ch, power);
    for (int rep = 0; rep < 200; ++rep) {
        const MatrixXcd w = oracles::random_bank(rng, 4, 2, power);
        const VectorXd nu = update_nu(sinr_report(ch, w).eve_snr, bound);
        CHECK(nu.minCoeff() >= 0.0);
    }
}

TEST_CASE("xi update cases and surrogate tightness") {
    EffectiveChannels ch;
    ch.bob = MatrixXcd::Zero(2, 1);
    ch.bob(0, 0) = 1.0;
    ch.eve = MatrixXcd::Zero(2, 1);
    ch.normalized = true;
    MatrixXcd w = MatrixXcd::Zero(2, 1);
    w(0, 0) = 1.0; // h^T w = 1
    CHECK(std::abs(update_xi(ch, w)[0] - Cplx(0.5, 0.0)) < 1e-15);
    w.setZero();
    CHECK(std::abs(update_xi(ch, w)[0]) == 0.0);

    Rng rng(808);
    for (int rep = 0; rep < 50; ++rep) {
        const EffectiveChannels rch = oracles::random_channels(rng, 4, 3, 2);
        const MatrixXcd rw = oracles::random_bank(rng, 4, 3, 1.5);
        FpState fp = random_fp_state(rng, 3);
        const double g_bound = g_gamma(rch, 1.5);
        fp.xi = update_xi(rch, rw); // optimal quadratic-transform scalars
        const double dual = surrogate_dual(rch, rw, fp, g_bound);
        const double quad = surrogate_quadratic(rch, rw, fp, g_bound);
        CHECK(quad == doctest::Approx(dual).epsilon(1e-10));
    }
}

TEST_CASE("FP surrogate chain collapses with optimal auxiliaries") {
    Rng rng(909);
    for (int rep = 0; rep < 100; ++rep) {
        const Scene scene = oracles::random_scene(rng, 4, 1, 3, 2, 40.0, -10.0);
        const EffectiveChannels ch = effective_channels(scene);
        const MatrixXcd w =
            oracles::random_bank(rng, 4, 3, scene.power_budget);
        const double g_bound = g_gamma(ch, scene.power_budget);
        const SinrReport rep_s = sinr_report(ch, w);
        const VectorXd alpha = VectorXd::Ones(3);

        FpState fp;
        fp.tau = update_tau(rep_s.bob_sinr, rep_s.eve_snr, alpha);
        fp.mu = update_mu(ch, w);
        fp.nu = update_nu(rep_s.eve_snr, g_bound);
        fp.xi = update_xi(ch, w);

        const double s_tau = surrogate_tau(rep_s.bob_sinr, rep_s.eve_snr, fp.tau);
        const double s_bound = surrogate_bound(rep_s.bob_sinr, rep_s.eve_snr, fp.tau, g_bound);
        const double s_dual = surrogate_dual(ch, w, fp, g_bound);
        const double s_quad = surrogate_quadratic(ch, w, fp, g_bound);

        const double scale = std::max(1.0, std::abs(s_tau));
        CHECK(std::abs(s_bound - s_tau) < 1e-9 * scale);
        CHECK(std::abs(s_dual - s_bound) < 1e-9 * scale);
        CHECK(std::abs(s_quad - s_dual) < 1e-9 * scale);

        // tau* dominates random feasible tau for the clamped objective.
        VectorXd tau_rand(3);
        for (int k = 0; k < 3; ++k)
            tau_rand[k] = uniform_range(rng, 0.0, alpha[k]);
        CHECK(surrogate_tau(rep_s.bob_sinr, rep_s.eve_snr, fp.tau) >=
              surrogate_tau(rep_s.bob_sinr, rep_s.eve_snr, tau_rand) - 1e-12);
    }
}

TEST_CASE("argument checks on the FP operations") {
    Rng rng(999);
    const EffectiveChannels ch = oracles::random_channels(rng, 4, 2, 1);
    const FpState fp = random_fp_state(rng, 2);
    CHECK_THROWS_AS(update_w(ch, fp, 1.0, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(bisect_lambda(ch, fp, 1.0, 2.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(bisect_lambda(ch, fp, 1.0, -1.0, 1e-6), std::invalid_argument);

    // Dimension mismatches are rejected.
    const MatrixXcd wrong = MatrixXcd::Zero(4, 3);
    CHECK_THROWS_AS(sinr_report(ch, wrong), std::invalid_argument);
    CHECK_THROWS_AS(wssr(ch, MatrixXcd::Zero(4, 2), VectorXd::Ones(3)),
                    std::invalid_argument);

    // Raw (un-normalized) channels are refused by the SINR paths.
    EffectiveChannels raw = ch;
    raw.normalized = false;
    CHECK_THROWS_AS(g_gamma(raw, 1.0), std::invalid_argument);
}

TEST_CASE("beamformer update: zero coefficient and ridge dominance") {
    Rng rng(1010);
    const EffectiveChannels ch = oracles::random_channels(rng, 4, 2, 2);
    FpState fp = random_fp_state(rng, 2);
    fp.tau[1] = 0.0;
    const double g_bound = g_gamma(ch, 1.0);
    const MatrixXcd w = update_w(ch, fp, g_bound, 0.5);
    CHECK(w.col(1).norm() == 0.0);

    double prev = 1e300;
    for (double lambda : {1.0, 4.0, 16.0, 256.0, 65536.0, 1e9}) {
        const double norm = update_w(ch, fp, g_bound, lambda).norm();
        CHECK(norm < prev);
        prev = norm;
    }
    CHECK(prev < 1e-8);
}

TEST_CASE("beamformer update satisfies the stationarity system") {
    Rng rng(1111);
    for (int rep = 0; rep < 50; ++rep) {
        const EffectiveChannels ch = oracles::random_channels(rng, 6, 3, 2);
        const FpState fp = random_fp_state(rng, 3);
        const double g_bound = g_gamma(ch, 2.0);
        const double lambda = uniform_range(rng, 0.0, 2.0);
        const MatrixXcd w = update_w(ch, fp, g_bound, lambda);
        CHECK(kkt_residual(ch, fp, g_bound, lambda, w) < 1e-8);
    }
}

TEST_CASE("lambda bisection: interior point is certified with lambda = 0") {
    Rng rng(1211);
    const EffectiveChannels ch = oracles::random_channels(rng, 4, 2, 1);
    const FpState fp = random_fp_state(rng, 2);
    // A budget far above the unconstrained stationary power stays interior;
    // the lambda = 0 system is rank-deficient here, so this also pins the
    // minimum-norm branch.
    const double power = 1e9;
    const auto [lambda, w] = bisect_lambda(ch, fp, g_gamma(ch, power), power, 1e-6);
    CHECK(lambda == 0.0);
    CHECK(w.squaredNorm() <= power);
    CHECK(w.squaredNorm() > 0.0);
}

TEST_CASE("lambda bisection: interior point, monotone power, budget met") {
    Rng rng(1212);
    const double power = 1.3;
    for (int rep = 0; rep < 25; ++rep) {
        const EffectiveChannels ch = oracles::random_channels(rng, 6, 3, 2);
        const FpState fp = random_fp_state(rng, 3);
        const double g_bound = g_gamma(ch, power);
        const auto [lambda, w] = bisect_lambda(ch, fp, g_bound, power, 1e-6);
        CHECK(lambda >= 0.0);
        if (lambda == 0.0) {
            CHECK(w.squaredNorm() <= power * (1.0 + 1e-12));
        } else {
            CHECK(std::abs(w.squaredNorm() - power) <= 1e-6 * power);
        }
        CHECK(kkt_residual(ch, fp, g_bound, lambda, w) < 1e-8);
    }

    // Monotone total power along a lambda sweep.
    const EffectiveChannels ch = oracles::random_channels(rng, 5, 3, 2);
    const FpState fp = random_fp_state(rng, 3);
    const double g_bound = g_gamma(ch, power);
    double prev = 1e300;
    for (double lambda = 0.25; lambda < 1e4; lambda *= 3.0) {
        const double p = update_w(ch, fp, g_bound, lambda).squaredNorm();
        CHECK(p <= prev * (1.0 + 1e-12));
        prev = p;
    }
}

TEST_CASE("position objective equals the full-matrix oracle") {
    Rng rng(1313);
    for (int pas : {1, 2}) {
        for (int rep = 0; rep < 8; ++rep) {
            Scene scene = oracles::random_scene(rng, 3, pas, 2, 2, 30.0, -10.0);
            const EffectiveChannels ch = effective_channels(scene);
            const MatrixXcd w = oracles::random_bank(rng, 3, 2, scene.power_budget);
            FpState fp = random_fp_state(rng, 2);
            const int wg = static_cast<int>(rng() % 3);
            const int pa = static_cast<int>(rng() % pas);
            const PositionObjectiveContext ctx =
                build_position_context(scene, ch, w, fp, pa, wg);

            for (int probe = 0; probe < 4; ++probe) {
                const double x = uniform_range(rng, -14.0, 14.0);
                const double via_ctx = position_objective(x, ctx, scene);

                Scene moved = scene;
                moved.pa_x[moved.pa_offset(wg) + pa] = x;
                const double via_oracle = oracles::position_objective_oracle(
                    effective_channels(moved), w, fp, scene.power_budget);
                CHECK(via_ctx ==
                      doctest::Approx(via_oracle).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("position objective: decoupled beamformer leaves Eve-only terms") {
    Rng rng(1414);
    Scene scene = oracles::random_scene(rng, 2, 1, 1, 1, 20.0, -10.0);
    const EffectiveChannels ch = effective_channels(scene);
    const MatrixXcd w = oracles::random_bank(rng, 2, 1, scene.power_budget);
    FpState fp;
    fp.tau = VectorXd::Ones(1);
    fp.mu = VectorXd::Constant(1, 1.5);
    fp.nu = VectorXd::Constant(1, 0.75);
    fp.xi = VectorXcd::Zero(1); // no Bob-direction coupling

    const PositionObjectiveContext ctx = build_position_context(scene, ch, w, fp, 0, 0);
    const double x = 3.21;
    const double got = position_objective(x, ctx, scene);

    // Hand-reduced form: tau (1+nu) (Gamma - G)/(1+G) + tau ln(1+G).
    Scene moved = scene;
    moved.pa_x[0] = x;
    const EffectiveChannels mch = effective_channels(moved);
    const double g_bound = scene.power_budget * mch.eve.squaredNorm();
    const double leak = (mch.eve.transpose() * w).squaredNorm();
    const double expected =
        1.75 * (leak - g_bound) / (1.0 + g_bound) + std::log1p(g_bound);
    CHECK(got == doctest::Approx(expected).epsilon(1e-10));

    // tau = 0 removes every term.
    fp.tau.setZero();
    const PositionObjectiveContext ctx0 = build_position_context(scene, ch, w, fp, 0, 0);
    CHECK(position_objective(x, ctx0, scene) == doctest::Approx(0.0));
}

TEST_CASE("position objective: mirror-symmetric candidates tie exactly") {
    Scene s;
    s.pas_per_waveguide = {1, 1};
    s.height = 3.0;
    s.region_side = 20.0;
    s.waveguide_y = {-5.0, 5.0};
    // Centered feeds make +-x candidates bitwise symmetric for users at x=0.
    s.feed_points = {Vec3(0.0, -5.0, 3.0), Vec3(0.0, 5.0, 3.0)};
    s.pa_x = {1.0, -2.0};
    s.bobs = {Vec3(0.0, -3.0, 0.0)};
    s.eves = {Vec3(0.0, 2.0, 0.0)};
    s.carrier_wavelength = kSpeedOfLight / 28e9;
    s.guide_wavelength = s.carrier_wavelength / 1.4;
    s.min_spacing = 0.0;
    s.power_budget = 1e-4;
    s.bob_noise = {1e-12};
    s.eve_noise = {1e-12};
    s.weights = {1.0};
    s.validate();

    Rng rng(1515);
    const EffectiveChannels ch = effective_channels(s);
    const MatrixXcd w = oracles::random_bank(rng, 2, 1, s.power_budget);
    FpState fp = random_fp_state(rng, 1);
    const PositionObjectiveContext ctx = build_position_context(s, ch, w, fp, 0, 0);
    const double left = position_objective(-4.0, ctx, s);
    const double right = position_objective(4.0, ctx, s);
    CHECK(std::abs(left - right) <= 1e-12 * std::max(1.0, std::abs(left)));
}

TEST_CASE("one-dimensional search matches constrained brute force") {
    Rng rng(1616);
    Scene scene = oracles::random_scene(rng, 2, 3, 2, 1, 12.0, -10.0);
    const EffectiveChannels ch = effective_channels(scene);
    const MatrixXcd w = oracles::random_bank(rng, 2, 2, scene.power_budget);
    const FpState fp = random_fp_state(rng, 2);

    const int candidates = 301;
    const int wg = 1;
    for (int pa : {0, 2}) {
        const PositionObjectiveContext ctx = build_position_context(scene, ch, w, fp, pa, wg);
        const GridSearchResult found = one_dim_search(ctx, scene, candidates);

        // Independent exhaustive pass with the same exclusion rule.
        const double side = scene.region_side;
        const double step = side / (candidates - 1);
        double best = 1e300;
        int best_i = -1;
        for (int i = 0; i < candidates; ++i) {
            const double x = -side / 2.0 + i * step;
            bool ok = true;
            for (int m2 = 0; m2 < pa; ++m2) {
                const double x_prev = scene.pa_x[scene.pa_offset(wg) + m2];
                const double lo =
                    std::floor((2.0 * x_prev + side - 2.0 * scene.min_spacing) / (2.0 * step));
                const double hi =
                    std::ceil((2.0 * x_prev + side + 2.0 * scene.min_spacing) / (2.0 * step));
                if (i >= lo && i <= hi) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            const double v = position_objective(x, ctx, scene);
            if (v < best) {
                best = v;
                best_i = i;
            }
        }
        CHECK(found.index == best_i);
        CHECK(found.objective == doctest::Approx(best));
        if (pa == 0)
            CHECK(found.index >= 0); // first PA: nothing excluded
    }

    // Unsatisfiable exclusion: a huge spacing wipes out the whole grid.
    Scene cramped = scene;
    cramped.min_spacing = 100.0;
    const PositionObjectiveContext ctx = build_position_context(cramped, ch, w, fp, 2, wg);
    CHECK_THROWS_AS(one_dim_search(ctx, cramped, candidates), std::runtime_error);
    CHECK_THROWS_AS(one_dim_search(ctx, scene, 1), std::invalid_argument);
}

TEST_CASE("fp_bcd: monotone ascent from the MRT initialization (tiny scene)") {
    Rng rng(1717);
    const Scene scene = oracles::random_scene(rng, 1, 1, 1, 1, 10.0, -10.0);
    const EffectiveChannels ch = effective_channels(scene);
    const MatrixXcd w_init =
        mrt_init_beamformers(ch, scene.power_budget);
    const double init_wssr =
        wssr(ch, w_init, VectorXd::Ones(1)).first;

    FpBcdOptions opts;
    opts.grid_points = 400;
    const WssrResult res = fp_bcd(scene, opts);
    CHECK(res.wssr >= init_wssr - 1e-9);
    for (size_t i = 1; i < res.trace.size(); ++i)
        CHECK(res.trace[i] >= res.trace[i - 1] - 1e-6);
    CHECK(res.non_monotone_steps == 0);
}

TEST_CASE("fp_bcd: invariants on a mid-size scene") {
    Rng rng(1818);
    const Scene scene = oracles::random_scene(rng, 4, 2, 3, 2, 40.0, -10.0);
    FpBcdOptions opts;
    opts.grid_points = 500;
    opts.max_iters = 8;
    const WssrResult res = fp_bcd(scene, opts);

    // Power feasibility.
    CHECK(res.beamformers.squaredNorm() <= scene.power_budget * (1.0 + 1e-6));

    // Position feasibility: in range, spacing strict.
    Scene check = scene;
    check.pa_x = res.pa_x;
    CHECK_NOTHROW(check.validate());

    // Stored WSSR equals a from-scratch recomputation.
    const EffectiveChannels ch = effective_channels(check);
    const auto [recomputed, rates] = wssr(ch, res.beamformers,
                                          Eigen::Map<const VectorXd>(scene.weights.data(), 3));
    CHECK(res.wssr == doctest::Approx(recomputed).epsilon(1e-10));
    CHECK((res.per_user_rates - rates).cwiseAbs().maxCoeff() < 1e-10);

    // Monotone trace.
    for (size_t i = 1; i < res.trace.size(); ++i)
        CHECK(res.trace[i] >= res.trace[i - 1] - 1e-6);
}

TEST_CASE("fp_bcd converges quickly at reference scale" * doctest::timeout(120)) {
    Rng rng(1919);
    const Scene scene = oracles::random_scene(rng, 8, 2, 4, 2, 60.0, -10.0);
    FpBcdOptions opts;
    opts.grid_points = 10000;
    const WssrResult res = fp_bcd(scene, opts);
    CHECK(res.iterations <= 10);
    for (size_t i = 1; i < res.trace.size(); ++i)
        CHECK(res.trace[i] >= res.trace[i - 1] - 1e-6);
}

TEST_CASE("fp_fixed_channels improves on plain MRT") {
    Rng rng(2020);
    FixedArrayScene fa;
    fa.num_antennas = 6;
    fa.height = 3.0;
    fa.carrier_wavelength = kSpeedOfLight / 28e9;
    const Layout layout = generate_layout(rng, 40.0, 3, 2);
    fa.bobs = layout.bobs;
    fa.eves = layout.eves;
    fa.power_budget = 1e-4;
    fa.bob_noise.assign(3, 1e-12);
    fa.eve_noise.assign(2, 1e-12);
    fa.weights.assign(3, 1.0);
    const EffectiveChannels ch = fixed_array_channels(fa);
    const VectorXd alpha = VectorXd::Ones(3);

    const double mrt_wssr = wssr(ch, mrt_beamformers(ch, fa.power_budget), alpha).first;
    const WssrResult res = fp_fixed_channels(ch, fa.power_budget, alpha);
    CHECK(res.wssr >= mrt_wssr - 1e-9);
    CHECK(res.pa_x.empty());
}
