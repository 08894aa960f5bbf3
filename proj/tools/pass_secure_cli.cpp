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
//
// Batch experiment runner: `run` executes a sweep config, `reproduce` runs
// the named figure presets, `validate` runs a quick oracle self-check.

#include <cstdio>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "pass/baselines.hpp"
#include "pass/experiment.hpp"
#include "pass/mu_fp_bcd.hpp"
#include "pass/su_secure.hpp"
#include "pass/units.hpp"

namespace {

using namespace pass;

int finish_run(const std::vector<TrialRecord> &records, const std::string &out_path) {
    const std::string summary_path = write_results(records, out_path);
    int errors = 0;
    for (const auto &r : records)
        if (r.status != "ok")
            ++errors;
    std::printf("wrote %zu records to %s\n", records.size(), out_path.c_str());
    std::printf("summary in %s\n", summary_path.c_str());
    std::fputs(summary_to_string(records).c_str(), stdout);
    if (errors > 0) {
        std::fprintf(stderr, "%d trial(s) failed; error tags kept in the output\n", errors);
        return 2;
    }
    return 0;
}

int cmd_validate(std::uint64_t seed) {
    int failures = 0;
    auto report = [&](const char *name, bool ok, const std::string &detail) {
        std::printf("[%s] %-42s %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
        if (!ok)
            ++failures;
    };
    Rng rng(seed);

    { // closed form vs eigensolver
        double worst = 0.0;
        for (int rep = 0; rep < 200; ++rep) {
            SuChannelPair ch;
            const int n = 2 + 2 * static_cast<int>(rng() % 4);
            ch.bob.resize(n);
            ch.eve.resize(n);
            for (int i = 0; i < n; ++i) {
                ch.bob[i] = standard_complex_gaussian(rng);
                ch.eve[i] = standard_complex_gaussian(rng);
            }
            ch.snr_bob = 0.1 * std::exp(uniform_range(rng, 0.0, 9.0));
            ch.snr_eve = 0.1 * std::exp(uniform_range(rng, 0.0, 9.0));
            worst = std::max(worst,
                             std::abs(closed_form_secrecy(ch).first - secrecy_rate_eigen(ch)));
        }
        report("closed-form rate vs eigensolver", worst < 1e-9,
               "max diff " + format_double(worst));
    }

    SceneTemplate su_tmpl;
    su_tmpl.num_waveguides = 4;
    su_tmpl.side_length_m = 20.0;
    su_tmpl.transmit_power_dbm = 10.0;
    su_tmpl.num_bobs = 1;
    su_tmpl.num_eves = 1;

    { // analytic gradient vs finite differences
        double worst = 0.0;
        int checked = 0;
        while (checked < 20) {
            const Layout layout = generate_layout(rng, 20.0, 1, 1);
            const Scene scene = scene_from_template(su_tmpl, layout, rng);
            std::vector<double> xp(4);
            for (double &x : xp)
                x = uniform_range(rng, -9.0, 9.0);
            const int n = static_cast<int>(rng() % 4);
            const double analytic = su_gradient(n, xp, scene);
            const double step = 1e-6;
            std::vector<double> probe = xp;
            probe[n] = xp[n] + step;
            const double f_plus = su_objective(probe, scene);
            probe[n] = xp[n] - step;
            const double f_minus = su_objective(probe, scene);
            const double fd = (f_plus - f_minus) / (2.0 * step);
            const double scale = std::max(std::abs(analytic), std::abs(fd));
            const double slope_scale = std::abs(su_objective(xp, scene)) * 2.0 * M_PI /
                                       scene.carrier_wavelength;
            if (scale < 0.1 * slope_scale)
                continue;
            worst = std::max(worst, std::abs(analytic - fd) / scale);
            ++checked;
        }
        report("position gradient vs finite differences", worst < 1e-5,
               "max rel err " + format_double(worst));
    }

    SceneTemplate mu_tmpl;
    mu_tmpl.num_waveguides = 4;
    mu_tmpl.side_length_m = 40.0;
    mu_tmpl.transmit_power_dbm = -10.0;
    mu_tmpl.num_bobs = 3;
    mu_tmpl.num_eves = 2;

    { // FP surrogate identities
        double worst = 0.0;
        for (int rep = 0; rep < 20; ++rep) {
            const Layout layout = generate_layout(rng, 40.0, 3, 2);
            const Scene scene = scene_from_template(mu_tmpl, layout, rng);
            const EffectiveChannels ch = effective_channels(scene);
            Eigen::MatrixXcd w(4, 3);
            for (int c = 0; c < 3; ++c)
                for (int r = 0; r < 4; ++r)
                    w(r, c) = standard_complex_gaussian(rng);
            w *= std::sqrt(scene.power_budget) / w.norm();
            const double g_bound = g_gamma(ch, scene.power_budget);
            const SinrReport rep_s = sinr_report(ch, w);
            FpState fp;
            fp.tau = update_tau(rep_s.bob_sinr, rep_s.eve_snr, Eigen::VectorXd::Ones(3));
            fp.mu = update_mu(ch, w);
            fp.nu = update_nu(rep_s.eve_snr, g_bound);
            fp.xi = update_xi(ch, w);
            const double s_tau = surrogate_tau(rep_s.bob_sinr, rep_s.eve_snr, fp.tau);
            const double s_bound =
                surrogate_bound(rep_s.bob_sinr, rep_s.eve_snr, fp.tau, g_bound);
            const double s_dual = surrogate_dual(ch, w, fp, g_bound);
            const double s_quad = surrogate_quadratic(ch, w, fp, g_bound);
            const double scale = std::max(1.0, std::abs(s_tau));
            worst = std::max({worst, std::abs(s_bound - s_tau) / scale,
                              std::abs(s_dual - s_bound) / scale,
                              std::abs(s_quad - s_dual) / scale});
        }
        report("FP surrogate identity chain", worst < 1e-9,
               "max rel diff " + format_double(worst));
    }

    { // beamformer update stationarity and power
        double worst_kkt = 0.0, worst_power = 0.0;
        for (int rep = 0; rep < 20; ++rep) {
            EffectiveChannels ch;
            ch.bob.resize(6, 3);
            ch.eve.resize(6, 2);
            for (int c = 0; c < 3; ++c)
                for (int r = 0; r < 6; ++r)
                    ch.bob(r, c) = standard_complex_gaussian(rng);
            for (int c = 0; c < 2; ++c)
                for (int r = 0; r < 6; ++r)
                    ch.eve(r, c) = standard_complex_gaussian(rng);
            ch.normalized = true;
            FpState fp;
            fp.tau.resize(3);
            fp.mu.resize(3);
            fp.nu.resize(3);
            fp.xi.resize(3);
            for (int k = 0; k < 3; ++k) {
                fp.tau[k] = uniform_unit(rng) < 0.75 ? 1.0 : 0.0;
                fp.mu[k] = uniform_range(rng, 0.0, 3.0);
                fp.nu[k] = uniform_range(rng, 0.0, 3.0);
                fp.xi[k] = 0.5 * standard_complex_gaussian(rng);
            }
            fp.tau[0] = 1.0;
            const double power = uniform_range(rng, 0.5, 3.0);
            const double g_bound = g_gamma(ch, power);
            const auto [lambda, w] = bisect_lambda(ch, fp, g_bound, power, 1e-6);

            Eigen::MatrixXcd base = Eigen::MatrixXcd::Zero(6, 6);
            for (int i = 0; i < 3; ++i)
                base += fp.tau[i] * (1.0 + fp.mu[i]) * std::norm(fp.xi[i]) *
                        (ch.bob.col(i).conjugate() * ch.bob.col(i).transpose());
            const Eigen::MatrixXcd eve = ch.eve.conjugate() * ch.eve.transpose();
            for (int k = 0; k < 3; ++k) {
                const Eigen::VectorXcd r =
                    base * w.col(k) +
                    ((1.0 + fp.nu[k]) / (1.0 + g_bound)) * (eve * w.col(k)) +
                    lambda * w.col(k) -
                    fp.tau[k] * (1.0 + fp.mu[k]) * fp.xi[k] * ch.bob.col(k).conjugate();
                worst_kkt = std::max(worst_kkt, r.norm());
            }
            if (lambda > 0.0)
                worst_power =
                    std::max(worst_power, std::abs(w.squaredNorm() - power) / power);
            else if (w.squaredNorm() > power)
                worst_power = 1.0;
        }
        report("beamformer stationarity and power budget",
               worst_kkt < 1e-8 && worst_power <= 1e-6,
               "max KKT " + format_double(worst_kkt));
    }

    { // deterministic mini-experiment
        ExperimentConfig cfg;
        cfg.scenario = Scenario::multi_user;
        cfg.sweep_variable = SweepVariable::transmit_power_dbm;
        cfg.sweep_values = {-10.0};
        cfg.trials = 2;
        cfg.rng_seed = seed;
        cfg.scene = mu_tmpl;
        cfg.fpbcd.grid_points = 200;
        cfg.fpbcd.max_iters = 4;
        cfg.baselines = {"mrt", "zf", "fixed_antenna"};
        const std::string a = results_to_string(run_experiment(cfg, 2));
        const std::string b = results_to_string(run_experiment(cfg, 1));
        report("experiment determinism across worker counts", a == b, "");
    }

    std::printf(failures == 0 ? "validation OK\n" : "validation FAILED\n");
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Secure beamforming for pinching-antenna systems: batch experiments"};
    app.require_subcommand(1);

    std::string config_path, out_path = "results.csv", preset_name;
    std::uint64_t seed = 0;
    bool paper_scale = false, timing = false;
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1)
        workers = 1;

    CLI::App *run = app.add_subcommand("run", "Run a sweep described by a config file");
    CLI::Option *run_seed;
    run->add_option("--config", config_path, "Config file path")->required();
    run->add_option("--out", out_path, "Output table path");
    run_seed = run->add_option("--seed", seed, "Override the config RNG seed");
    run->add_option("--workers", workers, "Worker thread count");
    run->add_flag("--timing", timing, "Record wall times (breaks bit-identical output)");

    CLI::App *rep = app.add_subcommand("reproduce", "Run a named figure preset");
    CLI::Option *rep_seed;
    rep->add_option("--preset", preset_name, "Preset name (fig2...fig9)")->required();
    rep->add_option("--out", out_path, "Output table path");
    rep_seed = rep->add_option("--seed", seed, "Override the preset RNG seed");
    rep->add_option("--workers", workers, "Worker thread count");
    rep->add_flag("--paper-scale", paper_scale,
                  "Full grid resolution and Monte-Carlo counts");

    CLI::App *val = app.add_subcommand("validate", "Run the oracle/invariant self-check");
    std::uint64_t val_seed = 7;
    val->add_option("--seed", val_seed, "Self-check RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            ExperimentConfig cfg = ExperimentConfig::from_file(config_path);
            if (run_seed->count() > 0)
                cfg.rng_seed = seed;
            if (timing)
                cfg.measure_time = true;
            return finish_run(run_experiment(cfg, workers), out_path);
        }
        if (rep->parsed()) {
            std::optional<std::uint64_t> seed_opt;
            if (rep_seed->count() > 0)
                seed_opt = seed;
            return finish_run(run_preset(preset_name, paper_scale, seed_opt, workers),
                              out_path);
        }
        return cmd_validate(val_seed);
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
