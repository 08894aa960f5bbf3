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

#include "pass/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "pass/baselines.hpp"
#include "pass/units.hpp"

namespace pass {

std::string to_string(Scenario s) {
    return s == Scenario::single_user ? "single_user" : "multi_user";
}

std::string to_string(SweepVariable v) {
    switch (v) {
    case SweepVariable::transmit_power_dbm: return "transmit_power_dbm";
    case SweepVariable::side_length_m: return "side_length_m";
    case SweepVariable::num_bobs: return "num_bobs";
    case SweepVariable::num_eves: return "num_eves";
    case SweepVariable::pas_per_waveguide: return "pas_per_waveguide";
    case SweepVariable::iteration: return "iteration";
    }
    return "unknown";
}

Scenario scenario_from_string(const std::string &s) {
    if (s == "single_user")
        return Scenario::single_user;
    if (s == "multi_user")
        return Scenario::multi_user;
    throw std::invalid_argument("unknown scenario: " + s);
}

SweepVariable sweep_variable_from_string(const std::string &s) {
    if (s == "transmit_power_dbm")
        return SweepVariable::transmit_power_dbm;
    if (s == "side_length_m")
        return SweepVariable::side_length_m;
    if (s == "num_bobs")
        return SweepVariable::num_bobs;
    if (s == "num_eves")
        return SweepVariable::num_eves;
    if (s == "pas_per_waveguide")
        return SweepVariable::pas_per_waveguide;
    if (s == "iteration")
        return SweepVariable::iteration;
    throw std::invalid_argument("unknown sweep variable: " + s);
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

ExperimentConfig ExperimentConfig::from_file(const std::string &path) {
    const KeyValueConfig kv = KeyValueConfig::parse_file(path);
    return from_kv(kv);
}

ExperimentConfig ExperimentConfig::from_kv(const KeyValueConfig &kv) {
    ExperimentConfig cfg;
    cfg.scenario = scenario_from_string(kv.get_string("experiment.scenario"));
    cfg.sweep_variable = sweep_variable_from_string(kv.get_string("sweep.variable"));
    cfg.sweep_values = kv.get_double_list("sweep.values");
    cfg.trials = kv.get_int("experiment.trials", 1);
    cfg.rng_seed = kv.get_u64("experiment.seed", 1);
    cfg.baselines = kv.get_string_list("experiment.baselines", {});
    cfg.measure_time = kv.get_bool("experiment.measure_time", false);

    const bool single = cfg.scenario == Scenario::single_user;
    SceneTemplate &sc = cfg.scene;
    sc.num_waveguides = kv.get_int("scene.num_waveguides", single ? 4 : 8);
    sc.pas_per_waveguide = kv.get_int("scene.pas_per_waveguide", 1);
    sc.height_m = kv.get_double("scene.height_m", 3.0);
    sc.side_length_m = kv.get_double("scene.side_length_m", single ? 30.0 : 60.0);
    sc.carrier_ghz = kv.get_double("scene.carrier_ghz", 28.0);
    sc.n_eff = kv.get_double("scene.n_eff", 1.4);
    sc.noise_dbm = kv.get_double("scene.noise_dbm", -90.0);
    sc.transmit_power_dbm =
        kv.get_double("scene.transmit_power_dbm", single ? 20.0 : -10.0);
    sc.num_bobs = kv.get_int("scene.num_bobs", single ? 1 : 4);
    sc.num_eves = kv.get_int("scene.num_eves", single ? 1 : 2);
    if (kv.has("scene.weights"))
        sc.weights = kv.get_double_list("scene.weights");
    sc.min_spacing_m = kv.get_double("scene.min_spacing_m", -1.0);

    cfg.alg1.beta_ini = kv.get_double("alg1.beta_ini", 10.0);
    cfg.alg1.beta_min = kv.get_double("alg1.beta_min", 1e-13);
    cfg.alg1.max_sweeps = kv.get_int("alg1.max_sweeps", 500);
    cfg.alg1.rel_improve_tol = kv.get_double("alg1.rel_tol", 1e-8);
    cfg.alg1.grad_norm_tol = kv.get_double("alg1.grad_tol", 1e-6);

    cfg.fpbcd.grid_points = kv.get_int("fpbcd.grid_points", 2000);
    cfg.fpbcd.max_iters = kv.get_int("fpbcd.max_iters", 50);
    cfg.fpbcd.rel_tol = kv.get_double("fpbcd.rel_tol", 1e-4);
    cfg.fpbcd.bisect_tol = kv.get_double("fpbcd.bisect_tol", 1e-6);

    const auto unused = kv.unused_keys();
    if (!unused.empty()) {
        std::string msg = "config: unknown keys:";
        for (const auto &k : unused)
            msg += " " + k;
        throw std::invalid_argument(msg);
    }
    cfg.validate();
    return cfg;
}

void ExperimentConfig::validate() const {
    if (trials < 1)
        throw std::invalid_argument("config: trials must be >= 1");
    if (sweep_values.empty())
        throw std::invalid_argument("config: sweep values must be nonempty");
    if (sweep_variable == SweepVariable::iteration)
        throw std::invalid_argument("config: 'iteration' is reserved for convergence presets");
    if (scene.num_waveguides < 1 || scene.pas_per_waveguide < 1)
        throw std::invalid_argument("config: waveguide/PA counts must be >= 1");
    if (!(scene.height_m > 0.0) || !(scene.side_length_m > 0.0) ||
        !(scene.carrier_ghz > 0.0))
        throw std::invalid_argument("config: physical scene parameters must be positive");
    if (scene.n_eff < 1.0)
        throw std::invalid_argument("config: effective refractive index must be >= 1");
    if (scene.num_bobs < 1 || scene.num_eves < 1)
        throw std::invalid_argument("config: at least one Bob and one Eve required");

    if (scenario == Scenario::single_user) {
        const bool count_sweep = sweep_variable == SweepVariable::num_bobs ||
                                 sweep_variable == SweepVariable::num_eves ||
                                 sweep_variable == SweepVariable::pas_per_waveguide;
        if (scene.num_bobs != 1 || scene.num_eves != 1 ||
            scene.pas_per_waveguide != 1 || count_sweep)
            throw std::invalid_argument(
                "config: single_user scenario is fixed to one Bob, one Eve, one PA per waveguide");
    }
    if (sweep_variable == SweepVariable::num_bobs ||
        sweep_variable == SweepVariable::num_eves ||
        sweep_variable == SweepVariable::pas_per_waveguide) {
        for (double v : sweep_values) {
            if (v < 1.0 || v != std::floor(v))
                throw std::invalid_argument("config: count sweeps need positive integers");
        }
        if (!scene.weights.empty() && sweep_variable == SweepVariable::num_bobs)
            throw std::invalid_argument("config: explicit weights cannot be swept over num_bobs");
    }
    for (const auto &b : baselines) {
        if (b != "mrt" && b != "zf" && b != "fixed_antenna")
            throw std::invalid_argument("config: unknown baseline '" + b + "'");
    }
}

Layout generate_layout(Rng &rng, double side, int num_bobs, int num_eves,
                       bool allow_empty) {
    if (!(side > 0.0))
        throw std::invalid_argument("generate_layout: side must be positive");
    if (num_bobs < 0 || num_eves < 0)
        throw std::invalid_argument("generate_layout: negative user count");
    if (num_bobs == 0 && !allow_empty)
        throw std::invalid_argument("generate_layout: at least one Bob required");
    const double half = side / 2.0;
    Layout layout;
    layout.bobs.reserve(num_bobs);
    for (int k = 0; k < num_bobs; ++k) {
        const double x = uniform_range(rng, -half, half);
        const double y = uniform_range(rng, -half, half);
        layout.bobs.emplace_back(x, y, 0.0);
    }
    layout.eves.reserve(num_eves);
    for (int j = 0; j < num_eves; ++j) {
        const double x = uniform_range(rng, -half, half);
        const double y = uniform_range(rng, -half, half);
        layout.eves.emplace_back(x, y, 0.0);
    }
    return layout;
}

namespace {

std::vector<double> resolve_weights(const SceneTemplate &tmpl, int num_bobs) {
    if (tmpl.weights.empty())
        return std::vector<double>(num_bobs, 1.0);
    if (static_cast<int>(tmpl.weights.size()) != num_bobs)
        throw std::invalid_argument("scene: weights size does not match the Bob count");
    return tmpl.weights;
}

} // namespace

Scene scene_from_template(const SceneTemplate &tmpl, const Layout &layout, Rng &rng) {
    Scene s;
    const double lambda_c = kSpeedOfLight / (tmpl.carrier_ghz * 1e9);
    s.pas_per_waveguide.assign(tmpl.num_waveguides, tmpl.pas_per_waveguide);
    s.height = tmpl.height_m;
    s.region_side = tmpl.side_length_m;
    s.waveguide_y = default_waveguide_y(tmpl.num_waveguides, tmpl.side_length_m);
    s.feed_points = default_feed_points(s.waveguide_y, tmpl.side_length_m, tmpl.height_m);
    s.pa_x.assign(static_cast<size_t>(tmpl.num_waveguides) * tmpl.pas_per_waveguide, 0.0);
    s.bobs = layout.bobs;
    s.eves = layout.eves;
    s.carrier_wavelength = lambda_c;
    s.guide_wavelength = lambda_c / tmpl.n_eff;
    s.min_spacing = tmpl.min_spacing_m >= 0.0 ? tmpl.min_spacing_m : lambda_c / 2.0;
    s.power_budget = dbm_to_watt(tmpl.transmit_power_dbm);
    s.bob_noise.assign(layout.bobs.size(), dbm_to_watt(tmpl.noise_dbm));
    s.eve_noise.assign(layout.eves.size(), dbm_to_watt(tmpl.noise_dbm));
    s.weights = resolve_weights(tmpl, static_cast<int>(layout.bobs.size()));
    if (tmpl.pas_per_waveguide > 1)
        random_feasible_positions(s, rng);
    s.validate();
    return s;
}

FixedArrayScene fixed_array_from_template(const SceneTemplate &tmpl, const Layout &layout) {
    FixedArrayScene fa;
    fa.num_antennas = tmpl.num_waveguides;
    fa.height = tmpl.height_m;
    fa.carrier_wavelength = kSpeedOfLight / (tmpl.carrier_ghz * 1e9);
    fa.bobs = layout.bobs;
    fa.eves = layout.eves;
    fa.power_budget = dbm_to_watt(tmpl.transmit_power_dbm);
    fa.bob_noise.assign(layout.bobs.size(), dbm_to_watt(tmpl.noise_dbm));
    fa.eve_noise.assign(layout.eves.size(), dbm_to_watt(tmpl.noise_dbm));
    fa.weights = resolve_weights(tmpl, static_cast<int>(layout.bobs.size()));
    fa.validate();
    return fa;
}

namespace {

SceneTemplate apply_sweep(const SceneTemplate &base, SweepVariable var, double value) {
    SceneTemplate tmpl = base;
    switch (var) {
    case SweepVariable::transmit_power_dbm:
        tmpl.transmit_power_dbm = value;
        break;
    case SweepVariable::side_length_m:
        tmpl.side_length_m = value;
        break;
    case SweepVariable::num_bobs:
        tmpl.num_bobs = static_cast<int>(value);
        break;
    case SweepVariable::num_eves:
        tmpl.num_eves = static_cast<int>(value);
        break;
    case SweepVariable::pas_per_waveguide:
        tmpl.pas_per_waveguide = static_cast<int>(value);
        break;
    case SweepVariable::iteration:
        throw std::invalid_argument("iteration sweeps cannot be applied to a scene");
    }
    return tmpl;
}

std::string sanitize(std::string text) {
    for (char &c : text)
        if (c == ',' || c == '\n' || c == '\r')
            c = ';';
    return text;
}

Eigen::VectorXd to_eigen(const std::vector<double> &v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<int>(v.size()));
}

/// Runs one scheme on one trial's layout; fills rate/iterations/positions.
void run_scheme(const ExperimentConfig &cfg, const SceneTemplate &tmpl,
                const Layout &layout, const std::string &scheme, Rng &init_rng,
                TrialRecord &rec) {
    const double power = dbm_to_watt(tmpl.transmit_power_dbm);
    if (cfg.scenario == Scenario::single_user) {
        if (scheme == "pass") {
            const Scene scene = scene_from_template(tmpl, layout, init_rng);
            const SuSolution sol = algorithm1_optimize(scene, cfg.alg1);
            rec.rate_bits = sol.secrecy_rate;
            rec.iterations = sol.sweeps;
            rec.pa_x = sol.pa_x;
            return;
        }
        const FixedArrayScene fa = fixed_array_from_template(tmpl, layout);
        if (scheme == "fixed_antenna") {
            rec.rate_bits = closed_form_secrecy(su_channel_pair(fa)).first;
            return;
        }
        const EffectiveChannels ch = fixed_array_channels(fa);
        const Eigen::VectorXd alpha = to_eigen(fa.weights);
        if (scheme == "mrt") {
            rec.rate_bits = wssr(ch, mrt_beamformers(ch, power), alpha).first;
            return;
        }
        if (scheme == "zf") {
            rec.rate_bits = wssr(ch, zf_beamformers(ch, power), alpha).first;
            return;
        }
        throw std::invalid_argument("unknown scheme: " + scheme);
    }

    if (scheme == "fp_bcd") {
        const Scene scene = scene_from_template(tmpl, layout, init_rng);
        const WssrResult res = fp_bcd(scene, cfg.fpbcd);
        rec.rate_bits = res.wssr;
        rec.iterations = res.iterations;
        rec.pa_x = res.pa_x;
        return;
    }
    const FixedArrayScene fa = fixed_array_from_template(tmpl, layout);
    const EffectiveChannels ch = fixed_array_channels(fa);
    const Eigen::VectorXd alpha = to_eigen(fa.weights);
    if (scheme == "mrt") {
        rec.rate_bits = wssr(ch, mrt_beamformers(ch, power), alpha).first;
        return;
    }
    if (scheme == "zf") {
        rec.rate_bits = wssr(ch, zf_beamformers(ch, power), alpha).first;
        return;
    }
    if (scheme == "fixed_antenna") {
        const WssrResult res = fp_fixed_channels(ch, power, alpha, cfg.fpbcd);
        rec.rate_bits = res.wssr;
        rec.iterations = res.iterations;
        return;
    }
    throw std::invalid_argument("unknown scheme: " + scheme);
}

} // namespace

std::vector<TrialRecord> run_experiment(const ExperimentConfig &config, int workers) {
    config.validate();
    std::vector<std::string> schemes;
    schemes.push_back(config.scenario == Scenario::single_user ? "pass" : "fp_bcd");
    for (const auto &b : config.baselines)
        schemes.push_back(b);

    const int n_sweeps = static_cast<int>(config.sweep_values.size());
    const int n_tasks = n_sweeps * config.trials;
    const int n_schemes = static_cast<int>(schemes.size());
    std::vector<TrialRecord> records(static_cast<size_t>(n_tasks) * n_schemes);

    auto run_task = [&](int task) {
        const int sweep_index = task / config.trials;
        const int trial = task % config.trials;
        const double sweep_value = config.sweep_values[sweep_index];
        const SceneTemplate tmpl =
            apply_sweep(config.scene, config.sweep_variable, sweep_value);

        const std::uint64_t trial_seed =
            derive_seed(config.rng_seed, static_cast<std::uint64_t>(sweep_index),
                        static_cast<std::uint64_t>(trial));
        Rng layout_rng(mix64(trial_seed ^ 0x1));
        const Layout layout =
            generate_layout(layout_rng, tmpl.side_length_m, tmpl.num_bobs, tmpl.num_eves);

        for (int si = 0; si < n_schemes; ++si) {
            TrialRecord &rec = records[static_cast<size_t>(task) * n_schemes + si];
            rec.sweep_var = to_string(config.sweep_variable);
            rec.sweep_index = sweep_index;
            rec.sweep_value = sweep_value;
            rec.trial = trial;
            rec.scheme = schemes[si];
            // An independent stream per scheme keeps trials paired no matter
            // which baselines are enabled.
            Rng init_rng(mix64(trial_seed ^ 0x2));
            const auto t0 = std::chrono::steady_clock::now();
            try {
                run_scheme(config, tmpl, layout, schemes[si], init_rng, rec);
            } catch (const std::exception &e) {
                rec.status = "error: " + sanitize(e.what());
                rec.rate_bits = std::numeric_limits<double>::quiet_NaN();
            }
            if (config.measure_time) {
                const auto t1 = std::chrono::steady_clock::now();
                rec.walltime_ms =
                    std::chrono::duration<double, std::milli>(t1 - t0).count();
            }
        }
    };

    workers = std::max(1, workers);
    if (workers == 1 || n_tasks == 1) {
        for (int t = 0; t < n_tasks; ++t)
            run_task(t);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        const int n_threads = std::min(workers, n_tasks);
        pool.reserve(n_threads);
        for (int i = 0; i < n_threads; ++i) {
            pool.emplace_back([&] {
                for (int t = next.fetch_add(1); t < n_tasks; t = next.fetch_add(1))
                    run_task(t);
            });
        }
        for (auto &th : pool)
            th.join();
    }
    return records;
}

std::string results_to_string(const std::vector<TrialRecord> &records) {
    std::string out = "sweep_var,sweep_value,trial,scheme,rate_bps_hz,iters,walltime_ms,status\n";
    for (const auto &r : records) {
        out += r.sweep_var;
        out += ',';
        out += format_double(r.sweep_value);
        out += ',';
        out += std::to_string(r.trial);
        out += ',';
        out += r.scheme;
        out += ',';
        out += format_double(r.rate_bits);
        out += ',';
        out += std::to_string(r.iterations);
        out += ',';
        out += format_double(r.walltime_ms);
        out += ',';
        out += r.status;
        out += '\n';
    }
    return out;
}

std::string summary_to_string(const std::vector<TrialRecord> &records) {
    struct Bucket {
        std::string sweep_var;
        double sweep_value = 0.0;
        std::string scheme;
        std::vector<double> rates;
    };
    std::vector<Bucket> buckets;
    std::map<std::pair<std::pair<int, std::string>, std::string>, size_t> index;
    for (const auto &r : records) {
        if (r.status != "ok")
            continue;
        const auto key = std::make_pair(std::make_pair(r.sweep_index, r.sweep_var), r.scheme);
        auto it = index.find(key);
        if (it == index.end()) {
            index.emplace(key, buckets.size());
            buckets.push_back({r.sweep_var, r.sweep_value, r.scheme, {r.rate_bits}});
        } else {
            buckets[it->second].rates.push_back(r.rate_bits);
        }
    }
    std::string out = "sweep_var,sweep_value,scheme,trials,rate_mean,rate_std\n";
    for (const auto &b : buckets) {
        const int n = static_cast<int>(b.rates.size());
        double mean = 0.0;
        for (double r : b.rates)
            mean += r;
        mean /= n;
        double var = 0.0;
        for (double r : b.rates)
            var += (r - mean) * (r - mean);
        const double stddev = n > 1 ? std::sqrt(var / (n - 1)) : 0.0;
        out += b.sweep_var + ',' + format_double(b.sweep_value) + ',' + b.scheme + ',' +
               std::to_string(n) + ',' + format_double(mean) + ',' + format_double(stddev) +
               '\n';
    }
    return out;
}

std::string write_results(const std::vector<TrialRecord> &records, const std::string &path) {
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw std::runtime_error("write_results: cannot open " + path);
        out << results_to_string(records);
    }
    std::string summary_path = path;
    const auto dot = summary_path.find_last_of('.');
    const auto slash = summary_path.find_last_of('/');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
        summary_path.insert(dot, ".summary");
    else
        summary_path += ".summary";
    std::ofstream out(summary_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("write_results: cannot open " + summary_path);
    out << summary_to_string(records);
    return summary_path;
}

} // namespace pass
