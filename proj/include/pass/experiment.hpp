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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pass/baselines.hpp"
#include "pass/config.hpp"
#include "pass/geometry.hpp"
#include "pass/mu_fp_bcd.hpp"
#include "pass/rng.hpp"
#include "pass/su_secure.hpp"

namespace pass {

enum class Scenario { single_user, multi_user };

enum class SweepVariable {
    transmit_power_dbm,
    side_length_m,
    num_bobs,
    num_eves,
    pas_per_waveguide,
    iteration, // convergence presets: records are per-iteration trace points
};

std::string to_string(Scenario s);
std::string to_string(SweepVariable v);
Scenario scenario_from_string(const std::string &s);
SweepVariable sweep_variable_from_string(const std::string &s);

/// Scene parameters before a sweep value or a user layout is applied.
struct SceneTemplate {
    int num_waveguides = 8;
    int pas_per_waveguide = 1;
    double height_m = 3.0;
    double side_length_m = 60.0;
    double carrier_ghz = 28.0;
    double n_eff = 1.4;
    double noise_dbm = -90.0;
    double transmit_power_dbm = -10.0;
    int num_bobs = 4;
    int num_eves = 2;
    std::vector<double> weights;  // empty = all ones
    double min_spacing_m = -1.0;  // negative = half carrier wavelength
};

struct ExperimentConfig {
    Scenario scenario = Scenario::multi_user;
    SweepVariable sweep_variable = SweepVariable::transmit_power_dbm;
    std::vector<double> sweep_values;
    int trials = 1;
    std::uint64_t rng_seed = 1;
    SceneTemplate scene;
    Algorithm1Options alg1;
    FpBcdOptions fpbcd;
    std::vector<std::string> baselines; // subset of {mrt, zf, fixed_antenna}
    bool measure_time = false;          // real timing breaks bit-identical outputs

    static ExperimentConfig from_file(const std::string &path);
    static ExperimentConfig from_kv(const KeyValueConfig &kv);
    void validate() const;
};

struct TrialRecord {
    std::string sweep_var;
    int sweep_index = 0;
    double sweep_value = 0.0;
    int trial = 0;
    std::string scheme;
    double rate_bits = 0.0;
    int iterations = 0;
    double walltime_ms = 0.0;
    std::string status = "ok";
    std::vector<double> pa_x; // final positions; not part of the table
};

struct Layout {
    std::vector<Vec3> bobs;
    std::vector<Vec3> eves;
};

/// Users drawn i.i.d. uniform over the square [-D/2, D/2]^2 at z = 0; Bobs
/// first, then Eves. Empty layouts are only allowed in validation tooling.
Layout generate_layout(Rng &rng, double side, int num_bobs, int num_eves,
                       bool allow_empty = false);

/// Builds a feasible scene: template + layout, default waveguide rows and
/// feed points, PAs at x = 0 (or randomized when several share a waveguide).
Scene scene_from_template(const SceneTemplate &tmpl, const Layout &layout, Rng &rng);

FixedArrayScene fixed_array_from_template(const SceneTemplate &tmpl, const Layout &layout);

/// Runs every (sweep value, trial) task; schemes inside one trial share the
/// same layout and randomness. Per-trial failures are recorded with an error
/// status and the run continues.
std::vector<TrialRecord> run_experiment(const ExperimentConfig &config, int workers = 1);

std::string results_to_string(const std::vector<TrialRecord> &records);
std::string summary_to_string(const std::vector<TrialRecord> &records);

/// Writes the per-trial table to `path` and mean/std per (sweep value,
/// scheme) next to it (suffix ".summary" before the extension). Returns the
/// summary path.
std::string write_results(const std::vector<TrialRecord> &records, const std::string &path);

/// Shortest round-trip decimal form of a double (to_chars).
std::string format_double(double v);

// Named presets reproducing the reference figure sweeps at desk scale
// (paper_scale restores the full grid resolution and trial counts).
std::vector<std::string> preset_names();
ExperimentConfig preset_config(const std::string &name, bool paper_scale);
std::vector<TrialRecord> run_preset(const std::string &name, bool paper_scale,
                                    std::optional<std::uint64_t> seed_override,
                                    int workers);

} // namespace pass
