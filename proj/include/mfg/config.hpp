#pragma once

#include "mfg/solver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mfg {

// Experiment-driver knobs, section [experiment] of the config file.
struct ExperimentConfig {
    int trials = 100;
    std::uint64_t seed = 715517;
    std::vector<double> eps_list = {0.5, 0.25, 0.125, 0.0625, 0.03125, 0.015625};
    std::vector<double> probe_times = {0.5};
    int dist_trunc = 64;
    // continuous-dependence protocols: relative weight shift of the Dirac
    // datum, and the single-mode amplitude added to the band-limited datum
    double cd_weight_shift = 0.01;
    double cd_mode_eps = 1e-3;
};

struct FullConfig {
    ProblemConfig problem;
    ExperimentConfig experiment;
};

// Sectioned key = value text ([problem], [hamiltonian], [payoff], [solver],
// [experiment]); '#' starts a comment; unknown sections or keys are errors.
FullConfig parse_config(const std::string& text);
FullConfig load_config(const std::string& path);

// Canonical form: parse(serialize(c)) == c field for field.
std::string serialize_config(const FullConfig& c);

} // namespace mfg
