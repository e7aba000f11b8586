#pragma once

#include "mfg/solver.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mfg {

// Randomized worst-case ratio for one inequality on one parameter cell.
struct BoundCell {
    std::string name;
    int dim = 0;
    int trunc = 0;
    double alpha = 0.0;
    int trials = 0;
    double worst_ratio = 0.0;
    double limit = 0.0;
    bool pass = false;
};

// Stress every operator-norm and growth inequality over random fields.
std::vector<BoundCell> bound_suite(int trials, std::uint64_t seed);

struct DependenceReport {
    bool hypotheses_ok = false;
    SmallnessReport smallness_a, smallness_b;
    double data_distance = 0.0;     // PM^0 distance of the initial data
    double solution_distance = 0.0; // ||v1-v2||_B + ||m1-m2||_PM
    double ratio = 0.0;             // 0 when the data coincide
    SolveReport solve_a, solve_b;
};

// Solves the coupled system from two initial measures and compares the
// solution distance against four times the data distance.
DependenceReport continuous_dependence(const ProblemConfig& cfg, const MeasureSpec& m0_a,
                                       const MeasureSpec& m0_b);

struct WeakStarCell {
    double eps = 0.0;
    std::string phi_name;
    double probe_time = 0.0;
    double pairing_error = 0.0; // |<m_eps - m_0, phi>| at the probe time
};

struct WeakStarStep {
    double eps = 0.0;
    double data_distance = 0.0; // PM^0 distance of the data, wide mode set
    double v_sup_error = 0.0;   // sup over grid points, times, components
    double max_pairing_error = 0.0;
};

struct WeakStarReport {
    bool hypotheses_ok = false;
    SmallnessReport smallness;
    std::vector<WeakStarStep> steps;
    std::vector<WeakStarCell> cells;
};

// Initial Diracs at distance eps from the origin against the Dirac at the
// origin: solution pairings and value functions converge even though the
// PM^0 data distance does not.
WeakStarReport weak_star(const ProblemConfig& cfg, const std::vector<double>& eps_seq,
                         const std::vector<std::pair<std::string, SpectralField>>& phis,
                         const std::vector<double>& probe_times, int dist_trunc = 64);

struct OracleResult {
    SpaceTimeVectorField v;
    SpaceTimeField m;
    int sweeps = 0;
    bool converged = false;
};

// Independent reference solver: alternating forward (m) and backward (v)
// time marches with trapezoid quadrature of the full kernel-times-integrand
// product, repeated until the sweep-to-sweep change drops below tol.
OracleResult oracle_time_march(const ProblemConfig& cfg);

struct OracleComparison {
    double rel_diff_v = 0.0; // sup over (k, t, component), relative
    double rel_diff_m = 0.0;
    int picard_iterations = 0;
    int oracle_sweeps = 0;
    bool ok = false;
};

OracleComparison oracle_compare(const ProblemConfig& cfg, double rel_tol = 1e-4);

} // namespace mfg
