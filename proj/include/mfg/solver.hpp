#pragma once

#include "mfg/duhamel.hpp"
#include "mfg/hamiltonian.hpp"
#include "mfg/measures.hpp"
#include "mfg/payoff.hpp"
#include "mfg/spectral.hpp"

#include <string>
#include <vector>

namespace mfg {

struct ProblemConfig {
    int dim = 1;
    int trunc = 16;
    int nt = 128;
    double horizon = 1.0;
    double alpha = 0.5;
    MeasureSpec m0;
    HamiltonianSpec hamiltonian;
    PayoffSpec payoff;
    double tol = 1e-10;
    int max_iter = 200;
    // which Upsilon the contraction verdict quotes: "tilde" (conservative) or "plain"
    std::string upsilon_choice = "tilde";

    double beta() const { return alpha * horizon; }
    void validate() const;
};

// Evaluation of every constant in the self-map and contraction estimates of
// the fixed-point proof, with the discrete (truncated) norms.
struct SmallnessReport {
    double r0 = 0.0; // ||m0||_{PM^0}
    double r1 = 0.0; // norm of the ball center's v-part
    double upsilon = 0.0;
    double upsilon_tilde = 0.0;

    // self-map terms and their budgets
    double t1_payoff_term = 0.0;  // vs r1/4
    double t1_iminus_term = 0.0;  // vs r1/4
    double t2_selfmap_term = 0.0; // vs r1/2

    // contraction/Lipschitz brackets; each must be <= 1/4 for the
    // continuous-dependence theorem, and their sum < 1 for contraction
    double lip_payoff = 0.0;
    double lip_iminus = 0.0;
    double lip_iplus = 0.0;
    double contraction_constant = 0.0;

    bool self_map_ok = false;
    bool contraction_ok = false;
    bool dependence_ok = false; // brackets each <= 1/4
    bool pass = false;          // self-map && contraction
    std::string route;          // "small-payoff" or "small-hamiltonian"
};

SmallnessReport smallness_check(const ProblemConfig& cfg);

// Largest delta_g for which smallness_check (including the dependence
// brackets) passes, found by bisection; monotone in delta_g.
double max_passing_delta_g(const ProblemConfig& cfg);

// Ball center (nu0, mu0) = (e^{Delta(T-t)} grad G(e^{Delta T} m0), e^{Delta t} m0).
std::pair<SpaceTimeVectorField, SpaceTimeField> ball_center(const ProblemConfig& cfg);

SpaceTimeVectorField apply_T1(const SpaceTimeVectorField& nu, const SpaceTimeField& mu,
                              const ProblemConfig& cfg);
SpaceTimeField apply_T2(const SpaceTimeVectorField& nu, const SpaceTimeField& mu,
                        const ProblemConfig& cfg);

struct SolveReport {
    SpaceTimeVectorField v;
    SpaceTimeField m;
    int iterations = 0;
    bool converged = false;
    bool diverged = false;
    std::vector<double> update_norms;
    std::vector<double> update_ratios;
    double residual_v = 0.0;
    double residual_m = 0.0;
    SmallnessReport smallness;
};

SolveReport picard_solve(const ProblemConfig& cfg);
SolveReport picard_solve_from(const ProblemConfig& cfg, SpaceTimeVectorField nu,
                              SpaceTimeField mu);

// (||v - T1(v,m)||_{(B_{aT})^d}, ||m - T2(v,m)||_{PM^a})
std::pair<double, double> residual(const SpaceTimeVectorField& v, const SpaceTimeField& m,
                                   const ProblemConfig& cfg);

} // namespace mfg
