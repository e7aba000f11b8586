#include "mfg/runner.hpp"

#include "mfg/io.hpp"
#include "mfg/verify.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mfg {

namespace {

std::ofstream open_out(const std::string& dir, const std::string& name)
{
    std::filesystem::create_directories(dir);
    const std::string path = dir + "/" + name;
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot open for writing: " + path);
    return os;
}

std::string failed_condition(const SmallnessReport& r)
{
    if (r.t1_payoff_term > r.r1 / 4.0)
        return "payoff self-map term exceeds R1/4";
    if (r.t1_iminus_term > r.r1 / 4.0)
        return "backward-integral self-map term exceeds R1/4";
    if (r.t2_selfmap_term > r.r1 / 2.0)
        return "forward-equation self-map term exceeds R1/2";
    if (!r.contraction_ok)
        return "contraction constant not below 1";
    if (!r.dependence_ok)
        return "a Lipschitz bracket exceeds 1/4";
    return "none";
}

void write_smallness(std::ostream& os, const SmallnessReport& r)
{
    os << "R0 = " << format_double(r.r0) << "\n";
    os << "R1 = " << format_double(r.r1) << "\n";
    os << "Upsilon = " << format_double(r.upsilon) << "\n";
    os << "Upsilon_tilde = " << format_double(r.upsilon_tilde) << "\n";
    os << "t1_payoff_term = " << format_double(r.t1_payoff_term) << " (budget "
       << format_double(r.r1 / 4.0) << ")\n";
    os << "t1_iminus_term = " << format_double(r.t1_iminus_term) << " (budget "
       << format_double(r.r1 / 4.0) << ")\n";
    os << "t2_selfmap_term = " << format_double(r.t2_selfmap_term) << " (budget "
       << format_double(r.r1 / 2.0) << ")\n";
    os << "lip_payoff = " << format_double(r.lip_payoff) << "\n";
    os << "lip_iminus = " << format_double(r.lip_iminus) << "\n";
    os << "lip_iplus = " << format_double(r.lip_iplus) << "\n";
    os << "contraction_constant = " << format_double(r.contraction_constant) << "\n";
    os << "self_map_ok = " << (r.self_map_ok ? "yes" : "no") << "\n";
    os << "contraction_ok = " << (r.contraction_ok ? "yes" : "no") << "\n";
    os << "dependence_ok = " << (r.dependence_ok ? "yes" : "no") << "\n";
    os << "pass = " << (r.pass ? "yes" : "no") << "\n";
    os << "route = " << r.route << "\n";
    os << "failed_condition = " << failed_condition(r) << "\n";
}

SpectralField test_function(const std::string& which, int dim, int trunc)
{
    SpectralField phi(dim, trunc, true);
    if (which == "cos_x") {
        phi.set(Mode{1, 0, 0}, Complex{0.5, 0.0});
        phi.set(Mode{-1, 0, 0}, Complex{0.5, 0.0});
    } else if (which == "sin_x") {
        phi.set(Mode{1, 0, 0}, Complex{0.0, -0.5});
        phi.set(Mode{-1, 0, 0}, Complex{0.0, 0.5});
    } else { // cos_2x
        phi.set(Mode{2, 0, 0}, Complex{0.5, 0.0});
        phi.set(Mode{-2, 0, 0}, Complex{0.5, 0.0});
    }
    return phi;
}

int cmd_solve(const FullConfig& cfg, const std::string& out_dir, std::string& message)
{
    const SolveReport rep = picard_solve(cfg.problem);
    auto os = open_out(out_dir, "solve_summary.txt");
    os << "iterations = " << rep.iterations << "\n";
    os << "converged = " << (rep.converged ? "yes" : "no") << "\n";
    os << "diverged = " << (rep.diverged ? "yes" : "no") << "\n";
    os << "residual_v = " << format_double(rep.residual_v) << "\n";
    os << "residual_m = " << format_double(rep.residual_m) << "\n";
    os << "update_norms =";
    for (double u : rep.update_norms)
        os << " " << format_double(u);
    os << "\n";
    os << "update_ratios =";
    for (double u : rep.update_ratios)
        os << " " << format_double(u);
    os << "\n";
    write_smallness(os, rep.smallness);

    write_field_file(out_dir + "/m.txt", rep.m);
    for (std::size_t n = 0; n < rep.v.comp.size(); ++n)
        write_field_file(out_dir + "/v_" + std::to_string(n + 1) + ".txt",
                         rep.v.comp[n]);
    if (!rep.converged) {
        message = rep.diverged ? "iteration left the trust ball (diverging)"
                               : "no convergence within max_iter";
        return 1;
    }
    message = "converged in " + std::to_string(rep.iterations) + " iterations";
    return 0;
}

int cmd_check_smallness(const FullConfig& cfg, const std::string& out_dir,
                        std::string& message)
{
    const SmallnessReport rep = smallness_check(cfg.problem);
    const double max_dg = max_passing_delta_g(cfg.problem);
    auto os = open_out(out_dir, "smallness.txt");
    write_smallness(os, rep);
    os << "max_passing_delta_g = " << format_double(max_dg) << "\n";
    if (!rep.pass) {
        message = "smallness check failed: " + failed_condition(rep);
        return 2;
    }
    message = "smallness check passed (route: " + rep.route + ")";
    return 0;
}

int cmd_verify_bounds(const FullConfig& cfg, const std::string& out_dir,
                      std::uint64_t seed, std::string& message)
{
    const auto cells = bound_suite(cfg.experiment.trials, seed);
    auto os = open_out(out_dir, "bounds.csv");
    os << "cell,d,K,alpha,trials,worst_ratio,limit,pass\n";
    int failures = 0;
    for (const auto& c : cells) {
        os << c.name << ',' << c.dim << ',' << c.trunc << ','
           << format_double(c.alpha) << ',' << c.trials << ','
           << format_double(c.worst_ratio) << ',' << format_double(c.limit) << ','
           << (c.pass ? "yes" : "no") << "\n";
        failures += c.pass ? 0 : 1;
    }
    if (failures > 0) {
        message = std::to_string(failures) + " bound cells failed";
        return 1;
    }
    message = "all " + std::to_string(cells.size()) + " bound cells passed";
    return 0;
}

int cmd_continuous_dependence(const FullConfig& cfg, const std::string& out_dir,
                              std::string& message)
{
    const double s = cfg.experiment.cd_weight_shift;
    MeasureSpec a1;
    a1.kind = MeasureSpec::Kind::dirac;
    a1.locations = {{0.0, 0.0, 0.0}};
    a1.weights = {1.0};
    MeasureSpec b1;
    b1.kind = MeasureSpec::Kind::dirac_sum;
    b1.locations = {{0.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};
    b1.weights = {1.0 - s, 2.0 * s};

    MeasureSpec a2;
    a2.kind = MeasureSpec::Kind::band_limited;
    a2.coeffs = {{Mode{0, 0, 0}, Complex{1.0, 0.0}},
                 {Mode{1, 0, 0}, Complex{0.25, 0.0}},
                 {Mode{-1, 0, 0}, Complex{0.25, 0.0}}};
    MeasureSpec b2 = a2;
    b2.coeffs[1].value += cfg.experiment.cd_mode_eps;
    b2.coeffs[2].value += cfg.experiment.cd_mode_eps;

    auto os = open_out(out_dir, "dependence.csv");
    os << "protocol,data_distance,solution_distance,ratio,limit,pass\n";
    const double limit = 4.0 * 1.02;
    int status = 0;
    const std::pair<const char*, std::pair<MeasureSpec, MeasureSpec>> protocols[]
        = {{"dirac-weight-shift", {a1, b1}}, {"band-limited-mode-bump", {a2, b2}}};
    for (const auto& [name, pair] : protocols) {
        const DependenceReport rep
            = continuous_dependence(cfg.problem, pair.first, pair.second);
        if (!rep.hypotheses_ok) {
            message = std::string("hypotheses unmet for protocol ") + name + ": "
                + failed_condition(!rep.smallness_a.pass
                                           || !rep.smallness_a.dependence_ok
                                       ? rep.smallness_a
                                       : rep.smallness_b);
            return 2;
        }
        const bool pass = rep.ratio <= limit;
        os << name << ',' << format_double(rep.data_distance) << ','
           << format_double(rep.solution_distance) << ',' << format_double(rep.ratio)
           << ',' << format_double(limit) << ',' << (pass ? "yes" : "no") << "\n";
        if (!pass)
            status = 1;
    }
    message = status == 0 ? "dependence ratios within 4.08" : "dependence ratio exceeded";
    return status;
}

int cmd_weak_star(const FullConfig& cfg, const std::string& out_dir,
                  std::string& message)
{
    std::vector<std::pair<std::string, SpectralField>> phis;
    for (const char* name : {"cos_x", "sin_x", "cos_2x"})
        phis.emplace_back(name, test_function(name, cfg.problem.dim, cfg.problem.trunc));
    const WeakStarReport rep
        = weak_star(cfg.problem, cfg.experiment.eps_list, phis,
                    cfg.experiment.probe_times, cfg.experiment.dist_trunc);
    if (!rep.hypotheses_ok) {
        message = "hypotheses unmet: " + failed_condition(rep.smallness);
        return 2;
    }
    auto os = open_out(out_dir, "weak_star.csv");
    os << "eps,data_distance,v_sup_error,max_pairing_error\n";
    for (const auto& st : rep.steps)
        os << format_double(st.eps) << ',' << format_double(st.data_distance) << ','
           << format_double(st.v_sup_error) << ','
           << format_double(st.max_pairing_error) << "\n";
    auto os2 = open_out(out_dir, "weak_star_pairings.csv");
    os2 << "eps,phi,t,pairing_error\n";
    for (const auto& c : rep.cells)
        os2 << format_double(c.eps) << ',' << c.phi_name << ','
            << format_double(c.probe_time) << ',' << format_double(c.pairing_error)
            << "\n";
    message = "weak-star experiment completed";
    return 0;
}

int cmd_oracle_compare(const FullConfig& cfg, const std::string& out_dir,
                       std::string& message)
{
    const OracleComparison cmp = oracle_compare(cfg.problem);
    auto os = open_out(out_dir, "oracle.txt");
    os << "rel_diff_v = " << format_double(cmp.rel_diff_v) << "\n";
    os << "rel_diff_m = " << format_double(cmp.rel_diff_m) << "\n";
    os << "picard_iterations = " << cmp.picard_iterations << "\n";
    os << "oracle_sweeps = " << cmp.oracle_sweeps << "\n";
    os << "ok = " << (cmp.ok ? "yes" : "no") << "\n";
    message = cmp.ok ? "solvers agree" : "solver disagreement or non-convergence";
    return cmp.ok ? 0 : 1;
}

} // namespace

int run_command(const FullConfig& cfg, const std::string& command,
                const std::string& out_dir, std::optional<std::uint64_t> seed_override,
                int threads, std::string& message)
{
    (void)threads; // parallelism hint only; results are identical for any value
    cfg.problem.validate();
    const std::uint64_t seed = seed_override.value_or(cfg.experiment.seed);

    if (command == "solve")
        return cmd_solve(cfg, out_dir, message);
    if (command == "check-smallness")
        return cmd_check_smallness(cfg, out_dir, message);
    if (command == "verify-bounds")
        return cmd_verify_bounds(cfg, out_dir, seed, message);
    if (command == "continuous-dependence")
        return cmd_continuous_dependence(cfg, out_dir, message);
    if (command == "weak-star")
        return cmd_weak_star(cfg, out_dir, message);
    if (command == "oracle-compare")
        return cmd_oracle_compare(cfg, out_dir, message);
    throw std::invalid_argument("unknown command: " + command);
}

} // namespace mfg
