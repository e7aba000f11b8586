#include "mfg/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace mfg {

void ProblemConfig::validate() const
{
    if (dim < 1 || dim > 3)
        throw std::invalid_argument("ProblemConfig: d must be 1, 2, or 3");
    if (trunc < 1)
        throw std::invalid_argument("ProblemConfig: K must be >= 1");
    if (nt < 1)
        throw std::invalid_argument("ProblemConfig: N_t must be >= 1");
    if (horizon <= 0.0)
        throw std::invalid_argument("ProblemConfig: T must be positive");
    if (alpha < 0.0 || alpha >= 1.0)
        throw std::invalid_argument("ProblemConfig: alpha must satisfy 0 <= alpha < 1");
    if (tol <= 0.0)
        throw std::invalid_argument("ProblemConfig: tol must be positive");
    if (max_iter < 1)
        throw std::invalid_argument("ProblemConfig: max_iter must be >= 1");
    if (upsilon_choice != "tilde" && upsilon_choice != "plain")
        throw std::invalid_argument("ProblemConfig: upsilon_choice must be tilde or plain");
    m0.validate(dim);
    hamiltonian.validate(dim);
    payoff.validate();
}

namespace {

// e^{Delta(T-t)} applied per slice to a spatial vector field
SpaceTimeVectorField semigroup_backward(const VectorField& g, int nt, double horizon)
{
    SpaceTimeVectorField out;
    for (const auto& comp : g.comp) {
        SpaceTimeField c(comp.dim(), comp.trunc(), nt, horizon, comp.real_valued());
        for (int i = 0; i <= nt; ++i)
            c.slice(i) = heat_semigroup(comp, horizon - c.time(i));
        out.comp.push_back(std::move(c));
    }
    return out;
}

SpaceTimeField semigroup_forward(const SpectralField& m0, int nt, double horizon)
{
    SpaceTimeField out(m0.dim(), m0.trunc(), nt, horizon, m0.real_valued());
    for (int i = 0; i <= nt; ++i)
        out.slice(i) = heat_semigroup(m0, out.time(i));
    return out;
}

struct PicardStep {
    SpaceTimeVectorField nu;
    SpaceTimeField mu;
};

// Both components of T = (T1, T2) from one evaluation of H2 and I+.
PicardStep picard_step(const SpaceTimeVectorField& nu, const SpaceTimeField& mu,
                       const SpectralField& m0f, const ProblemConfig& cfg)
{
    const SpaceTimeVectorField h2 = eval_H2(cfg.hamiltonian, nu, mu);
    const SpaceTimeField ip = i_plus(mu, h2);

    PicardStep next{SpaceTimeVectorField{}, semigroup_forward(m0f, cfg.nt, cfg.horizon)};
    next.mu += ip;

    const SpectralField terminal
        = heat_semigroup(m0f, cfg.horizon) + ip.slice(cfg.nt);
    next.nu = semigroup_backward(grad_payoff(cfg.payoff, terminal), cfg.nt, cfg.horizon);

    const SpaceTimeVectorField im = i_minus(eval_H1(cfg.hamiltonian, nu, mu));
    for (int n = 0; n < cfg.dim; ++n)
        next.nu.comp[static_cast<std::size_t>(n)] += im.comp[static_cast<std::size_t>(n)];
    return next;
}

double pow00(double base, double exp)
{
    if (base == 0.0 && exp == 0.0)
        return 1.0;
    return std::pow(base, exp);
}

SmallnessReport smallness_from_constants(double r0, double r1, const PayoffConstants& pc,
                                         const GrowthConstants& gc, double alpha, int dim,
                                         const std::string& upsilon_choice)
{
    SmallnessReport rep;
    rep.r0 = r0;
    rep.r1 = r1;
    const double amp = 1.0 / (1.0 - alpha);
    const double center = pc.c_g * r0 * pc.psi1(r0);
    const double core = (r0 + center) * (r0 + center) * gc.f2.c * gc.g2.c
        * pow00(2.0 * center, gc.f2.p + gc.g2.p);
    rep.upsilon = pc.psi2(2.0 * r0 + amp * core);
    rep.upsilon_tilde = pc.psi2(2.0 * r0 + 2.0 * amp * core);

    const double x = 2.0 * r1;      // bound on ||nu|| in the ball
    const double rs = r0 + r1;      // bound on ||mu||

    rep.t1_payoff_term = pc.c_g_tilde * gc.g2.c * gc.f2.c * rep.upsilon * amp
        * pow00(x, gc.g2.p + gc.f2.p) * rs * rs;
    rep.t1_iminus_term = dim * gc.f1.c * gc.g1.c * pow00(x, gc.f1.p + gc.g1.p) * rs;
    rep.t2_selfmap_term = amp * gc.f2.c * gc.g2.c * pow00(x, gc.f2.p + gc.g2.p) * rs * rs;

    const double h2_bracket = gc.f2.c * gc.g2.c * pow00(x, gc.f2.p + gc.g2.p)
        + gc.f2.c * gc.g2.c_tilde * pow00(x, gc.f2.p + gc.g2.p_tilde) * rs
        + gc.f2.c_tilde * gc.g2.c * pow00(x, gc.f2.p_tilde + gc.g2.p) * rs;
    rep.lip_iplus = 2.0 * amp * rs * h2_bracket;
    const double ups_used
        = upsilon_choice == "plain" ? rep.upsilon : rep.upsilon_tilde;
    rep.lip_payoff = pc.c_g_tilde * ups_used * rep.lip_iplus;
    rep.lip_iminus = dim
        * (2.0 * gc.f1.c * gc.g1.c_tilde * pow00(x, gc.f1.p + gc.g1.p_tilde) * rs
           + 2.0 * gc.g1.c * gc.f1.c_tilde * pow00(x, gc.g1.p + gc.f1.p_tilde) * rs
           + gc.f1.c * gc.g1.c * pow00(x, gc.f1.p + gc.g1.p));
    rep.contraction_constant = rep.lip_payoff + rep.lip_iminus + rep.lip_iplus;

    rep.self_map_ok = rep.t1_payoff_term <= r1 / 4.0 && rep.t1_iminus_term <= r1 / 4.0
        && rep.t2_selfmap_term <= r1 / 2.0;
    rep.contraction_ok = rep.contraction_constant < 1.0;
    rep.dependence_ok = rep.lip_payoff <= 0.25 && rep.lip_iminus <= 0.25
        && rep.lip_iplus <= 0.25;
    rep.pass = rep.self_map_ok && rep.contraction_ok;

    const bool superlinear = gc.f1.p + gc.g1.p > 1.0 && gc.f2.p + gc.g2.p > 1.0
        && gc.f1.p + gc.g1.p_tilde > 0.0 && gc.f1.p_tilde + gc.g1.p > 0.0
        && gc.f2.p + gc.g2.p_tilde > 0.0 && gc.f2.p_tilde + gc.g2.p > 0.0;
    rep.route = superlinear ? "small-payoff" : "small-hamiltonian";
    return rep;
}

} // namespace

std::pair<SpaceTimeVectorField, SpaceTimeField> ball_center(const ProblemConfig& cfg)
{
    const SpectralField m0f = realize(cfg.m0, cfg.dim, cfg.trunc);
    SpaceTimeField mu0 = semigroup_forward(m0f, cfg.nt, cfg.horizon);
    const SpectralField terminal = heat_semigroup(m0f, cfg.horizon);
    SpaceTimeVectorField nu0
        = semigroup_backward(grad_payoff(cfg.payoff, terminal), cfg.nt, cfg.horizon);
    return {std::move(nu0), std::move(mu0)};
}

SpaceTimeVectorField apply_T1(const SpaceTimeVectorField& nu, const SpaceTimeField& mu,
                              const ProblemConfig& cfg)
{
    const SpectralField m0f = realize(cfg.m0, cfg.dim, cfg.trunc);
    return picard_step(nu, mu, m0f, cfg).nu;
}

SpaceTimeField apply_T2(const SpaceTimeVectorField& nu, const SpaceTimeField& mu,
                        const ProblemConfig& cfg)
{
    const SpectralField m0f = realize(cfg.m0, cfg.dim, cfg.trunc);
    return picard_step(nu, mu, m0f, cfg).mu;
}

SmallnessReport smallness_check(const ProblemConfig& cfg)
{
    cfg.validate();
    const SpectralField m0f = realize(cfg.m0, cfg.dim, cfg.trunc);
    const double r0 = norm_pm(m0f, 0.0);
    const auto [nu0, mu0] = ball_center(cfg);
    const double r1 = st_norm_b(nu0, cfg.beta());
    const PayoffConstants pc = payoff_constants(cfg.payoff, cfg.dim, cfg.trunc, cfg.beta());
    return smallness_from_constants(r0, r1, pc, growth_constants(cfg.hamiltonian),
                                    cfg.alpha, cfg.dim, cfg.upsilon_choice);
}

double max_passing_delta_g(const ProblemConfig& cfg)
{
    ProblemConfig unit = cfg;
    unit.payoff.delta_g = 1.0;
    const SpectralField m0f = realize(unit.m0, unit.dim, unit.trunc);
    const double r0 = norm_pm(m0f, 0.0);
    const auto [nu0, mu0] = ball_center(unit);
    const double r1_unit = st_norm_b(nu0, unit.beta());
    const PayoffConstants pc_unit
        = payoff_constants(unit.payoff, unit.dim, unit.trunc, unit.beta());
    const GrowthConstants gc = growth_constants(unit.hamiltonian);

    // r1, c_G and c~_G all scale linearly in delta_g
    auto passes = [&](double delta) {
        PayoffConstants pc = pc_unit;
        pc.c_g *= delta;
        pc.c_g_tilde *= delta;
        pc.c_g_extended *= delta;
        const SmallnessReport rep = smallness_from_constants(
            r0, delta * r1_unit, pc, gc, unit.alpha, unit.dim, unit.upsilon_choice);
        return rep.pass && rep.dependence_ok;
    };

    double lo = 0.0;
    double hi = 1.0;
    int grow = 0;
    while (passes(hi) && grow++ < 60) {
        lo = hi;
        hi *= 2.0;
    }
    if (grow > 60)
        return lo;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (passes(mid) ? lo : hi) = mid;
    }
    return lo;
}

SolveReport picard_solve_from(const ProblemConfig& cfg, SpaceTimeVectorField nu,
                              SpaceTimeField mu)
{
    cfg.validate();
    const SpectralField m0f = realize(cfg.m0, cfg.dim, cfg.trunc);

    SolveReport rep;
    rep.smallness = smallness_check(cfg);
    const double ball_cap = 10.0 * (rep.smallness.r0 + rep.smallness.r1);

    for (int it = 1; it <= cfg.max_iter; ++it) {
        PicardStep next = picard_step(nu, mu, m0f, cfg);
        const double update = st_norm_b(next.nu - nu, cfg.beta())
            + st_norm_pm_alpha(next.mu - mu, cfg.alpha);
        rep.update_norms.push_back(update);
        if (rep.update_norms.size() >= 2) {
            const double prev = rep.update_norms[rep.update_norms.size() - 2];
            if (prev > 0.0)
                rep.update_ratios.push_back(update / prev);
        }
        nu = std::move(next.nu);
        mu = std::move(next.mu);
        rep.iterations = it;

        const double size = st_norm_b(nu, cfg.beta()) + st_norm_pm_alpha(mu, cfg.alpha);
        if (size > ball_cap) {
            rep.diverged = true;
            break;
        }
        if (update < cfg.tol)
            break;
    }

    auto [rv, rm] = residual(nu, mu, cfg);
    rep.residual_v = rv;
    rep.residual_m = rm;
    rep.converged = !rep.diverged && rv <= cfg.tol && rm <= cfg.tol;
    rep.v = std::move(nu);
    rep.m = std::move(mu);
    return rep;
}

SolveReport picard_solve(const ProblemConfig& cfg)
{
    cfg.validate();
    auto [nu0, mu0] = ball_center(cfg);
    return picard_solve_from(cfg, std::move(nu0), std::move(mu0));
}

std::pair<double, double> residual(const SpaceTimeVectorField& v, const SpaceTimeField& m,
                                   const ProblemConfig& cfg)
{
    const SpectralField m0f = realize(cfg.m0, cfg.dim, cfg.trunc);
    const PicardStep mapped = picard_step(v, m, m0f, cfg);
    return {st_norm_b(mapped.nu - v, cfg.beta()),
            st_norm_pm_alpha(mapped.mu - m, cfg.alpha)};
}

} // namespace mfg
