#include "mfg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

namespace mfg {

namespace {

using Rng = std::mt19937_64;

SpectralField random_spatial(Rng& rng, int dim, int trunc)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SpectralField f(dim, trunc, false);
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = Complex{u(rng), u(rng)};
    return f;
}

SpaceTimeField random_st(Rng& rng, int dim, int trunc, int nt, double horizon)
{
    SpaceTimeField f(dim, trunc, nt, horizon, false);
    for (int i = 0; i <= nt; ++i)
        f.slice(i) = random_spatial(rng, dim, trunc);
    return f;
}

SpaceTimeVectorField random_st_vector(Rng& rng, int dim, int trunc, int nt,
                                      double horizon)
{
    SpaceTimeVectorField f;
    for (int n = 0; n < dim; ++n)
        f.comp.push_back(random_st(rng, dim, trunc, nt, horizon));
    return f;
}

void rescale(SpaceTimeField& f, double factor)
{
    f *= factor;
}

void rescale(SpaceTimeVectorField& f, double factor)
{
    for (auto& c : f.comp)
        c *= factor;
}

// sup over slices and modes of the coefficient magnitude
double coeff_sup(const SpaceTimeField& f)
{
    double s = 0.0;
    for (int i = 0; i <= f.nt(); ++i)
        for (std::size_t j = 0; j < f.slice(i).size(); ++j)
            s = std::max(s, std::abs(f.slice(i)[j]));
    return s;
}

double coeff_sup(const SpaceTimeVectorField& f)
{
    double s = 0.0;
    for (const auto& c : f.comp)
        s = std::max(s, coeff_sup(c));
    return s;
}

constexpr double kAlgebraSlack = 1.0 + 1e-12;

void run_cell(std::vector<BoundCell>& cells, const std::string& name, int dim, int trunc,
              double alpha, int trials, double limit, Rng& rng,
              const std::function<double(Rng&)>& one_trial)
{
    BoundCell cell;
    cell.name = name;
    cell.dim = dim;
    cell.trunc = trunc;
    cell.alpha = alpha;
    cell.trials = trials;
    cell.limit = limit;
    for (int t = 0; t < trials; ++t)
        cell.worst_ratio = std::max(cell.worst_ratio, one_trial(rng));
    cell.pass = cell.worst_ratio <= limit;
    cells.push_back(std::move(cell));
}

} // namespace

std::vector<BoundCell> bound_suite(int trials, std::uint64_t seed)
{
    if (trials < 1)
        throw std::invalid_argument("bound_suite: trials must be >= 1");
    Rng rng(seed);
    std::vector<BoundCell> cells;
    const int nt = 16;
    const double horizon = 1.0;

    for (int dim : {1, 2}) {
        for (int trunc : {4, 8}) {
            for (double alpha : {0.25, 0.5, 0.75}) {
                const double amp = 1.0 / (1.0 - alpha);
                const double beta = alpha * horizon;
                run_cell(cells, "i-plus", dim, trunc, alpha, trials, 1.05 * amp, rng,
                         [&](Rng& r) {
                             const SpaceTimeField mu = random_st(r, dim, trunc, nt, horizon);
                             const SpaceTimeVectorField h
                                 = random_st_vector(r, dim, trunc, nt, horizon);
                             const double denom = st_norm_b(h, beta)
                                 * st_norm_pm_alpha(mu, alpha);
                             return st_norm_pm_alpha(i_plus(mu, h), alpha) / denom;
                         });
            }
        }
    }

    for (int dim : {1, 2}) {
        for (int trunc : {4, 8}) {
            const double alpha = 0.5;
            const double beta = alpha * horizon;
            run_cell(cells, "i-minus", dim, trunc, alpha, trials, 1.05 * dim, rng,
                     [&](Rng& r) {
                         const SpaceTimeField h = random_st(r, dim, trunc, nt, horizon);
                         return st_norm_b(i_minus(h), beta) / st_norm_b(h, beta);
                     });
        }
    }

    for (int dim : {1, 2}) {
        for (double beta : {0.0, 0.7}) {
            const int trunc = 6;
            run_cell(cells, "algebra-b", dim, trunc, beta, trials, kAlgebraSlack, rng,
                     [&](Rng& r) {
                         const SpectralField f = random_spatial(r, dim, trunc);
                         const SpectralField g = random_spatial(r, dim, trunc);
                         return norm_b(convolve(f, g), beta)
                             / (norm_b(f, beta) * norm_b(g, beta));
                     });
            run_cell(cells, "product-b-pm", dim, trunc, beta, trials, kAlgebraSlack, rng,
                     [&](Rng& r) {
                         const SpectralField f = random_spatial(r, dim, trunc);
                         const SpectralField g = random_spatial(r, dim, trunc);
                         return norm_pm(convolve(f, g), beta)
                             / (norm_b(f, beta) * norm_pm(g, beta));
                     });
        }
    }

    run_cell(cells, "pairing", 1, 8, 0.0, trials, kAlgebraSlack, rng, [&](Rng& r) {
        const SpectralField f = random_spatial(r, 1, 8);
        const SpectralField m = random_spatial(r, 1, 8);
        SpaceTimeField fs(1, 8, 1, 1.0, false), ms(1, 8, 1, 1.0, false);
        fs.slice(0) = f;
        fs.slice(1) = f;
        ms.slice(0) = m;
        ms.slice(1) = m;
        const Complex a = pairing_A(fs, ms)[0];
        return std::abs(a) / (norm_b(f, 0.0) * norm_pm(m, 0.0));
    });

    for (const char* name : {"example-quartic", "example-quadratic"}) {
        for (int dim : {1, 2}) {
            const HamiltonianSpec spec = HamiltonianSpec::by_name(name, dim);
            const GrowthConstants gc = growth_constants(spec);
            const double alpha = 0.5;
            const double beta = alpha * horizon;
            const int trunc = 4;
            auto make_pair_fields = [&](Rng& r, double rho1, double rho2,
                                        SpaceTimeVectorField& v, SpaceTimeField& m) {
                v = random_st_vector(r, dim, trunc, nt, horizon);
                m = random_st(r, dim, trunc, nt, horizon);
                std::uniform_real_distribution<double> u(0.1, 1.0);
                rescale(v, rho1 * u(r) / st_norm_b(v, beta));
                rescale(m, rho2 * u(r) / st_norm_pm_alpha(m, alpha));
            };
            run_cell(cells, std::string("growth-h1-") + name, dim, trunc, alpha, trials,
                     kAlgebraSlack, rng, [&](Rng& r) {
                         SpaceTimeVectorField v;
                         SpaceTimeField m;
                         make_pair_fields(r, 2.0, 2.0, v, m);
                         const double nv = st_norm_b(v, beta);
                         const double nm = st_norm_pm_alpha(m, alpha);
                         const double bound = gc.f1.c * gc.g1.c
                             * std::pow(nv, gc.f1.p + gc.g1.p) * nm;
                         return st_norm_b(eval_H1(spec, v, m), beta) / bound;
                     });
            run_cell(cells, std::string("growth-h2-") + name, dim, trunc, alpha, trials,
                     kAlgebraSlack, rng, [&](Rng& r) {
                         SpaceTimeVectorField v;
                         SpaceTimeField m;
                         make_pair_fields(r, 2.0, 2.0, v, m);
                         const double nv = st_norm_b(v, beta);
                         const double nm = st_norm_pm_alpha(m, alpha);
                         const double bound = gc.f2.c * gc.g2.c
                             * std::pow(nv, gc.f2.p + gc.g2.p) * nm;
                         return st_norm_b(eval_H2(spec, v, m), beta) / bound;
                     });
            run_cell(cells, std::string("lipschitz-h1-") + name, dim, trunc, alpha,
                     trials, kAlgebraSlack, rng, [&](Rng& r) {
                         SpaceTimeVectorField v1, v2;
                         SpaceTimeField m1, m2;
                         make_pair_fields(r, 1.0, 1.0, v1, m1);
                         make_pair_fields(r, 1.0, 1.0, v2, m2);
                         const auto [l1, l2] = lipschitz_bound(spec, 1.0, 1.0);
                         const double dist = st_norm_b(v1 - v2, beta)
                             + st_norm_pm_alpha(m1 - m2, alpha);
                         const double obs = st_norm_b(
                             eval_H1(spec, v1, m1) - eval_H1(spec, v2, m2), beta);
                         return obs / (l1 * dist);
                     });
            run_cell(cells, std::string("lipschitz-h2-") + name, dim, trunc, alpha,
                     trials, kAlgebraSlack, rng, [&](Rng& r) {
                         SpaceTimeVectorField v1, v2;
                         SpaceTimeField m1, m2;
                         make_pair_fields(r, 1.0, 1.0, v1, m1);
                         make_pair_fields(r, 1.0, 1.0, v2, m2);
                         const auto [l1, l2] = lipschitz_bound(spec, 1.0, 1.0);
                         const double dist = st_norm_b(v1 - v2, beta)
                             + st_norm_pm_alpha(m1 - m2, alpha);
                         const double obs = st_norm_b(
                             eval_H2(spec, v1, m1) - eval_H2(spec, v2, m2), beta);
                         return obs / (l2 * dist);
                     });
        }
    }
    return cells;
}

DependenceReport continuous_dependence(const ProblemConfig& cfg, const MeasureSpec& m0_a,
                                       const MeasureSpec& m0_b)
{
    ProblemConfig cfg_a = cfg;
    cfg_a.m0 = m0_a;
    ProblemConfig cfg_b = cfg;
    cfg_b.m0 = m0_b;

    DependenceReport rep;
    rep.smallness_a = smallness_check(cfg_a);
    rep.smallness_b = smallness_check(cfg_b);
    rep.hypotheses_ok = rep.smallness_a.pass && rep.smallness_a.dependence_ok
        && rep.smallness_b.pass && rep.smallness_b.dependence_ok;
    if (!rep.hypotheses_ok)
        return rep;

    rep.solve_a = picard_solve(cfg_a);
    rep.solve_b = picard_solve(cfg_b);
    rep.data_distance = pm0_distance(realize(m0_a, cfg.dim, cfg.trunc),
                                     realize(m0_b, cfg.dim, cfg.trunc));
    rep.solution_distance
        = st_norm_b(rep.solve_a.v - rep.solve_b.v, cfg.beta())
        + st_norm_pm_alpha(rep.solve_a.m - rep.solve_b.m, cfg.alpha);
    rep.ratio = rep.data_distance > 0.0 ? rep.solution_distance / rep.data_distance : 0.0;
    return rep;
}

WeakStarReport weak_star(const ProblemConfig& cfg, const std::vector<double>& eps_seq,
                         const std::vector<std::pair<std::string, SpectralField>>& phis,
                         const std::vector<double>& probe_times, int dist_trunc)
{
    WeakStarReport rep;

    MeasureSpec origin;
    origin.kind = MeasureSpec::Kind::dirac;
    origin.locations = {{0.0, 0.0, 0.0}};
    origin.weights = {1.0};

    ProblemConfig base = cfg;
    base.m0 = origin;
    rep.smallness = smallness_check(base);
    rep.hypotheses_ok = rep.smallness.pass && rep.smallness.dependence_ok;
    if (!rep.hypotheses_ok)
        return rep;

    const SolveReport limit_solve = picard_solve(base);

    std::vector<int> probe_idx;
    for (double t : probe_times)
        probe_idx.push_back(static_cast<int>(std::lround(t / base.horizon * base.nt)));

    const int grid = 64;
    std::vector<std::array<double, 3>> points;
    if (cfg.dim == 1) {
        for (int i = 0; i < grid; ++i)
            points.push_back({2.0 * M_PI * i / grid, 0.0, 0.0});
    } else {
        for (int i = 0; i < grid; ++i)
            for (int j = 0; j < grid; ++j)
                points.push_back({2.0 * M_PI * i / grid, 2.0 * M_PI * j / grid, 0.0});
    }

    for (double eps : eps_seq) {
        MeasureSpec shifted = origin;
        shifted.locations[0][0] = eps;
        ProblemConfig pert = base;
        pert.m0 = shifted;
        const SolveReport s = picard_solve(pert);

        WeakStarStep step;
        step.eps = eps;
        step.data_distance = pm0_distance(realize(origin, cfg.dim, dist_trunc),
                                          realize(shifted, cfg.dim, dist_trunc));

        for (std::size_t n = 0; n < s.v.comp.size(); ++n) {
            const SpaceTimeField diff
                = s.v.comp[n] - limit_solve.v.comp[n];
            for (int i = 0; i <= diff.nt(); ++i)
                for (const auto& x : points)
                    step.v_sup_error = std::max(
                        step.v_sup_error,
                        std::abs(evaluate(diff.slice(i),
                                          std::span<const double>(
                                              x.data(), static_cast<std::size_t>(cfg.dim)))));
        }

        for (std::size_t pi = 0; pi < probe_idx.size(); ++pi) {
            const int ti = probe_idx[pi];
            const SpectralField m_diff = s.m.slice(ti) - limit_solve.m.slice(ti);
            for (const auto& [name, phi] : phis) {
                WeakStarCell cell;
                cell.eps = eps;
                cell.phi_name = name;
                cell.probe_time = base.horizon * ti / base.nt;
                cell.pairing_error = std::abs(pair_with_test(m_diff, phi));
                step.max_pairing_error = std::max(step.max_pairing_error,
                                                  cell.pairing_error);
                rep.cells.push_back(std::move(cell));
            }
        }
        rep.steps.push_back(step);
    }
    return rep;
}

OracleResult oracle_time_march(const ProblemConfig& cfg)
{
    cfg.validate();
    const SpectralField m0f = realize(cfg.m0, cfg.dim, cfg.trunc);
    const int nt = cfg.nt;
    const int dim = cfg.dim;
    const double h = cfg.horizon / nt;

    OracleResult res;
    {
        auto [nu0, mu0] = ball_center(cfg);
        res.v = std::move(nu0);
        res.m = std::move(mu0);
    }

    const std::size_t nmodes = m0f.size();

    // div(m H2(v, m))^ coefficients at one time slice
    auto u_slice = [&](const SpectralField& m_i, const SpaceTimeVectorField& g2v,
                       const SpaceTimeField& f2v, int i) {
        SpectralField u(dim, cfg.trunc, false);
        Complex a{0.0, 0.0};
        for (std::size_t j = 0; j < nmodes; ++j) {
            Mode neg = f2v.slice(i).mode(j);
            for (auto& c : neg)
                c = -c;
            a += f2v.slice(i)[j] * m_i.at(neg);
        }
        for (int n = 0; n < dim; ++n) {
            SpectralField h2n = g2v.comp[static_cast<std::size_t>(n)].slice(i);
            h2n *= a;
            const SpectralField w = convolve(m_i, h2n);
            for (std::size_t j = 0; j < nmodes; ++j) {
                const Mode k = w.mode(j);
                u[j] += Complex{0.0,
                                static_cast<double>(k[static_cast<std::size_t>(n)])}
                    * w[j];
            }
        }
        return u;
    };

    const int max_sweeps = 400;
    for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
        const SpaceTimeField f2v = eval_poly(cfg.hamiltonian.f2, res.v);
        const SpaceTimeVectorField g2v = eval_poly_vector(cfg.hamiltonian.g2, res.v);

        // forward trapezoid march for m; predictor from the previous sweep,
        // one corrector pass per step
        SpaceTimeField m_new(dim, cfg.trunc, nt, cfg.horizon, m0f.real_valued());
        m_new.slice(0) = m0f;
        std::vector<Complex> acc(nmodes, Complex{0.0, 0.0});
        SpectralField u_prev = u_slice(m_new.slice(0), g2v, f2v, 0);
        for (int i = 1; i <= nt; ++i) {
            auto assemble = [&](const SpectralField& u_cur, SpectralField& out) {
                for (std::size_t j = 0; j < nmodes; ++j) {
                    const double ak = mode_abs(out.mode(j), dim);
                    if (ak == 0.0) {
                        out[j] = m0f[j];
                        continue;
                    }
                    const double decay = std::exp(-ak * ak * h);
                    const Complex integral = decay * acc[j]
                        + 0.5 * h * (decay * u_prev[j] + u_cur[j]);
                    out[j] = std::exp(-ak * ak * m_new.time(i)) * m0f[j] + integral;
                }
            };
            SpectralField u_cur = u_slice(res.m.slice(i), g2v, f2v, i);
            assemble(u_cur, m_new.slice(i));
            u_cur = u_slice(m_new.slice(i), g2v, f2v, i);
            assemble(u_cur, m_new.slice(i));
            for (std::size_t j = 0; j < nmodes; ++j) {
                const double ak = mode_abs(m_new.slice(i).mode(j), dim);
                if (ak == 0.0)
                    continue;
                const double decay = std::exp(-ak * ak * h);
                acc[j] = decay * acc[j] + 0.5 * h * (decay * u_prev[j] + u_cur[j]);
            }
            u_prev = std::move(u_cur);
        }

        // backward trapezoid march for v; H1 lags one sweep in v
        const SpaceTimeField h1 = eval_H1(cfg.hamiltonian, res.v, m_new);
        const VectorField gp = grad_payoff(cfg.payoff, m_new.slice(nt));
        SpaceTimeVectorField v_new;
        v_new.comp.assign(static_cast<std::size_t>(dim),
                          SpaceTimeField(dim, cfg.trunc, nt, cfg.horizon,
                                         h1.slice(0).real_valued()));
        std::vector<Complex> back(nmodes, Complex{0.0, 0.0});
        for (int i = nt; i >= 0; --i) {
            if (i < nt) {
                for (std::size_t j = 0; j < nmodes; ++j) {
                    const double ak = mode_abs(h1.slice(0).mode(j), dim);
                    const double decay = std::exp(-ak * ak * h);
                    back[j] = decay * back[j]
                        + 0.5 * h * (h1.slice(i)[j] + decay * h1.slice(i + 1)[j]);
                }
            }
            for (int n = 0; n < dim; ++n) {
                SpectralField& out = v_new.comp[static_cast<std::size_t>(n)].slice(i);
                const SpectralField head = heat_semigroup(
                    gp.comp[static_cast<std::size_t>(n)],
                    cfg.horizon - v_new.comp[0].time(i));
                for (std::size_t j = 0; j < nmodes; ++j) {
                    const Mode k = out.mode(j);
                    out[j] = head[j]
                        - Complex{0.0,
                                  static_cast<double>(k[static_cast<std::size_t>(n)])}
                        * back[j];
                }
            }
        }

        const double change = st_norm_b(v_new - res.v, cfg.beta())
            + st_norm_pm_alpha(m_new - res.m, cfg.alpha);
        res.v = std::move(v_new);
        res.m = std::move(m_new);
        res.sweeps = sweep;
        if (change < cfg.tol) {
            res.converged = true;
            break;
        }
    }
    return res;
}

OracleComparison oracle_compare(const ProblemConfig& cfg, double rel_tol)
{
    const SolveReport picard = picard_solve(cfg);
    const OracleResult oracle = oracle_time_march(cfg);

    OracleComparison cmp;
    cmp.picard_iterations = picard.iterations;
    cmp.oracle_sweeps = oracle.sweeps;
    const double ref_m = coeff_sup(picard.m);
    const double ref_v = coeff_sup(picard.v);
    cmp.rel_diff_m = coeff_sup(picard.m - oracle.m) / ref_m;
    cmp.rel_diff_v = ref_v > 0.0 ? coeff_sup(picard.v - oracle.v) / ref_v : 0.0;
    cmp.ok = picard.converged && oracle.converged && cmp.rel_diff_m <= rel_tol
        && cmp.rel_diff_v <= rel_tol;
    return cmp;
}

} // namespace mfg
