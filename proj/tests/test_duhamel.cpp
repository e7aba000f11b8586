#include "helpers.hpp"
#include "mfg/duhamel.hpp"
#include "mfg/measures.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>

using namespace mfg;
using mfg::testing::Rng;

namespace {

// fills a space-time field from a closed-form coefficient function, for
// resolution studies where both grids must sample the same function
SpaceTimeField sample_field(int dim, int trunc, int nt, double horizon,
                            const std::function<Complex(Mode, double)>& fn)
{
    SpaceTimeField f(dim, trunc, nt, horizon, false);
    for (int i = 0; i <= nt; ++i)
        for (std::size_t j = 0; j < f.slice(i).size(); ++j)
            f.slice(i)[j] = fn(f.slice(i).mode(j), f.time(i));
    return f;
}

} // namespace

TEST_CASE("quadrature weights")
{
    for (double lambda : {1e-8, 0.5, 4.0, 100.0}) {
        for (double h : {1e-4, 0.01, 0.25}) {
            const QuadWeights w = exp_quad_weights(lambda, h);
            CHECK(w.left >= 0.0);
            CHECK(w.right >= 0.0);
            // constant integrand: one step must integrate the kernel exactly
            const double exact = -std::expm1(-lambda * h) / lambda;
            CHECK(w.left + w.right == doctest::Approx(exact).epsilon(1e-10));
        }
    }
}

TEST_CASE("i_plus closed forms")
{
    const int nt = 64;
    // mu carries mode 1, h carries the mean: the product is stationary at mode 1
    SpaceTimeField mu(1, 4, nt, 1.0, false);
    SpaceTimeVectorField h;
    SpaceTimeField hc(1, 4, nt, 1.0, false);
    const Complex w{0.7, -0.2};
    for (int i = 0; i <= nt; ++i) {
        mu.slice(i).set(Mode{1, 0, 0}, Complex{1.0, 0.0});
        hc.slice(i).set(Mode{0, 0, 0}, w);
    }
    h.comp.push_back(hc);

    const SpaceTimeField out = i_plus(mu, h);
    for (int i = 0; i <= nt; ++i) {
        const double t = out.time(i);
        const Complex expect = Complex{0.0, 1.0} * w * (1.0 - std::exp(-t));
        CHECK(std::abs(out.slice(i).at(Mode{1, 0, 0}) - expect) < 1e-13);
        // mean mode identically zero
        CHECK(std::abs(out.slice(i).at(Mode{0, 0, 0})) == 0.0);
    }
}

TEST_CASE("i_minus closed forms")
{
    const int nt = 64;
    const double horizon = 1.0;
    SpaceTimeField h(1, 6, nt, horizon, false);
    const Complex c{0.3, 0.45};
    const int k = 2;
    for (int i = 0; i <= nt; ++i)
        h.slice(i).set(Mode{k, 0, 0}, c);

    const SpaceTimeVectorField out = i_minus(h);
    for (int i = 0; i <= nt; ++i) {
        const double t = h.time(i);
        const Complex expect = -Complex{0.0, static_cast<double>(k)} * c
            * (1.0 - std::exp(-k * k * (horizon - t))) / static_cast<double>(k * k);
        CHECK(std::abs(out.comp[0].slice(i).at(Mode{k, 0, 0}) - expect) < 1e-13);
    }

    SpaceTimeField mean_only(1, 6, 8, 1.0, false);
    for (int i = 0; i <= 8; ++i)
        mean_only.slice(i).set(Mode{0, 0, 0}, Complex{2.0, 0.0});
    CHECK(st_norm_b(i_minus(mean_only), 0.5) == doctest::Approx(0.0));
}

TEST_CASE("operator norm bounds on random inputs")
{
    Rng rng(53);
    const double alpha = 0.5, horizon = 1.0;
    const double beta = alpha * horizon;
    for (int trial = 0; trial < 50; ++trial) {
        const SpaceTimeField mu = mfg::testing::random_st_field(rng, 1, 8, 16, horizon);
        const SpaceTimeVectorField h
            = mfg::testing::random_st_vector(rng, 1, 8, 16, horizon);
        CHECK(st_norm_pm_alpha(i_plus(mu, h), alpha)
              <= (1.0 / (1.0 - alpha)) * st_norm_b(h, beta)
                  * st_norm_pm_alpha(mu, alpha) * 1.05);

        const SpaceTimeField hs = mfg::testing::random_st_field(rng, 2, 4, 16, horizon);
        CHECK(st_norm_b(i_minus(hs), beta) <= 2.0 * st_norm_b(hs, beta) * 1.05);
    }
}

TEST_CASE("grid refinement is second order")
{
    auto smooth = [](Mode k, double t) {
        const double ak = k[0];
        return std::exp(Complex{0.0, 1.7 * t}) * std::cos(2.0 * t + 0.3 * ak)
            / (1.0 + ak * ak);
    };
    auto gap_at = [&](int nt) {
        const SpaceTimeField fine
            = sample_field(1, 6, 512, 1.0, smooth);
        const SpaceTimeVectorField ref = i_minus(fine);
        const SpaceTimeField coarse = sample_field(1, 6, nt, 1.0, smooth);
        const SpaceTimeVectorField approx = i_minus(coarse);
        double err = 0.0;
        for (int i = 0; i <= nt; ++i) {
            const int fi = i * (512 / nt);
            for (std::size_t j = 0; j < coarse.slice(i).size(); ++j)
                err = std::max(err,
                               std::abs(approx.comp[0].slice(i)[j]
                                        - ref.comp[0].slice(fi)[j]));
        }
        return err;
    };
    const double e32 = gap_at(32);
    const double e64 = gap_at(64);
    const double order = std::log2(e32 / e64);
    CHECK(order >= 1.8);
}

TEST_CASE("omega")
{
    MeasureSpec dirac;
    dirac.kind = MeasureSpec::Kind::dirac;
    dirac.locations = {{0.0, 0.0, 0.0}};
    dirac.weights = {1.0};
    const SpectralField m0 = realize(dirac, 1, 4);

    const int nt = 16;
    SpaceTimeField mu(1, 4, nt, 1.0, true);
    for (int i = 0; i <= nt; ++i)
        mu.slice(i) = heat_semigroup(m0, mu.time(i));
    SpaceTimeVectorField zero;
    zero.comp.push_back(SpaceTimeField(1, 4, nt, 1.0, true));

    const auto spec = HamiltonianSpec::example_quartic(1);
    const SpectralField om = omega(zero, mu, m0, spec);
    for (std::size_t j = 0; j < om.size(); ++j) {
        const double ak = mode_abs(om.mode(j), 1);
        CHECK(std::abs(om[j] - Complex{std::exp(-ak * ak), 0.0}) < 1e-13);
    }

    SUBCASE("norm inequality on random inputs")
    {
        Rng rng(61);
        const double alpha = 0.5;
        for (int trial = 0; trial < 20; ++trial) {
            const SpaceTimeField rmu
                = mfg::testing::random_st_field(rng, 1, 4, nt, 1.0);
            const SpaceTimeVectorField rnu
                = mfg::testing::random_st_vector(rng, 1, 4, nt, 1.0);
            const SpectralField om2 = omega(rnu, rmu, m0, spec);
            const double lhs = norm_pm(om2, alpha * 1.0);
            const double rhs = norm_pm(m0, 0.0)
                + (1.0 / (1.0 - alpha)) * st_norm_pm_alpha(rmu, alpha)
                    * st_norm_b(eval_H2(spec, rnu, rmu), alpha * 1.0) * 1.05;
            CHECK(lhs <= rhs);
        }
    }
}
