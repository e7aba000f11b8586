#include "helpers.hpp"
#include "mfg/payoff.hpp"

#include <doctest.h>

#include <cmath>

using namespace mfg;
using mfg::testing::Rng;

TEST_CASE("smoothing payoff symbol")
{
    PayoffSpec spec;
    spec.kind = PayoffSpec::Kind::smoothing;
    spec.gamma = 1.0;
    spec.delta_g = 0.8;

    SpectralField m(1, 4, true);
    m.set(Mode{0, 0, 0}, Complex{1.0, 0.0});
    m.set(Mode{1, 0, 0}, Complex{1.0, 0.0});
    const SpectralField g = apply_payoff(spec, m);
    CHECK(g.at(Mode{0, 0, 0}).real() == doctest::Approx(0.8));
    CHECK(g.at(Mode{1, 0, 0}).real() == doctest::Approx(0.8 * 0.5));
}

TEST_CASE("truncation payoff with n=0 keeps only the mean")
{
    PayoffSpec spec;
    spec.kind = PayoffSpec::Kind::truncation;
    spec.n = 0;
    spec.delta_g = 0.6;

    const double c = 1.3;
    SpectralField m(1, 4, true);
    m.set(Mode{0, 0, 0}, Complex{c, 0.0});
    m.set(Mode{2, 0, 0}, Complex{0.4, 0.1}); // removed by the cutoff
    m.set(Mode{-2, 0, 0}, Complex{0.4, -0.1});

    const SpectralField g = apply_payoff(spec, m);
    CHECK(std::abs(g.at(Mode{1, 0, 0}) - Complex{0.0, -0.6 * c * c / 2.0}) < 1e-14);
    CHECK(std::abs(g.at(Mode{-1, 0, 0}) - Complex{0.0, 0.6 * c * c / 2.0}) < 1e-14);
    CHECK(std::abs(g.at(Mode{0, 0, 0})) == 0.0);
    CHECK(std::abs(g.at(Mode{2, 0, 0})) == 0.0);
}

TEST_CASE("payoff gradient")
{
    PayoffSpec spec;
    spec.kind = PayoffSpec::Kind::smoothing;
    spec.gamma = 1.0;
    spec.delta_g = 1.0;

    SpectralField dirac(1, 4, true);
    for (std::size_t i = 0; i < dirac.size(); ++i)
        dirac[i] = Complex{1.0, 0.0};
    const VectorField grad = grad_payoff(spec, dirac);
    for (std::size_t i = 0; i < dirac.size(); ++i) {
        const int k = dirac.mode(i)[0];
        const double ak = std::abs(static_cast<double>(k));
        const Complex expect
            = Complex{0.0, static_cast<double>(k)} / (1.0 + ak * ak * ak);
        CHECK(std::abs(grad.comp[0][i] - expect) < 1e-14);
    }

    SUBCASE("gradient norm controlled by the b1 norm")
    {
        Rng rng(67);
        for (int trial = 0; trial < 50; ++trial) {
            const SpectralField m = mfg::testing::random_real_field(rng, 1, 6);
            const SpectralField g = apply_payoff(spec, m);
            const VectorField gr = grad_payoff(spec, m);
            CHECK(norm_b(gr.comp[0], 0.5) <= norm_b1(g, 0.5) + 1e-12);
        }
    }

    SUBCASE("zero input gives zero gradient")
    {
        PayoffSpec tr;
        tr.kind = PayoffSpec::Kind::truncation;
        tr.n = 0;
        SpectralField zero_mean(1, 4, true);
        zero_mean.set(Mode{1, 0, 0}, Complex{0.2, 0.0});
        zero_mean.set(Mode{-1, 0, 0}, Complex{0.2, 0.0});
        const VectorField gr = grad_payoff(tr, zero_mean);
        CHECK(norm_b(gr.comp[0], 0.0) == doctest::Approx(0.0));
    }
}

TEST_CASE("payoff constants")
{
    PayoffSpec spec;
    spec.kind = PayoffSpec::Kind::smoothing;
    spec.gamma = 1.0;
    spec.delta_g = 1.0;

    // finite-sum oracle: 1 + 2*(2/2) + 2*(3/9)
    const PayoffConstants c = payoff_constants(spec, 1, 2, 0.5);
    CHECK(c.c_g == doctest::Approx(1.0 + 2.0 + 2.0 / 3.0).epsilon(1e-12));
    CHECK(c.c_g_tilde == doctest::Approx(c.c_g));
    CHECK(c.psi1(7.3) == doctest::Approx(1.0));
    CHECK(c.psi2(0.0) == doctest::Approx(1.0));

    spec.delta_g = 0.5;
    const PayoffConstants h = payoff_constants(spec, 1, 2, 0.5);
    CHECK(h.c_g == doctest::Approx(0.5 * c.c_g));

    PayoffSpec tr;
    tr.kind = PayoffSpec::Kind::truncation;
    tr.n = 2;
    tr.delta_g = 0.0;
    const PayoffConstants z = payoff_constants(tr, 1, 4, 0.5);
    CHECK(z.c_g == doctest::Approx(0.0));
    CHECK(z.psi1(2.0) == doctest::Approx(2.0));
}

TEST_CASE("assumed payoff bounds hold on random inputs")
{
    Rng rng(71);
    const double beta = 0.5;
    for (int kind = 0; kind < 2; ++kind) {
        PayoffSpec spec;
        if (kind == 0) {
            spec.kind = PayoffSpec::Kind::smoothing;
            spec.gamma = 1.0;
        } else {
            spec.kind = PayoffSpec::Kind::truncation;
            spec.n = 2;
        }
        spec.delta_g = 0.7;
        const PayoffConstants pc = payoff_constants(spec, 1, 6, beta);
        for (int trial = 0; trial < 100; ++trial) {
            const SpectralField m1 = mfg::testing::random_real_field(rng, 1, 6);
            const SpectralField m2 = mfg::testing::random_real_field(rng, 1, 6);
            const double n1 = norm_pm(m1, beta);
            const double n2 = norm_pm(m2, beta);
            CHECK(norm_b1(apply_payoff(spec, m1), beta)
                  <= pc.c_g * n1 * pc.psi1(n1) + 1e-12);
            const SpectralField diff
                = apply_payoff(spec, m1) - apply_payoff(spec, m2);
            CHECK(norm_b1(diff, beta)
                  <= pc.c_g_tilde * norm_pm(m1 - m2, beta) * pc.psi2(n1 + n2)
                      + 1e-12);
        }
    }
}

TEST_CASE("smoothing payoff is linear")
{
    Rng rng(73);
    PayoffSpec spec;
    spec.kind = PayoffSpec::Kind::smoothing;
    spec.gamma = 1.5;
    spec.delta_g = 1.0;
    const SpectralField m1 = mfg::testing::random_real_field(rng, 1, 6);
    const SpectralField m2 = mfg::testing::random_real_field(rng, 1, 6);
    SpectralField combo = m1 * 0.4 + m2 * (-1.1);
    const SpectralField lhs = apply_payoff(spec, combo);
    const SpectralField rhs
        = apply_payoff(spec, m1) * 0.4 + apply_payoff(spec, m2) * (-1.1);
    for (std::size_t i = 0; i < lhs.size(); ++i)
        CHECK(std::abs(lhs[i] - rhs[i]) < 1e-13);
}
