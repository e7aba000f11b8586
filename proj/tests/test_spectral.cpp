#include "helpers.hpp"
#include "mfg/spectral.hpp"

#include <doctest.h>

#include <cmath>

using namespace mfg;
using mfg::testing::Rng;

namespace {

SpectralField single_mode(int dim, int trunc, Mode k, Complex v)
{
    SpectralField f(dim, trunc, false);
    f.set(k, v);
    return f;
}

SpectralField dirac_coeffs(int dim, int trunc)
{
    SpectralField f(dim, trunc, true);
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = Complex{1.0, 0.0};
    return f;
}

SpectralField cos_x(int dim, int trunc)
{
    SpectralField f(dim, trunc, true);
    f.set(Mode{1, 0, 0}, Complex{0.5, 0.0});
    f.set(Mode{-1, 0, 0}, Complex{0.5, 0.0});
    return f;
}

// physical-grid product oracle: sample both fields on a fine uniform grid,
// multiply pointwise, recover coefficients by the discrete transform (exact
// for the band-limited product when the grid beats the Nyquist bound)
SpectralField physical_product(const SpectralField& f, const SpectralField& g)
{
    const int dim = f.dim();
    const int trunc = f.trunc();
    const int pts = 4 * trunc + 1;
    SpectralField out(dim, trunc, false);
    std::vector<std::array<double, 3>> grid;
    if (dim == 1) {
        for (int i = 0; i < pts; ++i)
            grid.push_back({2.0 * M_PI * i / pts, 0.0, 0.0});
    } else {
        for (int i = 0; i < pts; ++i)
            for (int j = 0; j < pts; ++j)
                grid.push_back({2.0 * M_PI * i / pts, 2.0 * M_PI * j / pts, 0.0});
    }
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
        const Mode k = out.mode(idx);
        Complex acc{0.0, 0.0};
        for (const auto& x : grid) {
            double phase = 0.0;
            for (int a = 0; a < dim; ++a)
                phase += k[static_cast<std::size_t>(a)] * x[static_cast<std::size_t>(a)];
            const std::span<const double> xs(x.data(), static_cast<std::size_t>(dim));
            acc += evaluate(f, xs) * evaluate(g, xs)
                * std::exp(Complex{0.0, -phase});
        }
        out[idx] = acc / static_cast<double>(grid.size());
    }
    return out;
}

} // namespace

TEST_CASE("pm norm")
{
    CHECK(norm_pm(single_mode(1, 4, Mode{0, 0, 0}, {2.0, 0.0}), 1.0)
          == doctest::Approx(2.0));
    CHECK(norm_pm(dirac_coeffs(1, 4), 0.0) == doctest::Approx(1.0));
    CHECK(norm_pm(single_mode(1, 4, Mode{1, 0, 0}, {0.5, 0.0}), 1.0)
          == doctest::Approx(0.5 * std::exp(1.0)));
}

TEST_CASE("b norm")
{
    CHECK(norm_b(single_mode(1, 4, Mode{0, 0, 0}, {2.0, 0.0}), 3.0)
          == doctest::Approx(2.0));
    CHECK(norm_b(cos_x(1, 4), 0.0) == doctest::Approx(1.0));
    CHECK(norm_b(cos_x(1, 4), 1.0) == doctest::Approx(std::exp(1.0)));
}

TEST_CASE("b1 norm")
{
    CHECK(norm_b1(single_mode(1, 4, Mode{0, 0, 0}, {1.0, 0.0}), 2.0)
          == doctest::Approx(1.0));
    CHECK(norm_b1(cos_x(1, 4), 0.0) == doctest::Approx(2.0));
    CHECK(norm_b1(single_mode(2, 4, Mode{1, 0, 0}, {1.0, 0.0}), std::log(2.0))
          == doctest::Approx(4.0));
}

TEST_CASE("space-time pm norm")
{
    SpaceTimeField f(1, 4, 4, 1.0, false);
    for (int i = 0; i <= 4; ++i)
        f.slice(i).set(Mode{0, 0, 0}, Complex{3.0, 0.0});
    CHECK(st_norm_pm_alpha(f, 0.5) == doctest::Approx(3.0));

    SpaceTimeField heat(1, 4, 8, 1.0, true);
    for (int i = 0; i <= 8; ++i)
        heat.slice(i) = heat_semigroup(dirac_coeffs(1, 4), heat.time(i));
    CHECK(st_norm_pm_alpha(heat, 0.5) == doctest::Approx(1.0));

    SpaceTimeField late(1, 4, 4, 1.0, false);
    late.slice(4).set(Mode{1, 0, 0}, Complex{1.0, 0.0});
    CHECK(st_norm_pm_alpha(late, 0.5) == doctest::Approx(std::exp(0.5)));
}

TEST_CASE("space-time b norm")
{
    SpaceTimeField zero(1, 4, 4, 1.0, true);
    CHECK(st_norm_b(zero, 1.0) == doctest::Approx(0.0));

    SpaceTimeField one(1, 4, 4, 1.0, false);
    for (int i = 0; i <= 4; ++i)
        one.slice(i).set(Mode{1, 0, 0}, Complex{1.0, 0.0});
    CHECK(st_norm_b(one, 0.0) == doctest::Approx(1.0));

    SpaceTimeField two(1, 4, 4, 1.0, false);
    two.slice(1).set(Mode{1, 0, 0}, Complex{0.5, 0.0});
    two.slice(3).set(Mode{-1, 0, 0}, Complex{0.5, 0.0});
    CHECK(st_norm_b(two, 1.0) == doctest::Approx(std::exp(1.0)));
}

TEST_CASE("convolution identities")
{
    const SpectralField e1 = single_mode(1, 4, Mode{1, 0, 0}, {1.0, 0.0});
    const SpectralField sq = convolve(e1, e1);
    CHECK(sq.at(Mode{2, 0, 0}) == Complex{1.0, 0.0});
    CHECK(std::abs(sq.at(Mode{1, 0, 0})) == 0.0);

    const SpectralField c2 = convolve(cos_x(1, 4), cos_x(1, 4));
    CHECK(c2.at(Mode{0, 0, 0}).real() == doctest::Approx(0.5));
    CHECK(c2.at(Mode{2, 0, 0}).real() == doctest::Approx(0.25));
    CHECK(c2.at(Mode{-2, 0, 0}).real() == doctest::Approx(0.25));
}

TEST_CASE("convolution matches the physical-grid product oracle")
{
    Rng rng(7);
    for (int trial = 0; trial < 5; ++trial) {
        const SpectralField f = mfg::testing::random_field(rng, 2, 4);
        const SpectralField g = mfg::testing::random_field(rng, 2, 4);
        const SpectralField direct = convolve(f, g);
        const SpectralField oracle = physical_product(f, g);
        for (std::size_t i = 0; i < direct.size(); ++i)
            CHECK(std::abs(direct[i] - oracle[i]) < 1e-12);
    }
}

TEST_CASE("heat semigroup")
{
    const SpectralField f = single_mode(1, 4, Mode{2, 0, 0}, {1.0, 0.0});
    CHECK(std::abs(heat_semigroup(f, 0.0).at(Mode{2, 0, 0}) - Complex{1.0, 0.0})
          == 0.0);
    CHECK(heat_semigroup(f, 0.25).at(Mode{2, 0, 0}).real()
          == doctest::Approx(std::exp(-1.0)));

    const SpectralField d = dirac_coeffs(1, 4);
    const SpectralField flowed = heat_semigroup(d, 0.1);
    for (std::size_t i = 0; i < d.size(); ++i) {
        const double ak = mode_abs(d.mode(i), 1);
        CHECK(flowed[i].real() == doctest::Approx(std::exp(-0.1 * ak * ak)));
    }

    SUBCASE("semigroup law and monotonicity")
    {
        Rng rng(3);
        const SpectralField g = mfg::testing::random_field(rng, 1, 6);
        const SpectralField twice = heat_semigroup(heat_semigroup(g, 0.3), 0.2);
        const SpectralField once = heat_semigroup(g, 0.5);
        for (std::size_t i = 0; i < g.size(); ++i)
            CHECK(std::abs(twice[i] - once[i]) < 1e-14);
        CHECK(norm_pm(once, 0.7) <= norm_pm(g, 0.7) + 1e-14);
    }

    CHECK_THROWS(heat_semigroup(f, -0.1));
}

TEST_CASE("evaluate")
{
    const SpectralField one = single_mode(1, 4, Mode{0, 0, 0}, {1.0, 0.0});
    const double x0 = 1.234;
    CHECK(evaluate(one, std::span<const double>(&x0, 1)).real()
          == doctest::Approx(1.0));
    const double zero = 0.0, pi = M_PI;
    CHECK(evaluate(cos_x(1, 4), std::span<const double>(&zero, 1)).real()
          == doctest::Approx(1.0));
    CHECK(evaluate(cos_x(1, 4), std::span<const double>(&pi, 1)).real()
          == doctest::Approx(-1.0));
}

TEST_CASE("reality preservation")
{
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const SpectralField f = mfg::testing::random_real_field(rng, 1, 6);
        const SpectralField g = mfg::testing::random_real_field(rng, 1, 6);
        CHECK(conjugate_asymmetry(f) < 1e-14);
        CHECK(conjugate_asymmetry(convolve(f, g)) < 1e-13);
        CHECK(conjugate_asymmetry(heat_semigroup(f, 0.4)) < 1e-14);
    }
}

TEST_CASE("banach algebra and product estimate on random pairs")
{
    Rng rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const int trunc = 1 + static_cast<int>(rng() % 8);
        const SpectralField f = mfg::testing::random_field(rng, 1, trunc);
        const SpectralField g = mfg::testing::random_field(rng, 1, trunc);
        for (double beta : {0.0, 0.5}) {
            const SpectralField p = convolve(f, g);
            CHECK(norm_b(p, beta) <= norm_b(f, beta) * norm_b(g, beta) + 1e-12);
            CHECK(norm_pm(p, beta) <= norm_b(f, beta) * norm_pm(g, beta) + 1e-12);
        }
    }
}

TEST_CASE("evaluate of a convolution multiplies point values")
{
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        // band-limited inputs at half the stored truncation: no energy lost
        SpectralField f(1, 8, false), g(1, 8, false);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int k = -4; k <= 4; ++k) {
            f.set(Mode{k, 0, 0}, Complex{u(rng), u(rng)});
            g.set(Mode{k, 0, 0}, Complex{u(rng), u(rng)});
        }
        const SpectralField p = convolve(f, g);
        for (double x : {0.1, 2.0, 5.5}) {
            const std::span<const double> xs(&x, 1);
            CHECK(std::abs(evaluate(p, xs) - evaluate(f, xs) * evaluate(g, xs))
                  < 1e-10);
        }
    }
}
