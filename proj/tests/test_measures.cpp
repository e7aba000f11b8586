#include "helpers.hpp"
#include "mfg/measures.hpp"

#include <doctest.h>

#include <cmath>

using namespace mfg;

namespace {

MeasureSpec dirac_at(double x, double w = 1.0)
{
    MeasureSpec s;
    s.kind = MeasureSpec::Kind::dirac;
    s.locations = {{x, 0.0, 0.0}};
    s.weights = {w};
    return s;
}

SpectralField cos_x(int trunc)
{
    SpectralField f(1, trunc, true);
    f.set(Mode{1, 0, 0}, Complex{0.5, 0.0});
    f.set(Mode{-1, 0, 0}, Complex{0.5, 0.0});
    return f;
}

} // namespace

TEST_CASE("dirac realization")
{
    const SpectralField at0 = realize(dirac_at(0.0), 1, 4);
    for (std::size_t i = 0; i < at0.size(); ++i)
        CHECK(std::abs(at0[i] - Complex{1.0, 0.0}) < 1e-15);

    const SpectralField atpi = realize(dirac_at(M_PI), 1, 4);
    for (std::size_t i = 0; i < atpi.size(); ++i) {
        const int k = atpi.mode(i)[0];
        CHECK(atpi[i].real() == doctest::Approx(k % 2 == 0 ? 1.0 : -1.0));
        CHECK(std::abs(atpi[i].imag()) < 1e-12);
    }

    MeasureSpec halves;
    halves.kind = MeasureSpec::Kind::dirac_sum;
    halves.locations = {{0.0, 0.0, 0.0}, {M_PI, 0.0, 0.0}};
    halves.weights = {0.5, 0.5};
    const SpectralField h = realize(halves, 1, 4);
    for (std::size_t i = 0; i < h.size(); ++i) {
        const int k = h.mode(i)[0];
        CHECK(h[i].real() == doctest::Approx(k % 2 == 0 ? 1.0 : 0.0));
    }
}

TEST_CASE("pm0 distance")
{
    const SpectralField a = realize(dirac_at(0.0), 1, 8);
    CHECK(pm0_distance(a, a) == doctest::Approx(0.0));

    const SpectralField b = realize(dirac_at(1.0), 1, 64);
    CHECK(pm0_distance(realize(dirac_at(0.0), 1, 64), b) >= 1.99);

    const SpectralField c = realize(dirac_at(M_PI), 1, 4);
    CHECK(pm0_distance(realize(dirac_at(0.0), 1, 4), c) == doctest::Approx(2.0));
}

TEST_CASE("pairing with test functions")
{
    const double eps = 0.37;
    CHECK(pair_with_test(realize(dirac_at(0.0), 1, 8), cos_x(8)).real()
          == doctest::Approx(1.0));
    CHECK(pair_with_test(realize(dirac_at(eps), 1, 8), cos_x(8)).real()
          == doctest::Approx(std::cos(eps)));
    CHECK(pair_with_test(realize(dirac_at(M_PI), 1, 8), cos_x(8)).real()
          == doctest::Approx(-1.0));
}

TEST_CASE("mass bound and evaluation identity")
{
    MeasureSpec sum;
    sum.kind = MeasureSpec::Kind::dirac_sum;
    sum.locations = {{0.3, 0.0, 0.0}, {2.1, 0.0, 0.0}, {4.0, 0.0, 0.0}};
    sum.weights = {0.2, 0.5, 1.3};
    const SpectralField f = realize(sum, 1, 8);
    CHECK(norm_pm(f, 0.0) <= sum.total_mass() + 1e-14);

    const SpectralField coincide = realize(dirac_at(1.0, 2.5), 1, 8);
    CHECK(norm_pm(coincide, 0.0) == doctest::Approx(2.5));

    // pairing against a band-limited test function evaluates it at the atom
    mfg::testing::Rng rng(5);
    const SpectralField phi = mfg::testing::random_real_field(rng, 1, 8);
    const double x0 = 2.345;
    const Complex p = pair_with_test(realize(dirac_at(x0), 1, 8), phi);
    CHECK(std::abs(p - evaluate(phi, std::span<const double>(&x0, 1))) < 1e-12);

    CHECK(conjugate_asymmetry(f) < 1e-13);
}

TEST_CASE("validation")
{
    MeasureSpec bad = dirac_at(0.0, -1.0);
    CHECK_THROWS(bad.validate(1));

    MeasureSpec outside = dirac_at(7.0);
    CHECK_THROWS(outside.validate(1));

    MeasureSpec band;
    band.kind = MeasureSpec::Kind::band_limited;
    band.coeffs = {{Mode{0, 0, 0}, Complex{1.0, 0.0}},
                   {Mode{1, 0, 0}, Complex{1.5, 0.0}}};
    CHECK_THROWS(band.validate(1)); // |m_1| exceeds the total mass

    band.coeffs[1].value = Complex{0.5, 0.0};
    CHECK_NOTHROW(band.validate(1));
}
