#include "mfg/measures.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mfg {

double MeasureSpec::total_mass() const
{
    if (kind == Kind::band_limited) {
        for (const auto& c : coeffs) {
            if (c.k == Mode{0, 0, 0})
                return c.value.real();
        }
        return 0.0;
    }
    double w = 0.0;
    for (double wi : weights)
        w += wi;
    return w;
}

void MeasureSpec::validate(int dim) const
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (kind == Kind::band_limited) {
        const double mass = total_mass();
        if (mass <= 0.0)
            throw std::invalid_argument("MeasureSpec: band-limited mean coefficient must be positive");
        for (const auto& c : coeffs) {
            if (std::abs(c.value) > mass + 1e-12)
                throw std::invalid_argument(
                    "MeasureSpec: coefficient exceeds total mass bound");
        }
        return;
    }
    if (locations.empty() || locations.size() != weights.size())
        throw std::invalid_argument("MeasureSpec: locations and weights must match and be nonempty");
    if (kind == Kind::dirac && locations.size() != 1)
        throw std::invalid_argument("MeasureSpec: dirac kind takes a single location");
    for (double w : weights) {
        if (!(w > 0.0))
            throw std::invalid_argument("MeasureSpec: weights must be strictly positive");
    }
    for (const auto& x : locations) {
        for (int a = 0; a < dim; ++a) {
            const double xa = x[static_cast<std::size_t>(a)];
            if (xa < 0.0 || xa > two_pi)
                throw std::invalid_argument("MeasureSpec: location outside [0,2pi]^d");
        }
    }
}

SpectralField realize(const MeasureSpec& spec, int dim, int trunc)
{
    spec.validate(dim);
    SpectralField m(dim, trunc, true);
    if (spec.kind == MeasureSpec::Kind::band_limited) {
        for (const auto& c : spec.coeffs) {
            if (!m.contains(c.k))
                throw std::invalid_argument("MeasureSpec: coefficient mode outside truncation");
            m.set(c.k, c.value);
        }
        return m;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        const Mode k = m.mode(i);
        Complex acc{0.0, 0.0};
        for (std::size_t p = 0; p < spec.locations.size(); ++p) {
            double phase = 0.0;
            for (int a = 0; a < dim; ++a)
                phase -= k[static_cast<std::size_t>(a)]
                    * spec.locations[p][static_cast<std::size_t>(a)];
            acc += spec.weights[p] * Complex{std::cos(phase), std::sin(phase)};
        }
        m[i] = acc;
    }
    return m;
}

double pm0_distance(const SpectralField& a, const SpectralField& b)
{
    return norm_pm(a - b, 0.0);
}

Complex pair_with_test(const SpectralField& m, const SpectralField& phi)
{
    if (!m.same_shape(phi))
        throw std::invalid_argument("pair_with_test: shape mismatch");
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < phi.size(); ++i) {
        Mode neg = phi.mode(i);
        for (int a = 0; a < phi.dim(); ++a)
            neg[static_cast<std::size_t>(a)] = -neg[static_cast<std::size_t>(a)];
        sum += phi[i] * m.at(neg);
    }
    return sum;
}

} // namespace mfg
