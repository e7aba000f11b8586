#pragma once

#include "mfg/spectral.hpp"

#include <random>

namespace mfg::testing {

using Rng = std::mt19937_64;

inline SpectralField random_field(Rng& rng, int dim, int trunc)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SpectralField f(dim, trunc, false);
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = Complex{u(rng), u(rng)};
    return f;
}

// conjugate-symmetrized, so the field is real-valued on the torus
inline SpectralField random_real_field(Rng& rng, int dim, int trunc)
{
    const SpectralField raw = random_field(rng, dim, trunc);
    SpectralField f(dim, trunc, true);
    for (std::size_t i = 0; i < f.size(); ++i) {
        Mode neg = raw.mode(i);
        for (auto& c : neg)
            c = -c;
        f[i] = 0.5 * (raw[i] + std::conj(raw.at(neg)));
    }
    return f;
}

inline SpaceTimeField random_st_field(Rng& rng, int dim, int trunc, int nt,
                                      double horizon)
{
    SpaceTimeField f(dim, trunc, nt, horizon, false);
    for (int i = 0; i <= nt; ++i)
        f.slice(i) = random_field(rng, dim, trunc);
    return f;
}

inline SpaceTimeVectorField random_st_vector(Rng& rng, int dim, int trunc, int nt,
                                             double horizon)
{
    SpaceTimeVectorField f;
    for (int n = 0; n < dim; ++n)
        f.comp.push_back(random_st_field(rng, dim, trunc, nt, horizon));
    return f;
}

} // namespace mfg::testing
