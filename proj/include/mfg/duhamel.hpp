#pragma once

#include "mfg/hamiltonian.hpp"
#include "mfg/spectral.hpp"

namespace mfg {

// One-step weights of the exponential integrator: the kernel e^{-lambda(t-s)}
// is integrated exactly against the piecewise-linear interpolant of the
// integrand. Over the step ending at the target time,
//   integral += left * u(t_j) + right * u(t_{j+1}),
// and previously accumulated mass decays by e^{-lambda h}.
struct QuadWeights {
    double decay = 0.0;
    double left = 0.0;
    double right = 0.0;
};

QuadWeights exp_quad_weights(double lambda, double h);

// I+(mu, h)(., t) = integral_0^t e^{Delta(t-s)} div(mu(., s) h(., s)) ds.
// The product mu h is formed alias-free per slice; output mode k=0 is zero.
SpaceTimeField i_plus(const SpaceTimeField& mu, const SpaceTimeVectorField& h);

// I-(h)(., t) = -integral_t^T e^{Delta(s-t)} grad(h(., s)) ds.
SpaceTimeVectorField i_minus(const SpaceTimeField& h);

// Terminal distribution Omega(v, m) = e^{Delta T} m0 + I+(m, H2(v, m))(., T).
SpectralField omega(const SpaceTimeVectorField& nu, const SpaceTimeField& mu,
                    const SpectralField& m0, const HamiltonianSpec& spec);

} // namespace mfg
