#pragma once

#include "mfg/spectral.hpp"

#include <string>

namespace mfg {

// Terminal payoff G: either the Fourier-truncation example
//   G(m,x) = delta_g (chi_n m)^2 sin(x_1+...+x_d)
// or the smoothing-symbol example
//   G(m) = delta_g L^gamma m,  L^gamma symbol 1/(1+|k|^{1+d+gamma}).
struct PayoffSpec {
    enum class Kind { truncation, smoothing };

    Kind kind = Kind::smoothing;
    int n = 0;          // truncation order (truncation kind)
    double gamma = 1.0; // smoothing exponent, > 0
    double delta_g = 1.0;

    void validate() const;
};

SpectralField apply_payoff(const PayoffSpec& spec, const SpectralField& m_terminal);

// Component n of grad G: coefficients of apply_payoff scaled by i k_n.
VectorField grad_payoff(const PayoffSpec& spec, const SpectralField& m_terminal);

// Nondecreasing continuous majorant, affine: psi(r) = offset + slope r.
struct AffineFn {
    double offset = 1.0;
    double slope = 0.0;

    double operator()(double r) const { return offset + slope * r; }
};

struct PayoffConstants {
    double c_g = 0.0;
    double c_g_tilde = 0.0;
    AffineFn psi1, psi2;
    // refinement of c_g over an extended mode set, reported alongside
    double c_g_extended = 0.0;
    std::string derivation;
};

// Constants of the assumed payoff bounds over the truncated mode set;
// beta is the analyticity weight alpha*T the bounds are stated at.
PayoffConstants payoff_constants(const PayoffSpec& spec, int dim, int trunc, double beta);

} // namespace mfg
