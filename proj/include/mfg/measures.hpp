#pragma once

#include "mfg/spectral.hpp"

#include <vector>

namespace mfg {

// Admissible initial data m_0: Dirac masses, Dirac sums, or band-limited
// densities given directly by a coefficient table.
struct MeasureSpec {
    enum class Kind { dirac, dirac_sum, band_limited };

    struct Coeff {
        Mode k{0, 0, 0};
        Complex value{0.0, 0.0};
    };

    Kind kind = Kind::dirac;
    std::vector<std::array<double, 3>> locations; // points in [0,2pi]^d
    std::vector<double> weights;                  // strictly positive
    std::vector<Coeff> coeffs;                    // band-limited table

    double total_mass() const;
    // Throws std::invalid_argument on out-of-domain locations, nonpositive
    // weights, or a band-limited table violating |m_k| <= total mass.
    void validate(int dim) const;
};

// Dirac at x0 with weight w contributes w e^{-ik.x0}; sums superpose.
SpectralField realize(const MeasureSpec& spec, int dim, int trunc);

// norm_pm(a - b, 0)
double pm0_distance(const SpectralField& a, const SpectralField& b);

// Discrete Parseval pairing <m, phi> = sum_k phi_k m_{-k}.
Complex pair_with_test(const SpectralField& m, const SpectralField& phi);

} // namespace mfg
