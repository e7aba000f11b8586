#pragma once

#include "mfg/spectral.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mfg {

// Polynomial in the d components of v: sum of coeff * v_1^{p1} ... v_d^{pd}.
struct Monomial {
    double coeff = 0.0;
    std::array<int, 3> powers{0, 0, 0};

    int total_degree() const { return powers[0] + powers[1] + powers[2]; }
};

// Scalar- or vector-valued polynomial map; one monomial list per output row.
struct PolyMap {
    std::vector<std::vector<Monomial>> rows;

    bool scalar() const { return rows.size() == 1; }
    int max_degree() const;
};

inline constexpr int kMaxPolyDegree = 4;

// Per-function growth and Lipschitz constants of the assumed bounds
// ||h(v)|| <= c ||v||^p and ||h(v1)-h(v2)|| <= c~ ||v1-v2|| (||v1||^p~ + ||v2||^p~).
struct GrowthEntry {
    double c = 0.0;
    double p = 0.0;
    double c_tilde = 0.0;
    double p_tilde = 0.0;
};

struct GrowthConstants {
    GrowthEntry f1, g1, f2, g2;
};

// H_i(x,t,v,m) = g_i(v) * integral of f_i(v) m over the torus.
struct HamiltonianSpec {
    std::string name;
    PolyMap f1, g1, f2; // scalar
    PolyMap g2;         // vector, d rows
    GrowthConstants constants;

    // H1 = |v|^2 int |v|^2 m, H2 = 2v int |v|^2 m
    static HamiltonianSpec example_quartic(int dim);
    // H1 = |v|^2, H2 = 2v (f_i constant 1)
    static HamiltonianSpec example_quadratic(int dim);
    static HamiltonianSpec by_name(const std::string& name, int dim);

    void validate(int dim) const;
};

// Per-slice composition via alias-free convolutions.
SpaceTimeField eval_poly(const PolyMap& map, const SpaceTimeVectorField& v);
SpaceTimeVectorField eval_poly_vector(const PolyMap& map, const SpaceTimeVectorField& v);
SpectralField eval_poly_slice(const std::vector<Monomial>& terms,
                              const std::vector<const SpectralField*>& v_slices);

// A(t_i) = sum_k (f_of_v)_k(t_i) m_{-k}(t_i), one value per grid time.
std::vector<Complex> pairing_A(const SpaceTimeField& f_of_v, const SpaceTimeField& m);

SpaceTimeField eval_H1(const HamiltonianSpec& spec, const SpaceTimeVectorField& v,
                       const SpaceTimeField& m);
SpaceTimeVectorField eval_H2(const HamiltonianSpec& spec, const SpaceTimeVectorField& v,
                             const SpaceTimeField& m);

GrowthConstants growth_constants(const HamiltonianSpec& spec);

// The two bracketed Lipschitz constants for H1 and H2 on the bi-ball
// ||v_i|| <= rho1, ||m_i|| <= rho2.
std::pair<double, double> lipschitz_bound(const HamiltonianSpec& spec, double rho1,
                                          double rho2);

} // namespace mfg
