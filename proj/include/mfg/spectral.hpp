#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mfg {

using Complex = std::complex<double>;

// Integer frequency vector on Z^d; components beyond dim are zero.
using Mode = std::array<int, 3>;

// Euclidean length |k|, used in all exponential weights.
double mode_abs(const Mode& k, int dim);

// Truncated Fourier coefficient array on [-K,K]^d, d in {1,2,3}.
// Represents f(x) = sum_k f_k e^{ikx} on the torus [0,2pi]^d.
class SpectralField {
public:
    SpectralField(int dim, int trunc, bool real_valued = true);

    int dim() const { return dim_; }
    int trunc() const { return trunc_; }
    bool real_valued() const { return real_; }
    void set_real_valued(bool r) { real_ = r; }

    std::size_t size() const { return coeffs_.size(); }
    Complex& operator[](std::size_t i) { return coeffs_[i]; }
    const Complex& operator[](std::size_t i) const { return coeffs_[i]; }

    Mode mode(std::size_t flat) const;
    std::size_t flat(const Mode& k) const;
    bool contains(const Mode& k) const;

    Complex at(const Mode& k) const { return coeffs_[flat(k)]; }
    void set(const Mode& k, Complex value) { coeffs_[flat(k)] = value; }

    bool same_shape(const SpectralField& other) const
    {
        return dim_ == other.dim_ && trunc_ == other.trunc_;
    }

    SpectralField& operator+=(const SpectralField& other);
    SpectralField& operator-=(const SpectralField& other);
    SpectralField& operator*=(double s);
    SpectralField& operator*=(Complex s);

private:
    int dim_;
    int trunc_;
    bool real_;
    std::vector<Complex> coeffs_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(SpectralField a, double s);
SpectralField operator*(double s, SpectralField a);

// Family of SpectralFields on the uniform time grid 0 = t_0 < ... < t_{N_t} = T.
class SpaceTimeField {
public:
    SpaceTimeField(int dim, int trunc, int nt, double horizon, bool real_valued = true);
    // placeholder shape for report structs filled in later
    SpaceTimeField() : SpaceTimeField(1, 1, 1, 1.0) {}

    int dim() const { return slices_[0].dim(); }
    int trunc() const { return slices_[0].trunc(); }
    int nt() const { return static_cast<int>(slices_.size()) - 1; }
    double horizon() const { return horizon_; }
    double dt() const { return horizon_ / nt(); }
    double time(int i) const { return horizon_ * i / nt(); }

    SpectralField& slice(int i) { return slices_[static_cast<std::size_t>(i)]; }
    const SpectralField& slice(int i) const { return slices_[static_cast<std::size_t>(i)]; }

    bool same_shape(const SpaceTimeField& other) const;

    SpaceTimeField& operator+=(const SpaceTimeField& other);
    SpaceTimeField& operator-=(const SpaceTimeField& other);
    SpaceTimeField& operator*=(double s);

private:
    double horizon_;
    std::vector<SpectralField> slices_;
};

SpaceTimeField operator-(SpaceTimeField a, const SpaceTimeField& b);

// d spatial components sharing (d, K) resp. (d, K, grid).
struct VectorField {
    std::vector<SpectralField> comp;
};

struct SpaceTimeVectorField {
    std::vector<SpaceTimeField> comp;

    int dim() const { return static_cast<int>(comp.size()); }
    SpaceTimeVectorField& operator-=(const SpaceTimeVectorField& other);
};

SpaceTimeVectorField operator-(SpaceTimeVectorField a, const SpaceTimeVectorField& b);

// ||f||_{PM^beta} = sup_k e^{beta|k|} |f_k|
double norm_pm(const SpectralField& f, double beta);

// ||f||_{B_beta} = sum_k e^{beta|k|} |f_k|
double norm_b(const SpectralField& f, double beta);

// ||f||_{B_{1,beta}} = sum_k (1+|k|) e^{beta|k|} |f_k|
double norm_b1(const SpectralField& f, double beta);

// sup_k sup_t e^{alpha t |k|} |f_k(t)|, time sup over the grid
double st_norm_pm_alpha(const SpaceTimeField& f, double alpha);

// sum_k sup_t e^{beta|k|} |f_k(t)|
double st_norm_b(const SpaceTimeField& f, double beta);

// vector variant sums component norms
double st_norm_b(const SpaceTimeVectorField& f, double beta);

// Alias-free product: full linear convolution, truncated back to |k|_inf <= K.
SpectralField convolve(const SpectralField& f, const SpectralField& g);

// Fourier multiplier e^{-|k|^2 t}; requires t >= 0.
SpectralField heat_semigroup(const SpectralField& f, double t);

// Partial-sum evaluation over stored modes at x in [0,2pi]^d.
Complex evaluate(const SpectralField& f, std::span<const double> x);
double evaluate_real(const SpectralField& f, std::span<const double> x);

// max_k |f_k - conj(f_{-k})|, zero for conjugate-symmetric fields
double conjugate_asymmetry(const SpectralField& f);
double conjugate_asymmetry(const SpaceTimeField& f);

} // namespace mfg
