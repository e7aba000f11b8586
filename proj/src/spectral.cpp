#include "mfg/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace mfg {

double mode_abs(const Mode& k, int dim)
{
    double s = 0.0;
    for (int a = 0; a < dim; ++a)
        s += static_cast<double>(k[a]) * k[a];
    return std::sqrt(s);
}

namespace {

std::size_t pow_size(int modes, int dim)
{
    std::size_t n = 1;
    for (int a = 0; a < dim; ++a)
        n *= static_cast<std::size_t>(modes);
    return n;
}

} // namespace

SpectralField::SpectralField(int dim, int trunc, bool real_valued)
    : dim_(dim), trunc_(trunc), real_(real_valued)
{
    if (dim < 1 || dim > 3)
        throw std::invalid_argument("SpectralField: dim must be 1, 2, or 3");
    if (trunc < 1)
        throw std::invalid_argument("SpectralField: trunc must be >= 1");
    coeffs_.assign(pow_size(2 * trunc + 1, dim), Complex{0.0, 0.0});
}

Mode SpectralField::mode(std::size_t flat) const
{
    Mode k{0, 0, 0};
    const int m = 2 * trunc_ + 1;
    for (int a = dim_ - 1; a >= 0; --a) {
        k[static_cast<std::size_t>(a)] = static_cast<int>(flat % m) - trunc_;
        flat /= m;
    }
    return k;
}

std::size_t SpectralField::flat(const Mode& k) const
{
    const int m = 2 * trunc_ + 1;
    std::size_t idx = 0;
    for (int a = 0; a < dim_; ++a)
        idx = idx * m + static_cast<std::size_t>(k[static_cast<std::size_t>(a)] + trunc_);
    return idx;
}

bool SpectralField::contains(const Mode& k) const
{
    for (int a = 0; a < dim_; ++a) {
        const int ka = k[static_cast<std::size_t>(a)];
        if (ka < -trunc_ || ka > trunc_)
            return false;
    }
    return true;
}

SpectralField& SpectralField::operator+=(const SpectralField& other)
{
    if (!same_shape(other))
        throw std::invalid_argument("SpectralField: shape mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    real_ = real_ && other.real_;
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other)
{
    if (!same_shape(other))
        throw std::invalid_argument("SpectralField: shape mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    real_ = real_ && other.real_;
    return *this;
}

SpectralField& SpectralField::operator*=(double s)
{
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

SpectralField& SpectralField::operator*=(Complex s)
{
    for (auto& c : coeffs_)
        c *= s;
    real_ = false;
    return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(SpectralField a, double s) { return a *= s; }
SpectralField operator*(double s, SpectralField a) { return a *= s; }

SpaceTimeField::SpaceTimeField(int dim, int trunc, int nt, double horizon, bool real_valued)
    : horizon_(horizon)
{
    if (nt < 1)
        throw std::invalid_argument("SpaceTimeField: need at least one time step");
    if (horizon <= 0.0)
        throw std::invalid_argument("SpaceTimeField: horizon must be positive");
    slices_.assign(static_cast<std::size_t>(nt) + 1, SpectralField(dim, trunc, real_valued));
}

bool SpaceTimeField::same_shape(const SpaceTimeField& other) const
{
    return nt() == other.nt() && horizon_ == other.horizon_
        && slices_[0].same_shape(other.slices_[0]);
}

SpaceTimeField& SpaceTimeField::operator+=(const SpaceTimeField& other)
{
    if (!same_shape(other))
        throw std::invalid_argument("SpaceTimeField: shape mismatch");
    for (std::size_t i = 0; i < slices_.size(); ++i)
        slices_[i] += other.slices_[i];
    return *this;
}

SpaceTimeField& SpaceTimeField::operator-=(const SpaceTimeField& other)
{
    if (!same_shape(other))
        throw std::invalid_argument("SpaceTimeField: shape mismatch");
    for (std::size_t i = 0; i < slices_.size(); ++i)
        slices_[i] -= other.slices_[i];
    return *this;
}

SpaceTimeField& SpaceTimeField::operator*=(double s)
{
    for (auto& sl : slices_)
        sl *= s;
    return *this;
}

SpaceTimeField operator-(SpaceTimeField a, const SpaceTimeField& b) { return a -= b; }

SpaceTimeVectorField& SpaceTimeVectorField::operator-=(const SpaceTimeVectorField& other)
{
    if (comp.size() != other.comp.size())
        throw std::invalid_argument("SpaceTimeVectorField: component count mismatch");
    for (std::size_t n = 0; n < comp.size(); ++n)
        comp[n] -= other.comp[n];
    return *this;
}

SpaceTimeVectorField operator-(SpaceTimeVectorField a, const SpaceTimeVectorField& b)
{
    return a -= b;
}

double norm_pm(const SpectralField& f, double beta)
{
    double best = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double v = std::exp(beta * mode_abs(f.mode(i), f.dim())) * std::abs(f[i]);
        if (v > best)
            best = v;
    }
    return best;
}

double norm_b(const SpectralField& f, double beta)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        sum += std::exp(beta * mode_abs(f.mode(i), f.dim())) * std::abs(f[i]);
    return sum;
}

double norm_b1(const SpectralField& f, double beta)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double ak = mode_abs(f.mode(i), f.dim());
        sum += (1.0 + ak) * std::exp(beta * ak) * std::abs(f[i]);
    }
    return sum;
}

double st_norm_pm_alpha(const SpaceTimeField& f, double alpha)
{
    double best = 0.0;
    for (int i = 0; i <= f.nt(); ++i) {
        const double t = f.time(i);
        const SpectralField& s = f.slice(i);
        for (std::size_t j = 0; j < s.size(); ++j) {
            const double v = std::exp(alpha * t * mode_abs(s.mode(j), s.dim())) * std::abs(s[j]);
            if (v > best)
                best = v;
        }
    }
    return best;
}

double st_norm_b(const SpaceTimeField& f, double beta)
{
    const SpectralField& s0 = f.slice(0);
    double sum = 0.0;
    for (std::size_t j = 0; j < s0.size(); ++j) {
        double sup = 0.0;
        for (int i = 0; i <= f.nt(); ++i) {
            const double v = std::abs(f.slice(i)[j]);
            if (v > sup)
                sup = v;
        }
        sum += std::exp(beta * mode_abs(s0.mode(j), s0.dim())) * sup;
    }
    return sum;
}

double st_norm_b(const SpaceTimeVectorField& f, double beta)
{
    double sum = 0.0;
    for (const auto& c : f.comp)
        sum += st_norm_b(c, beta);
    return sum;
}

SpectralField convolve(const SpectralField& f, const SpectralField& g)
{
    if (!f.same_shape(g))
        throw std::invalid_argument("convolve: dimension/truncation mismatch");
    SpectralField out(f.dim(), f.trunc(), f.real_valued() && g.real_valued());
    // (f*g)_k = sum_j f_{k-j} g_j; modes outside [-K,K]^d carry zero amplitude,
    // so restricting j to stored modes reproduces the full linear convolution
    // truncated back to the stored band.
    for (std::size_t ik = 0; ik < out.size(); ++ik) {
        const Mode k = out.mode(ik);
        Complex acc{0.0, 0.0};
        for (std::size_t ij = 0; ij < g.size(); ++ij) {
            const Mode j = g.mode(ij);
            Mode diff{0, 0, 0};
            for (int a = 0; a < f.dim(); ++a)
                diff[static_cast<std::size_t>(a)]
                    = k[static_cast<std::size_t>(a)] - j[static_cast<std::size_t>(a)];
            if (!f.contains(diff))
                continue;
            acc += f.at(diff) * g[ij];
        }
        out[ik] = acc;
    }
    return out;
}

SpectralField heat_semigroup(const SpectralField& f, double t)
{
    if (t < 0.0)
        throw std::invalid_argument("heat_semigroup: t must be nonnegative");
    SpectralField out(f.dim(), f.trunc(), f.real_valued());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double ak = mode_abs(f.mode(i), f.dim());
        out[i] = f[i] * std::exp(-ak * ak * t);
    }
    return out;
}

Complex evaluate(const SpectralField& f, std::span<const double> x)
{
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Mode k = f.mode(i);
        double phase = 0.0;
        for (int a = 0; a < f.dim(); ++a)
            phase += k[static_cast<std::size_t>(a)] * x[static_cast<std::size_t>(a)];
        sum += f[i] * Complex{std::cos(phase), std::sin(phase)};
    }
    return sum;
}

double evaluate_real(const SpectralField& f, std::span<const double> x)
{
    return evaluate(f, x).real();
}

double conjugate_asymmetry(const SpectralField& f)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        Mode neg = f.mode(i);
        for (int a = 0; a < f.dim(); ++a)
            neg[static_cast<std::size_t>(a)] = -neg[static_cast<std::size_t>(a)];
        const double v = std::abs(f[i] - std::conj(f.at(neg)));
        if (v > worst)
            worst = v;
    }
    return worst;
}

double conjugate_asymmetry(const SpaceTimeField& f)
{
    double worst = 0.0;
    for (int i = 0; i <= f.nt(); ++i)
        worst = std::max(worst, conjugate_asymmetry(f.slice(i)));
    return worst;
}

} // namespace mfg
