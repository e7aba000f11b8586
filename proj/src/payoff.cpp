#include "mfg/payoff.hpp"

#include <cmath>
#include <stdexcept>

namespace mfg {

void PayoffSpec::validate() const
{
    if (delta_g < 0.0)
        throw std::invalid_argument("PayoffSpec: delta_g must be nonnegative");
    if (kind == Kind::smoothing && gamma <= 0.0)
        throw std::invalid_argument("PayoffSpec: gamma must be positive");
    if (kind == Kind::truncation && n < 0)
        throw std::invalid_argument("PayoffSpec: truncation order must be >= 0");
}

namespace {

double smoothing_symbol(double ak, int dim, double gamma)
{
    return 1.0 / (1.0 + std::pow(ak, 1.0 + dim + gamma));
}

SpectralField sine_of_coordinate_sum(int dim, int trunc)
{
    SpectralField s(dim, trunc, true);
    Mode ones{0, 0, 0};
    for (int a = 0; a < dim; ++a)
        ones[static_cast<std::size_t>(a)] = 1;
    Mode neg = ones;
    for (int a = 0; a < dim; ++a)
        neg[static_cast<std::size_t>(a)] = -1;
    s.set(ones, Complex{0.0, -0.5});
    s.set(neg, Complex{0.0, 0.5});
    return s;
}

SpectralField truncate_modes(const SpectralField& m, int n)
{
    SpectralField out(m.dim(), m.trunc(), m.real_valued());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (mode_abs(m.mode(i), m.dim()) <= n + 1e-12)
            out[i] = m[i];
    }
    return out;
}

} // namespace

SpectralField apply_payoff(const PayoffSpec& spec, const SpectralField& m_terminal)
{
    spec.validate();
    if (spec.kind == PayoffSpec::Kind::smoothing) {
        SpectralField out(m_terminal.dim(), m_terminal.trunc(), m_terminal.real_valued());
        for (std::size_t i = 0; i < out.size(); ++i) {
            const double ak = mode_abs(out.mode(i), out.dim());
            out[i] = spec.delta_g * smoothing_symbol(ak, out.dim(), spec.gamma)
                * m_terminal[i];
        }
        return out;
    }
    const SpectralField chi = truncate_modes(m_terminal, spec.n);
    const SpectralField sq = convolve(chi, chi);
    return convolve(sq, sine_of_coordinate_sum(m_terminal.dim(), m_terminal.trunc()))
        * spec.delta_g;
}

VectorField grad_payoff(const PayoffSpec& spec, const SpectralField& m_terminal)
{
    const SpectralField g = apply_payoff(spec, m_terminal);
    VectorField out;
    for (int n = 0; n < g.dim(); ++n) {
        SpectralField comp(g.dim(), g.trunc(), g.real_valued());
        for (std::size_t i = 0; i < g.size(); ++i) {
            const Mode k = g.mode(i);
            comp[i] = Complex{0.0, static_cast<double>(k[static_cast<std::size_t>(n)])}
                * g[i];
        }
        out.comp.push_back(std::move(comp));
    }
    return out;
}

PayoffConstants payoff_constants(const PayoffSpec& spec, int dim, int trunc, double beta)
{
    spec.validate();
    PayoffConstants out;
    if (spec.kind == PayoffSpec::Kind::smoothing) {
        auto symbol_sum = [&](int half_width) {
            SpectralField probe(dim, half_width, true);
            double s = 0.0;
            for (std::size_t i = 0; i < probe.size(); ++i) {
                const double ak = mode_abs(probe.mode(i), dim);
                s += (1.0 + ak) * smoothing_symbol(ak, dim, spec.gamma);
            }
            return s;
        };
        out.c_g = spec.delta_g * symbol_sum(trunc);
        out.c_g_tilde = out.c_g;
        out.psi1 = out.psi2 = AffineFn{1.0, 0.0}; // linear payoff
        const int extended = dim == 1 ? 256 : (dim == 2 ? 64 : 16);
        out.c_g_extended = spec.delta_g * symbol_sum(std::max(trunc, extended));
        out.derivation = "smoothing: c_G = delta_g * sum (1+|k|)/(1+|k|^{1+d+gamma}) "
                         "over the stored modes; Psi1 = Psi2 = 1";
        return out;
    }

    // truncation kind: ||chi_n m||_{B_{1,beta}} <= C_n ||m||_{PM^beta} with
    // C_n = sum_{|k|<=n} (1+|k|) (the exponential weights cancel), and the
    // squared truncation pairs with the sine multiplier in B_{1,beta}.
    auto cutoff_sum = [&](int half_width) {
        SpectralField probe(dim, half_width, true);
        double s = 0.0;
        for (std::size_t i = 0; i < probe.size(); ++i) {
            const double ak = mode_abs(probe.mode(i), dim);
            if (ak <= spec.n + 1e-12)
                s += 1.0 + ak;
        }
        return s;
    };
    const double root_d = std::sqrt(static_cast<double>(dim));
    const double sine_norm = (1.0 + root_d) * std::exp(beta * root_d);
    const double c_trunc = cutoff_sum(trunc);
    out.c_g = spec.delta_g * c_trunc * c_trunc * sine_norm;
    out.c_g_tilde = out.c_g;
    out.psi1 = AffineFn{0.0, 1.0};
    out.psi2 = AffineFn{0.0, 1.0};
    const double c_full = cutoff_sum(std::max(trunc, spec.n));
    out.c_g_extended = spec.delta_g * c_full * c_full * sine_norm;
    out.derivation = "truncation: c_G = delta_g * C_n^2 * ||sin(x_1+...+x_d)||_{B_{1,beta}}, "
                     "C_n = sum_{|k|<=n} (1+|k|); Psi1(r) = Psi2(r) = r";
    return out;
}

} // namespace mfg
