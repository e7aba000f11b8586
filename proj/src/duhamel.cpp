#include "mfg/duhamel.hpp"

#include <cmath>
#include <stdexcept>

namespace mfg {

QuadWeights exp_quad_weights(double lambda, double h)
{
    QuadWeights w;
    const double x = lambda * h;
    w.decay = std::exp(-x);
    if (x < 0.05) {
        // series forms; the closed forms cancel catastrophically here
        const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2, x5 = x4 * x;
        w.left = h
            * (0.5 - x / 3.0 + x2 / 8.0 - x3 / 30.0 + x4 / 144.0 - x5 / 840.0);
        w.right = h
            * (0.5 - x / 6.0 + x2 / 24.0 - x3 / 120.0 + x4 / 720.0 - x5 / 5040.0);
    } else {
        const double e = w.decay;
        w.left = h * (1.0 - (1.0 + x) * e) / (x * x);
        w.right = h * (x - 1.0 + e) / (x * x);
    }
    return w;
}

SpaceTimeField i_plus(const SpaceTimeField& mu, const SpaceTimeVectorField& h)
{
    if (h.comp.empty() || !mu.same_shape(h.comp[0]))
        throw std::invalid_argument("i_plus: grid mismatch");
    if (static_cast<int>(h.comp.size()) != mu.dim())
        throw std::invalid_argument("i_plus: vector field must have d components");
    const int dim = mu.dim();
    const int nt = mu.nt();
    const double step = mu.dt();

    bool real = mu.slice(0).real_valued();
    for (const auto& c : h.comp)
        real = real && c.slice(0).real_valued();

    // alias-free product slices w_n = mu h_n
    std::vector<SpaceTimeField> w;
    w.reserve(h.comp.size());
    for (const auto& hn : h.comp) {
        SpaceTimeField wn(dim, mu.trunc(), nt, mu.horizon(), real);
        for (int i = 0; i <= nt; ++i)
            wn.slice(i) = convolve(mu.slice(i), hn.slice(i));
        w.push_back(std::move(wn));
    }

    SpaceTimeField out(dim, mu.trunc(), nt, mu.horizon(), real);
    const SpectralField& ref = mu.slice(0);
    for (std::size_t j = 0; j < ref.size(); ++j) {
        const Mode k = ref.mode(j);
        const double ak = mode_abs(k, dim);
        if (ak == 0.0)
            continue; // divergence kills the mean
        const QuadWeights qw = exp_quad_weights(ak * ak, step);
        auto integrand = [&](int i) {
            Complex u{0.0, 0.0};
            for (int n = 0; n < dim; ++n)
                u += Complex{0.0, static_cast<double>(k[static_cast<std::size_t>(n)])}
                    * w[static_cast<std::size_t>(n)].slice(i)[j];
            return u;
        };
        Complex acc{0.0, 0.0};
        Complex u_prev = integrand(0);
        for (int i = 1; i <= nt; ++i) {
            const Complex u_cur = integrand(i);
            acc = qw.decay * acc + qw.left * u_prev + qw.right * u_cur;
            out.slice(i)[j] = acc;
            u_prev = u_cur;
        }
    }
    return out;
}

SpaceTimeVectorField i_minus(const SpaceTimeField& h)
{
    const int dim = h.dim();
    const int nt = h.nt();
    const double step = h.dt();
    const bool real = h.slice(0).real_valued();

    SpaceTimeVectorField out;
    out.comp.assign(static_cast<std::size_t>(dim),
                    SpaceTimeField(dim, h.trunc(), nt, h.horizon(), real));

    const SpectralField& ref = h.slice(0);
    for (std::size_t j = 0; j < ref.size(); ++j) {
        const Mode k = ref.mode(j);
        const double ak = mode_abs(k, dim);
        if (ak == 0.0)
            continue; // gradient kills constants
        const QuadWeights qw = exp_quad_weights(ak * ak, step);
        // backward accumulation of integral_t^T e^{-|k|^2 (s-t)} h_k(s) ds;
        // the kernel sits at the near (left) node, so the one-step weights swap
        Complex acc{0.0, 0.0};
        std::vector<Complex> v(static_cast<std::size_t>(nt) + 1);
        v[static_cast<std::size_t>(nt)] = Complex{0.0, 0.0};
        for (int i = nt - 1; i >= 0; --i) {
            acc = qw.decay * acc + qw.right * h.slice(i)[j] + qw.left * h.slice(i + 1)[j];
            v[static_cast<std::size_t>(i)] = acc;
        }
        for (int n = 0; n < dim; ++n) {
            const Complex factor{0.0, -static_cast<double>(k[static_cast<std::size_t>(n)])};
            for (int i = 0; i <= nt; ++i)
                out.comp[static_cast<std::size_t>(n)].slice(i)[j]
                    = factor * v[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

SpectralField omega(const SpaceTimeVectorField& nu, const SpaceTimeField& mu,
                    const SpectralField& m0, const HamiltonianSpec& spec)
{
    if (!m0.same_shape(mu.slice(0)))
        throw std::invalid_argument("omega: m0 shape mismatch");
    const SpaceTimeVectorField h2 = eval_H2(spec, nu, mu);
    const SpaceTimeField corr = i_plus(mu, h2);
    return heat_semigroup(m0, mu.horizon()) + corr.slice(mu.nt());
}

} // namespace mfg
