#include "mfg/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace mfg {

int PolyMap::max_degree() const
{
    int deg = 0;
    for (const auto& row : rows)
        for (const auto& t : row)
            deg = std::max(deg, t.total_degree());
    return deg;
}

namespace {

PolyMap v_norm_squared(int dim)
{
    PolyMap p;
    p.rows.resize(1);
    for (int a = 0; a < dim; ++a) {
        Monomial t;
        t.coeff = 1.0;
        t.powers[static_cast<std::size_t>(a)] = 2;
        p.rows[0].push_back(t);
    }
    return p;
}

PolyMap constant_one()
{
    PolyMap p;
    p.rows.resize(1);
    p.rows[0].push_back(Monomial{1.0, {0, 0, 0}});
    return p;
}

PolyMap twice_v(int dim)
{
    PolyMap p;
    p.rows.resize(static_cast<std::size_t>(dim));
    for (int a = 0; a < dim; ++a) {
        Monomial t;
        t.coeff = 2.0;
        t.powers[static_cast<std::size_t>(a)] = 1;
        p.rows[static_cast<std::size_t>(a)].push_back(t);
    }
    return p;
}

} // namespace

HamiltonianSpec HamiltonianSpec::example_quartic(int dim)
{
    HamiltonianSpec s;
    s.name = "example-quartic";
    s.f1 = s.g1 = s.f2 = v_norm_squared(dim);
    s.g2 = twice_v(dim);
    s.constants.f1 = {1.0, 2.0, 1.0, 1.0};
    s.constants.g1 = {1.0, 2.0, 1.0, 1.0};
    s.constants.f2 = {1.0, 2.0, 1.0, 1.0};
    s.constants.g2 = {2.0, 1.0, 1.0, 0.0};
    return s;
}

HamiltonianSpec HamiltonianSpec::example_quadratic(int dim)
{
    HamiltonianSpec s;
    s.name = "example-quadratic";
    s.f1 = s.f2 = constant_one();
    s.g1 = v_norm_squared(dim);
    s.g2 = twice_v(dim);
    s.constants.f1 = {1.0, 0.0, 0.0, 0.0};
    s.constants.f2 = {1.0, 0.0, 0.0, 0.0};
    s.constants.g1 = {1.0, 2.0, 1.0, 1.0};
    s.constants.g2 = {2.0, 1.0, 1.0, 0.0};
    return s;
}

HamiltonianSpec HamiltonianSpec::by_name(const std::string& name, int dim)
{
    if (name == "example-quartic")
        return example_quartic(dim);
    if (name == "example-quadratic")
        return example_quadratic(dim);
    throw std::invalid_argument("unknown Hamiltonian spec: " + name);
}

void HamiltonianSpec::validate(int dim) const
{
    for (const PolyMap* p : {&f1, &g1, &f2, &g2}) {
        if (p->rows.empty())
            throw std::invalid_argument("HamiltonianSpec: empty polynomial map");
        if (p->max_degree() > kMaxPolyDegree)
            throw std::invalid_argument("HamiltonianSpec: polynomial degree overflow");
    }
    if (!f1.scalar() || !g1.scalar() || !f2.scalar())
        throw std::invalid_argument("HamiltonianSpec: f1, g1, f2 must be scalar");
    if (static_cast<int>(g2.rows.size()) != dim)
        throw std::invalid_argument("HamiltonianSpec: g2 must have d rows");
}

SpectralField eval_poly_slice(const std::vector<Monomial>& terms,
                              const std::vector<const SpectralField*>& v_slices)
{
    const SpectralField& v0 = *v_slices[0];
    SpectralField out(v0.dim(), v0.trunc(), true);
    for (const auto& term : terms) {
        if (term.total_degree() > kMaxPolyDegree)
            throw std::invalid_argument("eval_poly: degree overflow");
        if (term.total_degree() == 0) {
            out.set(Mode{0, 0, 0}, out.at(Mode{0, 0, 0}) + term.coeff);
            continue;
        }
        SpectralField cur(v0.dim(), v0.trunc(), true);
        bool started = false;
        for (int a = 0; a < v0.dim(); ++a) {
            for (int p = 0; p < term.powers[static_cast<std::size_t>(a)]; ++p) {
                cur = started ? convolve(cur, *v_slices[static_cast<std::size_t>(a)])
                              : *v_slices[static_cast<std::size_t>(a)];
                started = true;
            }
        }
        out += cur * term.coeff;
    }
    return out;
}

namespace {

std::vector<const SpectralField*> slice_ptrs(const SpaceTimeVectorField& v, int i)
{
    std::vector<const SpectralField*> ptrs;
    ptrs.reserve(v.comp.size());
    for (const auto& c : v.comp)
        ptrs.push_back(&c.slice(i));
    return ptrs;
}

} // namespace

SpaceTimeField eval_poly(const PolyMap& map, const SpaceTimeVectorField& v)
{
    if (!map.scalar())
        throw std::invalid_argument("eval_poly: expected scalar map");
    const SpaceTimeField& ref = v.comp[0];
    SpaceTimeField out(ref.dim(), ref.trunc(), ref.nt(), ref.horizon());
    for (int i = 0; i <= ref.nt(); ++i)
        out.slice(i) = eval_poly_slice(map.rows[0], slice_ptrs(v, i));
    return out;
}

SpaceTimeVectorField eval_poly_vector(const PolyMap& map, const SpaceTimeVectorField& v)
{
    const SpaceTimeField& ref = v.comp[0];
    if (map.rows.size() != v.comp.size())
        throw std::invalid_argument("eval_poly_vector: row count must equal d");
    SpaceTimeVectorField out;
    for (std::size_t n = 0; n < map.rows.size(); ++n) {
        SpaceTimeField comp(ref.dim(), ref.trunc(), ref.nt(), ref.horizon());
        for (int i = 0; i <= ref.nt(); ++i)
            comp.slice(i) = eval_poly_slice(map.rows[n], slice_ptrs(v, i));
        out.comp.push_back(std::move(comp));
    }
    return out;
}

std::vector<Complex> pairing_A(const SpaceTimeField& f_of_v, const SpaceTimeField& m)
{
    if (!f_of_v.same_shape(m))
        throw std::invalid_argument("pairing_A: grid mismatch");
    std::vector<Complex> a(static_cast<std::size_t>(f_of_v.nt()) + 1);
    for (int i = 0; i <= f_of_v.nt(); ++i) {
        const SpectralField& f = f_of_v.slice(i);
        const SpectralField& ms = m.slice(i);
        Complex sum{0.0, 0.0};
        for (std::size_t j = 0; j < f.size(); ++j) {
            Mode neg = f.mode(j);
            for (int axis = 0; axis < f.dim(); ++axis)
                neg[static_cast<std::size_t>(axis)] = -neg[static_cast<std::size_t>(axis)];
            sum += f[j] * ms.at(neg);
        }
        a[static_cast<std::size_t>(i)] = sum;
    }
    return a;
}

SpaceTimeField eval_H1(const HamiltonianSpec& spec, const SpaceTimeVectorField& v,
                       const SpaceTimeField& m)
{
    SpaceTimeField g = eval_poly(spec.g1, v);
    const std::vector<Complex> a = pairing_A(eval_poly(spec.f1, v), m);
    for (int i = 0; i <= g.nt(); ++i)
        g.slice(i) *= a[static_cast<std::size_t>(i)];
    return g;
}

SpaceTimeVectorField eval_H2(const HamiltonianSpec& spec, const SpaceTimeVectorField& v,
                             const SpaceTimeField& m)
{
    SpaceTimeVectorField g = eval_poly_vector(spec.g2, v);
    const std::vector<Complex> a = pairing_A(eval_poly(spec.f2, v), m);
    for (auto& comp : g.comp)
        for (int i = 0; i <= comp.nt(); ++i)
            comp.slice(i) *= a[static_cast<std::size_t>(i)];
    return g;
}

GrowthConstants growth_constants(const HamiltonianSpec& spec)
{
    return spec.constants;
}

namespace {

double lipschitz_bracket(const GrowthEntry& f, const GrowthEntry& g, double rho1,
                         double rho2)
{
    return 2.0 * f.c * g.c_tilde * std::pow(rho1, f.p + g.p_tilde) * rho2
        + 2.0 * g.c * f.c_tilde * std::pow(rho1, g.p + f.p_tilde) * rho2
        + f.c * g.c * std::pow(rho1, f.p + g.p);
}

} // namespace

std::pair<double, double> lipschitz_bound(const HamiltonianSpec& spec, double rho1,
                                          double rho2)
{
    if (rho1 <= 0.0 || rho2 <= 0.0)
        throw std::invalid_argument("lipschitz_bound: radii must be positive");
    return {lipschitz_bracket(spec.constants.f1, spec.constants.g1, rho1, rho2),
            lipschitz_bracket(spec.constants.f2, spec.constants.g2, rho1, rho2)};
}

} // namespace mfg
