#include "mfg/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mfg {

std::string format_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_field(std::ostream& os, const SpaceTimeField& f)
{
    os << f.dim() << ' ' << f.trunc() << ' ' << f.nt() << ' '
       << format_double(f.horizon()) << '\n';
    for (int i = 0; i <= f.nt(); ++i) {
        const SpectralField& s = f.slice(i);
        for (std::size_t j = 0; j < s.size(); ++j) {
            const Mode k = s.mode(j);
            os << i;
            for (int a = 0; a < f.dim(); ++a)
                os << ' ' << k[static_cast<std::size_t>(a)];
            os << ' ' << format_double(s[j].real()) << ' '
               << format_double(s[j].imag()) << '\n';
        }
    }
}

SpaceTimeField read_field(std::istream& is)
{
    int dim = 0, trunc = 0, nt = -1;
    double horizon = 0.0;
    if (!(is >> dim >> trunc >> nt >> horizon))
        throw std::runtime_error("field file: bad header");
    if (dim < 1 || dim > 3 || trunc < 1 || nt < 0 || horizon <= 0.0)
        throw std::runtime_error("field file: header out of range");

    SpaceTimeField f(dim, trunc, nt, horizon, false);
    const std::size_t per_slice = f.slice(0).size();
    for (std::size_t line = 0; line < per_slice * static_cast<std::size_t>(nt + 1);
         ++line) {
        int ti = 0;
        Mode k{0, 0, 0};
        double re = 0.0, im = 0.0;
        if (!(is >> ti))
            throw std::runtime_error("field file: truncated");
        for (int a = 0; a < dim; ++a)
            if (!(is >> k[static_cast<std::size_t>(a)]))
                throw std::runtime_error("field file: truncated");
        if (!(is >> re >> im))
            throw std::runtime_error("field file: truncated");
        if (ti < 0 || ti > nt || !f.slice(ti).contains(k))
            throw std::runtime_error("field file: index out of range");
        f.slice(ti).set(k, Complex{re, im});
    }
    bool real = true;
    for (int i = 0; i <= nt && real; ++i)
        real = conjugate_asymmetry(f.slice(i)) <= 1e-13;
    if (real)
        for (int i = 0; i <= nt; ++i)
            f.slice(i).set_real_valued(true);
    return f;
}

void write_field_file(const std::string& path, const SpaceTimeField& f)
{
    std::ofstream os(path);
    if (!os)
        throw std::runtime_error("cannot open for writing: " + path);
    write_field(os, f);
}

SpaceTimeField read_field_file(const std::string& path)
{
    std::ifstream is(path);
    if (!is)
        throw std::runtime_error("cannot open for reading: " + path);
    return read_field(is);
}

} // namespace mfg
