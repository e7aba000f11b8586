#include "mfg/config.hpp"

#include "mfg/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace mfg {

namespace {

[[noreturn]] void fail(const std::string& msg)
{
    throw std::invalid_argument("config: " + msg);
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char delim)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, delim)) {
        item = trim(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

double to_double(const std::string& key, const std::string& v)
{
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size())
            fail(key + ": trailing characters in '" + v + "'");
        return x;
    } catch (const std::invalid_argument&) {
        fail(key + ": not a number: '" + v + "'");
    } catch (const std::out_of_range&) {
        fail(key + ": out of range: '" + v + "'");
    }
}

long long to_int(const std::string& key, const std::string& v)
{
    try {
        std::size_t pos = 0;
        const long long x = std::stoll(v, &pos);
        if (pos != v.size())
            fail(key + ": trailing characters in '" + v + "'");
        return x;
    } catch (const std::invalid_argument&) {
        fail(key + ": not an integer: '" + v + "'");
    } catch (const std::out_of_range&) {
        fail(key + ": out of range: '" + v + "'");
    }
}

std::vector<double> to_doubles(const std::string& key, const std::string& v)
{
    std::vector<double> out;
    for (const auto& tok : split(v, ' '))
        out.push_back(to_double(key, tok));
    return out;
}

std::vector<Monomial> parse_monomials(const std::string& key, const std::string& v)
{
    // "coeff p1 p2 p3; coeff p1 p2 p3; ..."
    std::vector<Monomial> out;
    for (const auto& entry : split(v, ';')) {
        const auto toks = split(entry, ' ');
        if (toks.size() != 4)
            fail(key + ": each monomial needs 'coeff p1 p2 p3'");
        Monomial m;
        m.coeff = to_double(key, toks[0]);
        for (int a = 0; a < 3; ++a)
            m.powers[static_cast<std::size_t>(a)]
                = static_cast<int>(to_int(key, toks[static_cast<std::size_t>(a) + 1]));
        out.push_back(m);
    }
    return out;
}

std::string monomials_to_string(const std::vector<Monomial>& terms)
{
    std::string out;
    for (const auto& m : terms) {
        if (!out.empty())
            out += "; ";
        out += format_double(m.coeff);
        for (int a = 0; a < 3; ++a)
            out += " " + std::to_string(m.powers[static_cast<std::size_t>(a)]);
    }
    return out;
}

struct RawConfig {
    // section -> ordered (key, value) pairs
    std::vector<std::tuple<std::string, std::string, std::string>> entries;

    const std::string* find(const std::string& section, const std::string& key) const
    {
        for (const auto& [s, k, v] : entries)
            if (s == section && k == key)
                return &v;
        return nullptr;
    }
};

RawConfig tokenize(const std::string& text)
{
    static const std::vector<std::string> kSections
        = {"problem", "hamiltonian", "payoff", "solver", "experiment"};
    RawConfig raw;
    std::stringstream ss(text);
    std::string line;
    std::string section;
    while (std::getline(ss, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                fail("malformed section header: " + line);
            section = trim(line.substr(1, line.size() - 2));
            bool known = false;
            for (const auto& s : kSections)
                known = known || s == section;
            if (!known)
                fail("unknown section [" + section + "]");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail("expected 'key = value': " + line);
        if (section.empty())
            fail("key outside any section: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (raw.find(section, key))
            fail("duplicate key " + section + "." + key);
        raw.entries.emplace_back(section, key, value);
    }
    return raw;
}

} // namespace

FullConfig parse_config(const std::string& text)
{
    const RawConfig raw = tokenize(text);
    FullConfig c;
    ProblemConfig& p = c.problem;
    ExperimentConfig& e = c.experiment;

    MeasureSpec m0;
    m0.kind = MeasureSpec::Kind::dirac;
    m0.locations = {{0.0, 0.0, 0.0}};
    m0.weights = {1.0};

    HamiltonianSpec custom;
    std::string ham_name = "example-quartic";
    bool ham_custom_poly = false;
    int ham_constants_seen = 0;

    for (const auto& [section, key, value] : raw.entries) {
        const std::string qual = section + "." + key;
        if (section == "problem") {
            if (key == "d")
                p.dim = static_cast<int>(to_int(qual, value));
            else if (key == "K")
                p.trunc = static_cast<int>(to_int(qual, value));
            else if (key == "N_t")
                p.nt = static_cast<int>(to_int(qual, value));
            else if (key == "T")
                p.horizon = to_double(qual, value);
            else if (key == "alpha")
                p.alpha = to_double(qual, value);
            else if (key == "m0_kind") {
                if (value == "dirac")
                    m0.kind = MeasureSpec::Kind::dirac;
                else if (value == "dirac_sum")
                    m0.kind = MeasureSpec::Kind::dirac_sum;
                else if (value == "band_limited")
                    m0.kind = MeasureSpec::Kind::band_limited;
                else
                    fail(qual + ": unknown kind '" + value + "'");
            } else if (key == "m0_locations") {
                m0.locations.clear();
                for (const auto& pt : split(value, ';')) {
                    const auto xs = to_doubles(qual, pt);
                    if (xs.empty() || xs.size() > 3)
                        fail(qual + ": each point needs 1-3 coordinates");
                    std::array<double, 3> loc{0.0, 0.0, 0.0};
                    for (std::size_t a = 0; a < xs.size(); ++a)
                        loc[a] = xs[a];
                    m0.locations.push_back(loc);
                }
            } else if (key == "m0_weights") {
                m0.weights = to_doubles(qual, value);
            } else if (key == "m0_coeffs") {
                m0.coeffs.clear();
                for (const auto& entry : split(value, ';')) {
                    const auto toks = split(entry, ' ');
                    if (toks.size() != 5)
                        fail(qual + ": each entry needs 'k1 k2 k3 re im'");
                    MeasureSpec::Coeff cf;
                    for (int a = 0; a < 3; ++a)
                        cf.k[static_cast<std::size_t>(a)] = static_cast<int>(
                            to_int(qual, toks[static_cast<std::size_t>(a)]));
                    cf.value = Complex{to_double(qual, toks[3]), to_double(qual, toks[4])};
                    m0.coeffs.push_back(cf);
                }
            } else
                fail("unknown key " + qual);
        } else if (section == "hamiltonian") {
            if (key == "name")
                ham_name = value;
            else if (key == "f1" || key == "g1" || key == "f2") {
                PolyMap pm;
                pm.rows.push_back(parse_monomials(qual, value));
                (key == "f1" ? custom.f1 : key == "g1" ? custom.g1 : custom.f2) = pm;
                ham_custom_poly = true;
            } else if (key == "g2") {
                PolyMap pm;
                for (const auto& row : split(value, '|'))
                    pm.rows.push_back(parse_monomials(qual, row));
                custom.g2 = pm;
                ham_custom_poly = true;
            } else {
                GrowthEntry* entry = nullptr;
                std::string base;
                for (const char* fn : {"f1", "g1", "f2", "g2"}) {
                    const std::string suffix = std::string("_") + fn;
                    if (key.size() > suffix.size()
                        && key.compare(key.size() - suffix.size(), suffix.size(), suffix)
                            == 0) {
                        base = key.substr(0, key.size() - suffix.size());
                        entry = fn == std::string("f1") ? &custom.constants.f1
                            : fn == std::string("g1")   ? &custom.constants.g1
                            : fn == std::string("f2")   ? &custom.constants.f2
                                                        : &custom.constants.g2;
                    }
                }
                if (!entry)
                    fail("unknown key " + qual);
                const double x = to_double(qual, value);
                if (base == "c")
                    entry->c = x;
                else if (base == "p")
                    entry->p = x;
                else if (base == "ct")
                    entry->c_tilde = x;
                else if (base == "pt")
                    entry->p_tilde = x;
                else
                    fail("unknown key " + qual);
                ++ham_constants_seen;
            }
        } else if (section == "payoff") {
            if (key == "kind") {
                if (value == "smoothing")
                    p.payoff.kind = PayoffSpec::Kind::smoothing;
                else if (value == "truncation")
                    p.payoff.kind = PayoffSpec::Kind::truncation;
                else
                    fail(qual + ": unknown kind '" + value + "'");
            } else if (key == "n")
                p.payoff.n = static_cast<int>(to_int(qual, value));
            else if (key == "gamma")
                p.payoff.gamma = to_double(qual, value);
            else if (key == "delta_g")
                p.payoff.delta_g = to_double(qual, value);
            else
                fail("unknown key " + qual);
        } else if (section == "solver") {
            if (key == "tol")
                p.tol = to_double(qual, value);
            else if (key == "max_iter")
                p.max_iter = static_cast<int>(to_int(qual, value));
            else if (key == "upsilon_choice")
                p.upsilon_choice = value;
            else
                fail("unknown key " + qual);
        } else { // experiment
            if (key == "trials")
                e.trials = static_cast<int>(to_int(qual, value));
            else if (key == "seed")
                e.seed = static_cast<std::uint64_t>(to_int(qual, value));
            else if (key == "eps_list")
                e.eps_list = to_doubles(qual, value);
            else if (key == "probe_times")
                e.probe_times = to_doubles(qual, value);
            else if (key == "dist_trunc")
                e.dist_trunc = static_cast<int>(to_int(qual, value));
            else if (key == "cd_weight_shift")
                e.cd_weight_shift = to_double(qual, value);
            else if (key == "cd_mode_eps")
                e.cd_mode_eps = to_double(qual, value);
            else
                fail("unknown key " + qual);
        }
    }

    if (m0.kind != MeasureSpec::Kind::band_limited
        && m0.locations.size() != m0.weights.size())
        fail("m0_locations and m0_weights must have matching lengths");

    p.m0 = m0;
    if (ham_name == "custom") {
        if (!ham_custom_poly)
            fail("hamiltonian.name = custom requires f1, g1, f2, g2");
        if (ham_constants_seen < 16)
            fail("custom hamiltonian requires all 16 growth constants "
                 "(c/p/ct/pt per function)");
        custom.name = "custom";
        p.hamiltonian = custom;
    } else {
        p.hamiltonian = HamiltonianSpec::by_name(ham_name, p.dim);
    }

    p.validate();
    return c;
}

FullConfig load_config(const std::string& path)
{
    std::ifstream is(path);
    if (!is)
        throw std::invalid_argument("config: cannot open " + path);
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_config(ss.str());
}

std::string serialize_config(const FullConfig& c)
{
    const ProblemConfig& p = c.problem;
    const ExperimentConfig& e = c.experiment;
    std::stringstream os;
    os << "[problem]\n";
    os << "d = " << p.dim << "\n";
    os << "K = " << p.trunc << "\n";
    os << "N_t = " << p.nt << "\n";
    os << "T = " << format_double(p.horizon) << "\n";
    os << "alpha = " << format_double(p.alpha) << "\n";
    os << "m0_kind = "
       << (p.m0.kind == MeasureSpec::Kind::dirac            ? "dirac"
               : p.m0.kind == MeasureSpec::Kind::dirac_sum  ? "dirac_sum"
                                                            : "band_limited")
       << "\n";
    if (p.m0.kind != MeasureSpec::Kind::band_limited) {
        os << "m0_locations = ";
        for (std::size_t i = 0; i < p.m0.locations.size(); ++i) {
            if (i)
                os << "; ";
            for (int a = 0; a < p.dim; ++a)
                os << (a ? " " : "")
                   << format_double(p.m0.locations[i][static_cast<std::size_t>(a)]);
        }
        os << "\n";
        os << "m0_weights = ";
        for (std::size_t i = 0; i < p.m0.weights.size(); ++i)
            os << (i ? " " : "") << format_double(p.m0.weights[i]);
        os << "\n";
    } else {
        os << "m0_coeffs = ";
        for (std::size_t i = 0; i < p.m0.coeffs.size(); ++i) {
            if (i)
                os << "; ";
            const auto& cf = p.m0.coeffs[i];
            os << cf.k[0] << " " << cf.k[1] << " " << cf.k[2] << " "
               << format_double(cf.value.real()) << " "
               << format_double(cf.value.imag());
        }
        os << "\n";
    }
    os << "\n[hamiltonian]\n";
    os << "name = " << p.hamiltonian.name << "\n";
    if (p.hamiltonian.name == "custom") {
        os << "f1 = " << monomials_to_string(p.hamiltonian.f1.rows[0]) << "\n";
        os << "g1 = " << monomials_to_string(p.hamiltonian.g1.rows[0]) << "\n";
        os << "f2 = " << monomials_to_string(p.hamiltonian.f2.rows[0]) << "\n";
        os << "g2 = ";
        for (std::size_t r = 0; r < p.hamiltonian.g2.rows.size(); ++r)
            os << (r ? " | " : "") << monomials_to_string(p.hamiltonian.g2.rows[r]);
        os << "\n";
        const auto& gc = p.hamiltonian.constants;
        const std::pair<const char*, const GrowthEntry*> fns[]
            = {{"f1", &gc.f1}, {"g1", &gc.g1}, {"f2", &gc.f2}, {"g2", &gc.g2}};
        for (const auto& [fn, entry] : fns) {
            os << "c_" << fn << " = " << format_double(entry->c) << "\n";
            os << "p_" << fn << " = " << format_double(entry->p) << "\n";
            os << "ct_" << fn << " = " << format_double(entry->c_tilde) << "\n";
            os << "pt_" << fn << " = " << format_double(entry->p_tilde) << "\n";
        }
    }
    os << "\n[payoff]\n";
    os << "kind = "
       << (p.payoff.kind == PayoffSpec::Kind::smoothing ? "smoothing" : "truncation")
       << "\n";
    os << "n = " << p.payoff.n << "\n";
    os << "gamma = " << format_double(p.payoff.gamma) << "\n";
    os << "delta_g = " << format_double(p.payoff.delta_g) << "\n";
    os << "\n[solver]\n";
    os << "tol = " << format_double(p.tol) << "\n";
    os << "max_iter = " << p.max_iter << "\n";
    os << "upsilon_choice = " << p.upsilon_choice << "\n";
    os << "\n[experiment]\n";
    os << "trials = " << e.trials << "\n";
    os << "seed = " << e.seed << "\n";
    os << "eps_list = ";
    for (std::size_t i = 0; i < e.eps_list.size(); ++i)
        os << (i ? " " : "") << format_double(e.eps_list[i]);
    os << "\n";
    os << "probe_times = ";
    for (std::size_t i = 0; i < e.probe_times.size(); ++i)
        os << (i ? " " : "") << format_double(e.probe_times[i]);
    os << "\n";
    os << "dist_trunc = " << e.dist_trunc << "\n";
    os << "cd_weight_shift = " << format_double(e.cd_weight_shift) << "\n";
    os << "cd_mode_eps = " << format_double(e.cd_mode_eps) << "\n";
    return os.str();
}

} // namespace mfg
