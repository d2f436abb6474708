#include "fwm/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace fwm {

namespace {

constexpr double kTwoPi = 2 * M_PI;

const std::set<std::string> kKnownKeys = {
    "model.type",
    "atom.gamma_e_mhz", "atom.gamma_g_mhz", "atom.omega0_mhz", "atom.delta1_mhz",
    "atom.delta2_mhz", "atom.rabi_mhz",
    "medium.optical_depth", "medium.langevin", "medium.langevin_scale",
    "vapor.temperature_c", "vapor.mass_u", "vapor.wavelength_nm", "vapor.pump_waist_um",
    "vapor.probe_waist_um", "vapor.cell_length_mm", "vapor.cross_section_m2",
    "vapor.resonant_od_fraction", "vapor.slice_check",
    "eit.gamma_e_mhz", "eit.gamma_g_mhz", "eit.delta1_mhz", "eit.rabi_c_mhz", "eit.chi_scale",
    "reference.gain", "reference.transmission", "reference.slices",
    "sweep.axis", "sweep.start", "sweep.stop", "sweep.count", "sweep.analysis_mhz",
    "quadrature.z_nodes", "quadrature.velocity_order",
    "output.path", "output.format",
    "run.seed",
};

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::optional<double> to_number(const std::string& s)
{
    double v = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size() || !std::isfinite(v))
        return std::nullopt;
    return v;
}

std::optional<long long> to_integer(const std::string& s)
{
    long long v = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

class Reader {
public:
    Reader(const ConfigFile& f, std::vector<Diagnostic>& d) : f_(f), d_(d) {}

    const ConfigFile::Entry* find(const std::string& key) const
    {
        auto it = f_.entries.find(key);
        return it == f_.entries.end() ? nullptr : &it->second;
    }

    void fail(const std::string& key, const std::string& why)
    {
        const auto* e = find(key);
        d_.push_back({e ? e->line : 0, key, why});
    }

    std::optional<std::string> text(const std::string& key, bool required)
    {
        const auto* e = find(key);
        if (!e) {
            if (required) fail(key, "missing");
            return std::nullopt;
        }
        return e->value;
    }

    // Reads a number; nullopt when absent or malformed (malformed is reported).
    std::optional<double> number(const std::string& key, bool required)
    {
        auto t = text(key, required);
        if (!t) return std::nullopt;
        auto v = to_number(*t);
        if (!v) fail(key, "not a number: '" + *t + "'");
        return v;
    }

    std::optional<long long> integer(const std::string& key, bool required)
    {
        auto t = text(key, required);
        if (!t) return std::nullopt;
        auto v = to_integer(*t);
        if (!v) fail(key, "not an integer: '" + *t + "'");
        return v;
    }

    // Checked number with a default when absent.
    double get(const std::string& key, bool required, double def, bool (*ok)(double),
               const char* why)
    {
        auto v = number(key, required);
        if (!v) return def;
        if (ok && !ok(*v)) {
            fail(key, why);
            return def;
        }
        return *v;
    }

private:
    const ConfigFile& f_;
    std::vector<Diagnostic>& d_;
};

bool positive(double x) { return x > 0; }
bool nonnegative(double x) { return x >= 0; }

const std::map<ModelKind, std::vector<std::string>> kAxes = {
    {ModelKind::cold, {"delta1", "delta2", "rabi", "optical_depth", "omega", "gamma_g"}},
    {ModelKind::vapor,
     {"delta1", "delta2", "rabi", "optical_depth", "omega", "gamma_g", "temperature"}},
    {ModelKind::eit, {"delta2", "rabi_c"}},
    {ModelKind::reference, {"gain", "transmission"}},
};

void read_atom(Reader& r, RunConfig& c)
{
    const std::string& ax = c.sweep.axis;
    auto& a = c.medium.atom;
    a.gamma_e = kTwoPi * r.get("atom.gamma_e_mhz", true, 1.0, positive, "must be > 0");
    a.gamma_g = kTwoPi * r.get("atom.gamma_g_mhz", ax != "gamma_g", 0.0, nonnegative,
                               "must be >= 0");
    a.omega0 = kTwoPi * r.get("atom.omega0_mhz", true, 0.0, nullptr, "");
    a.delta1 = kTwoPi * r.get("atom.delta1_mhz", ax != "delta1", 0.0, nullptr, "");
    a.delta2 = kTwoPi * r.get("atom.delta2_mhz", ax != "delta2", 0.0, nullptr, "");
    a.rabi = kTwoPi * r.get("atom.rabi_mhz", ax != "rabi", 0.0, nonnegative, "must be >= 0");

    if (auto t = r.text("medium.optical_depth", ax != "optical_depth")) {
        if (*t == "auto" && c.model == ModelKind::vapor) {
            c.auto_optical_depth = true;
        } else if (auto v = to_number(*t); v && *v >= 0) {
            c.medium.optical_depth = *v;
        } else {
            r.fail("medium.optical_depth", c.model == ModelKind::vapor
                                               ? "must be a number >= 0 or 'auto'"
                                               : "must be a number >= 0");
        }
    }
    if (auto t = r.text("medium.langevin", false)) {
        if (*t == "on") c.langevin = true;
        else if (*t == "off") c.langevin = false;
        else r.fail("medium.langevin", "must be 'on' or 'off'");
    }
    if (auto t = r.text("medium.langevin_scale", false)) {
        if (*t == "auto") {
            c.auto_scale = true;
        } else if (auto v = to_number(*t); v && *v > 0) {
            c.auto_scale = false;
            c.medium.langevin_scale = *v;
        } else {
            r.fail("medium.langevin_scale", "must be 'auto' or a number > 0");
        }
    }
}

void read_vapor(Reader& r, RunConfig& c)
{
    auto& v = c.vapor;
    v.temperature = 273.15 + r.get("vapor.temperature_c", c.sweep.axis != "temperature", 120.0,
                                   [](double t) { return t > -273.15; }, "below absolute zero");
    v.atomic_mass = kAtomicMassUnit * r.get("vapor.mass_u", false, kRb85Mass / kAtomicMassUnit,
                                            positive, "must be > 0");
    v.wavelength = 1e-9 * r.get("vapor.wavelength_nm", false, 795.0, positive, "must be > 0");
    v.pump_waist = 1e-6 * r.get("vapor.pump_waist_um", false, 600.0, positive, "must be > 0");
    v.probe_waist = 1e-6 * r.get("vapor.probe_waist_um", false, 300.0, positive, "must be > 0");
    v.cell_length = 1e-3 * r.get("vapor.cell_length_mm", false, 12.5, positive, "must be > 0");
    v.cross_section = r.get("vapor.cross_section_m2", false, v.cross_section, positive,
                            "must be > 0");
    c.resonant_od_fraction = r.get("vapor.resonant_od_fraction", false, 1.0, nonnegative,
                                   "must be >= 0");
    if (auto n = r.integer("vapor.slice_check", false)) {
        if (*n != 0 && *n < 100) r.fail("vapor.slice_check", "must be 0 or >= 100");
        else c.slice_check = int(*n);
    }
    if (!(v.pump_waist > v.probe_waist))
        r.fail("vapor.pump_waist_um", "pump waist must exceed probe waist");
}

void read_eit(Reader& r, RunConfig& c)
{
    auto& l = c.lambda;
    l.gamma_e = kTwoPi * r.get("eit.gamma_e_mhz", true, 1.0, positive, "must be > 0");
    l.gamma_g = kTwoPi * r.get("eit.gamma_g_mhz", true, 0.0, nonnegative, "must be >= 0");
    l.delta1 = kTwoPi * r.get("eit.delta1_mhz", true, 0.0, nullptr, "");
    l.rabi_c = kTwoPi * r.get("eit.rabi_c_mhz", c.sweep.axis != "rabi_c", 0.0, nonnegative,
                              "must be >= 0");
    l.chi_scale = r.get("eit.chi_scale", false, 1.0, positive, "must be > 0");
}

void read_reference(Reader& r, RunConfig& c)
{
    c.ref_gain = r.get("reference.gain", c.sweep.axis != "gain", 1.0,
                       [](double g) { return g >= 1; }, "must be >= 1");
    c.ref_transmission = r.get("reference.transmission", false, 1.0,
                               [](double t) { return t > 0 && t <= 1; }, "must be in (0, 1]");
    if (auto n = r.integer("reference.slices", false)) {
        if (*n < 1) r.fail("reference.slices", "must be >= 1");
        else c.ref_slices = int(*n);
    }
}

RunConfig build(const ConfigFile& f, std::vector<Diagnostic>& d)
{
    Reader r(f, d);
    RunConfig c;

    for (const auto& [k, e] : f.entries)
        if (!kKnownKeys.count(k)) d.push_back({e.line, k, "unknown key"});

    bool model_ok = false;
    if (auto t = r.text("model.type", true)) {
        static const std::map<std::string, ModelKind> names = {
            {"cold", ModelKind::cold}, {"vapor", ModelKind::vapor},
            {"eit", ModelKind::eit}, {"reference", ModelKind::reference}};
        if (auto it = names.find(*t); it != names.end()) {
            c.model = it->second;
            model_ok = true;
        } else {
            r.fail("model.type", "must be one of cold, vapor, eit, reference");
        }
    }

    if (auto t = r.text("sweep.axis", true)) {
        c.sweep.axis = *t;
        if (model_ok) {
            const auto& ax = kAxes.at(c.model);
            if (std::find(ax.begin(), ax.end(), *t) == ax.end())
                r.fail("sweep.axis", "axis '" + *t + "' not available for model "
                                         + model_name(c.model));
        }
    }
    c.sweep.start = r.get("sweep.start", true, 0.0, nullptr, "");
    c.sweep.stop = r.get("sweep.stop", true, 0.0, nullptr, "");
    if (auto n = r.integer("sweep.count", true)) {
        if (*n < 1) r.fail("sweep.count", "must be >= 1");
        else c.sweep.count = int(*n);
    }
    c.analysis = kTwoPi * r.get("sweep.analysis_mhz", false, 1.0, nullptr, "");

    if (auto n = r.integer("quadrature.z_nodes", false)) {
        if (*n < 8) r.fail("quadrature.z_nodes", "must be >= 8");
        else c.z_nodes = int(*n);
    }
    if (auto n = r.integer("quadrature.velocity_order", false)) {
        if (*n < 16) r.fail("quadrature.velocity_order", "must be >= 16");
        else c.velocity_order = int(*n);
    }
    if (auto t = r.text("output.path", false)) c.out_path = *t;
    if (auto t = r.text("output.format", false)) {
        if (*t == "csv") c.format = OutputFormat::csv;
        else if (*t == "json") c.format = OutputFormat::json;
        else r.fail("output.format", "must be csv or json");
    }
    if (auto n = r.integer("run.seed", false)) {
        if (*n < 0) r.fail("run.seed", "must be >= 0");
        else c.seed = std::uint64_t(*n);
    }

    if (!model_ok) return c;
    switch (c.model) {
    case ModelKind::cold: read_atom(r, c); break;
    case ModelKind::vapor: read_atom(r, c); read_vapor(r, c); break;
    case ModelKind::eit: read_eit(r, c); break;
    case ModelKind::reference: read_reference(r, c); break;
    }
    if (c.model == ModelKind::reference && c.sweep.axis == "gain"
        && std::min(c.sweep.start, c.sweep.stop) < 1)
        r.fail("sweep.start", "gain sweep must stay >= 1");
    if (c.model == ModelKind::reference && c.sweep.axis == "transmission"
        && (std::min(c.sweep.start, c.sweep.stop) <= 0 || std::max(c.sweep.start, c.sweep.stop) > 1))
        r.fail("sweep.start", "transmission sweep must stay in (0, 1]");
    return c;
}

} // namespace

std::string Diagnostic::str() const
{
    std::ostringstream os;
    os << "config";
    if (line > 0) os << ':' << line;
    os << ": " << key << ": " << reason;
    return os.str();
}

double Sweep::value(int i) const
{
    if (count <= 1) return start;
    return start + (stop - start) * double(i) / double(count - 1);
}

ConfigFile parse_config_text(const std::string& text, std::vector<Diagnostic>& diags)
{
    ConfigFile f;
    std::istringstream in(text);
    std::string raw, section;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find_first_of("#;");
        const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']' || s.size() < 3) {
                diags.push_back({line, s, "malformed section header"});
                continue;
            }
            section = trim(s.substr(1, s.size() - 2));
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            diags.push_back({line, s, "expected key = value"});
            continue;
        }
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        if (section.empty()) {
            diags.push_back({line, key, "key outside of any section"});
            continue;
        }
        const std::string full = section + "." + key;
        if (key.empty() || val.empty()) {
            diags.push_back({line, full, "empty key or value"});
            continue;
        }
        if (auto it = f.entries.find(full); it != f.entries.end()) {
            diags.push_back({line, full,
                             "duplicate key (first on line " + std::to_string(it->second.line)
                                 + ")"});
            continue;
        }
        f.entries[full] = {val, line};
    }
    return f;
}

std::vector<Diagnostic> validate_config(const std::string& text)
{
    std::vector<Diagnostic> d;
    const ConfigFile f = parse_config_text(text, d);
    build(f, d);
    std::stable_sort(d.begin(), d.end(),
                     [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
    return d;
}

RunConfig load_config(const std::string& text)
{
    std::vector<Diagnostic> d;
    const ConfigFile f = parse_config_text(text, d);
    RunConfig c = build(f, d);
    if (!d.empty()) {
        std::stable_sort(d.begin(), d.end(),
                         [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
        std::string msg;
        for (const auto& x : d) msg += x.str() + "\n";
        throw config_error(msg);
    }
    return c;
}

RunConfig load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_config(ss.str());
}

std::string model_name(ModelKind m)
{
    switch (m) {
    case ModelKind::cold: return "cold";
    case ModelKind::vapor: return "vapor";
    case ModelKind::eit: return "eit";
    case ModelKind::reference: return "reference";
    }
    return "?";
}

} // namespace fwm
