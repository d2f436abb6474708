#include "fwm/runner.hpp"

#include <atomic>
#include <charconv>
#include <thread>

#include <json.hpp>

#include "fwm/reference.hpp"
#include "fwm/spectra.hpp"

namespace fwm {

namespace {

constexpr double kTwoPi = 2 * M_PI;

std::string axis_unit(const std::string& axis)
{
    if (axis == "temperature") return "degC";
    if (axis == "optical_depth" || axis == "gain" || axis == "transmission") return "1";
    return "MHz";
}

std::vector<Column> columns_for(const RunConfig& c)
{
    std::vector<Column> cols = {{"sweep_value", c.sweep.axis + " " + axis_unit(c.sweep.axis)}};
    switch (c.model) {
    case ModelKind::cold:
    case ModelKind::vapor:
        cols.insert(cols.end(), {{"Ga", "1"}, {"Gb", "1"},
                                 {"S_Nminus", "SQL", true}, {"S_phiplus", "SQL", true},
                                 {"inseparability", "SQL", true}, {"S_Na", "SQL", true}});
        if (c.model == ModelKind::vapor) {
            cols.push_back({"prepared_fraction", "1"});
            if (c.slice_check > 0) cols.push_back({"slice_deviation", "1"});
        }
        break;
    case ModelKind::eit:
        cols.insert(cols.end(), {{"chi_re", "chi_scale"}, {"chi_im", "chi_scale"}});
        break;
    case ModelKind::reference:
        cols.insert(cols.end(), {{"Ga", "1"}, {"Gb", "1"}, {"S_Nminus", "SQL", true}});
        if (c.ref_transmission == 1 && c.sweep.axis != "transmission")
            cols.insert(cols.end(), {{"S_phiplus", "SQL", true},
                                     {"inseparability", "SQL", true}, {"S_Na", "SQL", true}});
        break;
    }
    return cols;
}

Row fwm_row(const RunConfig& c, double x)
{
    MediumParams mp = c.medium;
    VaporParams vp = c.vapor;
    double omega = c.analysis;
    const std::string& ax = c.sweep.axis;
    if (ax == "delta1") mp.atom.delta1 = kTwoPi * x;
    else if (ax == "delta2") mp.atom.delta2 = kTwoPi * x;
    else if (ax == "rabi") mp.atom.rabi = kTwoPi * x;
    else if (ax == "gamma_g") mp.atom.gamma_g = kTwoPi * x;
    else if (ax == "optical_depth") mp.optical_depth = x;
    else if (ax == "omega") omega = kTwoPi * x;
    else if (ax == "temperature") vp.temperature = 273.15 + x;

    const bool vapor = c.model == ModelKind::vapor;
    Row row;
    row.values.assign(vapor ? (c.slice_check > 0 ? 9 : 8) : 7, std::nullopt);
    row.values[0] = x;
    try {
        if (vapor && c.auto_optical_depth) mp.optical_depth = optical_depth(vp);
        if (c.langevin && c.auto_scale)
            mp.langevin_scale = calibrate_langevin_scale(mp, kCalibrationOmega, c.z_nodes);

        SpectralInputs in;
        if (vapor) {
            in.t = doppler_transfer(mp, vp, omega, c.velocity_order);
            in.t0 = expm(doppler_generator(mp, vp, 0.0, c.velocity_order));
            // diffusion is taken from the atoms at rest
            if (c.langevin) in.d = integrated_diffusion(mp, omega, c.z_nodes);
        } else {
            in = spectral_inputs(mp, omega, {c.z_nodes, c.langevin});
        }
        const SpectralPoint sp = evaluate(in);
        double ga = sp.gain_a, gb = sp.gain_b;
        if (vapor) {
            const ResidualTransmission rt = residual_transmission(mp, vp, c.resonant_od_fraction);
            ga *= rt.front_loss_factor;
            gb *= rt.front_loss_factor;
            row.values[7] = rt.prepared_fraction;
            if (c.slice_check > 0)
                row.values[8] = slice_consistency(mp, vp, omega, c.slice_check, c.seed).deviation;
        }
        row.values[1] = ga;
        row.values[2] = gb;
        row.values[3] = sp.s_nminus;
        row.values[4] = sp.s_phiplus;
        row.values[5] = sp.insep;
        row.values[6] = sp.s_na;
    } catch (const pole_error&) {
        std::fill(row.values.begin() + 1, row.values.end(), std::nullopt);
        row.flag = "pole";
    } catch (const calibration_error&) {
        std::fill(row.values.begin() + 1, row.values.end(), std::nullopt);
        row.flag = "calibration";
    } catch (const normalization_error&) {
        std::fill(row.values.begin() + 1, row.values.end(), std::nullopt);
        row.flag = "normalization";
    }
    return row;
}

Row eit_row(const RunConfig& c, double x)
{
    LambdaParams lp = c.lambda;
    double d2 = 0;
    if (c.sweep.axis == "delta2") d2 = kTwoPi * x;
    else lp.rabi_c = kTwoPi * x;
    Row row;
    row.values = {x, std::nullopt, std::nullopt};
    try {
        const cd chi = susceptibility(lp, d2);
        row.values[1] = chi.real();
        row.values[2] = chi.imag();
    } catch (const pole_error&) {
        row.flag = "pole";
    }
    return row;
}

Row reference_row(const RunConfig& c, double x)
{
    double G = c.ref_gain, T = c.ref_transmission;
    if (c.sweep.axis == "gain") G = x;
    else T = x;
    const ChainResult r = sliced_amp_loss(chain_for_totals(G, T, c.ref_slices));
    Row row;
    row.values = {x, r.gain_a, r.gain_b, r.s_nminus};
    if (T == 1 && c.sweep.axis != "transmission") {
        const SpectralPoint sp = evaluate(ideal_amplifier_inputs(G));
        row.values.insert(row.values.end(), {sp.s_phiplus, sp.insep, sp.s_na});
    }
    return row;
}

std::string fmt(double v)
{
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::optional<double> shown(const Column& col, const std::optional<double>& v, bool db)
{
    if (!v || !db || !col.noise) return v;
    if (!(*v > 0)) return std::nullopt;
    return to_dB(*v);
}

std::string shown_unit(const Column& col, bool db)
{
    return db && col.noise ? "dB" : col.unit;
}

} // namespace

Table run_sweep(const RunConfig& cfg, int threads)
{
    Table t;
    t.model = model_name(cfg.model);
    t.axis = cfg.sweep.axis;
    t.columns = columns_for(cfg);
    t.has_flag = cfg.model != ModelKind::reference;
    t.rows.resize(cfg.sweep.count);

    auto point = [&](int i) {
        const double x = cfg.sweep.value(i);
        switch (cfg.model) {
        case ModelKind::cold:
        case ModelKind::vapor: return fwm_row(cfg, x);
        case ModelKind::eit: return eit_row(cfg, x);
        case ModelKind::reference: return reference_row(cfg, x);
        }
        return Row{};
    };

    const int n = cfg.sweep.count;
    const int nt = std::max(1, std::min(threads, n));
    if (nt == 1) {
        for (int i = 0; i < n; ++i) t.rows[i] = point(i);
        return t;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (int k = 0; k < nt; ++k)
        pool.emplace_back([&] {
            for (int i = next++; i < n && !failed; i = next++) {
                try {
                    t.rows[i] = point(i);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return t;
}

Table reference_checks()
{
    Table t;
    t.model = "reference_checks";
    t.axis = "gain";
    t.columns = {{"sweep_value", "gain 1"},
                 {"S_Nminus", "SQL", true},  {"S_phiplus", "SQL", true},
                 {"inseparability", "SQL", true}, {"S_Na", "SQL", true},
                 {"ideal_pia_noise", "SQL", true}, {"chain_S_Nminus", "SQL", true},
                 {"max_abs_diff", "1"}};
    t.has_flag = true;
    for (double G : {1.0, 1.5, 2.0, 3.0, 5.0, 10.0}) {
        const SpectralPoint sp = evaluate(ideal_amplifier_inputs(G));
        const double oracle = ideal_pia_noise(G);
        const double chain = sliced_amp_loss(chain_for_totals(G, 1.0, 80)).s_nminus;
        double diff = 0;
        for (double v : {sp.s_nminus, sp.s_phiplus, sp.insep, chain})
            diff = std::max(diff, std::abs(v - oracle));
        diff = std::max(diff, std::abs(sp.s_na - (2 * G - 1)));
        Row r;
        r.values = {G, sp.s_nminus, sp.s_phiplus, sp.insep, sp.s_na, oracle, chain, diff};
        if (diff > 1e-9) r.flag = "mismatch";
        t.rows.push_back(std::move(r));
    }
    return t;
}

void write_csv(const Table& t, std::ostream& os, bool db)
{
    for (size_t j = 0; j < t.columns.size(); ++j) {
        if (j) os << ',';
        os << t.columns[j].name << " [" << shown_unit(t.columns[j], db) << ']';
    }
    if (t.has_flag) os << ",flag";
    os << '\n';
    for (const auto& r : t.rows) {
        for (size_t j = 0; j < t.columns.size(); ++j) {
            if (j) os << ',';
            if (auto v = shown(t.columns[j], r.values[j], db)) os << fmt(*v);
        }
        if (t.has_flag) os << ',' << r.flag;
        os << '\n';
    }
}

void write_json(const Table& t, std::ostream& os, bool db)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["model"] = t.model;
    j["axis"] = t.axis;
    ordered_json cols = ordered_json::array();
    for (const auto& c : t.columns)
        cols.push_back({{"name", c.name}, {"unit", shown_unit(c, db)}});
    if (t.has_flag) cols.push_back({{"name", "flag"}, {"unit", ""}});
    j["columns"] = cols;
    ordered_json rows = ordered_json::array();
    for (const auto& r : t.rows) {
        ordered_json o;
        for (size_t k = 0; k < t.columns.size(); ++k) {
            const auto v = shown(t.columns[k], r.values[k], db);
            o[t.columns[k].name] = v ? ordered_json(*v) : ordered_json(nullptr);
        }
        if (t.has_flag) o["flag"] = r.flag;
        rows.push_back(std::move(o));
    }
    j["rows"] = rows;
    os << j.dump(2) << '\n';
}

} // namespace fwm
