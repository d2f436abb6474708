// fwm: batch front-end for the four-wave-mixing noise model.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fwm/runner.hpp"

namespace {

int emit(const fwm::Table& t, const std::string& out, fwm::OutputFormat fmt, bool db)
{
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out.empty() && out != "-") {
        file.open(out, std::ios::binary);
        if (!file) {
            std::cerr << "fwm: cannot write " << out << "\n";
            return 2;
        }
        os = &file;
    }
    if (fmt == fwm::OutputFormat::json) fwm::write_json(t, *os, db);
    else fwm::write_csv(t, *os, db);
    return 0;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw fwm::config_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Four-wave mixing gain and quantum-noise spectra"};
    app.require_subcommand(1);

    std::string config, out, format;
    int threads = 1;
    bool db = false;
    const std::map<std::string, fwm::OutputFormat> formats = {
        {"csv", fwm::OutputFormat::csv}, {"json", fwm::OutputFormat::json}};

    auto* run = app.add_subcommand("run", "evaluate the sweep described by a config file");
    run->add_option("--config", config, "config file")->required();
    run->add_option("--out", out, "output path (default: output.path or stdout)");
    run->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    run->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    run->add_flag("--db", db, "noise columns in dB");

    auto* val = app.add_subcommand("validate", "check a config file without running it");
    val->add_option("--config", config, "config file")->required();

    auto* ref = app.add_subcommand("reference", "compare model spectra against closed forms");
    ref->add_option("--out", out, "output path (default: stdout)");
    ref->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    ref->add_flag("--db", db, "noise columns in dB");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*val) {
            const auto diags = fwm::validate_config(slurp(config));
            for (const auto& d : diags) std::cerr << d.str() << "\n";
            if (diags.empty()) std::cout << "ok\n";
            return diags.empty() ? 0 : 1;
        }
        if (*ref) {
            const fwm::Table t = fwm::reference_checks();
            const auto fmt = format.empty() ? fwm::OutputFormat::csv : formats.at(format);
            if (int rc = emit(t, out, fmt, db)) return rc;
            for (const auto& r : t.rows)
                if (!r.flag.empty()) return 1;
            return 0;
        }
        fwm::RunConfig cfg = fwm::load_config(slurp(config));
        if (!format.empty()) cfg.format = formats.at(format);
        if (!out.empty()) cfg.out_path = out;
        return emit(fwm::run_sweep(cfg, threads), cfg.out_path, cfg.format, db);
    } catch (const fwm::config_error& e) {
        std::cerr << e.what();
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "fwm: " << e.what() << "\n";
        return 3;
    }
}
