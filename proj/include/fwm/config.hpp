#ifndef FWM_CONFIG_HPP
#define FWM_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fwm/eit.hpp"
#include "fwm/propagation.hpp"
#include "fwm/vapor.hpp"

namespace fwm {

struct Diagnostic {
    int line = 0;     // 0 when the key is missing altogether
    std::string key;  // section.key
    std::string reason;

    std::string str() const;
};

// Raw "section.key = value" entries with the line they came from.
struct ConfigFile {
    struct Entry {
        std::string value;
        int line = 0;
    };
    std::map<std::string, Entry> entries;
};

ConfigFile parse_config_text(const std::string& text, std::vector<Diagnostic>& diags);

enum class ModelKind { cold, vapor, eit, reference };
enum class OutputFormat { csv, json };

struct Sweep {
    std::string axis;
    double start = 0, stop = 0;
    int count = 1;

    double value(int i) const;
};

// Parsed configuration. All rates already in rad/us, temperatures in K.
struct RunConfig {
    ModelKind model = ModelKind::cold;
    MediumParams medium;
    bool langevin = true;
    bool auto_scale = true;         // calibrate per sweep point
    bool auto_optical_depth = false;  // vapor: alpha L from density
    VaporParams vapor;
    double resonant_od_fraction = 1.0;
    int slice_check = 0;
    LambdaParams lambda;
    double ref_gain = 1, ref_transmission = 1;
    int ref_slices = 1;
    Sweep sweep;
    double analysis = kCalibrationOmega;  // rad/us
    int z_nodes = kZNodes;
    int velocity_order = kVelocityOrder;
    std::string out_path;
    OutputFormat format = OutputFormat::csv;
    std::uint64_t seed = 42;
};

// Every diagnostic that stops run() from accepting the text.
std::vector<Diagnostic> validate_config(const std::string& text);

// Throws config_error listing all diagnostics when invalid.
RunConfig load_config(const std::string& text);
RunConfig load_config_file(const std::string& path);

std::string model_name(ModelKind m);

} // namespace fwm

#endif
