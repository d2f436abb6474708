#ifndef FWM_RUNNER_HPP
#define FWM_RUNNER_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fwm/config.hpp"

namespace fwm {

struct Column {
    std::string name;
    std::string unit;
    bool noise = false;  // converted by --db
};

struct Row {
    std::vector<std::optional<double>> values;  // one per column
    std::string flag;                           // empty when the point is clean
};

struct Table {
    std::string model;
    std::string axis;
    std::vector<Column> columns;
    std::vector<Row> rows;
    bool has_flag = false;
};

// Evaluates every sweep point; rows are ordered by sweep index whatever the thread count.
Table run_sweep(const RunConfig& cfg, int threads = 1);

// Built-in oracle comparisons (ideal amplifier, loss chain, optics identities).
Table reference_checks();

void write_csv(const Table& t, std::ostream& os, bool db = false);
void write_json(const Table& t, std::ostream& os, bool db = false);

} // namespace fwm

#endif
