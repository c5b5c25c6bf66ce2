#pragma once

#include <optional>
#include <string>
#include <vector>

namespace y00 {

enum class Provenance { formula, monte_carlo, enumeration };

std::string to_string(Provenance p);

/// One named result with its origin and, for checked rows, the acceptance
/// target it was held against.
struct MetricRow {
    std::string name;
    double value = 0.0;
    std::string units;
    Provenance provenance = Provenance::formula;
    std::string target;        // empty for informational rows
    std::optional<bool> pass;  // set only when a target was checked
};

/// Deterministic run report: the effective config and the metric rows.
/// Serialisation contains nothing run-dependent (no timing, no hostnames),
/// so identical (config, master_seed) gives byte-identical output at any
/// worker count.
struct Report {
    std::string config_echo_json;  // compact JSON of the effective config
    std::vector<MetricRow> rows;

    bool all_passed() const;
    std::string to_csv() const;
    std::string to_json() const;
    std::string render(const std::string& format) const;  // "csv" | "json"
};

}  // namespace y00
