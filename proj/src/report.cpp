#include "y00/report.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace y00 {

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::formula: return "formula";
        case Provenance::monte_carlo: return "monte-carlo";
        case Provenance::enumeration: return "enumeration";
    }
    return "?";
}

namespace {

// fixed shortest-round-trip style rendering so reports are byte-stable
std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

bool Report::all_passed() const {
    for (const auto& r : rows)
        if (r.pass.has_value() && !*r.pass) return false;
    return true;
}

std::string Report::to_csv() const {
    std::string out;
    if (!config_echo_json.empty()) out += "# config " + config_echo_json + "\n";
    out += "name,value,units,provenance,target,pass\n";
    for (const auto& r : rows) {
        out += csv_quote(r.name) + ',' + fmt_double(r.value) + ',' + csv_quote(r.units) + ',' +
               to_string(r.provenance) + ',' + csv_quote(r.target) + ',';
        if (r.pass.has_value()) out += *r.pass ? "pass" : "FAIL";
        out += '\n';
    }
    return out;
}

std::string Report::to_json() const {
    nlohmann::json j;
    if (!config_echo_json.empty()) j["config"] = nlohmann::json::parse(config_echo_json);
    j["metrics"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row;
        row["name"] = r.name;
        row["value"] = r.value;
        row["units"] = r.units;
        row["provenance"] = to_string(r.provenance);
        if (!r.target.empty()) row["target"] = r.target;
        if (r.pass.has_value()) row["pass"] = *r.pass;
        j["metrics"].push_back(row);
    }
    return j.dump(2) + "\n";
}

std::string Report::render(const std::string& format) const {
    if (format == "csv") return to_csv();
    if (format == "json") return to_json();
    throw std::invalid_argument("unknown report format: " + format);
}

}  // namespace y00
