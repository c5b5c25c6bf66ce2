#include "y00/config.hpp"

#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace y00 {

LfsrSpec ExperimentConfig::lfsr_spec() const {
    if (lfsr_taps.empty()) return LfsrSpec::primitive_default(lfsr_degree);
    LfsrSpec s{lfsr_degree, lfsr_taps};
    s.validate();
    return s;
}

SeedKey ExperimentConfig::lfsr_seed() const { return SeedKey::from_hex(lfsr_seed_hex, lfsr_degree); }

void ExperimentConfig::validate() const {
    if (m < 4 || !std::has_single_bit(unsigned(m)))
        throw std::invalid_argument("config field M: must be a power of two >= 4");
    if (!(alpha0 >= 0.0)) throw std::invalid_argument("config field alpha0: must be >= 0");
    const auto spec = lfsr_spec();
    (void)lfsr_seed();
    const int bits_per_basis = std::bit_width(unsigned(m / 2)) - 1;
    if (spec.degree < bits_per_basis)
        throw std::invalid_argument("config field lfsr.degree: shorter than log2(M/2)");
    if (workers < 0) throw std::invalid_argument("config field workers: must be >= 0");
    if (out_format != "csv" && out_format != "json")
        throw std::invalid_argument("config field out: must be csv or json");
}

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    ExperimentConfig cfg;
    if (j.contains("M")) cfg.m = j.at("M").get<int>();
    if (j.contains("alpha0")) cfg.alpha0 = j.at("alpha0").get<double>();
    if (j.contains("lfsr")) {
        const auto& l = j.at("lfsr");
        if (l.contains("degree")) cfg.lfsr_degree = l.at("degree").get<int>();
        if (l.contains("taps")) cfg.lfsr_taps = l.at("taps").get<std::vector<int>>();
        if (l.contains("seed")) cfg.lfsr_seed_hex = l.at("seed").get<std::string>();
    }
    if (j.contains("n")) cfg.n = j.at("n").get<std::uint64_t>();
    if (j.contains("master_seed")) cfg.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("workers")) cfg.workers = j.at("workers").get<int>();
    if (j.contains("out")) cfg.out_format = j.at("out").get<std::string>();
    if (j.contains("transcript_path"))
        cfg.transcript_path = j.at("transcript_path").get<std::string>();
    return cfg;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string ExperimentConfig::to_json_text() const {
    nlohmann::json j;
    j["M"] = m;
    j["alpha0"] = alpha0;
    j["lfsr"] = {{"degree", lfsr_degree},
                 {"taps", lfsr_spec().taps},
                 {"seed", lfsr_seed_hex}};
    j["n"] = n;
    j["master_seed"] = master_seed;
    // workers is a scheduling knob, not an experiment parameter: reports
    // must be byte-identical across worker counts, so it is not echoed
    j["out"] = out_format;
    if (!transcript_path.empty()) j["transcript_path"] = transcript_path;
    return j.dump();
}

}  // namespace y00
