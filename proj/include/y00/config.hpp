#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "y00/keystream.hpp"

namespace y00 {

/// Parameters shared by the CLI experiments. Defaults are the experimental
/// operating point M = 4096, alpha0 = 200. Loaded from a single JSON
/// document; individual CLI flags override individual fields.
struct ExperimentConfig {
    int m = 4096;
    double alpha0 = 200.0;
    int lfsr_degree = 16;
    std::vector<int> lfsr_taps;  // empty = maximal-length default for the degree
    std::string lfsr_seed_hex = "ace1";
    std::uint64_t n = 1000;
    std::uint64_t master_seed = 1;
    int workers = 0;  // 0 = hardware thread count
    std::string out_format = "csv";
    std::string transcript_path;

    LfsrSpec lfsr_spec() const;
    SeedKey lfsr_seed() const;

    void validate() const;

    static ExperimentConfig from_json_text(const std::string& text);
    static ExperimentConfig from_json_file(const std::string& path);
    std::string to_json_text() const;
};

}  // namespace y00
