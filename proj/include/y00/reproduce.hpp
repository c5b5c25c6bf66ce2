#pragma once

#include <cstdint>

#include "y00/report.hpp"

namespace y00 {

/// Evaluates every reproducible quantitative claim of the scheme at the
/// published operating points and checks each against its tolerance.
/// Formula rows are instant; Monte Carlo rows are sized so the whole table
/// runs in a few minutes on a laptop. Failures are rows, not exceptions.
Report reproduce_paper(std::uint64_t master_seed, int workers);

}  // namespace y00
